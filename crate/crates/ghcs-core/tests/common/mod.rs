//! Independent oracles for the integration suites.
//!
//! Everything here is computed from first principles: plain term-by-term
//! sums with per-term products, no code shared with the library's
//! recurrence-based evaluation paths.

#![allow(dead_code)]

/// Rising factorial by explicit product.
pub fn rising(x: f64, n: usize) -> f64 {
    (0..n).map(|m| x + m as f64).product()
}

/// Brute-force truncated hypergeometric sum with each term rebuilt from
/// scratch: sum_n [prod (a_i)_n / prod (b_j)_n] x^n / n!.
pub fn naive_pfq(a: &[f64], b: &[f64], x: f64, terms: usize) -> f64 {
    let mut sum = 0.0f64;
    for n in 0..terms {
        let mut term = x.powi(n as i32);
        for &ai in a {
            term *= rising(ai, n);
        }
        for &bj in b {
            term /= rising(bj, n);
        }
        term /= rising(1.0, n);
        sum += term;
    }
    sum
}

/// Brute-force thermal sum: sum_n exp(-eps w(n)) x^n / rho(n), with both
/// the exponent rule and the structure constants supplied as closures.
pub fn naive_thermal_sum(
    w: impl Fn(usize) -> f64,
    rho: impl Fn(usize) -> f64,
    eps: f64,
    x: f64,
    terms: usize,
) -> f64 {
    (0..terms)
        .map(|n| (-eps * w(n)).exp() * x.powi(n as i32) / rho(n))
        .sum()
}

/// Maclaurin error function, accurate past twelve digits for |x| <= 2;
/// written independently of the library's split implementation.
pub fn erf_oracle(x: f64) -> f64 {
    assert!(x.abs() <= 2.5, "oracle series loses digits past 2.5");
    let mut sum = 0.0f64;
    for n in 0..120i32 {
        let mut factorial = 1.0f64;
        for m in 1..=n {
            factorial *= f64::from(m);
        }
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * x.powi(2 * n + 1) / (factorial * (2.0 * n as f64 + 1.0));
    }
    2.0 / std::f64::consts::PI.sqrt() * sum
}

/// Geometric closed form of the linear partition sum.
pub fn geometric_partition(e0: f64, eps: f64) -> f64 {
    (-eps * e0).exp() / (1.0 - (-eps).exp())
}

/// n! as a float product.
pub fn factorial(n: usize) -> f64 {
    rising(1.0, n)
}
