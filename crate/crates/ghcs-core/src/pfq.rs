//! Generalized hypergeometric series: exact-rule structure constants,
//! Pochhammer symbols, adaptive evaluation, registered closed forms, and
//! the coefficient form of the kernel differential equation.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::special::{erf, gamma, ln_gamma};
use crate::tolerances as tol;

/// The two conventions for building structure constants out of the same
/// parameter set: products of denominator Pochhammers over numerator ones,
/// or the reciprocal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RhoKind {
    /// rho(n) = n! * prod (b_j)_n / prod (a_i)_n
    Bg,
    /// rho(n) = n! * prod (a_i)_n / prod (b_j)_n
    Kp,
}

/// Index pair (p, q) with numerator list `a` and denominator list `b`.
///
/// Construction rejects denominator parameters at the Pochhammer poles
/// (zero or a negative integer) and index pairs with an empty convergence
/// disc (p > q + 1).
#[derive(Debug, Clone, PartialEq)]
pub struct HypergeometricParams {
    a: Vec<f64>,
    b: Vec<f64>,
}

impl HypergeometricParams {
    pub fn new(a: Vec<f64>, b: Vec<f64>) -> Result<Self> {
        for &bj in &b {
            if bj <= 0.0 && bj.fract() == 0.0 {
                return Err(Error::InvalidParams(format!(
                    "denominator parameter {bj} is zero or a negative integer"
                )));
            }
        }
        if a.len() > b.len() + 1 {
            return Err(Error::InvalidParams(format!(
                "p = {} exceeds q + 1 = {}; the series has an empty convergence disc",
                a.len(),
                b.len() + 1
            )));
        }
        Ok(Self { a, b })
    }

    pub fn p(&self) -> usize {
        self.a.len()
    }

    pub fn q(&self) -> usize {
        self.b.len()
    }

    pub fn a(&self) -> &[f64] {
        &self.a
    }

    pub fn b(&self) -> &[f64] {
        &self.b
    }

    /// The dual parameter set with numerators and denominators exchanged.
    pub fn swapped(&self) -> Result<Self> {
        Self::new(self.b.clone(), self.a.clone())
    }

    /// prod_i (a_i + n), the numerator factor of the term recurrence.
    pub fn numerator_factor(&self, n: usize) -> f64 {
        self.a.iter().map(|ai| ai + n as f64).product()
    }

    /// prod_j (b_j + n), the denominator factor of the term recurrence.
    pub fn denominator_factor(&self, n: usize) -> f64 {
        self.b.iter().map(|bj| bj + n as f64).product()
    }
}

/// Result of an adaptive series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult<T> {
    pub value: T,
    pub terms_used: usize,
    pub last_term_magnitude: f64,
    pub converged: bool,
    pub radius: f64,
}

/// Rising factorial (x)_n as a plain product; (x)_0 = 1.
pub fn pochhammer(x: f64, n: usize) -> f64 {
    let mut acc = 1.0;
    for m in 0..n {
        acc *= x + m as f64;
    }
    acc
}

/// ln (x)_n for x > 0, through the log-gamma function.
pub fn pochhammer_log(x: f64, n: usize) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::InvalidParams(format!(
            "log-domain Pochhammer requires a positive base, got {x}"
        )));
    }
    Ok(ln_gamma(x + n as f64) - ln_gamma(x))
}

/// Structure constant rho(n) in the requested convention; rho(0) = 1.
///
/// Signals overflow once the product leaves the f64 range; callers then
/// switch to [`structure_constant_log`].
pub fn structure_constant(params: &HypergeometricParams, kind: RhoKind, n: usize) -> Result<f64> {
    let mut acc = 1.0f64;
    for m in 1..=n {
        acc *= ladder_rational(params, kind, m);
        if !acc.is_finite() {
            return Err(Error::Overflow {
                context: "structure constant",
                n: m,
            });
        }
    }
    Ok(acc)
}

/// ln rho(n); requires all parameters positive so that every factor is positive.
pub fn structure_constant_log(
    params: &HypergeometricParams,
    kind: RhoKind,
    n: usize,
) -> Result<f64> {
    let (num, den) = match kind {
        RhoKind::Bg => (params.b(), params.a()),
        RhoKind::Kp => (params.a(), params.b()),
    };
    let mut acc = ln_gamma(n as f64 + 1.0);
    for &x in num {
        acc += pochhammer_log(x, n)?;
    }
    for &x in den {
        acc -= pochhammer_log(x, n)?;
    }
    Ok(acc)
}

/// The per-step ratio rho(m)/rho(m-1) for the given convention, m >= 1.
/// This is the ladder eigenvalue rule behind the structure constants.
pub fn ladder_rational(params: &HypergeometricParams, kind: RhoKind, m: usize) -> f64 {
    let shifted_b: f64 = params.b.iter().map(|bj| bj + m as f64 - 1.0).product();
    let shifted_a: f64 = params.a.iter().map(|ai| ai + m as f64 - 1.0).product();
    match kind {
        RhoKind::Bg => m as f64 * shifted_b / shifted_a,
        RhoKind::Kp => m as f64 * shifted_a / shifted_b,
    }
}

/// Convergence radius of sum x^n / rho_BG(n): infinite for p <= q
/// (Stieltjes regime), one for p = q + 1 (Hausdorff regime).
pub fn convergence_radius(params: &HypergeometricParams) -> f64 {
    if params.p() <= params.q() {
        f64::INFINITY
    } else {
        1.0
    }
}

fn check_radius(params: &HypergeometricParams, modulus: f64) -> Result<()> {
    let radius = convergence_radius(params);
    if radius.is_finite() && modulus > radius * (1.0 - tol::RADIUS_MARGIN) {
        return Err(Error::OutOfRadius {
            arg: modulus,
            radius,
        });
    }
    Ok(())
}

// Shared adaptive summation over the term recurrence
//   term_{n+1} = term_n * x * prod(a_i + n) / ((n + 1) prod(b_j + n)).
// Works for f64 and Complex64 through the arithmetic closure.
macro_rules! sum_terms {
    ($params:expr, $x:expr, $n_max:expr, $one:expr) => {{
        let mut term = $one;
        let mut sum = $one;
        let mut small_streak = 0usize;
        let mut n = 0usize;
        loop {
            if n >= $n_max {
                return Err(Error::NotConverged { terms: n });
            }
            let next = term * $x * $params.numerator_factor(n)
                / ((n as f64 + 1.0) * $params.denominator_factor(n));
            term = next;
            sum += term;
            n += 1;
            let mag = magnitude(term);
            if mag == 0.0 {
                // Terminating series (a numerator parameter hit a negative
                // integer): an exactly-zero term is terminal.
                small_streak = 2;
            } else if mag <= tol::SERIES_EPS_REL * magnitude(sum) {
                small_streak += 1;
            } else {
                small_streak = 0;
            }
            if small_streak >= 2 {
                break (sum, n, mag);
            }
        }
    }};
}

fn magnitude<T: Magnitude>(x: T) -> f64 {
    x.magnitude()
}

trait Magnitude: Copy {
    fn magnitude(self) -> f64;
}

impl Magnitude for f64 {
    fn magnitude(self) -> f64 {
        self.abs()
    }
}

impl Magnitude for Complex64 {
    fn magnitude(self) -> f64 {
        self.norm()
    }
}

/// Evaluate pFq(a; b; x) = sum_n x^n / rho_BG(n) adaptively.
pub fn eval_pfq(params: &HypergeometricParams, x: f64) -> Result<EvalResult<f64>> {
    eval_pfq_capped(params, x, tol::SERIES_N_MAX)
}

/// As [`eval_pfq`] with an explicit term cap.
pub fn eval_pfq_capped(
    params: &HypergeometricParams,
    x: f64,
    n_max: usize,
) -> Result<EvalResult<f64>> {
    check_radius(params, x.abs())?;
    let (value, terms_used, last) = sum_terms!(params, x, n_max, 1.0f64);
    Ok(EvalResult {
        value,
        terms_used,
        last_term_magnitude: last,
        converged: true,
        radius: convergence_radius(params),
    })
}

/// Complex-argument evaluation of the same series.
pub fn eval_pfq_complex(
    params: &HypergeometricParams,
    x: Complex64,
) -> Result<EvalResult<Complex64>> {
    eval_pfq_complex_capped(params, x, tol::SERIES_N_MAX)
}

/// As [`eval_pfq_complex`] with an explicit term cap.
pub fn eval_pfq_complex_capped(
    params: &HypergeometricParams,
    x: Complex64,
    n_max: usize,
) -> Result<EvalResult<Complex64>> {
    check_radius(params, x.norm())?;
    let (value, terms_used, last) = sum_terms!(params, x, n_max, Complex64::ONE);
    Ok(EvalResult {
        value,
        terms_used,
        last_term_magnitude: last,
        converged: true,
        radius: convergence_radius(params),
    })
}

/// Closed forms for the registered parameter patterns; `Ok(None)` when the
/// parameter set matches no pattern.
///
/// Registered: 0F0 (exponential), 1F0 (binomial), 1F1(1; 3/2; x) (erf form),
/// and 1F1(1; 2; x) = (e^x - 1)/x.
pub fn closed_form(params: &HypergeometricParams, x: f64) -> Result<Option<f64>> {
    match (params.a(), params.b()) {
        ([], []) => Ok(Some(x.exp())),
        ([b], []) => {
            if x.abs() >= 1.0 {
                return Err(Error::OutOfRadius {
                    arg: x.abs(),
                    radius: 1.0,
                });
            }
            Ok(Some((1.0 - x).powf(-b)))
        }
        ([a], [b]) if *a == 1.0 && *b == 1.5 => {
            if x == 0.0 {
                Ok(Some(1.0))
            } else if x > 0.0 {
                let s = x.sqrt();
                Ok(Some(std::f64::consts::PI.sqrt() / (2.0 * s) * x.exp() * erf(s)))
            } else {
                Ok(None)
            }
        }
        ([a], [b]) if *a == 1.0 && *b == 2.0 => {
            if x == 0.0 {
                Ok(Some(1.0))
            } else {
                Ok(Some(x.exp_m1() / x))
            }
        }
        _ => Ok(None),
    }
}

/// Maximum relative residual of the coefficient recurrence
/// c_{n+1} (n+1) prod(b_j + n) = c_n prod(a_i + n), n <= order,
/// with c_n = 1/rho_BG(n) computed by independent products.
///
/// This is the coefficient form of the kernel's differential equation; the
/// recurrence is exact, so the residual measures pure rounding.
pub fn ode_residual_coefficients(params: &HypergeometricParams, order: usize) -> f64 {
    let mut worst = 0.0f64;
    // Coefficients by direct product so the two sides are computed through
    // genuinely different arithmetic than the recurrence itself.
    let coeff = |n: usize| -> f64 {
        let mut num = 1.0;
        for &ai in params.a() {
            num *= pochhammer(ai, n);
        }
        let mut den = pochhammer(1.0, n);
        for &bj in params.b() {
            den *= pochhammer(bj, n);
        }
        num / den
    };
    for n in 0..order {
        let lhs = coeff(n + 1) * (n as f64 + 1.0) * params.denominator_factor(n);
        let rhs = coeff(n) * params.numerator_factor(n);
        let scale = lhs.abs().max(rhs.abs()).max(tol::DIVISION_GUARD);
        worst = worst.max((lhs - rhs).abs() / scale);
    }
    worst
}

/// Large-argument approximation Gamma(b)/Gamma(a) e^x x^(a-b) of the
/// confluent kernel; the caller is responsible for x being large (>= 20
/// is comfortable).
pub fn asymptotic_1f1(a: f64, b: f64, x: f64) -> f64 {
    gamma(b) / gamma(a) * x.exp() * x.powf(a - b)
}

/// Log-domain variant of [`asymptotic_1f1`] for arguments whose exponential
/// overflows.
pub fn asymptotic_1f1_log(a: f64, b: f64, x: f64) -> f64 {
    ln_gamma(b) - ln_gamma(a) + x + (a - b) * x.ln()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(a: &[f64], b: &[f64]) -> HypergeometricParams {
        HypergeometricParams::new(a.to_vec(), b.to_vec()).unwrap()
    }

    #[test]
    fn pochhammer_products() {
        assert_eq!(pochhammer(7.3, 0), 1.0);
        assert_eq!(pochhammer(1.0, 4), 24.0);
        assert_eq!(pochhammer(3.0, 2), 12.0);
        assert_eq!(pochhammer(0.5, 3), 1.875);
    }

    #[test]
    fn pochhammer_log_matches_product() {
        for n in [1usize, 5, 30, 200] {
            let direct = pochhammer(1.5, n);
            let logged = pochhammer_log(1.5, n).unwrap();
            if direct.is_finite() {
                assert!((logged - direct.ln()).abs() < 1e-11);
            }
        }
        assert!(pochhammer_log(-1.0, 3).is_err());
    }

    #[test]
    fn structure_constants_both_kinds() {
        let p = params(&[1.0], &[1.5]);
        assert_eq!(structure_constant(&p, RhoKind::Bg, 0).unwrap(), 1.0);
        assert_eq!(structure_constant(&p, RhoKind::Kp, 0).unwrap(), 1.0);
        // 2! * (1.5)_2 / (1)_2 = 2 * 3.75 / 2
        assert!((structure_constant(&p, RhoKind::Bg, 2).unwrap() - 3.75).abs() < 1e-15);
        // 2! * (1)_2 / (1.5)_2 = 16/15
        assert!(
            (structure_constant(&p, RhoKind::Kp, 2).unwrap() - 16.0 / 15.0).abs() < 1e-15
        );
    }

    #[test]
    fn structure_constant_overflow_is_signaled() {
        let p = params(&[], &[]);
        // n! overflows f64 near n = 171.
        let err = structure_constant(&p, RhoKind::Bg, 200).unwrap_err();
        assert!(matches!(err, Error::Overflow { .. }));
        // The log-domain variant keeps going.
        let log = structure_constant_log(&p, RhoKind::Bg, 200).unwrap();
        assert!((log - crate::special::ln_factorial(200)).abs() < 1e-10);
    }

    #[test]
    fn validation_rejects_bad_parameters() {
        assert!(HypergeometricParams::new(vec![1.0], vec![0.0]).is_err());
        assert!(HypergeometricParams::new(vec![1.0], vec![-3.0]).is_err());
        assert!(HypergeometricParams::new(vec![1.0, 2.0], vec![]).is_err());
        // A negative non-integer denominator is allowed by the pole rule.
        assert!(HypergeometricParams::new(vec![1.0], vec![-0.5]).is_ok());
    }

    #[test]
    fn radius_by_regime() {
        assert_eq!(convergence_radius(&params(&[1.0], &[1.5])), f64::INFINITY);
        assert_eq!(convergence_radius(&params(&[], &[2.0])), f64::INFINITY);
        assert_eq!(convergence_radius(&params(&[2.0], &[])), 1.0);
    }

    #[test]
    fn radius_matches_structure_constant_ratio() {
        // For p = q + 1 the ratio rho(n)/rho(n+1) tends to the radius.
        let p = params(&[2.0], &[]);
        let n = 4000usize;
        let ratio = 1.0 / ladder_rational(&p, RhoKind::Bg, n + 1);
        assert!((ratio - 1.0).abs() < 1e-3);
        // Spot-check against the printed rule (2 + n)/(1 + n) for rho = n!/(2)_n.
        let expected = (2.0 + n as f64) / (1.0 + n as f64);
        assert!((ratio - expected).abs() < 1e-12);
    }

    #[test]
    fn eval_exponential_and_unit_argument() {
        let e = eval_pfq(&params(&[], &[]), 1.0).unwrap();
        assert!((e.value - std::f64::consts::E).abs() < 1e-15);
        assert!(e.converged);

        let one = eval_pfq(&params(&[1.0], &[1.5]), 0.0).unwrap();
        assert_eq!(one.value, 1.0);
        assert_eq!(one.terms_used, 1); // the first zero term is terminal
    }

    #[test]
    fn eval_confluent_against_frozen_oracle() {
        // Brute-force series value of 1F1(1; 3/2; 1), frozen from an
        // independent high-precision computation.
        let r = eval_pfq(&params(&[1.0], &[1.5]), 1.0).unwrap();
        assert!((r.value - 2.030_078_469_278_705).abs() < 1e-14);
    }

    #[test]
    fn eval_rejects_out_of_radius() {
        let p = params(&[2.0], &[]);
        assert!(matches!(
            eval_pfq(&p, 1.5),
            Err(Error::OutOfRadius { .. })
        ));
        assert!(matches!(
            eval_pfq(&p, 1.0 - 1e-9),
            Err(Error::OutOfRadius { .. })
        ));
        let near = eval_pfq(&p, 0.99).unwrap();
        assert!((near.value - 1.0 / (0.01f64 * 0.01)).abs() < 1e-9 * near.value);
        // Inside the margin but too close to the boundary for the term cap:
        // the failure mode is NotConverged, not OutOfRadius.
        assert!(matches!(
            eval_pfq(&p, 0.9999),
            Err(Error::NotConverged { .. })
        ));
    }

    #[test]
    fn eval_not_converged_under_tiny_cap() {
        let p = params(&[], &[]);
        assert!(matches!(
            eval_pfq_capped(&p, 30.0, 10),
            Err(Error::NotConverged { terms: 10 })
        ));
    }

    #[test]
    fn terminating_series_is_a_polynomial() {
        // a = -3 terminates after the cubic term: 1F1(-3; 2; x).
        let p = params(&[-3.0], &[2.0]);
        let x = 2.0f64;
        let r = eval_pfq(&p, x).unwrap();
        // (-3)_n/((2)_n n!) gives 1 - 3x/2 + x^2/2 - x^3/24.
        let exact = 1.0 - 1.5 * x + 0.5 * x * x - x * x * x / 24.0;
        assert!((r.value - exact).abs() < 1e-14);
        assert!(r.terms_used <= 5);
    }

    #[test]
    fn closed_forms_match_series() {
        let cases: [(HypergeometricParams, f64); 4] = [
            (params(&[], &[]), 0.7),
            (params(&[2.0], &[]), 0.5),
            (params(&[1.0], &[1.5]), 1.0),
            (params(&[1.0], &[2.0]), 0.5),
        ];
        for (p, x) in cases {
            let series = eval_pfq(&p, x).unwrap().value;
            let closed = closed_form(&p, x).unwrap().unwrap();
            assert!(
                (series - closed).abs() <= tol::CLOSED_FORM_REL * closed.abs(),
                "series {series} vs closed {closed}"
            );
        }
        // 1F0(2; ; 0.5) = 1/(1 - 0.5)^2 = 4
        assert_eq!(closed_form(&params(&[2.0], &[]), 0.5).unwrap().unwrap(), 4.0);
        assert_eq!(closed_form(&params(&[], &[]), 0.0).unwrap().unwrap(), 1.0);
        // No registered pattern.
        assert_eq!(closed_form(&params(&[0.5], &[2.5]), 0.3).unwrap(), None);
        // 1F0 out of its disc.
        assert!(closed_form(&params(&[2.0], &[]), 1.0).is_err());
    }

    #[test]
    fn ode_residual_is_rounding_level() {
        for p in [
            params(&[1.0], &[1.5]),
            params(&[], &[2.0]),
            params(&[2.0], &[]),
        ] {
            assert!(ode_residual_coefficients(&p, 50) <= tol::ODE_RESIDUAL_REL);
        }
    }

    #[test]
    fn asymptotic_reduces_to_exponential() {
        for x in [1.0, 10.0, 25.0] {
            assert!((asymptotic_1f1(1.0, 1.0, x) - x.exp()).abs() <= 1e-12 * x.exp());
        }
    }

    #[test]
    fn asymptotic_log_matches_linear_domain() {
        let lin = asymptotic_1f1(1.0, 1.5, 30.0);
        let log = asymptotic_1f1_log(1.0, 1.5, 30.0);
        assert!((lin.ln() - log).abs() < 1e-12);
    }

    #[test]
    fn asymptotic_against_the_expm1_closed_form() {
        // 1F1(1; 2; 50) = (e^50 - 1)/50; compare in the log domain.
        let closed_log = 50.0 + (-(-50.0f64).exp()).ln_1p() - 50.0f64.ln();
        let approx_log = asymptotic_1f1_log(1.0, 2.0, 50.0);
        assert!((approx_log - closed_log).abs() <= 0.02f64.ln_1p());
    }

    #[test]
    fn complex_eval_is_real_on_the_real_axis() {
        let p = params(&[1.0], &[1.5]);
        let c = eval_pfq_complex(&p, Complex64::new(1.0, 0.0)).unwrap();
        let r = eval_pfq(&p, 1.0).unwrap();
        assert_eq!(c.value.im, 0.0);
        assert_eq!(c.value.re, r.value);
    }
}
