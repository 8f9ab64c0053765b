//! Truncated power series: the series view of the hypergeometric kernels,
//! coefficient-wise maps, Horner evaluation, and the Cauchy product.

use crate::error::Result;
use crate::pfq::{HypergeometricParams, RhoKind};

/// Explicitly truncated power series; `coefficients[n]` multiplies x^n.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coefficients: Vec<f64>,
    radius: f64,
}

impl PowerSeries {
    pub fn new(coefficients: Vec<f64>, radius: f64) -> Self {
        assert!(!coefficients.is_empty(), "a series needs at least one coefficient");
        Self {
            coefficients,
            radius,
        }
    }

    /// Series of the hypergeometric kernel: coefficient n is 1/rho(n) in the
    /// requested convention, up to `order` inclusive.
    pub fn from_kernel(
        params: &HypergeometricParams,
        kind: RhoKind,
        order: usize,
    ) -> Result<Self> {
        let radius = match kind {
            RhoKind::Bg => crate::pfq::convergence_radius(params),
            RhoKind::Kp => crate::pfq::convergence_radius(&params.swapped()?),
        };
        let mut coefficients = Vec::with_capacity(order + 1);
        let mut c = 1.0f64;
        coefficients.push(c);
        for m in 1..=order {
            c /= crate::pfq::ladder_rational(params, kind, m);
            coefficients.push(c);
        }
        Ok(Self {
            coefficients,
            radius,
        })
    }

    /// Series of exp(g x) up to `order` inclusive.
    pub fn exp(g: f64, order: usize) -> Self {
        let mut coefficients = Vec::with_capacity(order + 1);
        let mut c = 1.0f64;
        coefficients.push(c);
        for n in 1..=order {
            c *= g / n as f64;
            coefficients.push(c);
        }
        Self {
            coefficients,
            radius: f64::INFINITY,
        }
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Truncation order (index of the highest retained coefficient).
    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Multiply coefficient n by f(n). This realizes diagonal operators:
    /// applying f coefficient-wise and evaluating equals evaluating
    /// sum f(n) c_n x^n directly.
    pub fn map_coefficients(&self, f: impl Fn(usize) -> f64) -> Self {
        let coefficients = self
            .coefficients
            .iter()
            .enumerate()
            .map(|(n, c)| f(n) * c)
            .collect();
        Self {
            coefficients,
            radius: self.radius,
        }
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn eval(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * x + c)
    }
}

/// Cauchy product truncated at `order`: coefficient k of the result is
/// sum_{j<=k} s1_j s2_{k-j}. The declared radius is the smaller of the two.
pub fn cauchy_product(s1: &PowerSeries, s2: &PowerSeries, order: usize) -> PowerSeries {
    assert!(
        s1.order() >= order && s2.order() >= order,
        "both factors must be truncated at order >= {order}"
    );
    let mut coefficients = vec![0.0f64; order + 1];
    for (k, c) in coefficients.iter_mut().enumerate() {
        let mut acc = 0.0;
        for j in 0..=k {
            acc += s1.coefficients[j] * s2.coefficients[k - j];
        }
        *c = acc;
    }
    PowerSeries::new(coefficients, s1.radius.min(s2.radius))
}
