//! Gauss-type quadrature rules from three-term recurrences.
//!
//! Nodes and weights come from the symmetric tridiagonal Jacobi matrix of
//! the orthogonal-polynomial family: eigenvalues are the nodes, and the
//! squared first eigenvector components carry the weights. The QL sweep
//! with implicit shifts below tracks only that first row, which is all the
//! weights need. Everything is deterministic: the same order always
//! produces the same nodes.

use crate::error::{Error, Result};

/// Supported weight/support combinations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadScheme {
    /// Unit weight on [0, 1].
    FiniteInterval01,
    /// Weight exp(-t) on [0, infinity).
    SemiInfiniteExponential,
}

/// A fixed-order rule request.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadratureSpec {
    pub node_count: usize,
    pub scheme: QuadScheme,
}

impl QuadratureSpec {
    pub fn new(node_count: usize, scheme: QuadScheme) -> Result<Self> {
        if node_count < 2 {
            return Err(Error::InvalidParams(format!(
                "quadrature needs at least 2 nodes, got {node_count}"
            )));
        }
        Ok(Self { node_count, scheme })
    }

    pub fn rule(&self) -> QuadratureRule {
        match self.scheme {
            QuadScheme::FiniteInterval01 => gauss_legendre_01(self.node_count),
            QuadScheme::SemiInfiniteExponential => gauss_laguerre(self.node_count),
        }
    }

    /// The same scheme with twice the nodes.
    pub fn doubled(&self) -> Self {
        Self {
            node_count: self.node_count * 2,
            scheme: self.scheme,
        }
    }
}

/// Nodes and weights, sorted by ascending node.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    /// Apply the rule to an integrand evaluated at the nodes.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&t, &w)| w * f(t))
            .sum()
    }
}

/// Gauss-Laguerre rule: integrates exp(-t) f(t) over [0, infinity) exactly
/// for polynomials f of degree <= 2n - 1. Weights for far-out nodes
/// underflow to zero, which is harmless for the decaying integrands here.
pub fn gauss_laguerre(n: usize) -> QuadratureRule {
    gauss_generalized_laguerre(n, 0.0)
}

/// Generalized Gauss-Laguerre rule for the weight t^alpha exp(-t) on
/// [0, infinity), alpha > -1; total mass Gamma(alpha + 1).
pub fn gauss_generalized_laguerre(n: usize, alpha: f64) -> QuadratureRule {
    assert!(alpha > -1.0, "the weight t^alpha exp(-t) needs alpha > -1");
    let diag: Vec<f64> = (0..n).map(|i| 2.0 * i as f64 + alpha + 1.0).collect();
    let off: Vec<f64> = (1..n)
        .map(|i| {
            let i = i as f64;
            (i * (i + alpha)).sqrt()
        })
        .collect();
    golub_welsch(diag, off, crate::special::gamma(alpha + 1.0))
}

/// Gauss-Legendre rule mapped to [0, 1] with unit weight.
pub fn gauss_legendre_01(n: usize) -> QuadratureRule {
    let diag = vec![0.0f64; n];
    let off: Vec<f64> = (1..n)
        .map(|i| {
            let i = i as f64;
            (i * i / (4.0 * i * i - 1.0)).sqrt()
        })
        .collect();
    let mut rule = golub_welsch(diag, off, 2.0);
    for t in &mut rule.nodes {
        *t = 0.5 * (*t + 1.0);
    }
    for w in &mut rule.weights {
        *w *= 0.5;
    }
    rule
}

// Eigen-decomposition of the symmetric tridiagonal Jacobi matrix, tracking
// the first components of the eigenvectors; weights are mu0 times their
// squares. QL with implicit shifts, the classic in-place sweep.
fn golub_welsch(mut diag: Vec<f64>, off: Vec<f64>, mu0: f64) -> QuadratureRule {
    let n = diag.len();
    assert!(n >= 2, "rules below two nodes are never requested");
    // e[i] couples i and i+1; padded so indexing below stays simple.
    let mut e = off;
    e.push(0.0);
    let mut first = vec![0.0f64; n];
    first[0] = 1.0;

    for l in 0..n {
        let mut iterations = 0usize;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = diag[m].abs() + diag[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            assert!(iterations <= 50, "QL sweep failed to converge");

            let mut g = (diag[l + 1] - diag[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = diag[m] - diag[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0f64;
            let mut c = 1.0f64;
            let mut p = 0.0f64;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    diag[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
                f = first[i + 1];
                first[i + 1] = s * first[i] + c * f;
                first[i] = c * first[i] - s * f;
            }
            if r == 0.0 && m > l + 1 {
                continue;
            }
            diag[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| diag[i].total_cmp(&diag[j]));
    let nodes: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let weights: Vec<f64> = order.iter().map(|&i| mu0 * first[i] * first[i]).collect();
    for (&t, &w) in nodes.iter().zip(&weights) {
        assert!(w >= 0.0, "negative weight {w} at node {t}");
    }
    QuadratureRule { nodes, weights }
}
