//! Dimensionless energy-spectrum rules.
//!
//! `eigenvalue(m)` is the printed level rule on m >= 1; the m = 0 value is
//! never consulted there. Thermal sums instead use `thermal_exponent(n)`,
//! the coefficient of epsilon in exp(-eps * w(n)) including the n = 0
//! convention: a linear spectrum contributes its offset, the rational and
//! quadratic rules contribute nothing, and the scaled two-parameter rule
//! contributes its Bargmann index (its printed eigenvalues carry the
//! frequency doubling, which the epsilon units absorb).

use crate::error::{Error, Result};
use crate::pfq::{ladder_rational, HypergeometricParams, RhoKind};

/// Energy eigenvalue rule, in units of the system quantum.
#[derive(Debug, Clone, PartialEq)]
pub enum EnergySpectrum {
    /// e(n) = n + e0
    Linear { e0: f64 },
    /// e(m) = m * prod(b_j + m - 1) / prod(a_i + m - 1)
    BgRational { params: HypergeometricParams },
    /// e(m) = m * prod(a_i + m - 1) / prod(b_j + m - 1)
    KpRational { params: HypergeometricParams },
    /// e(n) = n (n + b)
    Quadratic { b: f64 },
    /// e(m) = scale * (m + k); the scale reflects a frequency substitution
    /// and defaults to 2.
    GkScaled { k: f64, scale: f64 },
}

impl EnergySpectrum {
    pub fn linear(e0: f64) -> Result<Self> {
        if e0 < 0.0 {
            return Err(Error::InvalidParams(format!(
                "linear spectrum offset must be nonnegative, got {e0}"
            )));
        }
        Ok(Self::Linear { e0 })
    }

    pub fn quadratic(b: f64) -> Result<Self> {
        if b == 0.0 {
            return Err(Error::InvalidParams(
                "quadratic spectrum requires b != 0".into(),
            ));
        }
        Ok(Self::Quadratic { b })
    }

    pub fn gk_scaled(k: f64, scale: f64) -> Result<Self> {
        if k <= 0.0 || scale <= 0.0 {
            return Err(Error::InvalidParams(format!(
                "scaled spectrum requires k > 0 and scale > 0, got k = {k}, scale = {scale}"
            )));
        }
        Ok(Self::GkScaled { k, scale })
    }

    /// The printed eigenvalue rule, defined on m >= 1.
    pub fn eigenvalue(&self, m: usize) -> f64 {
        debug_assert!(m >= 1, "eigenvalue rule is defined on m >= 1");
        match self {
            Self::Linear { e0 } => m as f64 + e0,
            Self::BgRational { params } => ladder_rational(params, RhoKind::Bg, m),
            Self::KpRational { params } => ladder_rational(params, RhoKind::Kp, m),
            Self::Quadratic { b } => m as f64 * (m as f64 + b),
            Self::GkScaled { k, scale } => scale * (m as f64 + k),
        }
    }

    /// Coefficient of epsilon in the Boltzmann factor of level n, n >= 0.
    pub fn thermal_exponent(&self, n: usize) -> f64 {
        match self {
            Self::Linear { e0 } => n as f64 + e0,
            // The formal m = 0 value of the rational rules vanishes with the
            // leading factor m; the 0/0 of degenerate parameter choices is
            // dropped the same way the non-physical m = -1 terms are.
            Self::BgRational { .. } | Self::KpRational { .. } => {
                if n == 0 {
                    0.0
                } else {
                    self.eigenvalue(n)
                }
            }
            Self::Quadratic { b } => n as f64 * (n as f64 + b),
            Self::GkScaled { k, .. } => n as f64 + k,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(a: &[f64], b: &[f64]) -> HypergeometricParams {
        HypergeometricParams::new(a.to_vec(), b.to_vec()).unwrap()
    }

    #[test]
    fn printed_rules() {
        let half = EnergySpectrum::linear(0.5).unwrap();
        assert_eq!(half.eigenvalue(1), 1.5);

        let quad = EnergySpectrum::quadratic(1.0).unwrap();
        assert_eq!(quad.eigenvalue(3), 12.0);

        let gk = EnergySpectrum::gk_scaled(1.0, 2.0).unwrap();
        assert_eq!(gk.eigenvalue(2), 6.0);
    }

    #[test]
    fn linear_reduction_of_the_rational_rule() {
        // a = [1], b = [e0 + 1] reduces the rational rule to m + e0 exactly.
        let e0 = 0.5;
        let rational = EnergySpectrum::BgRational {
            params: params(&[1.0], &[e0 + 1.0]),
        };
        let linear = EnergySpectrum::linear(e0).unwrap();
        for m in 1..=50 {
            assert_eq!(rational.eigenvalue(m), linear.eigenvalue(m));
        }
    }

    #[test]
    fn thermal_exponent_ground_level_conventions() {
        assert_eq!(EnergySpectrum::linear(0.5).unwrap().thermal_exponent(0), 0.5);
        assert_eq!(EnergySpectrum::quadratic(1.0).unwrap().thermal_exponent(0), 0.0);
        assert_eq!(
            EnergySpectrum::gk_scaled(1.0, 2.0).unwrap().thermal_exponent(0),
            1.0
        );
        let rational = EnergySpectrum::KpRational {
            params: params(&[], &[2.0]),
        };
        assert_eq!(rational.thermal_exponent(0), 0.0);
        assert_eq!(rational.thermal_exponent(3), 3.0 / 4.0);
    }

    #[test]
    fn gk_thermal_exponent_absorbs_the_scale() {
        let gk = EnergySpectrum::gk_scaled(1.0, 2.0).unwrap();
        for n in 1..20 {
            assert_eq!(gk.thermal_exponent(n), gk.eigenvalue(n) / 2.0);
        }
    }

    #[test]
    fn construction_guards() {
        assert!(EnergySpectrum::linear(-0.1).is_err());
        assert!(EnergySpectrum::quadratic(0.0).is_err());
        assert!(EnergySpectrum::gk_scaled(0.0, 2.0).is_err());
    }
}
