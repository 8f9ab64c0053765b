//! Resolution-of-unity moment checks: the registered weight densities must
//! reproduce the structure constants as power moments over their support.
//!
//! Only elementary reductions are registered; each density is validated
//! against its Gamma/Beta closed-form moments, which double as the
//! independent oracle. The angular integral of the reconstruction is taken
//! analytically, so off-diagonal terms never materialize: the check is a
//! vector of diagonal entries by construction.

use crate::error::{Error, Result};
use crate::family::CsFamily;
use crate::quadrature::{QuadScheme, QuadratureSpec};
use crate::report::VerificationReport;
use crate::special::gamma;
use crate::tolerances as tol;

/// A registered weight density with closed-form target moments.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightPreset {
    /// exp(-t) on [0, inf); moments n!.
    Ho,
    /// t^k exp(-t) / Gamma(k+1) on [0, inf); moments (k+1)_n.
    BgPho { k: f64 },
    /// (2k-1)(1-t)^(2k-2) on [0, 1); moments n!/(2k)_n; needs k > 1/2.
    KpPho { k: f64 },
}

impl WeightPreset {
    pub fn bg_pho(k: f64) -> Result<Self> {
        if k <= 0.0 {
            return Err(Error::InvalidParams(format!(
                "Bargmann index must be positive, got {k}"
            )));
        }
        Ok(Self::BgPho { k })
    }

    /// The density (2k-1)(1-t)^(2k-2) is integrable on [0, 1) only for
    /// k > 1/2.
    pub fn kp_pho(k: f64) -> Result<Self> {
        if k <= 0.5 {
            return Err(Error::InvalidParams(format!(
                "finite-interval density needs k > 1/2, got {k}"
            )));
        }
        Ok(Self::KpPho { k })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Ho => "ho",
            Self::BgPho { .. } => "pho-bg",
            Self::KpPho { .. } => "pho-kp",
        }
    }

    /// Upper end of the support (exclusive when finite).
    pub fn support_limit(&self) -> f64 {
        match self {
            Self::Ho | Self::BgPho { .. } => f64::INFINITY,
            Self::KpPho { .. } => 1.0,
        }
    }

    pub fn scheme(&self) -> QuadScheme {
        match self {
            Self::Ho | Self::BgPho { .. } => QuadScheme::SemiInfiniteExponential,
            Self::KpPho { .. } => QuadScheme::FiniteInterval01,
        }
    }

    /// The density at t.
    pub fn density(&self, t: f64) -> Result<f64> {
        let limit = self.support_limit();
        if t < 0.0 || t >= limit {
            return Err(Error::OutOfSupport { t, limit });
        }
        Ok(match self {
            Self::Ho => (-t).exp(),
            Self::BgPho { k } => t.powf(*k) * (-t).exp() / gamma(k + 1.0),
            Self::KpPho { k } => (2.0 * k - 1.0) * (1.0 - t).powf(2.0 * k - 2.0),
        })
    }

    /// Closed-form moment int h(t) t^n dt, the independent target.
    pub fn target_moment(&self, n: usize) -> f64 {
        match self {
            // n!
            Self::Ho => (1..=n).map(|m| m as f64).product(),
            // (k+1)_n
            Self::BgPho { k } => (0..n).map(|m| k + 1.0 + m as f64).product(),
            // n!/(2k)_n via the Beta integral
            Self::KpPho { k } => (1..=n).map(|m| m as f64 / (2.0 * k + m as f64 - 1.0)).product(),
        }
    }

    // The concrete rule refines the scheme by the preset's polynomial
    // family: on the half line the exponential part of the density moves
    // into the rule's weight (with t^k absorbed by the generalized rule),
    // which keeps the integrand polynomial and the far-node factors from
    // overflowing.
    fn rule(&self, quad: &QuadratureSpec) -> crate::quadrature::QuadratureRule {
        match self {
            Self::Ho | Self::KpPho { .. } => quad.rule(),
            Self::BgPho { k } => {
                crate::quadrature::gauss_generalized_laguerre(quad.node_count, *k)
            }
        }
    }

    fn quadrature_moment(&self, rule: &crate::quadrature::QuadratureRule, n: usize) -> f64 {
        match self {
            Self::Ho => rule.integrate(|t| t.powi(n as i32)),
            Self::BgPho { k } => {
                rule.integrate(|t| t.powi(n as i32)) / gamma(k + 1.0)
            }
            Self::KpPho { .. } => rule.integrate(|t| {
                self.density(t).expect("nodes lie strictly inside the support")
                    * t.powi(n as i32)
            }),
        }
    }
}

fn check_scheme(preset: &WeightPreset, quad: &QuadratureSpec) -> Result<()> {
    if preset.scheme() != quad.scheme {
        return Err(Error::InvalidParams(format!(
            "preset {} needs the {:?} scheme, got {:?}",
            preset.name(),
            preset.scheme(),
            quad.scheme
        )));
    }
    Ok(())
}

/// Per-moment relative error of the quadrature against the closed-form
/// targets, n <= n_max.
pub fn moment_check(
    preset: &WeightPreset,
    n_max: usize,
    quad: &QuadratureSpec,
) -> Result<VerificationReport> {
    check_scheme(preset, quad)?;
    let rule = preset.rule(quad);
    let mut report = VerificationReport::new(
        format!("moments of {} at {} nodes", preset.name(), quad.node_count),
        tol::MOMENT_REL,
    );
    for n in 0..=n_max {
        let value = preset.quadrature_moment(&rule, n);
        let target = preset.target_moment(n);
        report.record(format!("{n}"), value, target, (value / target - 1.0).abs());
    }
    Ok(report)
}

/// Worst moment errors before and after node doubling. Errors that fail to
/// decrease at all (and sit above the rounding floor) flag the rule as
/// under-resolved; callers wanting a stronger rate assert on the returned
/// pair.
pub fn moment_convergence_check(
    preset: &WeightPreset,
    n_max: usize,
    quad: &QuadratureSpec,
) -> Result<(f64, f64)> {
    let coarse = moment_check(preset, n_max, quad)?.worst_error();
    let doubled = quad.doubled();
    let fine = moment_check(preset, n_max, &doubled)?.worst_error();
    if fine > tol::MOMENT_FLOOR && fine >= coarse {
        return Err(Error::QuadratureUnderResolved {
            nodes: quad.node_count,
            doubled: doubled.node_count,
            coarse,
            fine,
        });
    }
    Ok((coarse, fine))
}

/// Diagonal reconstruction entries: quadrature of t^n h(t) / rho(n) must be
/// one for every retained n. The family supplies rho through its ladder
/// products; the preset's own moments are not reused, keeping the two
/// routes independent.
pub fn unity_reconstruction_check(
    family: &CsFamily,
    preset: &WeightPreset,
    n_max: usize,
    quad: &QuadratureSpec,
) -> Result<VerificationReport> {
    check_scheme(preset, quad)?;
    let rule = preset.rule(quad);
    let mut report = VerificationReport::new(
        format!("unity reconstruction over {}", preset.name()),
        tol::MOMENT_REL,
    );
    for n in 0..=n_max {
        let moment = preset.quadrature_moment(&rule, n);
        let entry = moment / family.rho(n)?;
        report.record(format!("{n}"), entry, 1.0, (entry - 1.0).abs());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pfq::HypergeometricParams;
    use crate::spectrum::EnergySpectrum;

    fn spec_for(preset: &WeightPreset, nodes: usize) -> QuadratureSpec {
        QuadratureSpec::new(nodes, preset.scheme()).unwrap()
    }

    #[test]
    fn density_reference_points() {
        assert_eq!(WeightPreset::Ho.density(0.0).unwrap(), 1.0);
        let kp = WeightPreset::kp_pho(1.0).unwrap();
        for t in [0.0, 0.3, 0.9] {
            assert_eq!(kp.density(t).unwrap(), 1.0);
        }
        let bg = WeightPreset::bg_pho(1.0).unwrap();
        assert!((bg.density(1.0).unwrap() - (-1.0f64).exp()).abs() < 1e-15);
    }

    #[test]
    fn density_support_is_enforced() {
        let kp = WeightPreset::kp_pho(1.0).unwrap();
        assert!(matches!(kp.density(1.0), Err(Error::OutOfSupport { .. })));
        assert!(matches!(
            WeightPreset::Ho.density(-0.1),
            Err(Error::OutOfSupport { .. })
        ));
    }

    #[test]
    fn integrability_bound_on_the_finite_interval() {
        assert!(WeightPreset::kp_pho(0.5).is_err());
        assert!(WeightPreset::kp_pho(0.51).is_ok());
    }

    #[test]
    fn target_moments_match_their_gamma_beta_forms() {
        // HO: n!; spot n = 3 -> 6.
        assert_eq!(WeightPreset::Ho.target_moment(3), 6.0);
        // BG k=1: (2)_3 = 24.
        assert_eq!(WeightPreset::bg_pho(1.0).unwrap().target_moment(3), 24.0);
        // KP k=1: 3!/(2)_3 = 0.25, the Beta integral 1/(n+1).
        assert!((WeightPreset::kp_pho(1.0).unwrap().target_moment(3) - 0.25).abs() < 1e-15);
        // General Beta identity at k = 1.5, n = 4:
        // (2k-1) * B(n+1, 2k-1) = Gamma(n+1) Gamma(2k) / Gamma(n+2k).
        let k: f64 = 1.5;
        let n = 4usize;
        let beta = gamma(n as f64 + 1.0) * gamma(2.0 * k) / gamma(n as f64 + 2.0 * k);
        let target = WeightPreset::kp_pho(k).unwrap().target_moment(n);
        assert!((target - beta).abs() < 1e-14 * beta);
    }

    #[test]
    fn moments_at_reference_node_count() {
        for preset in [
            WeightPreset::Ho,
            WeightPreset::bg_pho(1.0).unwrap(),
            WeightPreset::kp_pho(1.0).unwrap(),
        ] {
            let report = moment_check(&preset, 10, &spec_for(&preset, tol::MOMENT_NODES)).unwrap();
            assert!(
                report.passed(),
                "{} worst {}",
                preset.name(),
                report.worst_error()
            );
        }
    }

    #[test]
    fn zeroth_moment_is_the_total_mass() {
        for preset in [
            WeightPreset::Ho,
            WeightPreset::bg_pho(1.0).unwrap(),
            WeightPreset::kp_pho(1.0).unwrap(),
        ] {
            let report = moment_check(&preset, 0, &spec_for(&preset, 50)).unwrap();
            assert!(report.items[0].error <= 1e-10);
        }
    }

    #[test]
    fn node_doubling_converges() {
        for preset in [
            WeightPreset::Ho,
            WeightPreset::bg_pho(1.0).unwrap(),
            WeightPreset::kp_pho(1.0).unwrap(),
        ] {
            moment_convergence_check(&preset, 10, &spec_for(&preset, tol::MOMENT_NODES)).unwrap();
        }
    }

    #[test]
    fn non_elementary_density_resolves_slowly_but_converges() {
        // k = 0.75 has an integrable endpoint singularity; the rule is not
        // exact but must still shrink under doubling.
        let preset = WeightPreset::kp_pho(0.75).unwrap();
        let (coarse, fine) =
            moment_convergence_check(&preset, 4, &spec_for(&preset, 64)).unwrap();
        assert!(fine < coarse);
    }

    #[test]
    fn scheme_mismatch_is_rejected() {
        let err = moment_check(
            &WeightPreset::Ho,
            4,
            &QuadratureSpec::new(50, QuadScheme::FiniteInterval01).unwrap(),
        );
        assert!(err.is_err());
    }

    #[test]
    fn reconstruction_diagonal_is_unity() {
        let ho_family = CsFamily::barut_girardello(
            HypergeometricParams::new(vec![], vec![]).unwrap(),
            EnergySpectrum::linear(0.0).unwrap(),
        );
        let report = unity_reconstruction_check(
            &ho_family,
            &WeightPreset::Ho,
            10,
            &spec_for(&WeightPreset::Ho, tol::MOMENT_NODES),
        )
        .unwrap();
        assert!(report.passed(), "worst {}", report.worst_error());

        let bg_family = CsFamily::barut_girardello(
            HypergeometricParams::new(vec![1.0], vec![2.0]).unwrap(),
            EnergySpectrum::linear(1.0).unwrap(),
        );
        let preset = WeightPreset::bg_pho(1.0).unwrap();
        let report = unity_reconstruction_check(
            &bg_family,
            &preset,
            10,
            &spec_for(&preset, tol::MOMENT_NODES),
        )
        .unwrap();
        assert!(report.passed(), "worst {}", report.worst_error());
    }
}
