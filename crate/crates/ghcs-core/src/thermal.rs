//! Canonical (non-normalized) density-matrix elements in the coherent-state
//! representation, partition sums, Husimi functions, boundary limits, and
//! large-argument behaviour.
//!
//! All thermal quantities depend on the single dimensionless inverse
//! temperature eps; the element of a family with thermal exponents w(n) is
//! sum_n exp(-eps w(n)) (z* z')^n / rho(n), evaluated directly from the
//! definition.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::family::{CsFamily, CsKind, GkLabel};
use crate::special::{gamma, ln_gamma};
use crate::spectrum::EnergySpectrum;
use crate::tolerances as tol;

/// One thermal matrix-element query.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalQuery {
    pub eps: f64,
    pub z: Complex64,
    pub zp: Complex64,
}

impl ThermalQuery {
    pub fn new(eps: f64, z: Complex64, zp: Complex64) -> Result<Self> {
        if eps < 0.0 {
            return Err(Error::InvalidParams(format!(
                "inverse temperature must be nonnegative, got {eps}"
            )));
        }
        Ok(Self { eps, z, zp })
    }

    /// Diagonal query with real labels: z = z' = sqrt(x), so z* z' = x.
    pub fn diagonal(eps: f64, x: f64) -> Result<Self> {
        if x < 0.0 {
            return Err(Error::InvalidParams(format!(
                "diagonal queries need a nonnegative label product, got {x}"
            )));
        }
        let root = Complex64::new(x.sqrt(), 0.0);
        Self::new(eps, root, root)
    }
}

/// How a returned element was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OmegaRoute {
    DefinitionSeries,
    ClosedForm,
}

impl OmegaRoute {
    pub fn name(&self) -> &'static str {
        match self {
            Self::DefinitionSeries => "definition-series",
            Self::ClosedForm => "closed-form",
        }
    }
}

/// A thermal matrix element with its provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OmegaResult {
    pub value: Complex64,
    pub route: OmegaRoute,
    pub terms_used: usize,
}

// The Boltzmann factors rescale the argument only when the exponent is
// linear in n; gate finite-radius kernels on the effective modulus.
fn radius_gate(family: &CsFamily, eps: f64, modulus: f64) -> Result<()> {
    let radius = family.radius();
    if !radius.is_finite() {
        return Ok(());
    }
    let effective = match family.spectrum() {
        EnergySpectrum::Linear { .. } | EnergySpectrum::GkScaled { .. } => {
            modulus * (-eps).exp()
        }
        // Super-exponential suppression converges everywhere once eps > 0.
        EnergySpectrum::Quadratic { .. } => {
            if eps > 0.0 {
                return Ok(());
            }
            modulus
        }
        // Rational exponents approach a constant; eps never buys radius.
        EnergySpectrum::BgRational { .. } | EnergySpectrum::KpRational { .. } => modulus,
    };
    if effective > radius * (1.0 - tol::RADIUS_MARGIN) {
        return Err(Error::OutOfRadius {
            arg: effective,
            radius,
        });
    }
    Ok(())
}

/// Element of the non-normalized canonical operator between two states,
/// summed from the definition.
pub fn omega_element(family: &CsFamily, q: &ThermalQuery) -> Result<OmegaResult> {
    omega_element_capped(family, q, tol::SERIES_N_MAX)
}

/// As [`omega_element`] with an explicit term cap.
pub fn omega_element_capped(
    family: &CsFamily,
    q: &ThermalQuery,
    n_max: usize,
) -> Result<OmegaResult> {
    let spectrum = family.spectrum().clone();
    match family.kind() {
        CsKind::GazeauKlauder => {
            let bra = GkLabel::from_complex(q.z);
            let ket = GkLabel::from_complex(q.zp);
            omega_element_gk(family, q.eps, &bra, &ket, n_max)
        }
        _ => {
            let arg = q.z.conj() * q.zp;
            radius_gate(family, q.eps, arg.norm())?;
            // The Boltzmann factor folds into the term update step by step;
            // keeping it separate would overflow the bare powers long before
            // the damped contributions peak.
            let mut term = Complex64::new((-q.eps * spectrum.thermal_exponent(0)).exp(), 0.0);
            let mut sum = term;
            let mut streak = 0usize;
            for n in 1..=n_max {
                let dw = spectrum.thermal_exponent(n) - spectrum.thermal_exponent(n - 1);
                term = term * arg * ((-q.eps * dw).exp() / family.ladder_eigenvalue(n));
                sum += term;
                let mag = term.norm();
                if mag == 0.0 || mag <= tol::SERIES_EPS_REL * sum.norm() {
                    streak += 1;
                    if streak >= 2 {
                        return Ok(OmegaResult {
                            value: sum,
                            route: OmegaRoute::DefinitionSeries,
                            terms_used: n,
                        });
                    }
                } else {
                    streak = 0;
                }
            }
            Err(Error::NotConverged { terms: n_max })
        }
    }
}

/// Element between two action-angle labels.
pub fn omega_element_gk(
    family: &CsFamily,
    eps: f64,
    bra: &GkLabel,
    ket: &GkLabel,
    n_max: usize,
) -> Result<OmegaResult> {
    let spectrum = family.spectrum().clone();
    let root = (bra.action * ket.action).sqrt();
    radius_gate(family, eps, root)?;
    // exp(-eps w(n)) root^n / rho(n), with the Boltzmann factor folded in.
    let mut magnitude = (-eps * spectrum.thermal_exponent(0)).exp();
    let mut sum = Complex64::ZERO;
    let mut streak = 0usize;
    for n in 0..=n_max {
        if n > 0 {
            let dw = spectrum.thermal_exponent(n) - spectrum.thermal_exponent(n - 1);
            magnitude *= root * ((-eps * dw).exp() / family.ladder_eigenvalue(n));
        }
        // Phases carry the printed level, extended to n = 0 by the same rule.
        let phase_level = gk_printed_level(&spectrum, n);
        let phases = Complex64::from_polar(1.0, bra.angle * phase_level)
            * Complex64::from_polar(1.0, -ket.angle * phase_level);
        let contribution = magnitude * phases;
        sum += contribution;
        let mag = contribution.norm();
        if n > 0 {
            if mag == 0.0 || mag <= tol::SERIES_EPS_REL * sum.norm() {
                streak += 1;
                if streak >= 2 {
                    return Ok(OmegaResult {
                        value: sum,
                        route: OmegaRoute::DefinitionSeries,
                        terms_used: n,
                    });
                }
            } else {
                streak = 0;
            }
        }
    }
    Err(Error::NotConverged { terms: n_max })
}

fn gk_printed_level(spectrum: &EnergySpectrum, n: usize) -> f64 {
    match spectrum {
        EnergySpectrum::GkScaled { k, scale } => scale * (n as f64 + k),
        _ => unreachable!("GK elements always carry a scaled spectrum"),
    }
}

/// The zero-temperature boundary of the element is the overlap kernel;
/// exposed on its own so the limit is testable directly.
pub fn omega_boundary(family: &CsFamily, z: Complex64, zp: Complex64) -> Result<Complex64> {
    family.overlap(z, zp)
}

/// Closed form of the element where one is registered: linear spectra over
/// exponential/binomial/confluent kernels, and the two-parameter manner at
/// equal angles. Returns `Ok(None)` otherwise.
pub fn omega_closed_form(family: &CsFamily, q: &ThermalQuery) -> Result<Option<Complex64>> {
    let decay = (-q.eps).exp();
    match (family.kind(), family.spectrum()) {
        (CsKind::GazeauKlauder, EnergySpectrum::GkScaled { k, scale }) => {
            let bra = GkLabel::from_complex(q.z);
            let ket = GkLabel::from_complex(q.zp);
            if (bra.angle - ket.angle).abs() > 0.0 {
                return Ok(None);
            }
            let x = decay * (bra.action * ket.action).sqrt() / scale;
            // Kernel is 1F1(1; k+1; .): closed only at the (e^x - 1)/x point.
            if *k == 1.0 {
                let value = if x == 0.0 { 1.0 } else { x.exp_m1() / x };
                Ok(Some(Complex64::new((-q.eps * k).exp() * value, 0.0)))
            } else {
                Ok(None)
            }
        }
        (_, EnergySpectrum::Linear { e0 }) => {
            let arg = q.z.conj() * q.zp * decay;
            let prefactor = (-q.eps * e0).exp();
            let params = family.kernel_params()?;
            let value = match (params.a(), params.b()) {
                ([], []) => arg.exp(),
                ([b], []) => {
                    if arg.norm() >= 1.0 {
                        return Err(Error::OutOfRadius {
                            arg: arg.norm(),
                            radius: 1.0,
                        });
                    }
                    (Complex64::ONE - arg).powf(-b)
                }
                ([a], [b]) if *a == 1.0 && *b == 2.0 => {
                    if arg.norm() == 0.0 {
                        Complex64::ONE
                    } else {
                        (arg.exp() - 1.0) / arg
                    }
                }
                ([a], [b]) if *a == 1.0 && *b == 1.5 && arg.im == 0.0 && arg.re >= 0.0 => {
                    let x = arg.re;
                    match crate::pfq::closed_form(&params, x)? {
                        Some(v) => Complex64::new(v, 0.0),
                        None => return Ok(None),
                    }
                }
                _ => return Ok(None),
            };
            Ok(Some(prefactor * value))
        }
        _ => Ok(None),
    }
}

/// Argument-rescaling route for linear spectra:
/// exp(-eps e0) * kernel(exp(-eps) z* z'). Exact for every linear-spectrum
/// family; used as the independent route in equivalence checks.
pub fn omega_rescaled_linear(family: &CsFamily, q: &ThermalQuery) -> Result<Complex64> {
    let decay = (-q.eps).exp();
    match (family.kind(), family.spectrum()) {
        (CsKind::GazeauKlauder, EnergySpectrum::GkScaled { k, .. }) => {
            let bra = GkLabel::from_complex(q.z);
            let ket = GkLabel::from_complex(q.zp);
            let value = family
                .kernel_complex(Complex64::new(decay * (bra.action * ket.action).sqrt(), 0.0))?;
            Ok((-q.eps * k).exp() * value)
        }
        (_, EnergySpectrum::Linear { e0 }) => {
            let arg = q.z.conj() * q.zp * decay;
            family.check_kernel_radius(arg.norm())?;
            Ok((-q.eps * e0).exp() * family.kernel_complex(arg)?)
        }
        _ => Err(Error::InvalidParams(
            "argument rescaling applies to linear thermal exponents only".into(),
        )),
    }
}

/// Truncated partition sum over the spectrum's thermal exponents.
pub fn partition_function(spectrum: &EnergySpectrum, eps: f64, n_max: usize) -> Result<f64> {
    if eps <= 0.0 {
        return Err(Error::InvalidParams(format!(
            "partition sums need eps > 0, got {eps}"
        )));
    }
    let mut sum = 0.0f64;
    let mut tail = 0.0f64;
    for n in 0..=n_max {
        tail = (-eps * spectrum.thermal_exponent(n)).exp();
        sum += tail;
    }
    if tail > tol::PARTITION_TAIL_REL * sum {
        return Err(Error::NotConverged { terms: n_max });
    }
    Ok(sum)
}

/// Partition sum with the cap grown until the tail rule is met.
pub fn partition_function_auto(spectrum: &EnergySpectrum, eps: f64) -> Result<f64> {
    let mut n_max = 64usize;
    loop {
        match partition_function(spectrum, eps, n_max) {
            Ok(z) => return Ok(z),
            Err(Error::NotConverged { .. }) if n_max < (1 << 22) => n_max *= 2,
            Err(e) => return Err(e),
        }
    }
}

/// Geometric closed form of the linear-spectrum partition sum.
pub fn partition_closed_linear(e0: f64, eps: f64) -> f64 {
    (-eps * e0).exp() / (-(-eps).exp() + 1.0)
}

/// Husimi function at t = |z|^2: the thermal diagonal over the kernel,
/// divided additionally by the partition sum when `normalized`.
pub fn husimi_q(family: &CsFamily, eps: f64, zsq: f64, normalized: bool) -> Result<f64> {
    let q = ThermalQuery::diagonal(eps, zsq)?;
    let numerator = omega_element(family, &q)?.value.re;
    let kernel = family.kernel(zsq)?;
    let mut value = numerator / kernel;
    if normalized {
        value /= partition_function_auto(family.spectrum(), eps)?;
    }
    Ok(value)
}

/// Normalized matrix element: the non-normalized element divided by the
/// square roots of the kernel at each diagonal label.
pub fn normalized_element(family: &CsFamily, q: &ThermalQuery) -> Result<Complex64> {
    let omega = omega_element(family, q)?.value;
    let left = family.kernel(q.z.norm_sqr())?;
    let right = family.kernel(q.zp.norm_sqr())?;
    Ok(omega / (left.sqrt() * right.sqrt()))
}

/// Large-argument form of the linear-spectrum element:
/// Gamma(e0+1) exp(-eps e0) exp(exp(-eps) x) / x^e0.
///
/// The denominator keeps the bare x power (not the rescaled argument), so
/// at moderate eps the approximation carries a known offset; compare at
/// small eps or in the log domain.
pub fn asymptotic_omega_linear(e0: f64, eps: f64, x: f64) -> f64 {
    gamma(e0 + 1.0) * (-eps * e0).exp() * ((-eps).exp() * x).exp() / x.powf(e0)
}

/// Log-domain variant of [`asymptotic_omega_linear`].
pub fn asymptotic_omega_linear_log(e0: f64, eps: f64, x: f64) -> f64 {
    ln_gamma(e0 + 1.0) - eps * e0 + (-eps).exp() * x - e0 * x.ln()
}
