//! Coherent-state families: structure constants from ladder spectra, Fock
//! expansions, overlap kernels, ladder actions, the action identity, and
//! the duality of the two construction manners.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::pfq::{
    self, eval_pfq_complex, pochhammer, structure_constant_log, HypergeometricParams, RhoKind,
};
use crate::report::VerificationReport;
use crate::spectrum::EnergySpectrum;
use crate::tolerances as tol;

/// The three construction manners.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CsKind {
    /// Eigenvectors of the annihilation operator.
    BarutGirardello,
    /// Exponential creation operator on the vacuum; dual to the first.
    KlauderPerelomov,
    /// Real two-parameter labels (action, angle) with eigenvalue phases.
    GazeauKlauder,
}

impl CsKind {
    pub fn name(&self) -> &'static str {
        match self {
            Self::BarutGirardello => "BG",
            Self::KlauderPerelomov => "KP",
            Self::GazeauKlauder => "GK",
        }
    }
}

/// Action-angle label (J, gamma) with J >= 0; the equivalent complex label
/// is z = sqrt(J) exp(-i gamma).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GkLabel {
    pub action: f64,
    pub angle: f64,
}

impl GkLabel {
    pub fn new(action: f64, angle: f64) -> Result<Self> {
        if action < 0.0 {
            return Err(Error::InvalidParams(format!(
                "action label must be nonnegative, got {action}"
            )));
        }
        Ok(Self { action, angle })
    }

    /// Decompose a complex label; the angle comes out in (-pi, pi].
    pub fn from_complex(z: Complex64) -> Self {
        Self {
            action: z.norm_sqr(),
            angle: -z.arg(),
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::from_polar(self.action.sqrt(), -self.angle)
    }
}

/// An immutable coherent-state family: a construction manner, the parameter
/// set fixing its structure constants, and the thermal spectrum of the
/// quantum system it represents.
#[derive(Debug, Clone, PartialEq)]
pub struct CsFamily {
    kind: CsKind,
    params: HypergeometricParams,
    spectrum: EnergySpectrum,
    /// Frequency scale of the two-parameter manner; 1 otherwise.
    gk_scale: f64,
}

impl CsFamily {
    pub fn barut_girardello(params: HypergeometricParams, spectrum: EnergySpectrum) -> Self {
        Self {
            kind: CsKind::BarutGirardello,
            params,
            spectrum,
            gk_scale: 1.0,
        }
    }

    /// The dual manner; the kernel swaps parameter roles, so the swapped set
    /// must itself be a valid parameter set.
    pub fn klauder_perelomov(
        params: HypergeometricParams,
        spectrum: EnergySpectrum,
    ) -> Result<Self> {
        params.swapped()?;
        Ok(Self {
            kind: CsKind::KlauderPerelomov,
            params,
            spectrum,
            gk_scale: 1.0,
        })
    }

    /// Two-parameter family with Bargmann index k; structure constants
    /// scale^n (k+1)_n, kernel argument divided by the scale.
    pub fn gazeau_klauder(k: f64, scale: f64) -> Result<Self> {
        let spectrum = EnergySpectrum::gk_scaled(k, scale)?;
        let params = HypergeometricParams::new(vec![1.0], vec![k + 1.0])?;
        Ok(Self {
            kind: CsKind::GazeauKlauder,
            params,
            spectrum,
            gk_scale: scale,
        })
    }

    pub fn kind(&self) -> CsKind {
        self.kind
    }

    pub fn params(&self) -> &HypergeometricParams {
        &self.params
    }

    pub fn spectrum(&self) -> &EnergySpectrum {
        &self.spectrum
    }

    /// Ladder eigenvalue e(m) tied to the structure constants through
    /// rho(m) = e(m) rho(m-1); m >= 1.
    pub fn ladder_eigenvalue(&self, m: usize) -> f64 {
        match self.kind {
            CsKind::BarutGirardello => pfq::ladder_rational(&self.params, RhoKind::Bg, m),
            CsKind::KlauderPerelomov => pfq::ladder_rational(&self.params, RhoKind::Kp, m),
            CsKind::GazeauKlauder => self.spectrum.eigenvalue(m) ,
        }
    }

    /// Structure constant rho(n) as a direct product of ladder eigenvalues.
    pub fn rho(&self, n: usize) -> Result<f64> {
        let mut acc = 1.0f64;
        for m in 1..=n {
            acc *= self.ladder_eigenvalue(m);
            if !acc.is_finite() {
                return Err(Error::Overflow {
                    context: "structure constant",
                    n: m,
                });
            }
        }
        Ok(acc)
    }

    /// ln rho(n) for orders past the f64 range.
    pub fn rho_log(&self, n: usize) -> Result<f64> {
        match self.kind {
            CsKind::BarutGirardello => structure_constant_log(&self.params, RhoKind::Bg, n),
            CsKind::KlauderPerelomov => structure_constant_log(&self.params, RhoKind::Kp, n),
            CsKind::GazeauKlauder => Ok(n as f64 * self.gk_scale.ln()
                + structure_constant_log(&self.params, RhoKind::Bg, n)?),
        }
    }

    /// Parameter set of the overlap kernel (the dual manner swaps roles).
    pub fn kernel_params(&self) -> Result<HypergeometricParams> {
        match self.kind {
            CsKind::KlauderPerelomov => self.params.swapped(),
            _ => Ok(self.params.clone()),
        }
    }

    /// Convergence radius of the overlap kernel in its natural argument.
    pub fn radius(&self) -> f64 {
        match self.kind {
            CsKind::KlauderPerelomov => self
                .params
                .swapped()
                .map(|s| pfq::convergence_radius(&s))
                .unwrap_or(0.0),
            _ => pfq::convergence_radius(&self.params),
        }
    }

    /// Scale divisor applied to kernel arguments (1 except for the
    /// two-parameter manner, whose structure constants absorb it).
    pub fn argument_scale(&self) -> f64 {
        self.gk_scale
    }

    /// Normalization kernel at real argument t: sum t^n / rho(n).
    pub fn kernel(&self, t: f64) -> Result<f64> {
        Ok(self.kernel_complex(Complex64::new(t, 0.0))?.re)
    }

    /// Complex-argument normalization kernel.
    pub fn kernel_complex(&self, t: Complex64) -> Result<Complex64> {
        let params = self.kernel_params()?;
        Ok(eval_pfq_complex(&params, t / self.gk_scale)?.value)
    }

    /// Expansion coefficient n of the non-normalized state: z^n / sqrt(rho(n)),
    /// with the label phases of the two-parameter manner when applicable.
    pub fn cs_coefficient(&self, n: usize, z: Complex64) -> Complex64 {
        match self.kind {
            CsKind::GazeauKlauder => self.cs_coefficient_gk(n, &GkLabel::from_complex(z)),
            _ => {
                // Incremental z / sqrt(e(m)) keeps the product in range well
                // past where rho(n) itself would overflow.
                let mut c = Complex64::ONE;
                for m in 1..=n {
                    c = c * z / self.ladder_eigenvalue(m).sqrt();
                }
                c
            }
        }
    }

    /// Coefficient n for an action-angle label:
    /// sqrt(J)^n exp(-i gamma e(n)) / sqrt(rho(n)).
    ///
    /// The phase carries the printed level including n = 0, so the entry 0
    /// has unit modulus and equals one exactly at zero angle.
    pub fn cs_coefficient_gk(&self, n: usize, label: &GkLabel) -> Complex64 {
        let mut magnitude = 1.0f64;
        for m in 1..=n {
            magnitude *= label.action.sqrt() / self.ladder_eigenvalue(m).sqrt();
        }
        magnitude * Complex64::from_polar(1.0, -label.angle * self.gk_level(n))
    }

    // Printed level of the scaled spectrum extended to n = 0.
    fn gk_level(&self, n: usize) -> f64 {
        match &self.spectrum {
            EnergySpectrum::GkScaled { k, scale } => scale * (n as f64 + k),
            _ => unreachable!("two-parameter families always carry a scaled spectrum"),
        }
    }

    /// Fock expansion of |z) truncated at `order` (inclusive).
    pub fn fock_expansion(&self, z: Complex64, order: usize) -> FockExpansion {
        let coefficients = (0..=order).map(|n| self.cs_coefficient(n, z)).collect();
        FockExpansion { coefficients }
    }

    /// Fock expansion grown from the default order until the tail is
    /// negligible against the running norm.
    pub fn fock_expansion_auto(&self, z: Complex64) -> FockExpansion {
        let mut order = tol::FOCK_DEFAULT_ORDER;
        loop {
            let expansion = self.fock_expansion(z, order);
            let norm: f64 = expansion.coefficients.iter().map(|c| c.norm_sqr()).sum();
            let tail = expansion.coefficients[order].norm_sqr();
            if tail <= tol::FOCK_TAIL_FRACTION * norm || order >= 4 * tol::FOCK_DEFAULT_ORDER {
                return expansion;
            }
            order *= 2;
        }
    }

    /// Non-orthogonality kernel ((z|z')): the overlap of two non-normalized
    /// states. For the two-parameter manner the complex labels are
    /// decomposed into action-angle pairs first.
    pub fn overlap(&self, z: Complex64, zp: Complex64) -> Result<Complex64> {
        match self.kind {
            CsKind::GazeauKlauder => {
                self.overlap_gk(&GkLabel::from_complex(z), &GkLabel::from_complex(zp))
            }
            _ => {
                let arg = z.conj() * zp;
                self.check_kernel_radius(arg.norm())?;
                self.kernel_complex(arg)
            }
        }
    }

    /// Overlap of two action-angle labels; the bra phase enters conjugated,
    /// so equal angles cancel term by term.
    pub fn overlap_gk(&self, bra: &GkLabel, ket: &GkLabel) -> Result<Complex64> {
        self.require_kind(CsKind::GazeauKlauder, "GK")?;
        let root = (bra.action * ket.action).sqrt();
        let mut sum = Complex64::ZERO;
        let mut magnitude = 1.0f64;
        let mut streak = 0usize;
        for n in 0..=tol::SERIES_N_MAX {
            if n > 0 {
                magnitude *= root / self.ladder_eigenvalue(n);
            }
            let e_n = self.gk_level(n);
            let bra_phase = Complex64::from_polar(1.0, bra.angle * e_n);
            let ket_phase = Complex64::from_polar(1.0, -ket.angle * e_n);
            sum += magnitude * bra_phase * ket_phase;
            if n > 0 && (magnitude == 0.0 || magnitude <= tol::SERIES_EPS_REL * sum.norm()) {
                streak += 1;
                if streak >= 2 {
                    return Ok(sum);
                }
            }
            if n > 0 && magnitude > tol::SERIES_EPS_REL * sum.norm() {
                streak = 0;
            }
        }
        Err(Error::NotConverged {
            terms: tol::SERIES_N_MAX,
        })
    }

    /// Annihilation action on an expansion: entry n of the result is
    /// sqrt(e(n+1)) times entry n+1 of the input; the top entry is cleared.
    pub fn ladder_down(&self, expansion: &FockExpansion) -> FockExpansion {
        let len = expansion.coefficients.len();
        let mut coefficients = vec![Complex64::ZERO; len];
        for (n, dst) in coefficients.iter_mut().take(len - 1).enumerate() {
            *dst = self.ladder_eigenvalue(n + 1).sqrt() * expansion.coefficients[n + 1];
        }
        FockExpansion { coefficients }
    }

    /// Build the state by repeated raising from the vacuum:
    /// sum z^n (A_+)^n |0> / rho(n). Same numbers as the coefficient
    /// formula, reached through the raising-product route.
    pub fn build_state_by_ladder(&self, z: Complex64, order: usize) -> FockExpansion {
        let mut coefficients = Vec::with_capacity(order + 1);
        let mut raising_amplitude = 1.0f64; // prod sqrt(e(m)): (A_+)^n |0> = that * |n>
        let mut rho = 1.0f64;
        let mut z_pow = Complex64::ONE;
        coefficients.push(Complex64::ONE);
        for n in 1..=order {
            let e = self.ladder_eigenvalue(n);
            raising_amplitude *= e.sqrt();
            rho *= e;
            z_pow *= z;
            coefficients.push(z_pow * raising_amplitude / rho);
        }
        FockExpansion { coefficients }
    }

    /// Diagonal expectation of the Hamiltonian over the normalized state,
    /// in units of the system quantum:
    /// [sum_{n>=1} e(n) t^n / rho(n)] / kernel(t) with t = |z|^2.
    ///
    /// For this construction manner the sum telescopes and the result is
    /// exactly t.
    pub fn action_identity(&self, zsq: f64) -> Result<f64> {
        self.require_kind(CsKind::BarutGirardello, "BG")?;
        self.check_kernel_radius(zsq)?;
        let mut sum = 0.0f64;
        let mut term = 1.0f64; // t^n / rho(n), starting at n = 0
        let mut streak = 0usize;
        for n in 1..=tol::SERIES_N_MAX {
            term *= zsq / self.ladder_eigenvalue(n);
            let contribution = self.ladder_eigenvalue(n) * term;
            sum += contribution;
            if contribution.abs() <= tol::SERIES_EPS_REL * sum.abs().max(1.0) {
                streak += 1;
                if streak >= 2 {
                    break;
                }
            } else {
                streak = 0;
            }
        }
        Ok(sum / self.kernel(zsq)?)
    }

    fn require_kind(&self, required: CsKind, name: &'static str) -> Result<()> {
        if self.kind != required {
            return Err(Error::UnsupportedKind {
                required: name,
                got: self.kind.name(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_kernel_radius(&self, modulus: f64) -> Result<()> {
        let radius = self.radius();
        if radius.is_finite() && modulus > radius * (1.0 - tol::RADIUS_MARGIN) {
            return Err(Error::OutOfRadius {
                arg: modulus,
                radius,
            });
        }
        Ok(())
    }
}

/// Truncated Fock-space expansion of a non-normalized state.
#[derive(Debug, Clone, PartialEq)]
pub struct FockExpansion {
    coefficients: Vec<Complex64>,
}

impl FockExpansion {
    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Expansion with a single excited component, handy in tests.
    pub fn single_component(level: usize, amplitude: Complex64, order: usize) -> Self {
        let mut coefficients = vec![Complex64::ZERO; order + 1];
        coefficients[level] = amplitude;
        Self { coefficients }
    }
}

/// Max over n <= n_max of |rho_BG(n) rho_KP(n) / (n!)^2 - 1|, with both
/// constants computed by direct Pochhammer products.
pub fn duality_check(params: &HypergeometricParams, n_max: usize) -> VerificationReport {
    let mut report = VerificationReport::new("structure-constant duality", tol::DUALITY_REL);
    for n in 0..=n_max {
        let factorial = pochhammer(1.0, n);
        let mut bg = factorial;
        let mut kp = factorial;
        for &ai in params.a() {
            let pa = pochhammer(ai, n);
            bg /= pa;
            kp *= pa;
        }
        for &bj in params.b() {
            let pb = pochhammer(bj, n);
            bg *= pb;
            kp /= pb;
        }
        let ratio = bg * kp / (factorial * factorial);
        report.record(format!("n={n}"), ratio, 1.0, (ratio - 1.0).abs());
    }
    report
}
