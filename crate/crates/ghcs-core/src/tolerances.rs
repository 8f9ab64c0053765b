//! Centralized numerical thresholds.
//!
//! Every tolerance used by the library, the verification suites, and the
//! CLI is pinned here so that no check carries an ad-hoc magic number.

/// Relative stopping threshold for adaptive series summation: a term is
/// negligible once |term| <= EPS_REL * |partial sum|, for two consecutive
/// terms (the second look guards against an accidentally zero term).
pub const SERIES_EPS_REL: f64 = 1e-15;

/// Default hard cap on the number of series terms. Overridable per call
/// and through the CLI environment variable `GHCS_NMAX`.
pub const SERIES_N_MAX: usize = 10_000;

/// Safety margin inside the unit disc for Hausdorff-regime kernels; the
/// series converges too slowly near |x| = 1 for the stopping rule to mean
/// anything.
pub const RADIUS_MARGIN: f64 = 1e-6;

/// Order above which structure constants switch to the log domain.
pub const LOG_DOMAIN_ORDER: usize = 150;

/// Default truncation order for Fock expansions.
pub const FOCK_DEFAULT_ORDER: usize = 64;

/// Fock expansions grow until |c_N|^2 is below this fraction of the norm.
pub const FOCK_TAIL_FRACTION: f64 = 1e-30;

/// Default central-difference step for the Bloch residual, in epsilon.
pub const FD_STEP_DEFAULT: f64 = 1e-4;

/// Relative Bloch residual bound at `FD_STEP_DEFAULT` (O(h^2) floor).
pub const BLOCH_REL: f64 = 1e-6;

/// Halving the step must shrink the residual at least this much, until
/// the rounding floor is reached.
pub const BLOCH_HALVING_FACTOR: f64 = 3.0;

/// Rounding floor below which the halving factor no longer applies.
pub const BLOCH_ROUNDING_FLOOR: f64 = 1e-10;

/// Absolute bound for the exponential closed form of the zero-offset
/// linear-spectrum density matrix.
pub const HO_CLOSED_FORM_ABS: f64 = 1e-12;

/// Relative agreement between the series and the erf closed form.
pub const ERF_CLOSED_FORM_REL: f64 = 1e-10;

/// Relative agreement between eval and every registered closed form.
pub const CLOSED_FORM_REL: f64 = 1e-10;

/// Relative bound on the structure-constant duality product.
pub const DUALITY_REL: f64 = 1e-12;

/// Relative bound for the action identity.
pub const ACTION_IDENTITY_REL: f64 = 1e-10;

/// Absolute bound for the zero-temperature boundary condition.
pub const BOUNDARY_ABS: f64 = 1e-13;

/// Relative bound for the coefficient-recurrence residual of the kernel ODE.
pub const ODE_RESIDUAL_REL: f64 = 1e-14;

/// Relative bound for quadrature moment checks at the reference node count.
pub const MOMENT_REL: f64 = 1e-8;

/// Floor under which further node doubling is not expected to help.
pub const MOMENT_FLOOR: f64 = 1e-12;

/// Reference node count for the moment suite.
pub const MOMENT_NODES: usize = 200;

/// Absolute bound on the integrated-solution audit when the level offset
/// vanishes (both routes coincide analytically).
pub const AUDIT_ZERO_OFFSET_ABS: f64 = 1e-12;

/// Agreement between the audit and its frozen regression value.
pub const AUDIT_REGRESSION_ABS: f64 = 1e-10;

/// Absolute bound for the geometric closed form of the linear partition sum.
pub const PARTITION_CLOSED_FORM_ABS: f64 = 1e-12;

/// Stability bound for the quadratic partition sum under cap doubling.
pub const PARTITION_STABILITY: f64 = 1e-15;

/// Tail-to-sum ratio above which a truncated partition sum is rejected.
pub const PARTITION_TAIL_REL: f64 = 1e-15;

/// Absolute bound for the Husimi closed form on the scan grid.
pub const HUSIMI_ABS: f64 = 1e-12;

/// Relative bound for the large-argument confluent kernel approximation.
pub const ASYMPTOTIC_1F1_REL: f64 = 0.02;

/// Relative bound for the large-argument thermal element approximation at
/// zero inverse temperature, where its argument-power convention is exact.
pub const ASYMPTOTIC_OMEGA_REL: f64 = 0.03;

/// Relative bound for the argument-rescaling route of linear spectra.
pub const RESCALING_REL: f64 = 1e-13;

/// Absolute bound for Hermitian symmetry of thermal elements.
pub const HERMITICITY_ABS: f64 = 1e-14;

/// Relative rounding allowance for exact product identities.
pub const PRODUCT_ROUNDING_REL: f64 = 1e-13;

/// Guard against division by values indistinguishable from zero.
pub const DIVISION_GUARD: f64 = 1e-300;

// Ordering sanity, checked at compile time.
const _: () = {
    assert!(SERIES_EPS_REL > 0.0);
    assert!(RADIUS_MARGIN > 0.0 && RADIUS_MARGIN < 1.0);
    assert!(BLOCH_ROUNDING_FLOOR < BLOCH_REL);
    assert!(MOMENT_FLOOR < MOMENT_REL);
    assert!(BOUNDARY_ABS < HO_CLOSED_FORM_ABS);
    assert!(ASYMPTOTIC_1F1_REL < ASYMPTOTIC_OMEGA_REL);
};
