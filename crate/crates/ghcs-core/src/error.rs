//! Error type shared by every module in the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when constructing parameter sets or
/// evaluating series, kernels, and quadratures.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Parameter validation failed at construction time.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// Series argument lies outside the convergence disc (minus the safety margin).
    #[error("argument modulus {arg} is outside the convergence radius {radius}")]
    OutOfRadius { arg: f64, radius: f64 },

    /// The stopping rule was not met within the term cap.
    #[error("series did not converge within {terms} terms")]
    NotConverged { terms: usize },

    /// A direct product left the f64 range; the log-domain variant must be used.
    #[error("{context} overflows the f64 range at n = {n}")]
    Overflow { context: &'static str, n: usize },

    /// Weight-function evaluation outside the measure support.
    #[error("point {t} lies outside the weight support [0, {limit})")]
    OutOfSupport { t: f64, limit: f64 },

    /// Moment errors failed to shrink when the node count was doubled.
    #[error("quadrature under-resolved: worst moment error {coarse} at {nodes} nodes, {fine} at {doubled}")]
    QuadratureUnderResolved {
        nodes: usize,
        doubled: usize,
        coarse: f64,
        fine: f64,
    },

    /// Operation defined only for a specific coherent-state kind.
    #[error("operation requires a {required} family, got {got}")]
    UnsupportedKind {
        required: &'static str,
        got: &'static str,
    },
}
