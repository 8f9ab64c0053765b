//! Generalized hypergeometric coherent states and the canonical density
//! matrix in their representation.
//!
//! The crate evaluates the hypergeometric kernels behind the coherent-state
//! families, builds thermal matrix elements directly from their definition,
//! and verifies by independent numerical routes that those elements solve
//! the canonical Bloch equation, satisfy the family identities (duality,
//! action identity, boundary condition), and reproduce the structure
//! constants as quadrature moments of the resolution-of-unity weights.

pub mod bloch;
pub mod error;
pub mod family;
pub mod pfq;
pub mod presets;
pub mod quadrature;
pub mod report;
pub mod series;
pub mod special;
pub mod spectrum;
pub mod thermal;
pub mod tolerances;
pub mod unity;

pub use error::{Error, Result};
pub use family::{CsFamily, CsKind, FockExpansion, GkLabel};
pub use pfq::{EvalResult, HypergeometricParams, RhoKind};
pub use presets::{PresetRecord, PresetRegistry, SpectrumRecord};
pub use report::{CheckItem, VerificationReport};
pub use series::PowerSeries;
pub use spectrum::EnergySpectrum;
pub use thermal::{OmegaResult, OmegaRoute, ThermalQuery};
pub use unity::WeightPreset;
