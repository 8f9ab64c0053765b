//! Shared fixtures for the benchmark targets.

use ghcs_core::presets::PresetRegistry;
use ghcs_core::CsFamily;

/// Instantiate a built-in preset by name.
pub fn family(name: &str) -> CsFamily {
    PresetRegistry::builtin()
        .instantiate(name)
        .expect("built-in presets validate")
}
