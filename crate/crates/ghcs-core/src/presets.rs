//! Named family presets and their JSON registry.
//!
//! The registry is a single JSON object mapping a preset name to its
//! parameter record; records validate into [`CsFamily`] instances at load
//! time. The built-in set covers the factorial family with and without a
//! level offset, the three flavours of the Bargmann-indexed oscillator,
//! and a quadratic-spectrum system.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::CsFamily;
use crate::pfq::HypergeometricParams;
use crate::spectrum::EnergySpectrum;
use crate::unity::WeightPreset;

/// Serialized spectrum rule.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "kebab-case")]
pub enum SpectrumRecord {
    Linear { e0: f64 },
    Quadratic { b: f64 },
    GkScaled {
        k: f64,
        #[serde(default = "default_gk_scale")]
        scale: f64,
    },
    BgRational,
    KpRational,
}

fn default_gk_scale() -> f64 {
    2.0
}

/// Serialized preset: construction manner, kernel parameters, spectrum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PresetRecord {
    pub kind: String,
    pub p: usize,
    pub q: usize,
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub spectrum: SpectrumRecord,
}

impl PresetRecord {
    /// Validate and build the family this record describes.
    pub fn instantiate(&self) -> Result<CsFamily> {
        if self.p != self.a.len() || self.q != self.b.len() {
            return Err(Error::InvalidParams(format!(
                "index pair ({}, {}) disagrees with parameter lists of lengths ({}, {})",
                self.p,
                self.q,
                self.a.len(),
                self.b.len()
            )));
        }
        let params = HypergeometricParams::new(self.a.clone(), self.b.clone())?;
        let spectrum = match &self.spectrum {
            SpectrumRecord::Linear { e0 } => EnergySpectrum::linear(*e0)?,
            SpectrumRecord::Quadratic { b } => EnergySpectrum::quadratic(*b)?,
            SpectrumRecord::GkScaled { k, scale } => EnergySpectrum::gk_scaled(*k, *scale)?,
            SpectrumRecord::BgRational => EnergySpectrum::BgRational {
                params: params.clone(),
            },
            SpectrumRecord::KpRational => EnergySpectrum::KpRational {
                params: params.clone(),
            },
        };
        match self.kind.as_str() {
            "BG" => Ok(CsFamily::barut_girardello(params, spectrum)),
            "KP" => CsFamily::klauder_perelomov(params, spectrum),
            "GK" => {
                let (k, scale) = match &self.spectrum {
                    SpectrumRecord::GkScaled { k, scale } => (*k, *scale),
                    other => {
                        return Err(Error::InvalidParams(format!(
                            "a GK preset needs a gk-scaled spectrum, got {other:?}"
                        )))
                    }
                };
                if self.a != vec![1.0] || self.b != vec![k + 1.0] {
                    return Err(Error::InvalidParams(
                        "GK kernel parameters must be a = [1], b = [k + 1]".into(),
                    ));
                }
                CsFamily::gazeau_klauder(k, scale)
            }
            other => Err(Error::InvalidParams(format!(
                "unknown family kind {other:?} (expected BG, KP, or GK)"
            ))),
        }
    }

    /// The registered weight density whose moments are this record's
    /// structure constants, when one exists.
    pub fn weight_preset(&self) -> Option<WeightPreset> {
        match (self.kind.as_str(), self.a.as_slice(), self.b.as_slice()) {
            ("BG", [], []) => Some(WeightPreset::Ho),
            ("BG", [a], [b]) if *a == 1.0 && *b > 1.0 => WeightPreset::bg_pho(b - 1.0).ok(),
            ("KP", [], [b]) => WeightPreset::kp_pho(b / 2.0).ok(),
            _ => None,
        }
    }
}

pub fn preset_ho() -> PresetRecord {
    PresetRecord {
        kind: "BG".into(),
        p: 0,
        q: 0,
        a: vec![],
        b: vec![],
        spectrum: SpectrumRecord::Linear { e0: 0.0 },
    }
}

pub fn preset_ho_e0(e0: f64) -> PresetRecord {
    PresetRecord {
        kind: "BG".into(),
        p: 1,
        q: 1,
        a: vec![1.0],
        b: vec![e0 + 1.0],
        spectrum: SpectrumRecord::Linear { e0 },
    }
}

pub fn preset_pho_bg(k: f64) -> PresetRecord {
    PresetRecord {
        kind: "BG".into(),
        p: 1,
        q: 1,
        a: vec![1.0],
        b: vec![k + 1.0],
        spectrum: SpectrumRecord::Linear { e0: k },
    }
}

pub fn preset_pho_kp(k: f64) -> PresetRecord {
    PresetRecord {
        kind: "KP".into(),
        p: 0,
        q: 1,
        a: vec![],
        b: vec![2.0 * k],
        spectrum: SpectrumRecord::Linear { e0: 2.0 * k },
    }
}

pub fn preset_pho_gk(k: f64) -> PresetRecord {
    PresetRecord {
        kind: "GK".into(),
        p: 1,
        q: 1,
        a: vec![1.0],
        b: vec![k + 1.0],
        spectrum: SpectrumRecord::GkScaled { k, scale: 2.0 },
    }
}

pub fn preset_quadratic(b: f64) -> PresetRecord {
    PresetRecord {
        kind: "BG".into(),
        p: 0,
        q: 1,
        a: vec![],
        b: vec![b + 1.0],
        spectrum: SpectrumRecord::Quadratic { b },
    }
}

/// Name-keyed registry; the map keeps names unique and iteration ordered.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PresetRegistry {
    map: BTreeMap<String, PresetRecord>,
}

impl PresetRegistry {
    /// The built-in presets with their default parameters.
    pub fn builtin() -> Self {
        let mut map = BTreeMap::new();
        map.insert("ho".into(), preset_ho());
        map.insert("ho-e0".into(), preset_ho_e0(0.5));
        map.insert("pho-bg".into(), preset_pho_bg(1.0));
        map.insert("pho-kp".into(), preset_pho_kp(1.0));
        map.insert("pho-gk".into(), preset_pho_gk(1.0));
        map.insert("quadratic".into(), preset_quadratic(1.0));
        Self { map }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::InvalidParams(format!("registry parse failure: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.map).expect("registry records always serialize")
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.map.keys().map(String::as_str)
    }

    pub fn get(&self, name: &str) -> Option<&PresetRecord> {
        self.map.get(name)
    }

    pub fn insert(&mut self, name: impl Into<String>, record: PresetRecord) {
        self.map.insert(name.into(), record);
    }

    pub fn instantiate(&self, name: &str) -> Result<CsFamily> {
        self.map
            .get(name)
            .ok_or_else(|| Error::InvalidParams(format!("unknown preset {name:?}")))?
            .instantiate()
    }

    /// Instantiate every record, surfacing the first failure.
    pub fn validate(&self) -> Result<()> {
        for (name, record) in &self.map {
            record.instantiate().map_err(|e| {
                Error::InvalidParams(format!("preset {name:?} fails validation: {e}"))
            })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::CsKind;
    use crate::thermal::{omega_element, ThermalQuery};

    #[test]
    fn builtin_registry_validates() {
        let registry = PresetRegistry::builtin();
        registry.validate().unwrap();
        let names: Vec<&str> = registry.names().collect();
        assert_eq!(
            names,
            ["ho", "ho-e0", "pho-bg", "pho-gk", "pho-kp", "quadratic"]
        );
    }

    #[test]
    fn kinds_and_spectra_come_out_right() {
        let registry = PresetRegistry::builtin();
        assert_eq!(registry.instantiate("ho").unwrap().kind(), CsKind::BarutGirardello);
        assert_eq!(
            registry.instantiate("pho-kp").unwrap().kind(),
            CsKind::KlauderPerelomov
        );
        assert_eq!(
            registry.instantiate("pho-gk").unwrap().kind(),
            CsKind::GazeauKlauder
        );
        let quadratic = registry.instantiate("quadratic").unwrap();
        assert_eq!(quadratic.spectrum().eigenvalue(3), 12.0);
        // pho-kp carries the doubled offset in its thermal exponents.
        let kp = registry.instantiate("pho-kp").unwrap();
        assert_eq!(kp.spectrum().thermal_exponent(0), 2.0);
    }

    #[test]
    fn json_round_trip_preserves_values() {
        let registry = PresetRegistry::builtin();
        let text = registry.to_json();
        let reloaded = PresetRegistry::from_json(&text).unwrap();
        assert_eq!(registry, reloaded);
        // Probe query must agree bit-for-bit after the round trip.
        for name in registry.names() {
            let a = registry.instantiate(name).unwrap();
            let b = reloaded.instantiate(name).unwrap();
            let q = ThermalQuery::diagonal(0.7, 0.5).unwrap();
            let va = omega_element(&a, &q).unwrap().value;
            let vb = omega_element(&b, &q).unwrap().value;
            assert!((va - vb).norm() <= 1e-15);
        }
    }

    #[test]
    fn malformed_records_are_rejected() {
        let mut registry = PresetRegistry::builtin();
        let mut bad = preset_ho_e0(0.5);
        bad.p = 2; // disagrees with a.len()
        registry.insert("bad", bad);
        assert!(registry.validate().is_err());

        let mut wrong_kind = preset_ho();
        wrong_kind.kind = "XX".into();
        assert!(wrong_kind.instantiate().is_err());

        let mut gk_mismatch = preset_pho_gk(1.0);
        gk_mismatch.b = vec![3.5];
        assert!(gk_mismatch.instantiate().is_err());
    }

    #[test]
    fn unknown_preset_name_errors() {
        assert!(PresetRegistry::builtin().instantiate("nope").is_err());
    }

    #[test]
    fn weight_presets_attach_to_the_right_records() {
        let registry = PresetRegistry::builtin();
        assert!(matches!(
            registry.get("ho").unwrap().weight_preset(),
            Some(WeightPreset::Ho)
        ));
        assert!(matches!(
            registry.get("pho-bg").unwrap().weight_preset(),
            Some(WeightPreset::BgPho { .. })
        ));
        assert!(matches!(
            registry.get("pho-kp").unwrap().weight_preset(),
            Some(WeightPreset::KpPho { .. })
        ));
        assert_eq!(registry.get("quadratic").unwrap().weight_preset(), None);
        assert_eq!(registry.get("pho-gk").unwrap().weight_preset(), None);
    }
}
