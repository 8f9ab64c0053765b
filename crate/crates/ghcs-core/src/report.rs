//! Per-point verification records with pass/fail against a tolerance.

/// One checked point.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckItem {
    /// Point identifier, e.g. `"n=3"` or `"eps=0.5 x=0.1"`.
    pub key: String,
    pub observed: f64,
    pub target: f64,
    /// Error in the report's convention (relative unless stated otherwise).
    pub error: f64,
    pub pass: bool,
    /// Informational items report a measured discrepancy without gating.
    pub informational: bool,
}

/// A named batch of checks sharing one tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub name: String,
    pub tolerance: f64,
    pub items: Vec<CheckItem>,
}

impl VerificationReport {
    pub fn new(name: impl Into<String>, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            tolerance,
            items: Vec::new(),
        }
    }

    /// Record a gated check; pass iff the error is within tolerance.
    pub fn record(&mut self, key: impl Into<String>, observed: f64, target: f64, error: f64) {
        self.items.push(CheckItem {
            key: key.into(),
            observed,
            target,
            error,
            pass: error <= self.tolerance,
            informational: false,
        });
    }

    /// Record a measured discrepancy that never gates the report.
    pub fn record_informational(
        &mut self,
        key: impl Into<String>,
        observed: f64,
        target: f64,
        error: f64,
    ) {
        self.items.push(CheckItem {
            key: key.into(),
            observed,
            target,
            error,
            pass: true,
            informational: true,
        });
    }

    /// Worst gated error; informational items do not count.
    pub fn worst_error(&self) -> f64 {
        self.items
            .iter()
            .filter(|i| !i.informational)
            .map(|i| i.error)
            .fold(0.0, f64::max)
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gating_and_informational_items() {
        let mut r = VerificationReport::new("demo", 1e-8);
        r.record("a", 1.0, 1.0, 1e-9);
        assert!(r.passed());
        r.record_informational("b", 2.0, 1.0, 0.5);
        assert!(r.passed());
        assert_eq!(r.worst_error(), 1e-9);
        r.record("c", 1.0, 1.0, 1e-3);
        assert!(!r.passed());
    }
}
