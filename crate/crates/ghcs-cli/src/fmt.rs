//! Deterministic number formatting for CSV and stdout.
//!
//! Seventeen significant digits round-trip every f64; the '.' decimal point
//! is locale-independent by construction.

/// Full-precision scientific notation, e.g. `2.7182818284590452e0`.
pub fn sig17(x: f64) -> String {
    format!("{x:.16e}")
}

/// Join fields into one CSV line with a trailing newline.
pub fn csv_line(fields: &[String]) -> String {
    let mut line = fields.join(",");
    line.push('\n');
    line
}
