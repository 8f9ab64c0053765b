//! `ghcs`: evaluate hypergeometric kernels, thermal matrix elements, and
//! run the verification suites from the command line.
//!
//! Exit codes: 0 success, 1 tolerance failure, 2 invalid input,
//! 3 numerical failure (out-of-radius or unconverged evaluation).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ghcs_core::presets::PresetRegistry;

mod eval_cmd;
mod fmt;
mod grid;
mod omega_cmd;
mod presets_cmd;
mod scan_cmd;
mod svg;
mod verify_cmd;

pub(crate) const EXIT_TOLERANCE: u8 = 1;
pub(crate) const EXIT_INPUT: u8 = 2;
pub(crate) const EXIT_NUMERICAL: u8 = 3;

/// Command failures carrying their exit class.
#[derive(Debug)]
pub(crate) enum Failure {
    Input(String),
    Numerical(String),
}

impl From<ghcs_core::Error> for Failure {
    fn from(e: ghcs_core::Error) -> Self {
        use ghcs_core::Error::*;
        match &e {
            InvalidParams(_) | UnsupportedKind { .. } | OutOfSupport { .. } => {
                Failure::Input(e.to_string())
            }
            OutOfRadius { .. }
            | NotConverged { .. }
            | Overflow { .. }
            | QuadratureUnderResolved { .. } => Failure::Numerical(e.to_string()),
        }
    }
}

pub(crate) type CmdResult = Result<ExitCode, Failure>;

#[derive(Parser)]
#[command(
    name = "ghcs",
    version,
    about = "Generalized hypergeometric coherent states: kernels, thermal density-matrix elements, and verification suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a hypergeometric kernel at a point
    Eval(eval_cmd::EvalArgs),
    /// Emit one thermal matrix element as a CSV row
    Omega(omega_cmd::OmegaArgs),
    /// Run a verification suite and write its CSV reports
    Verify(verify_cmd::VerifyArgs),
    /// Sweep a quantity over a grid into CSV (and SVG on request)
    Scan(scan_cmd::ScanArgs),
    /// List or validate the preset registry
    Presets(presets_cmd::PresetsArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Eval(args) => eval_cmd::run(args),
        Command::Omega(args) => omega_cmd::run(args),
        Command::Verify(args) => verify_cmd::run(args),
        Command::Scan(args) => scan_cmd::run(args),
        Command::Presets(args) => presets_cmd::run(args),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Numerical(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_NUMERICAL)
        }
    }
}

/// Registry from `--presets FILE`, or the built-in set.
pub(crate) fn load_registry(path: &Option<PathBuf>) -> Result<PresetRegistry, Failure> {
    match path {
        None => Ok(PresetRegistry::builtin()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| {
                Failure::Input(format!("cannot read presets file {}: {e}", p.display()))
            })?;
            PresetRegistry::from_json(&text).map_err(Failure::from)
        }
    }
}

/// Series cap, overridable through GHCS_NMAX.
pub(crate) fn series_cap() -> Result<usize, Failure> {
    match std::env::var("GHCS_NMAX") {
        Err(_) => Ok(ghcs_core::tolerances::SERIES_N_MAX),
        Ok(text) => text
            .parse::<usize>()
            .map_err(|_| Failure::Input(format!("GHCS_NMAX must be a positive integer, got {text:?}"))),
    }
}

/// Look up a preset, applying parameter overrides by rebuilding the
/// corresponding built-in record.
pub(crate) fn resolve_preset(
    registry: &PresetRegistry,
    name: &str,
    k: Option<f64>,
    e0: Option<f64>,
    b: Option<f64>,
) -> Result<ghcs_core::PresetRecord, Failure> {
    use ghcs_core::presets as p;
    let overridden = k.is_some() || e0.is_some() || b.is_some();
    if overridden {
        let record = match (name, k, e0, b) {
            ("ho-e0", None, Some(e0), None) => p::preset_ho_e0(e0),
            ("pho-bg", Some(k), None, None) => p::preset_pho_bg(k),
            ("pho-kp", Some(k), None, None) => p::preset_pho_kp(k),
            ("pho-gk", Some(k), None, None) => p::preset_pho_gk(k),
            ("quadratic", None, None, Some(b)) => p::preset_quadratic(b),
            _ => {
                return Err(Failure::Input(format!(
                    "preset {name:?} does not take this parameter override"
                )))
            }
        };
        record
            .instantiate()
            .map_err(Failure::from)
            .map(|_| record)
    } else {
        registry
            .get(name)
            .cloned()
            .ok_or_else(|| Failure::Input(format!("unknown preset {name:?}")))
    }
}
