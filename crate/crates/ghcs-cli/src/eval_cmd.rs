//! `ghcs eval`: one kernel evaluation, printed as key=value fields.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Args;
use ghcs_core::pfq::{eval_pfq_capped, HypergeometricParams};

use crate::{fmt, Failure};

#[derive(Args)]
pub struct EvalArgs {
    /// Evaluate the overlap kernel of a named preset instead of raw indices
    #[arg(long, conflicts_with_all = ["p", "q", "a", "b"])]
    preset: Option<String>,

    /// Numerator count p
    #[arg(long)]
    p: Option<usize>,

    /// Denominator count q
    #[arg(long)]
    q: Option<usize>,

    /// Numerator parameters, comma separated
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    a: Vec<f64>,

    /// Denominator parameters, comma separated
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    b: Vec<f64>,

    /// Series argument
    #[arg(long, allow_negative_numbers = true)]
    x: f64,

    /// Registry file overriding the built-in presets
    #[arg(long)]
    presets: Option<PathBuf>,
}

pub fn run(args: EvalArgs) -> crate::CmdResult {
    let cap = crate::series_cap()?;
    let (params, argument) = match &args.preset {
        Some(name) => {
            let registry = crate::load_registry(&args.presets)?;
            let family = registry.instantiate(name).map_err(Failure::from)?;
            let params = family.kernel_params().map_err(Failure::from)?;
            (params, args.x / family.argument_scale())
        }
        None => {
            let (p, q) = match (args.p, args.q) {
                (Some(p), Some(q)) => (p, q),
                _ => {
                    return Err(Failure::Input(
                        "provide either --preset or both --p and --q".into(),
                    ))
                }
            };
            if p != args.a.len() || q != args.b.len() {
                return Err(Failure::Input(format!(
                    "--p {p} and --q {q} disagree with {} numerator and {} denominator parameters",
                    args.a.len(),
                    args.b.len()
                )));
            }
            let params = HypergeometricParams::new(args.a, args.b).map_err(Failure::from)?;
            (params, args.x)
        }
    };
    let result = eval_pfq_capped(&params, argument, cap).map_err(Failure::from)?;
    println!(
        "value={} terms_used={} converged={}",
        fmt::sig17(result.value),
        result.terms_used,
        result.converged
    );
    Ok(ExitCode::SUCCESS)
}
