//! `ghcs omega`: one thermal matrix element in the scan CSV schema.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Args;
use ghcs_core::thermal::{omega_element_capped, ThermalQuery};
use num_complex::Complex64;

use crate::{fmt, Failure};

pub(crate) const OMEGA_HEADER: &str =
    "preset,eps,z_re,z_im,zp_re,zp_im,value_re,value_im,terms_used,route";

#[derive(Args)]
pub struct OmegaArgs {
    /// Preset name
    #[arg(long)]
    preset: String,

    /// Override the Bargmann index of the pho-* presets
    #[arg(long)]
    k: Option<f64>,

    /// Override the level offset of the ho-e0 preset
    #[arg(long)]
    e0: Option<f64>,

    /// Override the quadratic-spectrum parameter
    #[arg(long)]
    b: Option<f64>,

    /// Dimensionless inverse temperature
    #[arg(long)]
    eps: f64,

    /// Real label product z* z' (diagonal query with z = z' = sqrt of it)
    #[arg(long, conflicts_with_all = ["z", "zp"])]
    zz: Option<f64>,

    /// Left label as "re,im"
    #[arg(long, requires = "zp", allow_hyphen_values = true)]
    z: Option<String>,

    /// Right label as "re,im"
    #[arg(long, requires = "z", allow_hyphen_values = true)]
    zp: Option<String>,

    /// Registry file overriding the built-in presets
    #[arg(long)]
    presets: Option<PathBuf>,
}

pub(crate) fn parse_complex(text: &str) -> Result<Complex64, Failure> {
    let parse = |s: &str| {
        s.trim()
            .parse::<f64>()
            .map_err(|_| Failure::Input(format!("cannot parse number {s:?}")))
    };
    match text.split_once(',') {
        Some((re, im)) => Ok(Complex64::new(parse(re)?, parse(im)?)),
        None => Ok(Complex64::new(parse(text)?, 0.0)),
    }
}

pub(crate) fn omega_row(
    preset: &str,
    eps: f64,
    z: Complex64,
    zp: Complex64,
    value: Complex64,
    terms_used: usize,
    route: &str,
) -> String {
    fmt::csv_line(&[
        preset.to_string(),
        fmt::sig17(eps),
        fmt::sig17(z.re),
        fmt::sig17(z.im),
        fmt::sig17(zp.re),
        fmt::sig17(zp.im),
        fmt::sig17(value.re),
        fmt::sig17(value.im),
        terms_used.to_string(),
        route.to_string(),
    ])
}

pub fn run(args: OmegaArgs) -> crate::CmdResult {
    let registry = crate::load_registry(&args.presets)?;
    let record = crate::resolve_preset(&registry, &args.preset, args.k, args.e0, args.b)?;
    let family = record.instantiate().map_err(Failure::from)?;
    let query = match (args.zz, &args.z, &args.zp) {
        (Some(zz), None, None) => ThermalQuery::diagonal(args.eps, zz).map_err(Failure::from)?,
        (None, Some(z), Some(zp)) => {
            ThermalQuery::new(args.eps, parse_complex(z)?, parse_complex(zp)?)
                .map_err(Failure::from)?
        }
        _ => {
            return Err(Failure::Input(
                "provide either --zz or both --z and --zp".into(),
            ))
        }
    };
    let cap = crate::series_cap()?;
    let result = omega_element_capped(&family, &query, cap).map_err(Failure::from)?;
    print!(
        "{}\n{}",
        OMEGA_HEADER,
        omega_row(
            &args.preset,
            args.eps,
            query.z,
            query.zp,
            result.value,
            result.terms_used,
            result.route.name(),
        )
    );
    Ok(ExitCode::SUCCESS)
}
