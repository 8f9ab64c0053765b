//! `ghcs scan`: sweep a thermal quantity over a grid. CSV always; an SVG
//! polyline when requested. Output bytes depend only on the inputs.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, ValueEnum};
use ghcs_core::thermal::{husimi_q, omega_element_capped, partition_function_auto, ThermalQuery};

use crate::omega_cmd::{omega_row, OMEGA_HEADER};
use crate::{fmt, grid::Grid, svg, Failure};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    Omega,
    Husimi,
    Partition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutKind {
    Csv,
    Svg,
}

#[derive(Args)]
pub struct ScanArgs {
    /// What to sweep
    #[arg(value_enum)]
    quantity: Quantity,

    /// Preset name
    #[arg(long)]
    preset: String,

    /// Inverse-temperature value or grid (start..stop:step)
    #[arg(long)]
    eps: String,

    /// Label-product grid for omega and husimi sweeps
    #[arg(long)]
    zsq: Option<String>,

    /// Divide the Husimi function by the partition sum
    #[arg(long)]
    normalized: bool,

    /// csv writes the table only; svg also renders the polyline plot
    #[arg(long, value_enum, default_value = "csv")]
    out: OutKind,

    /// Output CSV path (the SVG replaces its extension)
    #[arg(long)]
    output: Option<PathBuf>,

    /// Override the Bargmann index of the pho-* presets
    #[arg(long)]
    k: Option<f64>,

    /// Override the level offset of the ho-e0 preset
    #[arg(long)]
    e0: Option<f64>,

    /// Override the quadratic-spectrum parameter
    #[arg(long)]
    b: Option<f64>,

    /// Registry file overriding the built-in presets
    #[arg(long)]
    presets: Option<PathBuf>,
}

fn quantity_name(q: Quantity) -> &'static str {
    match q {
        Quantity::Omega => "omega",
        Quantity::Husimi => "husimi",
        Quantity::Partition => "partition",
    }
}

pub fn run(args: ScanArgs) -> crate::CmdResult {
    let registry = crate::load_registry(&args.presets)?;
    let record = crate::resolve_preset(&registry, &args.preset, args.k, args.e0, args.b)?;
    let family = record.instantiate().map_err(Failure::from)?;
    let eps_grid = Grid::parse(&args.eps).map_err(Failure::Input)?.points();
    let cap = crate::series_cap()?;

    // (scan variable, csv text) pairs; the plot reads the scan variable.
    let mut csv = String::new();
    let mut plot: Vec<(f64, f64)> = Vec::new();

    match args.quantity {
        Quantity::Omega | Quantity::Husimi => {
            let zsq_text = args.zsq.as_deref().ok_or_else(|| {
                Failure::Input("omega and husimi sweeps need a --zsq grid".into())
            })?;
            let zsq_grid = Grid::parse(zsq_text).map_err(Failure::Input)?.points();
            if args.out == OutKind::Svg && eps_grid.len() > 1 {
                return Err(Failure::Input(
                    "svg output plots against zsq and needs a single --eps value".into(),
                ));
            }
            if args.quantity == Quantity::Omega {
                csv.push_str(OMEGA_HEADER);
                csv.push('\n');
            } else {
                csv.push_str("preset,eps,zsq,normalized,value\n");
            }
            for &eps in &eps_grid {
                for &zsq in &zsq_grid {
                    match args.quantity {
                        Quantity::Omega => {
                            let q =
                                ThermalQuery::diagonal(eps, zsq).map_err(Failure::from)?;
                            let r =
                                omega_element_capped(&family, &q, cap).map_err(Failure::from)?;
                            csv.push_str(&omega_row(
                                &args.preset,
                                eps,
                                q.z,
                                q.zp,
                                r.value,
                                r.terms_used,
                                r.route.name(),
                            ));
                            plot.push((zsq, r.value.re));
                        }
                        Quantity::Husimi => {
                            let v = husimi_q(&family, eps, zsq, args.normalized)
                                .map_err(Failure::from)?;
                            csv.push_str(&fmt::csv_line(&[
                                args.preset.clone(),
                                fmt::sig17(eps),
                                fmt::sig17(zsq),
                                args.normalized.to_string(),
                                fmt::sig17(v),
                            ]));
                            plot.push((zsq, v));
                        }
                        Quantity::Partition => unreachable!(),
                    }
                }
            }
        }
        Quantity::Partition => {
            csv.push_str("preset,eps,value\n");
            for &eps in &eps_grid {
                let z = partition_function_auto(family.spectrum(), eps).map_err(Failure::from)?;
                csv.push_str(&fmt::csv_line(&[
                    args.preset.clone(),
                    fmt::sig17(eps),
                    fmt::sig17(z),
                ]));
                plot.push((eps, z));
            }
        }
    }

    let csv_path = args.output.clone().unwrap_or_else(|| {
        PathBuf::from(format!(
            "scan_{}_{}.csv",
            quantity_name(args.quantity),
            args.preset
        ))
    });
    std::fs::write(&csv_path, &csv)
        .map_err(|e| Failure::Input(format!("cannot write {}: {e}", csv_path.display())))?;
    println!("wrote {}", csv_path.display());

    if args.out == OutKind::Svg {
        let xs: Vec<f64> = plot.iter().map(|p| p.0).collect();
        let ys: Vec<f64> = plot.iter().map(|p| p.1).collect();
        let x_label = match args.quantity {
            Quantity::Partition => "eps",
            _ => "zsq",
        };
        let title = format!("{} {}", quantity_name(args.quantity), args.preset);
        let svg_text = svg::polyline_plot(&title, x_label, &xs, &ys);
        let svg_path = csv_path.with_extension("svg");
        std::fs::write(&svg_path, svg_text)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", svg_path.display())))?;
        println!("wrote {}", svg_path.display());
    }
    Ok(ExitCode::SUCCESS)
}
