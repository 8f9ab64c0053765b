//! `ghcs presets`: list or validate the registry.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Subcommand};

use crate::Failure;

#[derive(Args)]
pub struct PresetsArgs {
    #[command(subcommand)]
    action: Action,
}

#[derive(Subcommand)]
enum Action {
    /// Print every preset with its construction manner and spectrum
    List {
        /// Registry file overriding the built-in presets
        #[arg(long)]
        presets: Option<PathBuf>,
    },
    /// Instantiate every preset, failing on the first invalid record
    Validate {
        /// Registry file overriding the built-in presets
        #[arg(long)]
        presets: Option<PathBuf>,
    },
    /// Print the registry as JSON (the writable file format)
    Dump {
        /// Registry file overriding the built-in presets
        #[arg(long)]
        presets: Option<PathBuf>,
    },
}

pub fn run(args: PresetsArgs) -> crate::CmdResult {
    match args.action {
        Action::List { presets } => {
            let registry = crate::load_registry(&presets)?;
            for name in registry.names() {
                let record = registry.get(name).expect("listed names resolve");
                println!(
                    "{name}: kind={} p={} q={} a={:?} b={:?} spectrum={:?}",
                    record.kind, record.p, record.q, record.a, record.b, record.spectrum
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Action::Validate { presets } => {
            let registry = crate::load_registry(&presets)?;
            registry.validate().map_err(Failure::from)?;
            println!("ok: {} presets validate", registry.names().count());
            Ok(ExitCode::SUCCESS)
        }
        Action::Dump { presets } => {
            let registry = crate::load_registry(&presets)?;
            println!("{}", registry.to_json());
            Ok(ExitCode::SUCCESS)
        }
    }
}
