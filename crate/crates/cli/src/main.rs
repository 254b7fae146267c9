//! `twocars`: run scenarios of the two-cars pursuit-evasion game from JSON configs.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::commands::EXIT_INVALID;
use crate::config::ScenarioConfig;

#[derive(Parser)]
#[command(name = "twocars", version, about = "Pursuit-evasion game of two Dubins cars")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the scenario and write the trajectory CSV and metadata JSON.
    Simulate {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the capture-time matrix and the law's controls at t = 0.
    Matrix {
        #[arg(long)]
        config: PathBuf,
    },
    /// Print every common tangent per PE-pair, marking the valid one.
    Tangents {
        #[arg(long)]
        config: PathBuf,
    },
    /// Export reachable and blocking set polygons and print containment times.
    Reachsets {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Set horizon in time units (default: the kinematic capture bound).
        #[arg(long)]
        horizon: Option<f64>,
    },
    /// Run an invariant suite against the scenario.
    Verify {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Brute-force oracle horizon in steps.
        #[arg(long, default_value_t = 6)]
        horizon: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Tangents,
    Oracle,
    Reachsets,
    Saddle,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match &cli.command {
        Command::Simulate { config, .. }
        | Command::Matrix { config }
        | Command::Tangents { config }
        | Command::Reachsets { config, .. }
        | Command::Verify { config, .. } => config,
    };
    let scenario = match ScenarioConfig::load(config) {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_INVALID);
        }
    };
    let code = match cli.command {
        Command::Simulate { out, .. } => commands::simulate(&scenario, out.as_deref()),
        Command::Matrix { .. } => commands::matrix(&scenario),
        Command::Tangents { .. } => commands::tangents(&scenario),
        Command::Reachsets { out, horizon, .. } => commands::reachsets(&scenario, out.as_deref(), horizon),
        Command::Verify { suite, seed, horizon, .. } => match suite {
            Suite::Tangents => commands::verify_tangents(&scenario, seed),
            Suite::Oracle => commands::verify_oracle(&scenario, horizon),
            Suite::Reachsets => commands::verify_reachsets(&scenario),
            Suite::Saddle => commands::verify_saddle(&scenario, seed),
        },
    };
    ExitCode::from(code)
}
