use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use majorana::geometry::DEFAULT_STEP;
use majorana::majorana::DEFAULT_ROOT_TOL;
use majorana_cli::commands::{cmd_metric, cmd_perma, cmd_random, cmd_stars};
use majorana_cli::state_file::read_input;
use majorana_cli::verify::{failures, run_verify};
use majorana_cli::{exit, json, CliError};

/// Majorana stars, perma-concurrence and Fubini-Study metric of symmetric
/// multiqubit states.
#[derive(Parser)]
#[command(name = "majorana", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Majorana stars of each state, with multiplicities and residuals.
    Stars {
        /// State file path, `-` for stdin, or inline JSON.
        input: String,
        /// Bound on the relative polynomial residual of each star.
        #[arg(long, default_value_t = DEFAULT_ROOT_TOL)]
        tol: f64,
    },
    /// Perma-concurrence P_d, the permanent, and for d = 3 the concurrence.
    Perma { input: String },
    /// Fubini-Study metric tensor in the star coordinates.
    Metric {
        input: String,
        /// Finite-difference step.
        #[arg(long, default_value_t = DEFAULT_STEP)]
        step: f64,
    },
    /// Random states with complex-Gaussian amplitudes, as a state-file array.
    Random {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run every oracle cross-check, one JSON line per check.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn emit<T: serde::Serialize>(out: &mut impl Write, value: &T) -> Result<(), CliError> {
    let line = json::to_string(value)?;
    writeln!(out, "{line}").map_err(|source| CliError::Io {
        path: "<stdout>".into(),
        source,
    })
}

fn run(cli: Cli) -> Result<(), CliError> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Stars { input, tol } => {
            for file in read_input(&input)? {
                emit(&mut out, &cmd_stars(&file, tol)?)?;
            }
        }
        Command::Perma { input } => {
            for file in read_input(&input)? {
                emit(&mut out, &cmd_perma(&file)?)?;
            }
        }
        Command::Metric { input, step } => {
            for file in read_input(&input)? {
                emit(&mut out, &cmd_metric(&file, step)?)?;
            }
        }
        Command::Random { d, count, seed } => {
            emit(&mut out, &cmd_random(d, count, seed)?)?;
        }
        Command::Verify {
            max_n,
            trials,
            seed,
        } => {
            let lines = run_verify(max_n, trials, seed)?;
            for line in &lines {
                emit(&mut out, line)?;
            }
            let failed = failures(&lines);
            if failed > 0 {
                return Err(CliError::VerifyFailed(failed));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::from(exit::OK),
        Err(e) => {
            eprintln!("majorana: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
