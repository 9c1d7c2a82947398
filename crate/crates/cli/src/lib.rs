//! Command-line front end for the `superq` engine.
//!
//! Data goes to standard output (or `--out`), diagnostics to standard error.
//! Exit codes: 0 success, 1 failed check or I/O error, 2 invalid arguments.

pub mod config;
pub mod emit;
pub mod error;
pub mod format;
pub mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};

use config::{Command, RunConfig};
use error::{CliError, CliResult};
use format::write_json;

/// Runs one command, writing its output to `out`. A failed check still
/// writes the full report before returning [`CliError::Verification`].
pub fn run<W: Write>(config: &RunConfig, out: &mut W) -> CliResult<()> {
    config.validate()?;
    let (dim, tol, format) = (config.dim, config.tol, config.format());
    match &config.command {
        Command::State(args) => write_json(out, &emit::state(args, dim)?)?,
        Command::Coherent(args) => write_json(out, &emit::coherent(args, dim)?)?,
        Command::Concurrence(args) => {
            let report = emit::concurrence(args, dim, tol)?;
            write_json(out, &report)?;
            if !report.pass {
                return Err(CliError::Verification(format!(
                    "concurrence discrepancy {:e} exceeds {tol:e}",
                    report.discrepancy
                )));
            }
        }
        Command::Entropy(args) => {
            let report = emit::entropy(args, dim, tol)?;
            write_json(out, &report)?;
            if !report.pass {
                return Err(CliError::Verification(format!(
                    "entropy discrepancy {:e} exceeds {tol:e}",
                    report.discrepancy
                )));
            }
        }
        Command::Uncertainty(args) => {
            let report = emit::uncertainty(args, dim, tol)?;
            write_json(out, &report)?;
            if !report.pass {
                return Err(CliError::Verification(format!(
                    "quadrature discrepancy {:e} exceeds {tol:e}",
                    report.max_abs_diff
                )));
            }
        }
        Command::Fibonacci(args) => emit::write_fibonacci(out, args, dim, format)?,
        Command::Sweep(args) => emit::write_sweep(out, args, dim, format)?,
        Command::Verify(args) => {
            let report = verify::run_verify(args.suite, dim, tol, args.n_max, args.seed)?;
            write_json(out, &report)?;
            if !report.all_passed() {
                let names: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
                return Err(CliError::Verification(format!(
                    "{} of {} checks failed: {}",
                    report.summary.failed,
                    report.summary.total,
                    names.join(", ")
                )));
            }
        }
    }
    out.flush()?;
    Ok(())
}

/// As [`run`], with the destination chosen by `--out`.
pub fn run_to_destination(config: &RunConfig) -> CliResult<()> {
    match &config.out {
        Some(path) => {
            config.validate()?;
            let mut file = BufWriter::new(File::create(path)?);
            run(config, &mut file)
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            run(config, &mut lock)
        }
    }
}
