use std::process::ExitCode;

use clap::Parser;
use superq_cli::config::RunConfig;

fn main() -> ExitCode {
    let config = RunConfig::parse();
    match superq_cli::run_to_destination(&config) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("superq: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
