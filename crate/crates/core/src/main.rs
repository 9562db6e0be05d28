use std::process::ExitCode;

use clap::Parser;
use herglotz::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            eprintln!("{}", report.summary);
            ExitCode::from(if report.passed { 0 } else { 1 })
        }
        Err(err) => {
            eprintln!("error[{}]: {err}", err.kind());
            ExitCode::from(err.exit_code())
        }
    }
}
