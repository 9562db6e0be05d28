//! Batch front end: `generate`, `verify`, `bounds` and `sweep` jobs driven by
//! a TOML job file, emitting versioned JSON documents or CSV tables.
//!
//! Exit codes: 0 when every check passes, 1 on a mathematical failure
//! (membership, bounds, numerical faults), 2 on invalid input.

mod commands;
pub mod config;
pub mod document;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub use commands::{run_bounds, run_generate, run_sweep, run_verify, Report};
pub use config::{CommandName, JobConfig, ParameterDescriptor, SweepSpec};

#[derive(Debug, Parser)]
#[command(name = "herglotz", version, about = "Generate and certify measures on the unit circle that reproduce the Lebesgue Gram matrix of Cauchy fractions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Job description (TOML).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Quadrature grid size (power of two, at least 256).
    #[arg(long = "grid-size", global = true)]
    pub grid_size: Option<usize>,

    /// Membership tolerance on Gram entries.
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Build the measure for the configured nodes and parameter.
    Generate,
    /// Re-check a measure document.
    Verify {
        /// Measure document to verify; overrides `measure_path` from the config.
        #[arg(long)]
        measure: Option<PathBuf>,
    },
    /// Sharp mass bounds and the two extremal measures.
    Bounds,
    /// Mass and Gram error over a polar grid of constant parameters.
    Sweep,
}

impl Command {
    fn name(&self) -> CommandName {
        match self {
            Command::Generate => CommandName::Generate,
            Command::Verify { .. } => CommandName::Verify,
            Command::Bounds => CommandName::Bounds,
            Command::Sweep => CommandName::Sweep,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Unreadable, malformed or inconsistent input.
    #[error("{0}")]
    Input(String),
    /// Input rejected by domain validation.
    #[error("{0}")]
    Invalid(crate::Error),
    /// Numerical failure while processing valid input.
    #[error("{0}")]
    Math(crate::Error),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Input(_) => "Input",
            CliError::Invalid(e) | CliError::Math(e) => e.kind(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Invalid(_) => 2,
            CliError::Math(_) => 1,
        }
    }
}

/// Runs one job and writes its document. Returns the report so callers can
/// map `passed` to an exit code.
pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let mut config = match &cli.config {
        Some(path) => JobConfig::load(path)?,
        None if matches!(cli.command, Command::Verify { .. }) => JobConfig::default(),
        None => return Err(CliError::input("--config is required for this command")),
    };
    if let Some(expected) = config.command {
        if expected != cli.command.name() {
            return Err(CliError::input(format!(
                "config is for {expected:?}, but {:?} was requested",
                cli.command.name()
            )));
        }
    }
    if let Some(n) = cli.grid_size {
        config.grid_size = n;
    }
    let explicit_tolerance = cli.tolerance.is_some() || cli.config.is_some();
    if let Some(t) = cli.tolerance {
        config.tolerance = t;
    }
    if let Some(path) = &cli.output {
        config.output_path = Some(path.clone());
    }

    let report = match &cli.command {
        Command::Generate => run_generate(&config)?,
        Command::Verify { measure } => {
            let path = measure
                .clone()
                .or_else(|| config.measure_path.clone())
                .ok_or_else(|| CliError::input("verify needs --measure or measure_path"))?;
            let text = std::fs::read_to_string(&path)
                .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
            let tolerance = explicit_tolerance.then_some(config.tolerance);
            run_verify(&config, &text, tolerance)?
        }
        Command::Bounds => run_bounds(&config)?,
        Command::Sweep => run_sweep(&config)?,
    };

    match &config.output_path {
        Some(path) => std::fs::write(path, &report.text)
            .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{}", report.text),
    }
    Ok(report)
}
