//! Command-line front end: scenario files in, CSV grids and a text summary out.

pub mod commands;
pub mod io;
pub mod plot;
pub mod scenario;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use commands::{range_tilt, Report, TiltFit};
pub use scenario::{Scenario, SCHEMA};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),

    #[error("invalid configuration: {0}")]
    Model(#[from] crate::Error),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("f_oT = {fot} violates |f_oT| <= 0.5")]
    BoundViolated { fot: f64 },
}

impl CliError {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.to_path_buf(),
            source,
        }
    }

    /// 2 for invalid input, 3 for I/O failures, 4 for a bound violation under `--strict`.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) | CliError::Model(_) => 2,
            CliError::Io { .. } => 3,
            CliError::BoundViolated { .. } => 4,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "fda-beam",
    version,
    about = "Frequency-diverse array beampattern toolkit"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Beampattern over the scenario's sweep axes
    Pattern(CommonArgs),
    /// Synthesize weights for the desired regions and evaluate them over time
    Design(CommonArgs),
    /// Time-averaged beampattern and spatial exploration
    Average(AverageArgs),
    /// Phased array, conventional FDA and designed weights on one range-angle grid
    Compare(CommonArgs),
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Scenario file (TOML)
    #[arg(long, short = 's')]
    pub scenario: PathBuf,
    /// Output path stem; overrides the scenario's
    #[arg(long, short = 'o')]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Signal model; overrides the scenario's
    #[arg(long, value_enum)]
    pub model: Option<ModelArg>,
    /// Drop the pulse support window
    #[arg(long)]
    pub continuous_wave: bool,
    /// Fail with exit code 4 when |f_oT| > 0.5
    #[arg(long)]
    pub strict: bool,
    /// Also write a gnuplot script next to each CSV
    #[arg(long)]
    pub plot: bool,
}

#[derive(Debug, Clone, Args)]
pub struct AverageArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Add P1 and P2 columns
    #[arg(long)]
    pub components: bool,
    /// Plateau threshold below the peak, in dB
    #[arg(long, default_value_t = 3.0)]
    pub threshold_db: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Exact,
    Compact,
}

/// Parses `args`, runs the command and returns the process exit code.
/// The summary goes to `out`, errors to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return e.exit_code();
        }
    };
    match commands::execute(&cli.command) {
        Ok(report) => {
            let _ = write!(out, "{}", report.summary);
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
