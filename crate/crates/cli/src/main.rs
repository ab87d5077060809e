//! `genergy`: classify graphs by energy, run censuses of connected graphs,
//! enumerate them, and check the family results numerically.

mod census;
mod classify;
mod enumerate;
mod verify;

use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use genergy::{ToleranceConfig, Workers};

#[derive(Debug, Parser)]
#[command(
    name = "genergy",
    version,
    about = "Graph energies and subclass census of connected graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Profile and classify a single connected graph.
    Classify(classify::ClassifyArgs),
    /// Count connected graphs per subclass for one or more orders.
    Census(census::CensusArgs),
    /// Write one canonical graph6 line per connected graph of an order.
    Enumerate(enumerate::EnumerateArgs),
    /// Check family predictions, the trig sum identities or the ratio trend.
    Verify(verify::VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Absolute comparison tolerance.
    #[arg(long, default_value_t = ToleranceConfig::default().eps_abs)]
    pub tol_abs: f64,
    /// Relative comparison tolerance.
    #[arg(long, default_value_t = ToleranceConfig::default().eps_rel)]
    pub tol_rel: f64,
    /// Worker threads (default: available parallelism).
    #[arg(long, env = "GENERGY_JOBS")]
    pub jobs: Option<usize>,
    /// More detail on stderr.
    #[arg(short, long, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

impl Common {
    pub fn tolerance(&self) -> Result<ToleranceConfig, CliError> {
        ToleranceConfig::new(self.tol_abs, self.tol_rel).map_err(CliError::from)
    }

    pub fn workers(&self) -> Result<Workers, CliError> {
        match self.jobs {
            None => Ok(Workers::available()),
            Some(k) => Workers::new(k).ok_or_else(|| CliError::Usage("--jobs must be at least 1".into())),
        }
    }

    pub fn emit(&self, text: &str) -> Result<(), CliError> {
        emit(self.out.as_deref(), text)
    }
}

pub fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Usage(format!("stdout: {e}")))
        }
    }
}

/// Failures mapped onto the exit-code contract: 1 usage or parse, 2 domain
/// violation, 3 integrity failure.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
    Integrity(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Domain(_) => 2,
            CliError::Integrity(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Domain(m) | CliError::Integrity(m) => f.write_str(m),
        }
    }
}

impl From<genergy::Error> for CliError {
    fn from(e: genergy::Error) -> Self {
        use genergy::Error as E;
        match e {
            E::Integrity { .. } | E::ChainViolation(_) | E::NoConvergence { .. } => CliError::Integrity(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Usage(format!("JSON: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Classify(args) => classify::run(args),
        Command::Census(args) => census::run(args),
        Command::Enumerate(args) => enumerate::run(args),
        Command::Verify(args) => verify::run(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("genergy: {e}");
            ExitCode::from(e.code())
        }
    }
}
