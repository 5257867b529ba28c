//! The `spectre` command-line tool.
//!
//! Exit codes: 0 success, 1 soundness or oracle failure, 2 input error,
//! 3 guard refusal.

mod analyze;
mod input;
pub mod oracle;
mod verify;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use spectre_core::theorems::Verification;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_REFUSED: i32 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError { code: EXIT_INPUT, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<spectre_core::Error> for CliError {
    fn from(e: spectre_core::Error) -> Self {
        let code = match e {
            spectre_core::Error::Refused(_) => EXIT_REFUSED,
            _ => EXIT_INPUT,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::input(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "spectre", version, about = "Spectral edge-connectivity and tree-packing checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analyse one graph and print a JSON report.
    Analyze(analyze::AnalyzeArgs),
    /// Check a theorem over a family of graphs; CSV rows on stdout.
    Verify(verify::VerifyArgs),
    /// Run the oracle-equivalence self-tests.
    OracleTest(oracle::OracleArgs),
}

/// `--exact` modes. A bare `--exact` means `always`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum ExactMode {
    Auto,
    Always,
    Never,
}

impl From<ExactMode> for Verification {
    fn from(m: ExactMode) -> Self {
        match m {
            ExactMode::Auto => Verification::Auto,
            ExactMode::Always => Verification::Always,
            ExactMode::Never => Verification::Never,
        }
    }
}

/// Writes `text` to `out`, or to stdout when `out` is `None`.
pub(crate) fn emit(out: Option<&PathBuf>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn configure_threads() -> CliResult<()> {
    let Ok(value) = std::env::var("SPECTRE_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .map_err(|_| CliError::input(format!("SPECTRE_THREADS must be a number, got `{value}`")))?;
    // A second initialisation in the same process is harmless.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    Ok(())
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let result = configure_threads().and_then(|_| match cli.command {
        Command::Analyze(args) => analyze::run(args),
        Command::Verify(args) => verify::run(args),
        Command::OracleTest(args) => oracle::run(args),
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("spectre: {e}");
            e.code
        }
    }
}
