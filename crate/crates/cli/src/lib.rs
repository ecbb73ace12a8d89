//! Library side of the `cpdist` binary, split out so the suites and
//! the exit-code contract can be tested without spawning processes.

pub mod args;
pub mod commands;
pub mod report;
pub mod suite;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub use args::Cli;
pub use report::{Failure, VerificationReport};

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum Exit {
    Success = 0,
    Usage = 1,
    Singular = 2,
    VerificationFailed = 3,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("singular: {0}")]
    Singular(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Core(#[from] cpdist_core::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit(&self) -> Exit {
        use cpdist_core::Error as E;
        match self {
            CliError::Singular(_) => Exit::Singular,
            CliError::Verification(_) => Exit::VerificationFailed,
            CliError::Core(
                E::Singular { .. }
                | E::SingularFamily
                | E::LeadingBlockSingular
                | E::SchurComplementSingular
                | E::UpdateMakesSingular,
            ) => Exit::Singular,
            CliError::Core(E::CheckFailed(_)) => Exit::VerificationFailed,
            _ => Exit::Usage,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Parses `argv`, runs the command and returns the exit code. Regular
/// output goes to `out`; diagnostics go to stderr.
pub fn run<I, T>(argv: I, out: &mut dyn Write) -> Exit
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { Exit::Usage } else { Exit::Success };
        }
    };
    match commands::dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit()
        }
    }
}
