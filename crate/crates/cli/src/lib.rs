//! Command-line front end: generation, single measures, profiles as CSV and
//! claim verification with JSON reports.

pub mod claims;
pub mod commands;
pub mod input;
pub mod report;

use std::process::ExitCode;

/// Exit status classes: 1 for failed verifications and output errors, 2
/// for bad arguments or unreadable input.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Failure(_) => ExitCode::from(1),
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Failure(m) => m,
        }
    }
}

impl From<seqcomplexity::Error> for CliError {
    fn from(e: seqcomplexity::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Environment variable holding the default number of verification workers.
pub const WORKERS_ENV: &str = "SEQCOMPLEXITY_WORKERS";

pub fn default_workers() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&w: &usize| w > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}
