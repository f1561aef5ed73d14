//! Exit-code policy for the tool.
//!
//! 0 success · 1 runtime failure · 2 usage or configuration error ·
//! 3 validation failure (inputs parsed but their content fails checks).

use std::fmt;
use std::process::ExitCode;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags, missing files, unparseable configuration → exit 2.
    Usage(String),
    /// Content-level check failed (rule structure, unusable image) → exit 3.
    Validation(String),
    /// I/O or internal failure while running → exit 1.
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Runtime(_) => ExitCode::from(1),
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Validation(_) => ExitCode::from(3),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Validation(m) | CliError::Runtime(m) => f.write_str(m),
        }
    }
}

/// Shorthand for I/O failures while writing results.
pub fn io_runtime(context: &str, err: std::io::Error) -> CliError {
    CliError::Runtime(format!("{context}: {err}"))
}
