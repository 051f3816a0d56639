//! Library surface of the crnkit command-line tool: file formats, the
//! buffering-structure search, and the report-producing command bodies.
//! The binary only parses arguments and maps results to exit codes.

pub mod commands;
pub mod enumerate;
pub mod format;

use std::fmt;

/// Command failures, split by exit code: parse/input errors exit with 2,
/// precondition failures with 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Parse(String),
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(msg) => write!(f, "parse error: {msg}"),
            CliError::Precondition(msg) => write!(f, "precondition failure: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}
