//! Library side of the `antiflex` command: the file format, the checks and
//! constructions reachable from the command line, the random-element
//! oracle and the bounded grid searches.

pub mod check;
pub mod construct;
pub mod corpus;
pub mod format;
pub mod report;
pub mod search;

use thiserror::Error;

/// Exit code of a passing check.
pub const EXIT_PASS: i32 = 0;
/// Exit code of a failing check.
pub const EXIT_FAIL: i32 = 1;
/// Exit code for unreadable or ill-typed input.
pub const EXIT_INPUT: i32 = 2;
/// Exit code when two routes that must agree do not.
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl From<antiflex_linear::Error> for CliError {
    fn from(e: antiflex_linear::Error) -> Self {
        match e {
            antiflex_linear::Error::Consistency(_) => CliError::Internal(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}
