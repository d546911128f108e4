use std::fmt;

use kf_core::Error;

pub const EXIT_KF: i32 = 0;
pub const EXIT_NOT_KF: i32 = 1;
pub const EXIT_UNDECIDED: i32 = 2;
pub const EXIT_MALFORMED: i32 = 64;
pub const EXIT_PRECONDITION: i32 = 65;
pub const EXIT_INTERNAL: i32 = 70;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

pub type CliResult<T> = std::result::Result<T, CliError>;

impl CliError {
    pub fn malformed(msg: impl Into<String>) -> Self {
        CliError {
            code: EXIT_MALFORMED,
            message: msg.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidInput(_) => EXIT_MALFORMED,
            Error::Precondition(_) | Error::Unclassified(_) => EXIT_PRECONDITION,
            Error::Inconsistent(_) => EXIT_INTERNAL,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}
