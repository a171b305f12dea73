//! Exit-code discipline: 0 success, 1 verification/detection/runtime
//! failure, 2 usage error. Stable contract for scripting.

use std::fmt;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags, bad configuration, malformed config file: exit 2.
    Usage(String),
    /// Runtime failure: I/O, malformed data files, estimator errors: exit 1.
    Run(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Run(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<fracspec_core::Error> for CliError {
    fn from(err: fracspec_core::Error) -> Self {
        match err {
            fracspec_core::Error::Config(msg) => CliError::Usage(msg),
            fracspec_core::Error::InvalidInput(msg) => CliError::Run(msg),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Run(err.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn run_error(msg: impl Into<String>) -> CliError {
    CliError::Run(msg.into())
}
