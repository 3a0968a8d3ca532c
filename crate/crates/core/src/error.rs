use thiserror::Error;

/// Errors produced by graph construction, counting and reporting.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Arguments outside the domain of an operation.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// Input larger than the configured vertex guard.
    #[error("resource guard: {what} needs n = {n}, limit is {limit} (raise with --max-n or CYCLECOUNT_MAX_N)")]
    ResourceGuard { what: &'static str, n: usize, limit: usize },

    /// Malformed graph or expectation input.
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("arithmetic error: {0}")]
    Arithmetic(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse { location: location.into(), message: message.into() }
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parameter(_) | Error::Arithmetic(_) => 2,
            Error::ResourceGuard { .. } => 3,
            Error::Parse { .. } => 4,
            Error::Io(_) => 1,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
