//! Errors produced while turning command line input into library calls.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The core library rejected the input or failed.
    Core(polyconv_core::Error),
    /// A shape file could not be read.
    Io { path: String, message: String },
    /// A family shorthand string did not follow the grammar.
    Shorthand { spec: String, message: String },
    /// A certificate report did not follow the serialized layout.
    Report { line: usize, message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Core(e) => write!(f, "{}", e),
            Error::Io { path, message } => write!(f, "cannot read {}: {}", path, message),
            Error::Shorthand { spec, message } => {
                write!(f, "bad shape spec {:?}: {}", spec, message)
            }
            Error::Report { line, message } => {
                write!(f, "bad certificate report at line {}: {}", line, message)
            }
        }
    }
}

impl std::error::Error for Error {}

impl From<polyconv_core::Error> for Error {
    fn from(e: polyconv_core::Error) -> Error {
        Error::Core(e)
    }
}
