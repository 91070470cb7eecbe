use alloc::string::String;
use core::fmt;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An operation that needs at least one cell was given an empty grid.
    EmptyGrid,
    /// The witness shape is not invariant under 90-degree rotation.
    NotSymmetric,
    /// Moduli must be at least 2.
    InvalidModulus(u32),
    /// A shape description violates one of its constraints; the message
    /// names the violated constraint.
    InvalidSpec(String),
    /// The shape handed to a snake-only operation is not a snake.
    NotASnake,
    /// A search ran out of its step budget before reaching a verdict.
    BudgetExceeded,
    /// A built-in construction failed its own verification.
    ConstructionFailed,
    /// Text input could not be parsed. Line and column are 1-based.
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyGrid => write!(f, "grid has no cells"),
            Error::NotSymmetric => write!(f, "shape is not 90-degree rotation symmetric"),
            Error::InvalidModulus(n) => write!(f, "modulus must be at least 2, got {}", n),
            Error::InvalidSpec(msg) => write!(f, "invalid shape description: {}", msg),
            Error::NotASnake => write!(f, "shape is not a snake"),
            Error::BudgetExceeded => write!(f, "search budget exceeded"),
            Error::ConstructionFailed => write!(f, "construction failed verification"),
            Error::Parse {
                line,
                column,
                message,
            } => write!(f, "parse error at line {}, column {}: {}", line, column, message),
        }
    }
}
