use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Broad classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed or unsupported input.
    Input,
    /// A configured resource budget was exceeded.
    Budget,
    /// An internal consistency check failed.
    Internal,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("element does not stabilize the module")]
    NotStable,

    #[error("no integer solution while expressing a vector in a lattice basis")]
    NoIntegerSolution,

    #[error("Newton-Girard division was not exact at degree {0}")]
    NonIntegralResult(usize),

    #[error("Laurent substitution left a negative power of t")]
    NonPolynomialResult,

    #[error("invalid root system: {0}")]
    InvalidType(String),

    #[error("group of order {order} exceeds the configured budget {budget}")]
    MemoryBudgetExceeded { order: usize, budget: usize },

    #[error("poset exceeded the node budget of {0}")]
    NodeBudgetExceeded(usize),

    #[error("arrangement has {0} hypertori; at most 256 are supported")]
    TooManyHypertori(usize),

    #[error("character table for a group of order {order} exceeds the budget {budget}")]
    SizeBudget { order: usize, budget: usize },

    #[error("could not lift characters from F_{0}")]
    LiftFailure(u64),

    #[error("multiplicity of {character} in degree {degree} is not an integer")]
    NonIntegralMultiplicity { character: String, degree: usize },

    #[error("multiplicity of {character} in degree {degree} is negative ({value})")]
    NegativeMultiplicity { character: String, degree: usize, value: i128 },

    #[error("schema error: {0}")]
    Schema(String),

    #[error("orthogonality check failed: {0}")]
    Orthogonality(String),

    #[error("class alignment failed: {0}")]
    ClassAlignment(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::DimensionMismatch { .. }
            | Error::InvalidType(_)
            | Error::TooManyHypertori(_)
            | Error::Schema(_)
            | Error::ClassAlignment(_)
            | Error::Io(_)
            | Error::Json(_) => ErrorKind::Input,
            Error::MemoryBudgetExceeded { .. }
            | Error::NodeBudgetExceeded(_)
            | Error::SizeBudget { .. } => ErrorKind::Budget,
            // A corrupted table file is bad input, but it is caught by the
            // same check that guards computed tables.
            Error::Orthogonality(_) => ErrorKind::Input,
            _ => ErrorKind::Internal,
        }
    }
}
