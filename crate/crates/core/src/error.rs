use thiserror::Error;

/// Errors raised by the exact-arithmetic layer and the diamond builders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument combination outside the domain of a combinatorial function.
    #[error("domain error: {0}")]
    Domain(String),

    /// Polynomial division left a nonzero remainder.
    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An index outside the valid range of a diamond query.
    #[error("out of range: {0}")]
    Range(String),

    /// A table that is not a valid Hodge diamond.
    #[error("invalid Hodge diamond: {0}")]
    InvalidDiamond(String),

    /// An internal bookkeeping check failed; this indicates a bug, not bad input.
    #[error("consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
