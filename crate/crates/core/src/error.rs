use thiserror::Error;

/// Errors raised by ideal arithmetic, constructions and searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generating set")]
    EmptyGeneratingSet,

    #[error("exponent overflow while multiplying monomials")]
    Overflow,

    #[error("pair index ({i},{j}) out of range for an ideal with {m} generators")]
    IndexOutOfRange { i: usize, j: usize, m: usize },

    #[error("construction requires m ≥ 5 (got m = {0})")]
    ConstructionTooSmall(usize),

    #[error("operation requires at least {needed} generators, ideal has {found}")]
    TooFewGenerators { needed: usize, found: usize },

    #[error("bound too small for m: bound {bound} < m - 1 = {}", .m.saturating_sub(1))]
    BoundTooSmall { m: usize, bound: u64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("fast minimalization disagrees with the pairwise oracle on {0}")]
    OracleMismatch(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
