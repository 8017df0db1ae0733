use thiserror::Error;

/// Errors raised by the library. CLI front ends map every variant to
/// a "domain error" exit status.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid partial ASM: {0}")]
    InvalidAsm(String),

    #[error("invalid rank table: {0}")]
    InvalidRankTable(String),

    #[error("invalid pipe dream: {0}")]
    InvalidPipeDream(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("size guard: {what} is limited to {limit}, got {got}")]
    SizeGuard {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("Gröbner budget exceeded after {0} pair reductions")]
    BudgetExceeded(usize),

    #[error("lcm lattice exceeds the limit of {0} elements")]
    LatticeTooLarge(usize),

    #[error("the unit ideal is not allowed here")]
    UnitIdeal,

    #[error("zero polynomial has no lead term")]
    ZeroPolynomial,

    #[error("no ASM attached to this ideal")]
    NoAsmAttached,

    #[error("{0}")]
    Invalid(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
