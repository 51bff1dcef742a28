use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("qubit count mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{what} is limited to n <= {cap}, got n = {n}")]
    SizeCap { what: &'static str, cap: usize, n: usize },

    #[error("group of order {order} exceeds the enumeration cap {cap}")]
    GroupTooLarge { order: u128, cap: u128 },

    #[error("graph parse error: {0}")]
    Parse(String),

    #[error(
        "memory budget of {budget} stored entries exceeded in {stage} round {round} \
         (frontier {frontier})"
    )]
    BudgetExceeded { stage: &'static str, round: usize, frontier: usize, budget: usize },

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
