use thiserror::Error;

/// Errors raised by the weight, crystal and multiplicity engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 2, got {0}")]
    Rank(usize),

    #[error("{0}")]
    Domain(String),

    #[error("no highest weight: dimension vector w is zero")]
    NoHighestWeight,

    #[error("weights are not comparable: {0}")]
    Incomparable(String),

    #[error("node cap of {cap} exceeded while generating with budget {budget:?}")]
    Resource { cap: usize, budget: Vec<i64> },

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
