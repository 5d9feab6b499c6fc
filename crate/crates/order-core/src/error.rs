use thiserror::Error;

/// Errors shared by every crate in the workspace.
///
/// The CLI maps `HypothesisNotMet` to exit status 1 and the input-shaped
/// variants (`Malformed`, `ForeignId`, `InvalidOrder`) to exit status 2.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element id {id} is not valid for a carrier of size {size}")]
    ForeignId { id: usize, size: usize },
    #[error("relation is not a partial order: {0}")]
    InvalidOrder(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("carrier of size {size} exceeds the enumeration cap {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("undecidable: {0}")]
    Undecidable(String),
    #[error("iteration budget of {0} steps exceeded")]
    BudgetExceeded(usize),
    #[error("not a morphism: {0}")]
    NotAMorphism(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn hypothesis(msg: impl Into<String>) -> Self {
        Error::HypothesisNotMet(msg.into())
    }

    pub fn malformed(msg: impl Into<String>) -> Self {
        Error::Malformed(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
