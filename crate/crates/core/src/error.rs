use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The arguments violate the operation's contract.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A mathematical hypothesis required by the operation does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// Two computations that must agree did not.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    /// No row of the singularity table matches the queried profile.
    #[error("unclassified singularity profile: {0}")]
    Unclassified(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
