use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input violates an operation's precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A construction or search could not produce the required object.
    #[error("construction failed: {0}")]
    Construction(String),
    /// Shipped or generated data failed validation.
    #[error("data integrity failure: {0}")]
    DataIntegrity(String),
    /// File output failed.
    #[error("i/o failure: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
