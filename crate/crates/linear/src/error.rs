use thiserror::Error;

/// Failures shared by every layer of the workspace.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("singular matrix: {0}")]
    Singular(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("malformed scalar {0:?}")]
    Scalar(String),
    /// Two formulations that must agree did not; always an implementation bug.
    #[error("inconsistent verdicts: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn shape(msg: impl Into<String>) -> Error {
    Error::Shape(msg.into())
}
