use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("not-contained: {0}")]
    NotContained(String),

    #[error("invalid filling: {0}")]
    InvalidFilling(String),

    #[error("not-in-image: {0}")]
    NotInImage(String),

    #[error("already-terminal: tableau has no multicell")]
    AlreadyTerminal,

    #[error("insufficient-degree: need degree bound {need}, have {have}")]
    InsufficientDegree { need: usize, have: usize },

    #[error("degree bound mismatch: {0} vs {1}")]
    BoundMismatch(usize, usize),

    #[error("non-invertible transition into basis {basis} at index {index}")]
    NonInvertible { basis: char, index: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invariant violation: {0}")]
    Invariant(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
