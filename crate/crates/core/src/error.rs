use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field error: {0}")]
    Field(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("missing structure: {0}")]
    MissingStructure(String),

    #[error("degenerate: {0}")]
    Degenerate(String),

    #[error("missing simple modules: {0}")]
    MissingSimples(String),

    #[error("unknown example `{0}`")]
    UnknownExample(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
