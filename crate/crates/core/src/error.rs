use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("duplicate x-coordinate {x} (points {first} and {second}); rotate the input so all x are distinct")]
    DuplicateX {
        x: String,
        first: usize,
        second: usize,
    },

    #[error("graph and sequence are not compatible: {0}")]
    Incompatible(String),

    #[error("unsupported instance: {0}")]
    Unsupported(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search cap exceeded: instance needs {needed} spine items, cap is {cap}")]
    CapExceeded { needed: usize, cap: usize },

    #[error("realization failed: {0}")]
    Realization(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
