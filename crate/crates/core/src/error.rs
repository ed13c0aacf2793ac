use thiserror::Error;

/// Error type shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("index out of range: {0}")]
    Index(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("numeric failure: {0}")]
    Numeric(String),

    /// Training aborted because the loss became non-finite.
    #[error("numeric abort at iteration {at}: {msg} (last good iteration {last_good})")]
    Diverged {
        at: usize,
        last_good: usize,
        msg: String,
    },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("model file error: {0}")]
    Format(String),

    #[error("metric undefined: {0}")]
    MetricUndefined(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
