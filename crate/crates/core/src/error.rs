use thiserror::Error;

/// Errors surfaced by the sampling engine and its I/O.
#[derive(Error, Debug)]
pub enum Error {
    /// A parameter left its valid domain. Distribution samplers reject
    /// invalid parameters rather than clamping: corrupted parameters signal
    /// a sampler bug upstream.
    #[error("domain error: {0}")]
    Domain(String),

    /// A numerical operation failed (factorization, non-finite state).
    #[error("numerical error: {0}")]
    Numerical(String),

    /// Malformed input file. `line` is 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Invalid configuration detected before sampling begins.
    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }

    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}
