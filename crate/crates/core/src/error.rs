//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid dimensions, temperatures, or other caller-supplied settings.
    #[error("configuration error: {0}")]
    Config(String),
    /// Malformed input data (labels out of range, missing labels, ...).
    #[error("data error: {0}")]
    Data(String),
    /// A protocol precondition was violated (empty dataset, empty cluster, ...).
    #[error("protocol error: {0}")]
    Protocol(String),
    /// A file did not conform to its on-disk format.
    #[error("format error: {0}")]
    Format(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
    pub fn data(msg: impl Into<String>) -> Self {
        Error::Data(msg.into())
    }
    pub fn protocol(msg: impl Into<String>) -> Self {
        Error::Protocol(msg.into())
    }
    pub fn format(msg: impl Into<String>) -> Self {
        Error::Format(msg.into())
    }
}
