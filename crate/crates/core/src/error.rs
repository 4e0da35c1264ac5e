use thiserror::Error;

/// Every failure the engine can report.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("size limit: |W| = {order} exceeds the bound {bound}")]
    SizeLimit { order: u64, bound: u64 },
    #[error("data integrity: {0}")]
    DataIntegrity(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("not a character: {0}")]
    NotACharacter(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn inconsistency(msg: impl Into<String>) -> Self {
        Error::Inconsistency(msg.into())
    }
}
