use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("incomparable sizes: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
    #[error("inconsistent system: {0}")]
    Inconsistent(String),
    #[error("limit exceeded: {0}")]
    Limit(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_size(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::SizeMismatch(a, b))
    }
}
