use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("NotWellDefined: {0}")]
    NotWellDefined(String),
    #[error("lattice mismatch: {0}")]
    LatticeMismatch(String),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("unknown functor: {0}")]
    UnknownFunctor(String),
    #[error("parity violation: {0}")]
    Parity(String),
    #[error("not tabulated: {0}")]
    NotTabulated(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("hypothesis violation: {0}")]
    Hypothesis(String),
    #[error("invalid functor: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
