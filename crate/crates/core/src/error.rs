use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: V_{left} against V_{right}")]
    DimensionMismatch { left: u32, right: u32 },

    #[error("casimir matrix of V_{n} is not scalar")]
    NonScalarCasimir { n: u32 },

    #[error("distribution is not locally invariant (nonzero equivariance defect)")]
    NotInvariant,

    #[error("character is not a genuine sl(2) character: {0}")]
    NotGenuine(String),

    #[error("odd n required, got {0}")]
    ExpectedOdd(u32),

    #[error("even n required, got {0}")]
    ExpectedEven(u32),

    #[error("consistency check failed: {0}")]
    Contradiction(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed record: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
