use thiserror::Error;

/// Errors raised by the algebra and sequence routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different domains ({0} vs {1})")]
    DescriptorMismatch(String, String),
    #[error("{0} is not a field")]
    NotAField(String),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is out of range (2 <= p < 2^31)")]
    ModulusOutOfRange(u64),
    #[error("unknown ring descriptor `{0}`")]
    UnknownDescriptor(String),
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("sequence is empty")]
    EmptySequence,
    #[error("sequence is all-zero")]
    AllZeroSequence,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("degree violation: {0}")]
    DegreeViolation(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("polynomial does not annihilate the sequence")]
    NotAnnihilator,
    #[error("domain too large for exhaustive search: {0}")]
    DomainTooLarge(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
