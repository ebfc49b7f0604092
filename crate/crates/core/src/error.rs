use thiserror::Error;

/// Errors raised by the algebra routines.
///
/// Parse failures are kept separate from precondition violations so that
/// front ends can report them differently.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of size {0} is too large for this implementation")]
    FieldTooLarge(String),
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("element code {code} is out of range for a field of size {q}")]
    ElementOutOfRange { code: u64, q: u64 },
    #[error("zero has no multiplicative order")]
    ZeroElement,

    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("polynomial must be nonconstant")]
    ConstantPolynomial,
    #[error("polynomial has zero constant term and divides no binomial")]
    ZeroConstantTerm,
    #[error("polynomial must be squarefree")]
    NotSquarefree,

    #[error("{n} and {q} must be coprime")]
    NotCoprime { n: u64, q: u64 },
    #[error("{n} does not divide {big}")]
    NotDivisor { n: u64, big: u64 },
    #[error("set must be nonempty")]
    EmptySet,

    #[error("length N must be positive")]
    ZeroLength,
    #[error("generator does not divide X^{length} - {lambda}")]
    NotAGenerator { length: u64, lambda: u32 },
    #[error("generator degree {degree} must lie strictly between 0 and {length}")]
    TrivialCode { degree: usize, length: u64 },

    #[error("no binomial multiple of degree at most {0}")]
    BoundExceeded(u64),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
    /// An identity that the algorithms rely on failed to hold.
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
