use crate::repr::MpFloat;

/// Errors reported by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MpError {
    #[error("invalid configuration: {0}")]
    Config(String),
    /// The result exceeded the largest representable magnitude. The payload is the
    /// saturated value (plus or minus the largest representable number).
    #[error("exponent overflow")]
    Overflow(MpFloat),
    #[error("too many underflows")]
    UnderflowLimit,
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("argument outside the domain: {0}")]
    Domain(String),
    #[error("argument is a pole")]
    Pole,
    #[error("argument too large for accurate range reduction")]
    LossOfPrecision,
    #[error("cannot parse number: {0}")]
    Parse(String),
    #[error("malformed data: {0}")]
    Format(String),
    #[error("field too narrow")]
    Width,
    #[error("value out of range")]
    OutOfRange,
    #[error("value is not an integer")]
    NotAnInteger,
    #[error("digit or field out of range")]
    Range,
}

pub type Result<T> = std::result::Result<T, MpError>;

pub(crate) fn config(msg: impl Into<String>) -> MpError {
    MpError::Config(msg.into())
}

pub(crate) fn domain(msg: impl Into<String>) -> MpError {
    MpError::Domain(msg.into())
}
