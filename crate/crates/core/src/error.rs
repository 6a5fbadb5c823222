use thiserror::Error;

/// Errors reported by library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("operation needs arity {expected}, got {got}")]
    WrongArity { expected: usize, got: usize },
    #[error("not invertible")]
    NotInvertible,
    #[error("no tangible root in model")]
    NoTangibleRoot,
    #[error("pole at zero")]
    PoleAtZero,
    #[error("negative exponent in a non-Laurent polynomial")]
    NegativeExponent,
    #[error("signed model not supported by this operation")]
    SignedModel,
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("no root exists")]
    NoRoot,
}

impl Error {
    /// Short machine-readable identifier used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "syntax",
            Error::ArityMismatch(..) => "arity_mismatch",
            Error::WrongArity { .. } => "wrong_arity",
            Error::NotInvertible => "not_invertible",
            Error::NoTangibleRoot => "no_tangible_root",
            Error::PoleAtZero => "pole_at_zero",
            Error::NegativeExponent => "negative_exponent",
            Error::SignedModel => "signed_model",
            Error::Invalid(_) => "invalid",
            Error::NoRoot => "no_root",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
