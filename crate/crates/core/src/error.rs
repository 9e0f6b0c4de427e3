use thiserror::Error;

use crate::forms::VariableFamily;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("polynomial is not homogeneous (found degrees {0} and {1})")]
    NotHomogeneous(u32, u32),

    #[error("expected variables from the {expected} family, found `{found}`")]
    WrongFamily {
        expected: VariableFamily,
        found: String,
    },

    #[error("variable family mismatch: {0} vs {1}")]
    FamilyMismatch(VariableFamily, VariableFamily),

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),

    #[error("operation requires even degree, got {0}")]
    OddDegree(u32),

    #[error("derivation is not traceless (trace {0})")]
    NotTraceless(i64),

    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    #[error("unknown named quartic `{0}`")]
    UnknownQuartic(String),

    #[error("ideal is positive-dimensional: no pure power of `{0}` in the initial ideal")]
    PositiveDimensional(String),

    #[error("deadline exceeded")]
    DeadlineExceeded,

    #[error("verification failed at step `{0}`")]
    Verification(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
