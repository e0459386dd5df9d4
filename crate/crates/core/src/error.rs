//! Error type shared by all modules.

use crate::poly::Var;

/// Errors raised by domain-contract violations.
///
/// Every fallible operation in this crate reports one of these variants;
/// none of them is recoverable by retrying with the same inputs.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("genus must be at least {min}, got {got}")]
    GenusTooSmall { got: u32, min: u32 },

    #[error("genus mismatch: divisor has genus {divisor}, curve has genus {curve}")]
    GenusMismatch { divisor: u32, curve: u32 },

    #[error("boundary index {index} out of range 0..={max} for genus {genus}")]
    IndexOutOfRange { genus: u32, index: u32, max: u32 },

    #[error("wall index {j} out of range {lo}..={hi}")]
    WallIndexOutOfRange { j: u32, lo: u32, hi: u32 },

    #[error("{0}")]
    InvalidPartition(String),

    #[error("variable mismatch: left is in {left}, right is in {right}")]
    VariableMismatch { left: Var, right: Var },

    #[error("denominator polynomial is zero")]
    ZeroDenominator,

    #[error("evaluation at a pole: {0}")]
    Pole(String),

    #[error("invalid rational literal {0:?}: expected \"p/q\" or \"p\" with optional leading minus on p")]
    InvalidRational(String),

    #[error("proportionality ratio undefined: both vectors are zero")]
    BothVectorsZero,

    #[error("vector length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("{0}")]
    Domain(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
