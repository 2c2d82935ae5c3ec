use thiserror::Error;

use crate::scalars::Var;

#[derive(Debug, Error)]
pub enum Error {
    #[error("variable {0} has no assigned value")]
    UnassignedVariable(Var),
    #[error("variable {0} assigned 0 but occurs with a negative exponent")]
    ZeroAssignment(Var),
    #[error("denominator vanishes at the evaluation point")]
    DenominatorVanishes,
    #[error("rank n={n} too small for tau={tau}")]
    BadRank { tau: u8, n: usize },
    #[error("unsupported tau={0}; expected 1, 2 or 4")]
    BadTau(u8),
    #[error("[h_{i}, e_{j}] is not a scalar multiple of e_{j}")]
    NotProportional { i: usize, j: usize },
    #[error("parity map is not symmetric: {0}")]
    SymmetryViolation(String),
    #[error("element is not homogeneous")]
    Inhomogeneous,
    #[error("bicharacter violates chi(alpha_i, delta)=1 at i={0}")]
    AssumptionViolated(usize),
    #[error("{what}: expected degree {expected}, got {got}")]
    DegreeMismatch {
        what: String,
        expected: String,
        got: String,
    },
    #[error("verification failed at i={i}: {reason}")]
    VerificationFailed { i: usize, reason: String },
    #[error("config: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
