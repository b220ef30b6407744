use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("basis index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("bracket [{i},{j}] must satisfy i < j")]
    BadBracketOrder { i: usize, j: usize },

    #[error("bracket [{i},{j}] given twice")]
    DuplicateBracket { i: usize, j: usize },

    #[error("Jacobi identity fails on (e{}, e{}, e{}): residual {residual:?}", .triple.0, .triple.1, .triple.2)]
    JacobiViolation {
        /// 1-based basis indices.
        triple: (usize, usize, usize),
        residual: Vec<Scalar>,
    },

    #[error("subspace is not an ideal")]
    NotAnIdeal,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("form is not antisymmetric")]
    NotAntisymmetric,

    #[error("form is not a 2-cocycle")]
    NotACocycle,

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("mode count mismatch: {0} vs {1}")]
    ModeMismatch(usize, usize),

    #[error("invalid argument: {0}")]
    Domain(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
