use thiserror::Error;

use crate::poly::VarId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("context size mismatch: {0} vs {1}")]
    ContextMismatch(usize, usize),
    #[error("variable x[{},{}] outside context of size {1}", .0.row, .0.col)]
    VarOutOfRange(VarId, usize),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("not divisible")]
    NotDivisible,
    #[error("no value assigned to x[{},{}]", .0.row, .0.col)]
    MissingAssignment(VarId),
    #[error("matrix is {0}x{1}, expected square")]
    NonSquare(usize, usize),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("index {index} out of range 1..={size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("matrix is not alternating")]
    NotAlternating,
    #[error("identity fails: {0}")]
    IdentityFails(String),
    #[error("det phi is not a unit times a power of f: {0}")]
    ResidueNotUnit(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("Y*Z differs from adj(X)")]
    NotAFactorization,
    #[error("size {0} must be even")]
    OddSize(usize),
    #[error("size must be at least 1")]
    EmptySize,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("Hilbert numerator is zero")]
    ZeroSeries,
}

pub type Result<T> = std::result::Result<T, Error>;
