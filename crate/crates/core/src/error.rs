use thiserror::Error;

/// Errors raised by the exact algebra layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index ({row}, {col}) out of range for dimension {dim}")]
    IndexOutOfRange { row: usize, col: usize, dim: usize },
    #[error("product has degree {0}, which exceeds the quadratic cap")]
    DegreeOverflow(usize),
    #[error("expression mixes generator families: {0}")]
    MixedFamily(String),
    #[error("invalid sign vector: {0}")]
    InvalidSignVector(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
