//! Exact arithmetic over prime fields GF(p) and dense matrices over them.

mod field;
mod matrix;

pub use field::{FieldElement, FieldSpec, MAX_MODULUS};
pub use matrix::{row_vec_solve, Matrix};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds the supported maximum")]
    ModulusTooLarge(u64),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("field mismatch: GF({left}) vs GF({right})")]
    FieldMismatch { left: u64, right: u64 },
    #[error("dimension mismatch in {context}: {left:?} vs {right:?}")]
    DimensionMismatch {
        context: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is singular")]
    Singular,
    #[error("window width {width} exceeds column count {cols}")]
    WidthTooLarge { width: usize, cols: usize },
    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,
    #[error("all rows must have the same length")]
    RaggedRows,
}
