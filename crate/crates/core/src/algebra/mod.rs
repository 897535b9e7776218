//! Exact integer/rational arithmetic: polynomials and dense rational matrices.

mod matrix;
mod polynomial;

pub use matrix::{
    cofactor_normal, determinant, gcd_i64, integral_vec, is_nonnegative_integer,
    small_determinant, to_rational_vec, RatMatrix,
};
pub use polynomial::{binomial, Polynomial};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("expected a row of length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("minimal dependence on columns {support:?} has a coefficient outside {{-1, 0, 1}}; the matrix is not totally unimodular")]
    NonTuRelation { support: Vec<usize> },
    #[error("linear system has infinitely many solutions")]
    SingularUnderdetermined,
}
