//! Exact integer and rational linear algebra.
//!
//! Everything is arbitrary precision. Row-style Hermite normal form is the
//! canonical form used to deduplicate lattice objects across the crate.

mod matrix;
mod normal;
mod rational;

use thiserror::Error;

pub use matrix::IntegerMatrix;
pub use normal::{
    extended_gcd, hermite_normal_form, hnf_rows, integer_kernel, invariant_factors, smith_normal_form, solve_integer,
};
pub use rational::{
    dot, dot_rat, inverse_rat, is_zero_vec, leading_sign, nullspace_rat, orthogonal_complement, primitive,
    primitive_from_rat, project_out, rank_int, rank_rat, rat, rref, solve_rat, to_rat, Rat,
};

/// A rational vector in reduced form (num-rational keeps fractions reduced).
pub type RationalVector = Vec<Rat>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow { row: usize, expected: usize, found: usize },
    #[error("dimension mismatch: {left:?} against {right:?}")]
    DimensionMismatch { left: (usize, usize), right: (usize, usize) },
}

/// Shorthand for building integer vectors from literals.
pub fn ivec(v: &[i64]) -> Vec<num_bigint::BigInt> {
    v.iter().map(|&x| num_bigint::BigInt::from(x)).collect()
}
