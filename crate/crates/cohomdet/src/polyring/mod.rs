//! Exact arithmetic in the graded symmetric algebra `S = Z[a1, ..., an]`.
//!
//! Everything downstream (theta matrices, determinant extraction, gluing
//! identities) reduces to computations with multivariate polynomials over the
//! integers, so this module is deliberately self-contained and exact:
//!
//! * [`IntPoly`] — a multivariate polynomial with arbitrary-precision integer
//!   coefficients, kept in canonical form (no zero terms, graded-lex key
//!   order). Equality is bit-exact structural equality.
//! * [`PolyMatrix`] — a dense matrix over `S` with a fraction-free
//!   (Bareiss) determinant and row/column striking, the workhorse for minor
//!   extraction.
//! * [`IntMatrix`] — a small exact integer matrix used for bases, transition
//!   matrices, and linear variable substitutions; unimodular inverses are
//!   computed via the adjugate.
//!
//! The monomial order is graded lexicographic with `a1 > a2 > ... > an`. It
//! is used only to make serialization and iteration deterministic; no
//! arithmetic result depends on it.

mod matrix;
mod poly;
mod text;

pub use matrix::{IntMatrix, PolyMatrix};
pub use poly::{Homogeneity, IntPoly, Monomial};

use thiserror::Error;

/// Errors from polynomial and matrix arithmetic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// Operands disagree on shape or variable count.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    /// A determinant was requested of a non-square matrix.
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    /// Exact division failed: the divisor does not divide the dividend in
    /// `Z[a1..an]`.
    #[error("exact division failed: `{divisor}` does not divide `{dividend}`")]
    NotDivisible { dividend: String, divisor: String },
    /// Division by the zero polynomial.
    #[error("division by the zero polynomial")]
    DivisionByZero,
    /// An integer matrix inverse was requested but the determinant is not
    /// a unit of `Z`.
    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(num_bigint::BigInt),
    /// Canonical polynomial text could not be parsed.
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}
