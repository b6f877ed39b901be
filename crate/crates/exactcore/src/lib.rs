//! Exact arithmetic substrate: arbitrary-precision rationals, sparse
//! multivariate polynomials, rational functions, and matrices over these.
//!
//! Everything here is immutable after construction and safe to share across
//! threads. Variable identifiers are plain `u32` indices; a [`VarRegistry`]
//! maps them to names for parsing and display, and its order fixes the
//! canonical term order used everywhere (serialization, pivot tie-breaks).

pub mod matrix;
pub mod poly;
pub mod psnf;
pub mod rat;
pub mod ratfunc;
pub mod vars;

pub use matrix::{MatPoly, MatQ, MatRF};
pub use poly::{Mono, QPoly};
pub use psnf::{CoeffField, ElemOp, PsnfResult};
pub use rat::{rat, ratio, Rat};
pub use ratfunc::QRatFunc;
pub use vars::{VarId, VarRegistry};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    Singular,
    #[error("inexact division")]
    InexactDivision,
}
