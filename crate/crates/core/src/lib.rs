//! Exact invariants of `SL(m) x SL(n)` and `SL(m) x SL(n) x SL(2)` acting on
//! an `m x n x 2` tensor of indeterminates.
//!
//! The pieces, bottom up:
//!
//! - [`polyring`]: sparse polynomials with rational coefficients and explicit
//!   monomial orders.
//! - [`linalg`]: symbolic and rational matrices, minors, determinants, kernels.
//! - [`pencil`]: the tensor `T`, the coefficients of `det(xX + yY)`, and the
//!   block-bidiagonal determinant for `n = m + gcd(m, n)`.
//! - [`action`]: the group action, random unimodular sampling and invariance
//!   checks at the group and Lie-algebra level.
//! - [`invariants`]: subduction against the pencil coefficients, the
//!   binary-form correspondence, classical invariants and hyperdeterminants.

pub mod action;
pub mod cli;
pub mod error;
pub mod invariants;
pub mod linalg;
pub mod pencil;
pub mod polyring;
pub mod tensor_file;

pub use error::{Error, Result};
