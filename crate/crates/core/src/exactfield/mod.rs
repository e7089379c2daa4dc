//! Exact arithmetic towers: `Q`, `Q(s)` with `q = s^2`, and `Q(sqrt(D))`.
//!
//! All user-facing input is written in `q` and `sqrt(q)`; internally every
//! q-dependent quantity lives in `Q(s)` so that `sqrt(q)` is the polynomial
//! `s` and equality is structural on canonical forms.

mod quadext;
mod rational;
mod ratfunc;
mod scalar;
mod unipoly;

pub use quadext::QuadExt;
pub use rational::{rat, rat_int, sqrt_exact, Rat};
pub use ratfunc::RatFunc;
pub use scalar::Scalar;
pub use unipoly::UniPoly;

use thiserror::Error;

/// Arithmetic failures in the exact towers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("division by zero polynomial")]
    ZeroDenominator,
    #[error("pole: denominator {factor} vanishes at s = {at}")]
    Pole { factor: String, at: String },
    #[error("{0} has no inverse")]
    NotInvertible(String),
}
