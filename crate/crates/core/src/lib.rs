//! Exact-arithmetic kernel for the two-parameter family of SO_q(3) vector
//! R-matrices.
//!
//! Everything is computed over exact fields: arbitrary-precision rationals,
//! rational functions in one variable `s` (with `q = s^2`, so `sqrt(q) = s`
//! is a polynomial), and quadratic extensions `Q(sqrt(D))` at fixed rational
//! points. There is no floating point anywhere in the verification path.
//!
//! The crate builds the projector triple and the R-matrix family, decomposes
//! the modified-braid-equation residual in the S-operator basis, checks the
//! Baxterization composition law, extracts the noncommutative 3-space
//! relations, and certifies the q = 1 golden-mean sector. Each identity
//! check returns a [`report::Certificate`] that either certifies the claim
//! or refutes it with a concrete witness.

pub mod exactfield;
pub mod tensor;

pub mod soq3;

pub mod appendixb;
pub mod baxter;
pub mod mbe;
pub mod noncomm;

pub mod report;

pub use exactfield::{QuadExt, Rat, RatFunc, Scalar, UniPoly};
pub use report::{Certificate, Finding, Status, Witness};
pub use tensor::Matrix;
