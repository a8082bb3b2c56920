//! Exact-arithmetic toolkit for the graded ring presentations attached to
//! a hypertoric vector configuration: circuits and signed circuits,
//! Orlik-Terao and Stanley-Reisner presentations, a deterministic
//! Buchberger engine with Hilbert series, and per-degree verification of
//! the kernel identification for the graded map between the equivariant
//! cohomology presentation and its quantum q=1 quotient.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals
//! and all identities are checked as bit-exact algebraic equalities.
//! The internal grading gives every u-variable and the deformation
//! parameter h weight 1; cohomological degree is twice the internal one.

pub mod error;
pub mod linalg;
pub mod polyring;
pub mod matroid;
pub mod groebner;
pub mod algebras;
pub mod verify;

pub use error::{Error, Result};
