//! Exact-arithmetic Leibniz algebras given by structure constants.
//!
//! The crate computes the usual invariants of a finite-dimensional
//! Leibniz algebra (Leibniz kernel, centers, central series, annihilators),
//! enumerates automorphism groups over small prime fields, and checks the
//! structure of the automorphism group of the three-dimensional nilpotent
//! algebra `Lei3` with `[a1,a1] = [a1,a2] = a3`.

pub mod algebra;
pub mod aut;
pub mod catalog;
pub mod error;
pub mod field;
pub mod format;
pub mod lei3;
pub mod matrix;
pub mod report;
pub mod subspace;

pub use algebra::{Algebra, LeibnizViolation, Nilpotency};
pub use aut::{LinearMap, MatrixGroup};
pub use error::{Error, Result};
pub use field::{FieldSpec, Prime, Scalar};
pub use format::{parse_algebra_file, render_algebra_file, ParseError};
pub use matrix::{Matrix, Vector};
pub use report::Report;
pub use subspace::Subspace;
