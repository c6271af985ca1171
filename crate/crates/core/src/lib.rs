//! Exact linear algebra for walk matrices of path graphs.
//!
//! The crate computes walk matrices W(M) = [e, Me, M²e, ...] over arbitrary
//! precision integers, reduces them to Smith normal form, and carries the
//! supporting cast: path graphs and their folded tridiagonal quotients,
//! equitable partitions with characteristic and quotient matrices, brute
//! force and recurrence walk counters, and a floating-point spectral side
//! that cross-checks determinants, ranks, and projection products against
//! the exact integer results.

#![forbid(unsafe_code)]

pub mod error;
pub mod graph;
pub mod matrix;
pub mod partition;
pub mod smith;
pub mod spectral;
pub mod walk;

pub use error::{Error, Result};
pub use matrix::IntegerMatrix;
pub use smith::SmithForm;
