//! Minimal inscribed squares in the region bounded by a line and two
//! mutually tangent circles of radii 1 and `r`.
//!
//! The crate computes the minimal side length `mu(r)` two ways (a direct
//! geometric construction swept over tilt angles, and a one-dimensional
//! minimization of a closed-form side-length function), builds the exact
//! polynomial relations satisfied by the minimizer, and samples Frobenius
//! cycle types of the degree-10 minimal-point polynomial modulo primes.
//!
//! Modules:
//! - [`geometry`]: scene, inscribed-square solver, contact classifier,
//!   bound and pivot formulas, brute-force sweep.
//! - [`minimize`]: side-length function `z`, its derivative, the minimizer.
//! - [`algebra`]: exact rational polynomials, `p(t, x)`, `h(k, x, y)`,
//!   resultants and JSON export.
//! - [`galois`]: integer specialization, reduction mod primes, distinct-degree
//!   factorization and cycle-type statistics.
//! - [`verify`]: the residual suite behind `morikawa verify`.

pub mod algebra;
pub mod error;
pub mod exec;
pub mod galois;
pub mod geometry;
pub mod minimize;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Strategy;
