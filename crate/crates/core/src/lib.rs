//! Exact arithmetic for multivariate Laurent series supported on rational
//! polyhedral cones.
//!
//! The crate provides, in dependency order:
//!
//! - [`kernel`]: arbitrary-precision rationals, univariate polynomials,
//!   rational functions, exact linear algebra and a Taylor-coefficient
//!   oracle for algebraic series.
//! - [`geometry`]: rational polyhedral cones with exact duals, strong
//!   convexity, relative-interior tests, shifted-cone containment and
//!   separating weight vectors.
//! - [`orders`]: continuous (pre)orders on exponent space given by vector
//!   sequences, with cone compatibility tests and order refinement.
//! - [`support`]: symbolic (possibly infinite) support sets with slab
//!   counting, weight classification and field-family membership.
//! - [`series`]: sparse Laurent series values truncated to a weighted
//!   valuation horizon, with `nu`/initial-part/ray extraction.
//! - [`roots`]: Newton-polygon initial terms and graded Hensel lifting of
//!   simple roots of polynomials over series.
//! - [`dfinite`]: algebraic-to-ODE and ODE-to-recurrence conversion plus
//!   the gap constant derived from integer roots of the recurrence.
//! - [`transcendence`]: gap, Liouville and Diophantine certificates.
//!
//! All arithmetic is exact; the crate is `no_std` (it only needs `alloc`).

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod dfinite;
pub mod error;
pub mod geometry;
pub mod kernel;
pub mod orders;
pub mod roots;
pub mod series;
pub mod support;
pub mod transcendence;

pub use error::Error;
pub use kernel::{Int, Rational};

/// Crate-wide result type.
pub type Result<T> = core::result::Result<T, Error>;
