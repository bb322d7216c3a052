//! Exact arithmetic kernel: rationals, univariate polynomials, rational
//! functions, linear algebra over both, integer/rational root finding and a
//! Taylor-coefficient oracle for algebraic power series.

mod bipoly;
mod introots;
mod linalg;
mod poly;
mod ratfun;
mod taylor;

pub use bipoly::BiPoly;
pub use introots::{poly_integer_roots, poly_rational_roots};
pub use linalg::{nullspace_basis, rank, ratfun_kernel, rref, solve};
pub use poly::UniPoly;
pub use ratfun::RatFun;
pub use taylor::{taylor_of_algebraic, TruncSeries};

/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer literal.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Shorthand for an integer rational.
pub fn rat_int(v: i64) -> Rational {
    Rational::from_integer(Int::from(v))
}

/// Shorthand for the rational `p/q`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(Int::from(p), Int::from(q))
}
