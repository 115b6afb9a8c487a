//! Exact computation of Stirling-type triangles, m-Stirling numbers, and
//! Hurwitz-type poly-Bernoulli numbers and polynomials.
//!
//! Every sequence is computed over arbitrary-precision rationals, and most
//! values are reachable through two or more independent formulas so that
//! they can be cross-checked (see [`verify`]).
//!
//! The algebraic containers in [`algebra`] are generic over the scalar type;
//! the aliases below fix the exact scalars used everywhere else.

pub mod algebra;
pub mod chromatic;
pub mod error;
pub mod hpbpoly;
pub mod mstirling;
pub mod polybern;
pub mod stirling;
pub mod verify;

pub use error::{Error, Result};

/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;
/// Arbitrary-precision exact rational, always in lowest terms.
pub type Rational = num_rational::BigRational;
/// Dense polynomial in `x` over [`Rational`].
pub type Poly = algebra::Polynomial<Rational>;
/// Dense polynomial in `x` over [`Integer`].
pub type IntPoly = algebra::Polynomial<Integer>;
/// Truncated exponential generating function over [`Rational`].
pub type Egf = algebra::EgfSeries<Rational>;

/// Convenience constructor for `p/q` rationals.
///
/// Panics when `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}
