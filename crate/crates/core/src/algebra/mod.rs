//! Scalar abstraction, dense polynomials and truncated exponential
//! generating functions.

mod egf;
mod poly;

pub use egf::EgfSeries;
pub use poly::Polynomial;

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// Coefficient ring for [`Polynomial`] and [`EgfSeries`].
///
/// Operations that divide (series composition, weighted Stirling sums) are
/// only exact when the scalar is a field such as `BigRational`; over integer
/// scalars they are only used where the quotient is known to be exact.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> + FromPrimitive {}

impl<T> Scalar for T where T: Clone + Debug + PartialEq + Num + Neg<Output = T> + FromPrimitive {}

/// Lifts a machine integer into the scalar type.
pub fn int<T: Scalar>(v: i64) -> T {
    T::from_i64(v).expect("scalar type cannot represent a small integer")
}

/// `base^exp` for a non-negative exponent.
pub fn pow<T: Scalar>(base: &T, exp: usize) -> T {
    num_traits::pow::pow(base.clone(), exp)
}

/// `(-1)^e`.
pub fn sign<T: Scalar>(e: usize) -> T {
    if e.is_multiple_of(2) {
        T::one()
    } else {
        -T::one()
    }
}

/// `n!` in the scalar type.
pub fn factorial<T: Scalar>(n: usize) -> T {
    (1..=n).fold(T::one(), |acc, t| acc * int::<T>(t as i64))
}
