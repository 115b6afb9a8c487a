use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use super::{int, Scalar};

/// Dense univariate polynomial; `coeffs[i]` multiplies `x^i`.
///
/// Trailing zero coefficients are always trimmed, so two polynomials are
/// equal exactly when their coefficient lists are equal.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<T: Scalar> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// `c * x^degree`.
    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// `x + c`.
    pub fn linear_shift(c: T) -> Self {
        Self::from_coeffs(vec![c, T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^i`; zero past the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, v: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * v.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * int::<T>(i as i64))
                .collect(),
        )
    }

    /// Coefficients of `p(x + c)`, expanded binomially:
    /// the coefficient of `x^j` is `sum_i p_i C(i, j) c^(i-j)`.
    pub fn compose_shift(&self, c: &T) -> Self {
        let len = self.coeffs.len();
        let mut out = vec![T::zero(); len];
        for (i, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            // binom walks C(i, j) for j = i, i-1, ..., 0 while cpow tracks c^(i-j)
            let mut binom = T::one();
            let mut cpow = T::one();
            for j in (0..=i).rev() {
                out[j] = out[j].clone() + p.clone() * binom.clone() * cpow.clone();
                if j > 0 {
                    binom = binom * int::<T>(j as i64) / int::<T>((i - j + 1) as i64);
                    cpow = cpow * c.clone();
                }
            }
        }
        Self::from_coeffs(out)
    }

    /// `p(q(x))` by Horner's scheme.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * inner) + &Self::constant(c.clone())
        })
    }

    /// `p(scale * x + shift)`.
    pub fn compose_affine(&self, scale: &T, shift: &T) -> Self {
        self.compose(&Self::from_coeffs(vec![shift.clone(), scale.clone()]))
    }

    /// Applies `f` to every coefficient, e.g. to lift integer polynomials
    /// into rationals.
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: Self) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<T: Scalar> $tr for Polynomial<T> {
            type Output = Polynomial<T>;

            fn $method(self, rhs: Self) -> Polynomial<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Human-readable form, lowest degree first: `1/2 - x + (3/4)x^2`.
impl<T: Scalar + Signed + fmt::Display> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{magnitude}")?;
                continue;
            }
            if !magnitude.is_one() {
                let text = magnitude.to_string();
                if text.contains('/') {
                    write!(f, "({text})")?;
                } else {
                    write!(f, "{text}")?;
                }
            }
            match i {
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use crate::{rat, Poly, Rational};

    fn p(cs: &[(i64, i64)]) -> Poly {
        Poly::from_coeffs(cs.iter().map(|&(a, b)| rat(a, b)).collect())
    }

    #[test]
    fn shift_square_by_one() {
        let sq = Poly::monomial(rat(1, 1), 2);
        assert_eq!(sq.compose_shift(&rat(1, 1)), p(&[(1, 1), (2, 1), (1, 1)]));
    }

    #[test]
    fn shift_by_zero_is_identity() {
        assert_eq!(Poly::x().compose_shift(&rat(0, 1)), Poly::x());
    }

    #[test]
    fn eval_linear_at_half() {
        assert_eq!(p(&[(1, 1), (2, 1)]).eval(&rat(1, 2)), rat(2, 1));
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(
            Poly::from_coeffs(vec![Rational::from_integer(0.into()); 4]).degree(),
            None
        );
        assert_eq!(Poly::constant(rat(3, 1)).degree(), Some(0));
    }

    #[test]
    fn arithmetic() {
        let a = p(&[(1, 1), (1, 1)]);
        let b = p(&[(-1, 1), (1, 1)]);
        assert_eq!(&a * &b, p(&[(-1, 1), (0, 1), (1, 1)]));
        assert_eq!(&a + &b, p(&[(0, 1), (2, 1)]));
        assert!((&a - &a).is_zero());
        assert_eq!(-&a, p(&[(-1, 1), (-1, 1)]));
        assert_eq!(a.scale(&rat(1, 2)), p(&[(1, 2), (1, 2)]));
    }

    #[test]
    fn affine_composition_reflects() {
        // (1 - x)^2 = 1 - 2x + x^2
        let sq = Poly::monomial(rat(1, 1), 2);
        assert_eq!(
            sq.compose_affine(&rat(-1, 1), &rat(1, 1)),
            p(&[(1, 1), (-2, 1), (1, 1)])
        );
    }

    #[test]
    fn display_lowest_degree_first() {
        assert_eq!(p(&[(1, 2), (-1, 1)]).to_string(), "1/2 - x");
        assert_eq!(p(&[(2, 1), (-1, 1)]).to_string(), "2 - x");
        assert_eq!(p(&[(0, 1), (3, 4), (-2, 1)]).to_string(), "(3/4)x - 2x^2");
        assert_eq!(p(&[(0, 1), (-1, 1)]).to_string(), "-x");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}
