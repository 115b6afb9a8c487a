use super::{int, Scalar};
use crate::error::{Error, Result};

/// Truncated exponential generating function
/// `sum_{n=0}^{order} a_n z^n / n! + O(z^{order+1})`.
///
/// Terms are the `a_n` of the exponential basis, not Taylor coefficients,
/// so they compare directly against sequence values.
#[derive(Debug, Clone, PartialEq)]
pub struct EgfSeries<T: Scalar> {
    terms: Vec<T>,
}

impl<T: Scalar> EgfSeries<T> {
    /// Series of order `terms.len() - 1`.
    ///
    /// Panics on an empty term list.
    pub fn new(terms: Vec<T>) -> Self {
        assert!(
            !terms.is_empty(),
            "a truncated series needs at least one term"
        );
        EgfSeries { terms }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> T) -> Self {
        EgfSeries {
            terms: (0..=order).map(f).collect(),
        }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        Self::from_fn(order, |n| if n == 0 { T::one() } else { T::zero() })
    }

    /// The series `z`.
    pub fn z(order: usize) -> Self {
        Self::from_fn(order, |n| if n == 1 { T::one() } else { T::zero() })
    }

    /// EGF of `e^{cz}`: `a_n = c^n`.
    pub fn exp_linear(c: &T, order: usize) -> Self {
        let mut acc = T::one();
        Self::from_fn(order, |n| {
            if n > 0 {
                acc = acc.clone() * c.clone();
            }
            acc.clone()
        })
    }

    /// Builds a series from ordinary Taylor coefficients `b_n`, `a_n = n! b_n`.
    pub fn from_ordinary(coeffs: &[T]) -> Self {
        let mut fact = T::one();
        Self::new(
            coeffs
                .iter()
                .enumerate()
                .map(|(n, b)| {
                    if n > 0 {
                        fact = fact.clone() * int::<T>(n as i64);
                    }
                    b.clone() * fact.clone()
                })
                .collect(),
        )
    }

    /// Ordinary Taylor coefficients `a_n / n!`.
    pub fn to_ordinary(&self) -> Vec<T> {
        let mut fact = T::one();
        self.terms
            .iter()
            .enumerate()
            .map(|(n, a)| {
                if n > 0 {
                    fact = fact.clone() * int::<T>(n as i64);
                }
                a.clone() / fact.clone()
            })
            .collect()
    }

    pub fn order(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn terms(&self) -> &[T] {
        &self.terms
    }

    pub fn term(&self, n: usize) -> &T {
        &self.terms[n]
    }

    /// Drops every term above `order`.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(
            order <= self.order(),
            "cannot raise the order by truncation"
        );
        Self::new(self.terms[..=order].to_vec())
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self::from_fn(self.order(), |n| {
            self.terms[n].clone() + other.terms[n].clone()
        }))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self::from_fn(self.order(), |n| {
            self.terms[n].clone() - other.terms[n].clone()
        }))
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.terms.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Product of two series of equal order (binomial convolution):
    /// `(fg)_n = sum_i C(n, i) f_i g_{n-i}`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let order = self.order();
        let mut out = Vec::with_capacity(order + 1);
        let mut row = vec![T::one()];
        for n in 0..=order {
            if n > 0 {
                // next Pascal row
                let mut next = Vec::with_capacity(n + 1);
                next.push(T::one());
                for i in 1..n {
                    next.push(row[i - 1].clone() + row[i].clone());
                }
                next.push(T::one());
                row = next;
            }
            let mut acc = T::zero();
            for (i, binom) in row.iter().enumerate() {
                if self.terms[i].is_zero() || other.terms[n - i].is_zero() {
                    continue;
                }
                acc = acc + binom.clone() * self.terms[i].clone() * other.terms[n - i].clone();
            }
            out.push(acc);
        }
        Ok(Self::new(out))
    }

    /// `f^e` at the same order.
    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self).expect("orders agree");
        }
        acc
    }

    /// `d/dz`, which shifts the terms down and costs one order.
    pub fn derive(&self) -> Result<Self> {
        if self.order() == 0 {
            return Err(Error::OrderUnderflow {
                order: 0,
                needed: 1,
            });
        }
        Ok(Self::new(self.terms[1..].to_vec()))
    }

    /// `sum_i outer[i] * inner(z)^i`, truncated at the inner order.
    ///
    /// `outer` holds ordinary power-series coefficients; the inner series
    /// must have zero constant term. Requires a field scalar.
    pub fn compose(outer: &[T], inner: &Self) -> Result<Self> {
        if !inner.terms[0].is_zero() {
            return Err(Error::CompositionDomain);
        }
        let order = inner.order();
        if outer.len() < order + 1 {
            return Err(Error::OuterTooShort {
                got: outer.len(),
                needed: order + 1,
                order,
            });
        }
        let b = inner.to_ordinary();
        // Horner in the ordinary basis, truncated at `order`
        let mut acc = vec![T::zero(); order + 1];
        for c in outer[..=order].iter().rev() {
            let mut next = vec![T::zero(); order + 1];
            for (i, ai) in acc.iter().enumerate() {
                if ai.is_zero() {
                    continue;
                }
                for (j, bj) in b.iter().enumerate().skip(1) {
                    if i + j > order {
                        break;
                    }
                    next[i + j] = next[i + j].clone() + ai.clone() * bj.clone();
                }
            }
            next[0] = next[0].clone() + c.clone();
            acc = next;
        }
        Ok(Self::from_ordinary(&acc))
    }

    /// `(e^{cz} d/dz)^m f`, consuming `m` orders.
    fn apply_exp_derivative(&self, c: &T, m: usize) -> Result<Self> {
        if self.order() < m {
            return Err(Error::OrderUnderflow {
                order: self.order(),
                needed: m,
            });
        }
        let mut f = self.clone();
        for _ in 0..m {
            let d = f.derive()?;
            f = d.mul(&Self::exp_linear(c, d.order()))?;
        }
        Ok(f)
    }

    /// `(e^z d/dz)^m f`; the result has order `f.order() - m`.
    pub fn apply_ezd(&self, m: usize) -> Result<Self> {
        self.apply_exp_derivative(&T::one(), m)
    }

    /// `(e^{-z} d/dz)^m f`; the result has order `f.order() - m`.
    pub fn apply_emzd(&self, m: usize) -> Result<Self> {
        self.apply_exp_derivative(&-T::one(), m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, Egf, Rational};

    fn s(v: &[i64]) -> Egf {
        Egf::new(v.iter().map(|&a| rat(a, 1)).collect())
    }

    fn one_minus_exp_neg(order: usize) -> Egf {
        Egf::from_fn(order, |n| {
            if n == 0 {
                rat(0, 1)
            } else if n % 2 == 1 {
                rat(1, 1)
            } else {
                rat(-1, 1)
            }
        })
    }

    #[test]
    fn exp_times_exp_neg_is_one() {
        let f = Egf::exp_linear(&rat(1, 1), 4);
        let g = Egf::exp_linear(&rat(-1, 1), 4);
        assert_eq!(f.mul(&g).unwrap(), s(&[1, 0, 0, 0, 0]));
    }

    #[test]
    fn exp_squared() {
        let f = Egf::exp_linear(&rat(1, 1), 3);
        assert_eq!(f.mul(&f).unwrap(), s(&[1, 2, 4, 8]));
    }

    #[test]
    fn z_squared_in_egf_basis() {
        let z = Egf::z(3);
        assert_eq!(z.mul(&z).unwrap(), s(&[0, 0, 2, 0]));
    }

    #[test]
    fn mismatched_orders() {
        let err = Egf::z(3).mul(&Egf::z(2)).unwrap_err();
        assert_eq!(err, Error::OrderMismatch { left: 3, right: 2 });
    }

    #[test]
    fn exp_linear_terms() {
        assert_eq!(Egf::exp_linear(&rat(0, 1), 3), s(&[1, 0, 0, 0]));
        assert_eq!(Egf::exp_linear(&rat(1, 1), 2), s(&[1, 1, 1]));
        assert_eq!(Egf::exp_linear(&rat(-2, 1), 3), s(&[1, -2, 4, -8]));
    }

    #[test]
    fn derive_shifts() {
        assert_eq!(s(&[1, 1, 1, 1]).derive().unwrap(), s(&[1, 1, 1]));
        assert_eq!(s(&[0, 1, 0, 0]).derive().unwrap(), s(&[1, 0, 0]));
        assert_eq!(s(&[1, -2, 4, -8]).derive().unwrap(), s(&[-2, 4, -8]));
        assert_eq!(
            s(&[5]).derive().unwrap_err(),
            Error::OrderUnderflow {
                order: 0,
                needed: 1
            }
        );
    }

    #[test]
    fn compose_identity_outer() {
        let inner = Egf::from_fn(5, |n| if n == 0 { rat(0, 1) } else { rat(1, 1) });
        let out = Egf::compose(
            &[
                rat(0, 1),
                rat(1, 1),
                rat(0, 1),
                rat(0, 1),
                rat(0, 1),
                rat(0, 1),
            ],
            &inner,
        )
        .unwrap();
        assert_eq!(out, inner);
    }

    #[test]
    fn compose_geometric_with_one_minus_exp_neg() {
        // 1 / (1 - (1 - e^{-z})) = e^z
        let geometric = vec![rat(1, 1); 7];
        let out = Egf::compose(&geometric, &one_minus_exp_neg(6)).unwrap();
        assert_eq!(out, Egf::exp_linear(&rat(1, 1), 6));
    }

    #[test]
    fn compose_square() {
        let out = Egf::compose(&[rat(0, 1), rat(0, 1), rat(1, 1), rat(0, 1)], &Egf::z(3)).unwrap();
        assert_eq!(out, s(&[0, 0, 2, 0]));
    }

    #[test]
    fn compose_errors() {
        assert_eq!(
            Egf::compose(&vec![rat(1, 1); 4], &Egf::one(3)).unwrap_err(),
            Error::CompositionDomain
        );
        assert!(matches!(
            Egf::compose(&vec![rat(1, 1); 2], &Egf::z(3)).unwrap_err(),
            Error::OuterTooShort { .. }
        ));
    }

    #[test]
    fn ezd_examples() {
        let f = one_minus_exp_neg(4);
        assert_eq!(f.apply_ezd(0).unwrap(), f);
        assert_eq!(f.apply_ezd(1).unwrap(), s(&[1, 0, 0, 0]));
        assert_eq!(Egf::z(3).apply_ezd(1).unwrap(), s(&[1, 1, 1]));
        assert!(matches!(
            Egf::z(1).apply_ezd(2),
            Err(Error::OrderUnderflow {
                order: 1,
                needed: 2
            })
        ));
    }

    #[test]
    fn emzd_examples() {
        let e = Egf::exp_linear(&rat(1, 1), 3);
        assert_eq!(e.apply_emzd(0).unwrap(), e);
        assert_eq!(e.apply_emzd(1).unwrap(), s(&[1, 0, 0]));
        assert_eq!(s(&[1, 2, 4, 8]).apply_emzd(1).unwrap(), s(&[2, 2, 2]));
    }

    #[test]
    fn log_composed_with_expm1_is_z() {
        // log(1 + w) = sum_{i>=1} (-1)^{i+1} w^i / i
        let order = 8;
        let log: Vec<Rational> = (0..=order as i64)
            .map(|i| {
                if i == 0 {
                    rat(0, 1)
                } else {
                    rat(if i % 2 == 1 { 1 } else { -1 }, i)
                }
            })
            .collect();
        let expm1 = Egf::from_fn(order, |n| if n == 0 { rat(0, 1) } else { rat(1, 1) });
        assert_eq!(Egf::compose(&log, &expm1).unwrap(), Egf::z(order));
    }
}
