//! Classical Stirling apparatus: signed first kind `s(n, i)`, second kind
//! `S(n, i)`, weighted Stirling numbers, r-Stirling and Lah numbers, plus
//! binomial and Pochhammer helpers.
//!
//! Indices outside a triangle yield zero rather than an error, so sums can
//! run over generous bounds.

use std::cell::RefCell;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{int, Scalar};
use crate::{Integer, Poly, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleKind {
    /// `s(n+1, i) = s(n, i-1) - n s(n, i)`
    FirstKind,
    /// `S(n+1, i) = S(n, i-1) + i S(n, i)`
    SecondKind,
}

/// Row-memoized Stirling triangle. Row `n` holds entries `i = 0..=n`.
#[derive(Debug, Clone)]
pub struct TriangleCache {
    kind: TriangleKind,
    rows: Vec<Vec<Integer>>,
}

impl TriangleCache {
    pub fn new(kind: TriangleKind) -> Self {
        TriangleCache {
            kind,
            rows: vec![vec![BigInt::one()]],
        }
    }

    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    fn extend_to(&mut self, n: usize) {
        while self.rows.len() <= n {
            let prev_n = self.rows.len() - 1;
            let prev = &self.rows[prev_n];
            let mut row = Vec::with_capacity(prev_n + 2);
            row.push(BigInt::zero());
            for i in 1..=prev_n + 1 {
                let diag = prev[i - 1].clone();
                let same = prev.get(i).cloned().unwrap_or_default();
                let v = match self.kind {
                    TriangleKind::FirstKind => diag - same * BigInt::from(prev_n),
                    TriangleKind::SecondKind => diag + same * BigInt::from(i),
                };
                row.push(v);
            }
            self.rows.push(row);
        }
    }

    pub fn row(&mut self, n: usize) -> &[Integer] {
        self.extend_to(n);
        &self.rows[n]
    }

    pub fn get(&mut self, n: usize, i: usize) -> Integer {
        if i > n {
            return BigInt::zero();
        }
        self.extend_to(n);
        self.rows[n][i].clone()
    }
}

thread_local! {
    static FIRST: RefCell<TriangleCache> = RefCell::new(TriangleCache::new(TriangleKind::FirstKind));
    static SECOND: RefCell<TriangleCache> = RefCell::new(TriangleCache::new(TriangleKind::SecondKind));
}

/// Signed Stirling number of the first kind `s(n, i)`: the coefficient of
/// `x^i` in `x(x-1)...(x-n+1)`.
pub fn stirling_first(n: usize, i: usize) -> Integer {
    FIRST.with(|c| c.borrow_mut().get(n, i))
}

/// Stirling number of the second kind `S(n, i)`.
pub fn stirling_second(n: usize, i: usize) -> Integer {
    SECOND.with(|c| c.borrow_mut().get(n, i))
}

/// `S(n, i)` from the alternating sum `(1/i!) sum_j (-1)^(i-j) C(i, j) j^n`.
pub fn stirling_second_explicit(n: usize, i: usize) -> Integer {
    let mut acc = BigInt::zero();
    for j in 0..=i {
        let term = binomial(i, j) * num_traits::pow(BigInt::from(j), n);
        if (i - j).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc / factorial(i)
}

pub fn factorial(n: usize) -> Integer {
    (1..=n).fold(BigInt::one(), |acc, t| acc * t)
}

/// `C(n, k)`, zero unless `0 <= k <= n`.
pub fn binomial(n: usize, k: usize) -> Integer {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

/// Generalized binomial `top (top-1) ... (top-k+1) / k!` for any integer top.
///
/// `C(-1, 0) = 1` as an empty product.
pub fn binomial_general(top: i64, k: usize) -> Integer {
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * (top - t as i64) / (t + 1);
    }
    acc
}

/// Rising factorial `(v)_n = v (v+1) ... (v+n-1)`, with `(v)_0 = 1`.
pub fn pochhammer<T: Scalar>(v: &T, n: usize) -> T {
    (0..n).fold(T::one(), |acc, t| acc * (v.clone() + int::<T>(t as i64)))
}

/// Weighted Stirling number `(1/i!) Delta^i x^n`, evaluated by the
/// alternating sum `(1/i!) sum_j (-1)^(i-j) C(i, j) (x+j)^n`.
pub fn weighted_stirling<T: Scalar>(n: usize, i: usize, x: &T) -> T {
    let mut acc = T::zero();
    let mut binom = T::one();
    for j in 0..=i {
        if j > 0 {
            binom = binom * int::<T>((i - j + 1) as i64) / int::<T>(j as i64);
        }
        let term = binom.clone() * crate::algebra::pow(&(x.clone() + int::<T>(j as i64)), n);
        acc = if (i - j).is_multiple_of(2) {
            acc + term
        } else {
            acc - term
        };
    }
    (1..=i).fold(acc, |acc, t| acc / int::<T>(t as i64))
}

/// Weighted Stirling numbers as polynomials in `x`, built from the
/// triangular recurrence `S_{n+1}^i(x) = S_n^{i-1}(x) + (x+i) S_n^i(x)`.
///
/// Returns the full row `i = 0..=n`.
pub fn weighted_stirling_poly_row(n: usize) -> Vec<Poly> {
    let mut row = vec![Poly::one()];
    for _ in 0..n {
        let len = row.len();
        let mut next = Vec::with_capacity(len + 1);
        for i in 0..=len {
            let mut v = Poly::zero();
            if i > 0 {
                v = &v + &row[i - 1];
            }
            if i < len {
                let factor = Poly::linear_shift(Rational::from_integer(i.into()));
                v = &v + &(&factor * &row[i]);
            }
            next.push(v);
        }
        row = next;
    }
    row
}

/// Weighted Stirling number `S_n^i(x)` as a polynomial of degree `n - i`.
pub fn weighted_stirling_poly(n: usize, i: usize) -> Poly {
    if i > n {
        return Poly::zero();
    }
    weighted_stirling_poly_row(n).swap_remove(i)
}

/// r-Stirling number `{n+r, i+r}_r`, which equals the weighted Stirling
/// number at `x = r`. Computed over the integers by the weighted recurrence.
pub fn r_stirling(n: usize, i: usize, r: usize) -> Integer {
    if i > n {
        return BigInt::zero();
    }
    let r = BigInt::from(r);
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let len = row.len();
        let mut next = Vec::with_capacity(len + 1);
        for k in 0..=len {
            let mut v = BigInt::zero();
            if k > 0 {
                v += &row[k - 1];
            }
            if k < len {
                v += (&r + k) * &row[k];
            }
            next.push(v);
        }
        row = next;
    }
    row.swap_remove(i)
}

/// Lah number `(m!/k!) C(m-1, k-1)`.
///
/// `lah(0, 0) = 1`; zero when `k > m` or when exactly one of `m`, `k` is zero.
pub fn lah(m: usize, k: usize) -> Integer {
    match (m, k) {
        (0, 0) => BigInt::one(),
        (0, _) | (_, 0) => BigInt::zero(),
        _ if k > m => BigInt::zero(),
        _ => factorial(m) / factorial(k) * binomial(m - 1, k - 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn big(v: i64) -> Integer {
        BigInt::from(v)
    }

    #[test]
    fn first_kind_examples() {
        assert_eq!(stirling_first(3, 2), big(-3));
        assert_eq!(stirling_first(4, 2), big(11));
        for n in 0..=10 {
            assert_eq!(stirling_first(n, n), big(1));
        }
        assert_eq!(stirling_first(3, 0), big(0));
        assert_eq!(stirling_first(0, 0), big(1));
        assert_eq!(stirling_first(2, 5), big(0));
    }

    #[test]
    fn second_kind_examples() {
        assert_eq!(stirling_second(4, 2), big(7));
        assert_eq!(stirling_second(0, 0), big(1));
        assert_eq!(stirling_second(5, 3), big(25));
        assert_eq!(stirling_second(3, 4), big(0));
        assert_eq!(stirling_second_explicit(5, 3), big(25));
    }

    #[test]
    fn cache_row_lengths() {
        let mut cache = TriangleCache::new(TriangleKind::SecondKind);
        for n in 0..8 {
            assert_eq!(cache.row(n).len(), n + 1);
        }
        assert_eq!(cache.kind(), TriangleKind::SecondKind);
    }

    #[test]
    fn weighted_examples() {
        for n in 0..=6 {
            for i in 0..=6 {
                assert_eq!(
                    weighted_stirling(n, i, &rat(0, 1)),
                    Rational::from_integer(stirling_second(n, i))
                );
            }
        }
        assert_eq!(weighted_stirling(1, 0, &rat(5, 2)), rat(5, 2));
        assert_eq!(weighted_stirling(2, 1, &rat(1, 2)), rat(2, 1));
    }

    #[test]
    fn weighted_poly_examples() {
        assert_eq!(
            weighted_stirling_poly(2, 1),
            Poly::from_coeffs(vec![rat(1, 1), rat(2, 1)])
        );
        for n in 0..=6 {
            assert_eq!(weighted_stirling_poly(n, n), Poly::one());
        }
        assert_eq!(weighted_stirling_poly(1, 0), Poly::x());
        assert!(weighted_stirling_poly(1, 3).is_zero());
    }

    #[test]
    fn r_stirling_examples() {
        for n in 0..=6 {
            for i in 0..=6 {
                assert_eq!(r_stirling(n, i, 0), stirling_second(n, i));
            }
        }
        assert_eq!(r_stirling(1, 1, 1), big(1));
        assert_eq!(r_stirling(2, 1, 1), big(3));
    }

    #[test]
    fn lah_examples() {
        assert_eq!(lah(3, 1), big(6));
        assert_eq!(lah(3, 2), big(6));
        assert_eq!(lah(2, 1), big(2));
        for m in 0..=6 {
            assert_eq!(lah(m, m), big(1));
        }
        assert_eq!(lah(0, 0), big(1));
        assert_eq!(lah(3, 0), big(0));
        assert_eq!(lah(0, 2), big(0));
        assert_eq!(lah(2, 3), big(0));
    }

    #[test]
    fn pochhammer_and_binomial() {
        assert_eq!(pochhammer(&rat(7, 3), 0), rat(1, 1));
        assert_eq!(pochhammer(&rat(2, 1), 3), rat(24, 1));
        for n in 0..=8 {
            assert_eq!(
                pochhammer(&rat(1, 1), n),
                Rational::from_integer(factorial(n))
            );
        }
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(2, 5), big(0));
        assert_eq!(binomial_general(-1, 0), big(1));
        assert_eq!(binomial_general(-1, 3), big(-1));
        assert_eq!(binomial_general(1, 2), big(0));
        assert_eq!(binomial_general(6, 2), big(15));
    }
}
