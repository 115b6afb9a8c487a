//! Hurwitz-type poly-Bernoulli numbers `HB_n^(k)(a)` and the two-index
//! family `B_{n,m}^(k)(a)` whose `m = 0` column recovers them.
//!
//! `a` ranges over rationals that are not zero or negative integers, so
//! every `(i + m + a)^k` with `i, m >= 0` is a nonzero rational.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::mstirling::m_stirling_via_first_kind;
use crate::stirling::{factorial, r_stirling, stirling_first, stirling_second, weighted_stirling};
use crate::{Egf, Rational};

/// Rejects `a` in `{0, -1, -2, ...}`.
pub fn validate_a(a: &Rational) -> Result<()> {
    if a.is_integer() && !a.is_positive() {
        return Err(Error::InvalidHurwitzParameter(a.to_string()));
    }
    Ok(())
}

/// Validated `(n, m, k, a)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamSet {
    pub n: usize,
    pub m: usize,
    pub k: i64,
    pub a: Rational,
}

impl ParamSet {
    pub fn new(n: usize, m: usize, k: i64, a: Rational) -> Result<Self> {
        validate_a(&a)?;
        Ok(ParamSet { n, m, k, a })
    }
}

/// `base^k` for any integer `k`; negative `k` takes the exact reciprocal.
pub fn int_pow(base: &Rational, k: i64) -> Rational {
    let p = num_traits::pow(base.clone(), k.unsigned_abs() as usize);
    if k < 0 {
        p.recip()
    } else {
        p
    }
}

fn rational(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn usize_rational(v: usize) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `(m + a)^k / (m! a^k)`, the prefactor shared by the m-family formulas.
fn m_prefactor(m: usize, k: i64, a: &Rational) -> Rational {
    int_pow(&(usize_rational(m) + a), k) / (Rational::from_integer(factorial(m)) * int_pow(a, k))
}

/// `HB_n^(k)(a) = sum_i (-1)^(n+i) i! S(n, i) / (i + a)^k`.
pub fn hurwitz_pb(n: usize, k: i64, a: &Rational) -> Result<Rational> {
    validate_a(a)?;
    let mut acc = Rational::zero();
    for i in 0..=n {
        let s = stirling_second(n, i);
        if s.is_zero() {
            continue;
        }
        let term = Rational::from_integer(factorial(i) * s) / int_pow(&(usize_rational(i) + a), k);
        if (n + i).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// Bernoulli number with the `B_1 = +1/2` convention, `HB_n^(1)(1)`.
pub fn bernoulli(n: usize) -> Rational {
    hurwitz_pb(n, 1, &Rational::one()).expect("a = 1 is valid")
}

/// `B_{n,m}^(k)(a)` from the r-Stirling sum
/// `((m+a)^k / (m! a^k)) sum_i {n+m, i+m}_m (-1)^(n-i) (i+m)! / (i+m+a)^k`.
pub fn m_hpb_form1(n: usize, m: usize, k: i64, a: &Rational) -> Result<Rational> {
    validate_a(a)?;
    let mut acc = Rational::zero();
    for i in 0..=n {
        let r = r_stirling(n, i, m);
        if r.is_zero() {
            continue;
        }
        let term =
            Rational::from_integer(r * factorial(i + m)) / int_pow(&(usize_rational(i + m) + a), k);
        if (n - i).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(m_prefactor(m, k, a) * acc)
}

/// `B_{n,m}^(k)(a)` from the first-kind transform
/// `((m+a)^k / (m! a^k)) sum_i (-1)^(m-i) s(m, i) HB_{n+i}^(k)(a)`.
pub fn m_hpb_form2(n: usize, m: usize, k: i64, a: &Rational) -> Result<Rational> {
    validate_a(a)?;
    let mut acc = Rational::zero();
    for i in 0..=m {
        let s = stirling_first(m, i);
        if s.is_zero() {
            continue;
        }
        let term = Rational::from_integer(s) * hurwitz_pb(n + i, k, a)?;
        if (m - i).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(m_prefactor(m, k, a) * acc)
}

/// Triangular array `B_{n,m}^(k)(a)` for `n + m <= n_max`, produced by the
/// three-term recurrence from the constant row `B_{0,m}^(k)(a) = 1/a^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct HpbMatrix {
    k: i64,
    a: Rational,
    /// `rows[n][m]`, with `rows[n].len() == n_max - n + 1`.
    rows: Vec<Vec<Rational>>,
}

impl HpbMatrix {
    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `None` above the anti-diagonal `n + m = n_max`.
    pub fn get(&self, n: usize, m: usize) -> Option<&Rational> {
        self.rows.get(n).and_then(|row| row.get(m))
    }

    /// The `m = 0` column, i.e. `HB_0^(k)(a), ..., HB_{n_max}^(k)(a)`.
    pub fn column0(&self) -> Vec<Rational> {
        self.rows.iter().map(|row| row[0].clone()).collect()
    }
}

/// Multiplier `(m+1)(m+a)^k / (m+a+1)^k` of the three-term recurrence.
pub fn recurrence_factor(m: usize, k: i64, a: &Rational) -> Rational {
    let ma = usize_rational(m) + a;
    usize_rational(m + 1) * int_pow(&ma, k) / int_pow(&(ma.clone() + Rational::one()), k)
}

/// Fills the matrix row by row with
/// `B_{n+1,m} = (m+1)(m+a)^k/(m+a+1)^k B_{n,m+1} - m B_{n,m}`.
pub fn m_hpb_matrix(n_max: usize, k: i64, a: &Rational) -> Result<HpbMatrix> {
    validate_a(a)?;
    let factors: Vec<Rational> = (0..n_max).map(|m| recurrence_factor(m, k, a)).collect();
    let mut rows = Vec::with_capacity(n_max + 1);
    rows.push(vec![int_pow(a, -k); n_max + 1]);
    for n in 0..n_max {
        let prev: &Vec<Rational> = &rows[n];
        let row = (0..n_max - n)
            .map(|m| &factors[m] * &prev[m + 1] - usize_rational(m) * &prev[m])
            .collect();
        rows.push(row);
    }
    Ok(HpbMatrix {
        k,
        a: a.clone(),
        rows,
    })
}

/// `B_{n,m}^(-k)(a)` for `k >= 0` through m-Stirling numbers:
/// `(a^k / (m! (m+a)^k)) sum_l (l!)^2 S_k^l(a) R_{n+1}^{l+1}(m)`.
///
/// The sum runs over `0 <= l <= min(n+m, k)`, every index at which both
/// factors can be nonzero.
pub fn m_hpb_negative(n: usize, m: usize, kpos: usize, a: &Rational) -> Result<Rational> {
    validate_a(a)?;
    let k = kpos as i64;
    let mut acc = Rational::zero();
    for l in 0..=(n + m).min(kpos) {
        let r = m_stirling_via_first_kind(n + 1, l + 1, m);
        if r.is_zero() {
            continue;
        }
        let lf = factorial(l);
        acc += Rational::from_integer(&lf * &lf * r) * weighted_stirling(kpos, l, a);
    }
    Ok(m_prefactor(m, -k, a) * acc)
}

/// Selects which formula computes `B_{n,m}^(k)(a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HpbRoute {
    /// r-Stirling sum.
    Explicit,
    /// First-kind transform of `HB`.
    Form2,
    /// Three-term recurrence matrix.
    Matrix,
}

pub fn m_hpb(n: usize, m: usize, k: i64, a: &Rational, route: HpbRoute) -> Result<Rational> {
    match route {
        HpbRoute::Explicit => m_hpb_form1(n, m, k, a),
        HpbRoute::Form2 => m_hpb_form2(n, m, k, a),
        HpbRoute::Matrix => {
            let matrix = m_hpb_matrix(n + m, k, a)?;
            Ok(matrix.get(n, m).expect("inside the triangle").clone())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DualityViolation {
    pub n: usize,
    pub k: usize,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DualityReport {
    pub pairs_checked: usize,
    pub violations: Vec<DualityViolation>,
}

/// Checks `HB_n^(-k)(1) = HB_k^(-n)(1)` on `0..=nmax x 0..=kmax`.
pub fn duality_check(nmax: usize, kmax: usize) -> DualityReport {
    let one = Rational::one();
    let mut violations = Vec::new();
    let mut pairs_checked = 0;
    for n in 0..=nmax {
        for k in 0..=kmax {
            pairs_checked += 1;
            let left = hurwitz_pb(n, -(k as i64), &one).expect("a = 1 is valid");
            let right = hurwitz_pb(k, -(n as i64), &one).expect("a = 1 is valid");
            if left != right {
                violations.push(DualityViolation {
                    n,
                    k,
                    left: left.to_string(),
                    right: right.to_string(),
                });
            }
        }
    }
    DualityReport {
        pairs_checked,
        violations,
    }
}

/// Grid points `(n, m)` with `n + m < n_max` where
/// `B_{n+1,m}^(-k) = (m+1)(m+a+1)^k/(m+a)^k B_{n,m+1}^(-k) - m B_{n,m}^(-k)`
/// fails, using the m-Stirling formula for every value.
pub fn negative_recurrence_violations(
    n_max: usize,
    kpos: usize,
    a: &Rational,
) -> Result<Vec<(usize, usize)>> {
    validate_a(a)?;
    let k = kpos as i64;
    let mut bad = Vec::new();
    for n in 0..n_max {
        for m in 0..n_max - n {
            let ma = usize_rational(m) + a;
            let factor = usize_rational(m + 1) * int_pow(&(ma.clone() + Rational::one()), k)
                / int_pow(&ma, k);
            let lhs = m_hpb_negative(n + 1, m, kpos, a)?;
            let rhs = factor * m_hpb_negative(n, m + 1, kpos, a)?
                - usize_rational(m) * m_hpb_negative(n, m, kpos, a)?;
            if lhs != rhs {
                bad.push((n, m));
            }
        }
    }
    Ok(bad)
}

/// Ordinary coefficients `1/(i + a)^k`, `i < len`, of the Hurwitz-Lerch
/// series `w -> sum_i w^i / (i + a)^k`.
pub fn hurwitz_lerch_coeffs(k: i64, a: &Rational, len: usize) -> Result<Vec<Rational>> {
    validate_a(a)?;
    Ok((0..len)
        .map(|i| int_pow(&(usize_rational(i) + a), -k))
        .collect())
}

/// EGF of `1 - e^{-z}`.
pub fn one_minus_exp_neg(order: usize) -> Egf {
    Egf::one(order)
        .sub(&Egf::exp_linear(&rational(-1), order))
        .expect("same order")
}

/// Truncation of `Phi(1 - e^{-z}, k, a)`; its terms are `HB_n^(k)(a)`.
pub fn hurwitz_pb_egf(k: i64, a: &Rational, order: usize) -> Result<Egf> {
    let coeffs = hurwitz_lerch_coeffs(k, a, order + 1)?;
    Egf::compose(&coeffs, &one_minus_exp_neg(order))
}

/// Truncation of the Rodrigues-type generating function
/// `(1/m!) e^{-mz} (1 + m/a)^k (e^z d/dz)^m [(1 - e^{-z})^m Phi(1 - e^{-z}, k, m + a)]`,
/// whose terms are `B_{n,m}^(k)(a)`. The bracket is built at order `order + m`.
pub fn m_hpb_egf(m: usize, k: i64, a: &Rational, order: usize) -> Result<Egf> {
    validate_a(a)?;
    let work = order + m;
    let shifted = usize_rational(m) + a;
    let phi = hurwitz_pb_egf(k, &shifted, work)?;
    let bracket = one_minus_exp_neg(work).pow(m).mul(&phi)?;
    let reduced = bracket.apply_ezd(m)?;
    let scale = int_pow(&(Rational::one() + usize_rational(m) / a), k)
        / Rational::from_integer(factorial(m));
    Ok(reduced
        .mul(&Egf::exp_linear(&rational(-(m as i64)), order))?
        .scale(&scale))
}
