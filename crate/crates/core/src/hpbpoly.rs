//! Polynomials `B_{n,m}^(k)(x; a) = sum_i (-1)^(n-i) C(n, i) B_{i,m}^(k)(a) x^(n-i)`,
//! whose exponential generating function is `e^{-xz}` times that of the
//! numbers `B_{n,m}^(k)(a)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::mstirling::{m_stirling_via_first_kind, weighted_m_stirling_poly};
use crate::polybern::{int_pow, m_hpb_egf, m_hpb_form1, recurrence_factor, validate_a};
use crate::stirling::{
    binomial, factorial, stirling_second, weighted_stirling, weighted_stirling_poly_row,
};
use crate::{Egf, Poly, Rational};

/// `B_{n,m}^(k)(x; a)` together with its parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct HpbPolynomial {
    pub n: usize,
    pub m: usize,
    pub k: i64,
    pub a: Rational,
    pub poly: Poly,
}

fn usize_rational(v: usize) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn signed(v: Rational, odd: bool) -> Rational {
    if odd {
        -v
    } else {
        v
    }
}

/// `x -> -x`.
fn reflect(p: &Poly) -> Poly {
    p.compose_affine(&-Rational::one(), &Rational::zero())
}

/// Signed binomial convolution of the numbers `B_{i,m}^(k)(a)`, `i <= n`.
pub fn hpb_poly_convolution(n: usize, m: usize, k: i64, a: &Rational) -> Result<HpbPolynomial> {
    let mut coeffs = vec![Rational::zero(); n + 1];
    for i in 0..=n {
        let b = m_hpb_form1(i, m, k, a)?;
        coeffs[n - i] = signed(Rational::from_integer(binomial(n, i)) * b, (n - i) % 2 == 1);
    }
    Ok(HpbPolynomial {
        n,
        m,
        k,
        a: a.clone(),
        poly: Poly::from_coeffs(coeffs),
    })
}

/// Weighted-Stirling form
/// `((m+a)^k / (m! a^k)) sum_i (-1)^(n-i) (i+m)! / (i+m+a)^k S_n^i(x + m)`.
pub fn hpb_poly_explicit(n: usize, m: usize, k: i64, a: &Rational) -> Result<HpbPolynomial> {
    validate_a(a)?;
    let shift = usize_rational(m);
    let row = weighted_stirling_poly_row(n);
    let mut poly = Poly::zero();
    for (i, s) in row.iter().enumerate() {
        let c = Rational::from_integer(factorial(i + m)) / int_pow(&(usize_rational(i + m) + a), k);
        let c = signed(c, (n - i) % 2 == 1);
        poly = &poly + &s.compose_shift(&shift).scale(&c);
    }
    let pre = int_pow(&(usize_rational(m) + a), k)
        / (Rational::from_integer(factorial(m)) * int_pow(a, k));
    Ok(HpbPolynomial {
        n,
        m,
        k,
        a: a.clone(),
        poly: poly.scale(&pre),
    })
}

/// Right-hand side of the polynomial three-term recurrence,
/// `(m+1)(m+a)^k/(m+a+1)^k B_{n,m+1}(x) - (x + m) B_{n,m}(x)`, which equals
/// `B_{n+1,m}(x)`.
pub fn recurrence_rhs(n: usize, m: usize, k: i64, a: &Rational) -> Result<Poly> {
    let next = hpb_poly_convolution(n, m + 1, k, a)?.poly;
    let same = hpb_poly_convolution(n, m, k, a)?.poly;
    let factor = recurrence_factor(m, k, a);
    let x_plus_m = Poly::linear_shift(usize_rational(m));
    Ok(&next.scale(&factor) - &(&x_plus_m * &same))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RecurrenceReport {
    pub checked: usize,
    /// `(n, m)` where the recurrence producing `B_{n+1,m}` failed.
    pub violations: Vec<(usize, usize)>,
}

/// Verifies the polynomial recurrence for every `(n, m)` with `n + 1 + m <= n_max`.
pub fn hpb_poly_recurrence_check(n_max: usize, k: i64, a: &Rational) -> Result<RecurrenceReport> {
    validate_a(a)?;
    let mut checked = 0;
    let mut violations = Vec::new();
    for n in 0..n_max {
        for m in 0..n_max - n {
            checked += 1;
            let lhs = hpb_poly_convolution(n + 1, m, k, a)?.poly;
            if lhs != recurrence_rhs(n, m, k, a)? {
                violations.push((n, m));
            }
        }
    }
    Ok(RecurrenceReport {
        checked,
        violations,
    })
}

/// Both sides of
/// `sum_i (-1)^(n-i) C(n, i) R_{i+1}^{l+1}(m) x^(n-i) = R_{n+1}^{l+1}(-x; m) + x R_n^{l+1}(-x; m)`.
pub fn binomial_m_stirling_identity(n: usize, l: usize, m: usize) -> (Poly, Poly) {
    let mut coeffs = vec![Rational::zero(); n + 1];
    for i in 0..=n {
        let r = Rational::from_integer(binomial(n, i) * m_stirling_via_first_kind(i + 1, l + 1, m));
        coeffs[n - i] = signed(r, (n - i) % 2 == 1);
    }
    (
        Poly::from_coeffs(coeffs),
        reflected_m_stirling_pair(n, l, m),
    )
}

/// `R_{n+1}^{l+1}(-x; m) + x R_n^{l+1}(-x; m)`.
fn reflected_m_stirling_pair(n: usize, l: usize, m: usize) -> Poly {
    let upper = reflect(&weighted_m_stirling_poly(n + 1, l + 1, m));
    let lower = reflect(&weighted_m_stirling_poly(n, l + 1, m));
    &upper + &(&Poly::x() * &lower)
}

/// `S_n^l(1 - x)`, the `m = 0` specialization of the identity above.
pub fn reflected_weighted_stirling(n: usize, l: usize) -> Poly {
    let row = weighted_stirling_poly_row(n);
    match row.get(l) {
        Some(p) => p.compose_affine(&-Rational::one(), &Rational::one()),
        None => Poly::zero(),
    }
}

/// `B_{n,m}^(-k)(x; a)` for `k >= 0` through m-Stirling polynomials:
/// `(a^k / (m! (m+a)^k)) sum_l (l!)^2 S_k^l(a) (R_{n+1}^{l+1}(-x; m) + x R_n^{l+1}(-x; m))`,
/// `0 <= l <= min(n+m, k)`.
pub fn hpb_poly_negative(n: usize, m: usize, kpos: usize, a: &Rational) -> Result<HpbPolynomial> {
    validate_a(a)?;
    let k = kpos as i64;
    let mut poly = Poly::zero();
    for l in 0..=(n + m).min(kpos) {
        let lf = factorial(l);
        let c = Rational::from_integer(&lf * &lf) * weighted_stirling(kpos, l, a);
        if c.is_zero() {
            continue;
        }
        poly = &poly + &reflected_m_stirling_pair(n, l, m).scale(&c);
    }
    let pre = int_pow(a, k)
        / (Rational::from_integer(factorial(m)) * int_pow(&(usize_rational(m) + a), k));
    Ok(HpbPolynomial {
        n,
        m,
        k: -k,
        a: a.clone(),
        poly: poly.scale(&pre),
    })
}

/// Poly-Bernoulli polynomial with negative upper index,
/// `B_n^(-k)(x) = sum_{l <= min(n, k)} (l!)^2 S(k+1, l+1) S_n^l(1 - x)`.
pub fn negative_pb_poly_via_stirling(n: usize, kpos: usize) -> Poly {
    let row: Vec<Poly> = weighted_stirling_poly_row(n)
        .iter()
        .map(|p| p.compose_affine(&-Rational::one(), &Rational::one()))
        .collect();
    let mut poly = Poly::zero();
    for (l, reflected) in row.iter().enumerate().take(n.min(kpos) + 1) {
        let lf = factorial(l);
        let c = Rational::from_integer(&lf * &lf * stirling_second(kpos + 1, l + 1));
        poly = &poly + &reflected.scale(&c);
    }
    poly
}

/// Truncated EGF `e^{-xz} sum_n B_{n,m}^(k)(a) z^n/n!`, whose terms are
/// `B_{n,m}^(k)(x; a)` at the given rational `x`.
pub fn hpb_poly_egf(m: usize, k: i64, a: &Rational, x: &Rational, order: usize) -> Result<Egf> {
    let numbers = m_hpb_egf(m, k, a, order)?;
    Egf::exp_linear(&-x.clone(), order).mul(&numbers)
}

impl HpbPolynomial {
    pub fn eval(&self, x: &Rational) -> Rational {
        self.poly.eval(x)
    }

    pub fn constant_term(&self) -> Rational {
        self.poly.coeff(0)
    }

    /// Coefficient of `x^n`, which is `(-1)^n / a^k`.
    pub fn leading(&self) -> Rational {
        self.poly.coeff(self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polybern::{hurwitz_pb, m_hpb_negative};
    use crate::rat;

    fn p(cs: &[(i64, i64)]) -> Poly {
        Poly::from_coeffs(cs.iter().map(|&(a, b)| rat(a, b)).collect())
    }

    #[test]
    fn convolution_examples() {
        let one = rat(1, 1);
        for n in 0..=5 {
            for m in 0..=5 {
                let hp = hpb_poly_convolution(n, m, 2, &rat(1, 2)).unwrap();
                assert_eq!(
                    hp.eval(&rat(0, 1)),
                    m_hpb_form1(n, m, 2, &rat(1, 2)).unwrap()
                );
                assert_eq!(hp.constant_term(), hp.eval(&rat(0, 1)));
                let sign = if n % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
                assert_eq!(hp.leading(), sign * rat(4, 1));
            }
        }
        assert_eq!(
            hpb_poly_convolution(1, 0, 1, &one).unwrap().poly,
            p(&[(1, 2), (-1, 1)])
        );
        for m in 0..=3 {
            assert_eq!(
                hpb_poly_convolution(0, m, 3, &rat(1, 2)).unwrap().poly,
                Poly::constant(rat(8, 1))
            );
        }
    }

    #[test]
    fn explicit_examples() {
        for k in [-2, 1, 2] {
            for a in [rat(1, 1), rat(1, 2)] {
                assert_eq!(
                    hpb_poly_explicit(0, 2, k, &a).unwrap().poly,
                    Poly::constant(int_pow(&a, -k))
                );
            }
        }
        assert_eq!(
            hpb_poly_explicit(1, 0, 1, &rat(1, 1)).unwrap().poly,
            p(&[(1, 2), (-1, 1)])
        );
    }

    #[test]
    fn recurrence_first_row() {
        // n = 0: B_{1,m}(x) = (c - m - x)/a^k with c the recurrence factor
        let a = rat(1, 2);
        for m in 0..=3 {
            let c = recurrence_factor(m, 2, &a);
            let expected =
                p(&[(0, 1), (-4, 1)]) + Poly::constant((c - rat(m as i64, 1)) * rat(4, 1));
            assert_eq!(recurrence_rhs(0, m, 2, &a).unwrap(), expected);
            assert_eq!(hpb_poly_convolution(1, m, 2, &a).unwrap().poly, expected);
        }
        let report = hpb_poly_recurrence_check(4, 0, &rat(1, 1)).unwrap();
        assert_eq!(report.checked, 10);
        assert!(report.violations.is_empty());
    }

    #[test]
    fn printed_x_minus_m_variant_only_holds_at_zero() {
        // the variant with +(x - m) instead of -(x + m) describes B(-x); it
        // agrees with the true recurrence only at x = 0
        let one = rat(1, 1);
        let c = recurrence_factor(0, 1, &one);
        let next = hpb_poly_convolution(0, 1, 1, &one).unwrap().poly;
        let same = hpb_poly_convolution(0, 0, 1, &one).unwrap().poly;
        let variant = &next.scale(&c) + &(&Poly::linear_shift(rat(0, 1)) * &same);
        let lhs = hpb_poly_convolution(1, 0, 1, &one).unwrap().poly;
        assert_ne!(lhs, variant);
        assert_eq!(lhs.eval(&rat(0, 1)), variant.eval(&rat(0, 1)));
        assert_eq!(lhs.compose_affine(&rat(-1, 1), &rat(0, 1)), variant);
    }

    #[test]
    fn lemma_examples() {
        let (lhs, rhs) = binomial_m_stirling_identity(0, 0, 0);
        assert_eq!(lhs, Poly::one());
        assert_eq!(rhs, Poly::one());
        assert_eq!(reflected_weighted_stirling(0, 0), Poly::one());
        let (lhs, rhs) = binomial_m_stirling_identity(2, 1, 1);
        assert_eq!(lhs, rhs);
        let (lhs, _) = binomial_m_stirling_identity(3, 0, 0);
        let cube = p(&[(1, 1), (-3, 1), (3, 1), (-1, 1)]);
        assert_eq!(lhs, cube);
        assert_eq!(reflected_weighted_stirling(3, 0), cube);
        assert!(reflected_weighted_stirling(1, 4).is_zero());
    }

    #[test]
    fn negative_examples() {
        for a in [rat(1, 1), rat(1, 2)] {
            for n in 0..=4 {
                for m in 0..=(4 - n) {
                    for kpos in 0..=3 {
                        let neg = hpb_poly_negative(n, m, kpos, &a).unwrap();
                        assert_eq!(
                            neg.poly,
                            hpb_poly_convolution(n, m, -(kpos as i64), &a).unwrap().poly
                        );
                        assert_eq!(neg.constant_term(), m_hpb_negative(n, m, kpos, &a).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(negative_pb_poly_via_stirling(0, 0), Poly::one());
        assert_eq!(negative_pb_poly_via_stirling(1, 1), p(&[(2, 1), (-1, 1)]));
        assert_eq!(
            negative_pb_poly_via_stirling(2, 2).eval(&rat(0, 1)),
            rat(14, 1)
        );
        assert_eq!(hurwitz_pb(2, -2, &rat(1, 1)).unwrap(), rat(14, 1));
        for n in 0..=4 {
            for k in 0..=4 {
                assert_eq!(
                    hpb_poly_negative(n, 0, k, &rat(1, 1)).unwrap().poly,
                    negative_pb_poly_via_stirling(n, k)
                );
            }
        }
    }

    #[test]
    fn egf_matches_evaluations() {
        for x in [rat(0, 1), rat(1, 1), rat(-1, 2)] {
            let egf = hpb_poly_egf(1, -2, &rat(1, 2), &x, 6).unwrap();
            for n in 0..=6 {
                assert_eq!(
                    egf.term(n),
                    &hpb_poly_convolution(n, 1, -2, &rat(1, 2)).unwrap().eval(&x)
                );
            }
        }
    }
}
