//! m-Stirling numbers of the second kind
//! `R_n^k(m) = (1/k!) sum_j (-1)^(k-j) C(k, j) j^n (j)_m`
//! and their weighted variant `R_n^k(x; m)`.
//!
//! The integer values are available through four independent routes: the
//! defining alternating sum, a signed first-kind/second-kind convolution, a
//! weighted-Stirling convolution, and the triangular recurrence.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{int, Scalar};
use crate::error::{Error, Result};
use crate::stirling::{
    binomial, binomial_general, factorial, lah, pochhammer, stirling_first, stirling_second,
    weighted_stirling,
};
use crate::{Egf, Integer, Poly, Rational};

fn to_integer(value: Rational, context: &'static str) -> Result<Integer> {
    if !value.is_integer() {
        return Err(Error::NonIntegral {
            value: value.to_string(),
            context,
        });
    }
    Ok(value.to_integer())
}

/// `R_n^k(m)` from the defining sum `(m!/k!) sum_j (-1)^(k-j) C(k, j) C(j+m-1, m) j^n`.
///
/// Errors only if the final quotient is not an integer, which would
/// indicate a bug.
pub fn m_stirling_explicit(n: usize, k: usize, m: usize) -> Result<Integer> {
    let mut acc = BigInt::zero();
    for j in 0..=k {
        let term = binomial(k, j)
            * binomial_general(j as i64 + m as i64 - 1, m)
            * num_traits::pow(BigInt::from(j), n);
        if (k - j).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    let value = Rational::new(factorial(m) * acc, factorial(k));
    to_integer(value, "m-Stirling defining sum")
}

/// `R_n^k(m) = sum_i (-1)^(m-i) s(m, i) S(n+i, k)`.
pub fn m_stirling_via_first_kind(n: usize, k: usize, m: usize) -> Integer {
    let mut acc = BigInt::zero();
    for i in 0..=m {
        let term = stirling_first(m, i) * stirling_second(n + i, k);
        if (m - i).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// `R_n^k(m) = sum_j C(n, j) (1-m)^(n-j) sum_i s(m, i) S_{j+i}^k(m-1)`,
/// with the weighted Stirling numbers evaluated at `x = m - 1` (which is
/// `-1` when `m = 0`).
pub fn m_stirling_via_weighted(n: usize, k: usize, m: usize) -> Result<Integer> {
    let shift = Rational::from_integer(BigInt::from(m as i64 - 1));
    let base = Rational::from_integer(BigInt::from(1 - m as i64));
    let mut acc = Rational::zero();
    for j in 0..=n {
        let mut inner = Rational::zero();
        for i in 0..=m {
            let s = stirling_first(m, i);
            if s.is_zero() {
                continue;
            }
            inner += Rational::from_integer(s) * weighted_stirling(j + i, k, &shift);
        }
        acc += Rational::from_integer(binomial(n, j)) * crate::algebra::pow(&base, n - j) * inner;
    }
    to_integer(acc, "m-Stirling weighted convolution")
}

/// Triangle of `R_n^k(m)` for a fixed `m`; row `n` holds `k = 0..=n+m`.
#[derive(Debug, Clone, PartialEq)]
pub struct MStirlingTable {
    m: usize,
    rows: Vec<Vec<Integer>>,
}

/// One mismatching cell of a table comparison. `None` marks a cell that is
/// absent on that side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellDiff {
    pub n: usize,
    pub k: usize,
    pub expected: Option<String>,
    pub got: Option<String>,
}

impl MStirlingTable {
    pub fn m(&self) -> usize {
        self.m
    }

    /// Largest row index.
    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<Integer>] {
        &self.rows
    }

    /// `R_n^k(m)`, zero outside the stored triangle.
    pub fn get(&self, n: usize, k: usize) -> Integer {
        self.rows
            .get(n)
            .and_then(|row| row.get(k))
            .cloned()
            .unwrap_or_default()
    }

    /// Cell-by-cell comparison against a reference triangle.
    pub fn diff(&self, expected: &[Vec<Integer>]) -> Vec<CellDiff> {
        let mut out = Vec::new();
        let n_rows = self.rows.len().max(expected.len());
        for n in 0..n_rows {
            let got_row = self.rows.get(n).map(Vec::as_slice).unwrap_or(&[]);
            let exp_row = expected.get(n).map(Vec::as_slice).unwrap_or(&[]);
            for k in 0..got_row.len().max(exp_row.len()) {
                let g = got_row.get(k);
                let e = exp_row.get(k);
                if g != e {
                    out.push(CellDiff {
                        n,
                        k,
                        expected: e.map(ToString::to_string),
                        got: g.map(ToString::to_string),
                    });
                }
            }
        }
        out
    }
}

/// `R_n^k(m)` for `n <= n_max` from the triangular recurrence
/// `R_{n+1}^k(m) = R_n^{k-1}(m) + k R_n^k(m)`, seeded with
/// `R_n^0(m) = [n + m = 0]` and `R_0^k(m) = lah(m, k)`.
pub fn m_stirling_table(n_max: usize, m: usize) -> MStirlingTable {
    let mut rows = Vec::with_capacity(n_max + 1);
    let first: Vec<Integer> = (0..=m)
        .map(|k| if k == 0 { delta(m) } else { lah(m, k) })
        .collect();
    rows.push(first);
    for n in 0..n_max {
        let prev: &Vec<Integer> = &rows[n];
        let width = n + 1 + m;
        let mut row = Vec::with_capacity(width + 1);
        row.push(delta(n + 1 + m));
        for k in 1..=width {
            let mut v = prev[k - 1].clone();
            if let Some(same) = prev.get(k) {
                v += same * BigInt::from(k);
            }
            row.push(v);
        }
        rows.push(row);
    }
    MStirlingTable { m, rows }
}

fn delta(v: usize) -> Integer {
    if v == 0 {
        BigInt::one()
    } else {
        BigInt::zero()
    }
}

/// Truncated EGF `e^z (e^{-z} d/dz)^m [ (1/k!) e^{(m-1)z} (e^z - 1)^k ]` of
/// order `order`; its terms are `R_n^k(m)`.
///
/// The bracketed series is built at order `order + m` so that the `m`
/// derivative steps leave exactly `order + 1` terms.
pub fn m_stirling_egf(k: usize, m: usize, order: usize) -> Egf {
    let work = order + m;
    let expm1 = Egf::exp_linear(&Rational::one(), work)
        .sub(&Egf::one(work))
        .expect("same order");
    let base = Egf::exp_linear(&Rational::from_integer(BigInt::from(m as i64 - 1)), work)
        .mul(&expm1.pow(k))
        .expect("same order")
        .scale(&Rational::new(BigInt::one(), factorial(k)));
    let reduced = base.apply_emzd(m).expect("order covers the derivatives");
    reduced
        .mul(&Egf::exp_linear(&Rational::one(), order))
        .expect("same order")
}

/// Weighted m-Stirling number
/// `R_n^k(x; m) = (1/k!) sum_j (-1)^(k-j) C(k, j) (j+x)^n (j)_m`.
pub fn weighted_m_stirling<T: Scalar>(n: usize, k: usize, x: &T, m: usize) -> T {
    let mut acc = T::zero();
    let mut binom = T::one();
    for j in 0..=k {
        if j > 0 {
            binom = binom * int::<T>((k - j + 1) as i64) / int::<T>(j as i64);
        }
        let jj = int::<T>(j as i64);
        let term =
            binom.clone() * crate::algebra::pow(&(jj.clone() + x.clone()), n) * pochhammer(&jj, m);
        acc = if (k - j).is_multiple_of(2) {
            acc + term
        } else {
            acc - term
        };
    }
    (1..=k).fold(acc, |acc, t| acc / int::<T>(t as i64))
}

/// Row `n` of `R_n^k(x; m)` as polynomials in `x`, `k = 0..=n+m`, from the
/// recurrence `R_{n+1}^k(x; m) = R_n^{k-1}(x; m) + (x+k) R_n^k(x; m)`.
pub fn weighted_m_stirling_poly_row(n: usize, m: usize) -> Vec<Poly> {
    let mut row: Vec<Poly> = (0..=m)
        .map(|k| {
            let v = if k == 0 { delta(m) } else { lah(m, k) };
            Poly::constant(Rational::from_integer(v))
        })
        .collect();
    for _ in 0..n {
        let len = row.len();
        let mut next = Vec::with_capacity(len + 1);
        for k in 0..=len {
            let mut v = Poly::zero();
            if k > 0 {
                v = &v + &row[k - 1];
            }
            if k < len {
                let factor = Poly::linear_shift(Rational::from_integer(k.into()));
                v = &v + &(&factor * &row[k]);
            }
            next.push(v);
        }
        row = next;
    }
    row
}

/// `R_n^k(x; m)` as a polynomial of degree at most `n` in `x`.
pub fn weighted_m_stirling_poly(n: usize, k: usize, m: usize) -> Poly {
    if k > n + m {
        return Poly::zero();
    }
    weighted_m_stirling_poly_row(n, m).swap_remove(k)
}

const TABLE_M1: &str = include_str!("../fixtures/mstirling_m1.csv");
const TABLE_M2: &str = include_str!("../fixtures/mstirling_m2.csv");
const TABLE_M3: &str = include_str!("../fixtures/mstirling_m3.csv");

/// A cell of a published reference triangle that is known to be misprinted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TableErratum {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub printed: i64,
    pub corrected: i64,
}

/// Misprints in the bundled reference triangles, which keep the printed
/// values verbatim. For m = 3 the neighbours pin the cell: R_5^5 = R_4^4 + 5 R_4^5
/// = 565 + 935, and the printed R_6^5 = 10381 = R_5^4 + 5 * 1500.
pub const TABLE_ERRATA: &[TableErratum] = &[TableErratum {
    m: 3,
    n: 5,
    k: 5,
    printed: 1550,
    corrected: 1500,
}];

/// Published reference triangles for `m = 1, 2, 3`, rows `n = 0..=7`.
pub fn reference_table(m: usize) -> Option<Vec<Vec<Integer>>> {
    let text = match m {
        1 => TABLE_M1,
        2 => TABLE_M2,
        3 => TABLE_M3,
        _ => return None,
    };
    Some(parse_table_csv(text).expect("bundled fixture is well formed"))
}

/// Parses a triangle in CSV form: a header line, then one line per row
/// `n,v_0,v_1,...`; blank trailing cells are dropped.
pub fn parse_table_csv(text: &str) -> Result<Vec<Vec<Integer>>> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate().skip(1) {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut cells = line.split(',');
        let n: usize = cells
            .next()
            .and_then(|c| c.trim().parse().ok())
            .ok_or_else(|| Error::Precondition(format!("line {}: bad row index", lineno + 1)))?;
        if n != rows.len() {
            return Err(Error::Precondition(format!(
                "line {}: rows out of order",
                lineno + 1
            )));
        }
        let row = cells
            .map(str::trim)
            .filter(|c| !c.is_empty())
            .map(|c| {
                c.parse::<Integer>().map_err(|_| {
                    Error::Precondition(format!("line {}: bad cell {c:?}", lineno + 1))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Ok(rows)
}
