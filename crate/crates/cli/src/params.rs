//! Argument value types and the grid-size cap.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use polybern::{Integer, Rational};

use crate::Failure;

/// Inclusive integer range written `lo..hi`; a bare integer is a one-point range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub lo: i64,
    pub hi: i64,
}

impl Span {
    pub fn single(v: i64) -> Self {
        Span { lo: v, hi: v }
    }

    pub fn is_single(&self) -> bool {
        self.lo == self.hi
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }

    /// Rejects negative endpoints for parameters that count something.
    pub fn natural(self, name: &str) -> Result<Self, Failure> {
        if self.lo < 0 {
            return Err(Failure::usage(format!(
                "--{name} must be non-negative, got {self}"
            )));
        }
        Ok(self)
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_single() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| format!("not an integer: {t:?}"))
        };
        let span = match s.split_once("..") {
            Some((lo, hi)) => Span {
                lo: parse(lo)?,
                hi: parse(hi.strip_prefix('=').unwrap_or(hi))?,
            },
            None => Span::single(parse(s)?),
        };
        if span.lo > span.hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(span)
    }
}

/// Parses `p/q` or an integer.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (p, q) = s.split_once('/').unwrap_or((s, "1"));
    let p = p
        .trim()
        .parse()
        .map_err(|_| format!("not a rational: {s:?}"))?;
    let q: Integer = q
        .trim()
        .parse()
        .map_err(|_| format!("not a rational: {s:?}"))?;
    if q.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rational::new(p, q))
}

const MAX_N_VAR: &str = "POLYBERN_MAX_N";
const DEFAULT_MAX_N: i64 = 64;

/// Grid-size cap read from the environment.
#[derive(Debug, Clone, Copy)]
pub struct Cap(i64);

impl Cap {
    pub fn from_env() -> Result<Self, Failure> {
        match std::env::var(MAX_N_VAR) {
            Ok(v) => v
                .trim()
                .parse::<i64>()
                .ok()
                .filter(|&c| c >= 0)
                .map(Cap)
                .ok_or_else(|| {
                    Failure::usage(format!(
                        "{MAX_N_VAR} must be a non-negative integer, got {v:?}"
                    ))
                }),
            Err(_) => Ok(Cap(DEFAULT_MAX_N)),
        }
    }

    pub fn check(&self, name: &str, value: i64) -> Result<(), Failure> {
        if value.abs() > self.0 {
            return Err(Failure::usage(format!(
                "--{name} {value} exceeds {MAX_N_VAR} = {}",
                self.0
            )));
        }
        Ok(())
    }

    pub fn check_span(&self, name: &str, span: Span) -> Result<(), Failure> {
        self.check(name, span.lo)?;
        self.check(name, span.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans() {
        assert_eq!("0..6".parse::<Span>().unwrap(), Span { lo: 0, hi: 6 });
        assert_eq!("-3..=3".parse::<Span>().unwrap(), Span { lo: -3, hi: 3 });
        assert_eq!("4".parse::<Span>().unwrap(), Span::single(4));
        assert!("5..2".parse::<Span>().is_err());
        assert!("x".parse::<Span>().is_err());
        assert_eq!(Span { lo: 1, hi: 3 }.to_string(), "1..3");
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("1/2").unwrap(), polybern::rat(1, 2));
        assert_eq!(parse_rational("-6/4").unwrap(), polybern::rat(-3, 2));
        assert_eq!(parse_rational("3").unwrap(), polybern::rat(3, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("half").is_err());
    }
}
