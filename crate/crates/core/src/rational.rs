//! Exact rational helpers shared by every module.

use num::bigint::BigInt;
use num::{BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar used throughout the crate.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Canonical `"p/q"` rendering (integers render as `"p/1"`).
pub fn format_q(v: &Q) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

/// Short rendering for human-facing output (`"3"`, `"-1/2"`).
pub fn show_q(v: &Q) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

pub fn to_f64(v: &Q) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

/// Returns the integer value when `v` is an integer that fits in `i64`.
pub fn as_integer(v: &Q) -> Option<i64> {
    if v.is_integer() {
        v.numer().to_i64()
    } else {
        None
    }
}

pub fn is_nonneg_integer(v: &Q) -> bool {
    v.is_integer() && !v.is_negative()
}

pub fn pow_q(base: &Q, exp: u32) -> Q {
    let mut acc = Q::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

pub fn factorial(n: u32) -> Q {
    (1..=n as i64).fold(Q::one(), |acc, i| acc * q(i))
}

pub fn binomial(n: u32, k: u32) -> Q {
    if k > n {
        return Q::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Least common multiple of the denominators.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Q>) -> BigInt {
    use num::Integer;
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_q("3/6").unwrap(), qf(1, 2));
        assert_eq!(parse_q("-7").unwrap(), q(-7));
        assert_eq!(format_q(&q(3)), "3/1");
        assert_eq!(show_q(&qf(-2, 4)), "-1/2");
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("0.5").is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), q(10));
        assert_eq!(binomial(2, 3), q(0));
        assert_eq!(factorial(0), q(1));
    }
}
