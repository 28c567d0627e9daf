//! Extended nonnegative rationals: exact values in `[0, ∞]`.
//!
//! All distance arithmetic in the kernel runs on these; there is no floating
//! point anywhere. Addition is truncated (`∞` absorbs), subtraction is monus.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// A nonnegative rational or infinity, with exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtRational {
    Finite(BigRational),
    Infinity,
}

impl ExtRational {
    pub fn zero() -> Self {
        ExtRational::Finite(BigRational::zero())
    }

    pub fn from_integer(n: u64) -> Self {
        ExtRational::Finite(BigRational::from_integer(BigInt::from(n)))
    }

    /// Exact `p/q`; panics if `q == 0` or the value is negative.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        let r = BigRational::new(BigInt::from(p), BigInt::from(q));
        assert!(!r.is_negative(), "extended rationals are nonnegative");
        ExtRational::Finite(r)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtRational::Finite(r) if r.is_zero())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtRational::Infinity)
    }

    /// Truncated addition: `∞` absorbs.
    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (ExtRational::Finite(a), ExtRational::Finite(b)) => ExtRational::Finite(a + b),
            _ => ExtRational::Infinity,
        }
    }

    /// Monus: `max(self − other, 0)`, with `∞ − a = ∞` and `a − ∞ = 0`.
    pub fn monus(&self, other: &Self) -> Self {
        match (self, other) {
            (_, ExtRational::Infinity) => ExtRational::zero(),
            (ExtRational::Infinity, ExtRational::Finite(_)) => ExtRational::Infinity,
            (ExtRational::Finite(a), ExtRational::Finite(b)) => {
                if a <= b {
                    ExtRational::zero()
                } else {
                    ExtRational::Finite(a - b)
                }
            }
        }
    }

}

impl PartialOrd for ExtRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtRational::Infinity, ExtRational::Infinity) => Ordering::Equal,
            (ExtRational::Infinity, _) => Ordering::Greater,
            (_, ExtRational::Infinity) => Ordering::Less,
            (ExtRational::Finite(a), ExtRational::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for ExtRational {
    /// Renders as `p/q` (always with the denominator) or `inf`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::Infinity => write!(f, "inf"),
            ExtRational::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

/// Error for strings that do not denote an extended nonnegative rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError(pub String);

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational literal: {:?}", self.0)
    }
}

impl std::error::Error for ParseRationalError {}

impl FromStr for ExtRational {
    type Err = ParseRationalError;

    /// Accepts `inf`, integers, `p/q`, and finite decimals (`1.25` → `5/4`),
    /// all converted exactly.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let err = || ParseRationalError(s.to_string());
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(ExtRational::Infinity);
        }
        let rational = if let Some((p, q)) = s.split_once('/') {
            let p = BigInt::from_str(p.trim()).map_err(|_| err())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| err())?;
            if q.is_zero() {
                return Err(err());
            }
            BigRational::new(p, q)
        } else if let Some((int_part, frac_part)) = s.split_once('.') {
            if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            let int_part = if int_part.is_empty() { "0" } else { int_part };
            let whole = BigInt::from_str(int_part).map_err(|_| err())?;
            let frac = BigInt::from_str(frac_part).map_err(|_| err())?;
            let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
            let frac = BigRational::new(frac, scale);
            if whole.is_negative() || int_part.starts_with('-') {
                BigRational::from_integer(whole) - frac
            } else {
                BigRational::from_integer(whole) + frac
            }
        } else {
            BigRational::from_integer(BigInt::from_str(s).map_err(|_| err())?)
        };
        if rational.is_negative() {
            return Err(err());
        }
        Ok(ExtRational::Finite(rational))
    }
}

pub fn one() -> ExtRational {
    ExtRational::Finite(BigRational::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> ExtRational {
        s.parse().unwrap()
    }

    #[test]
    fn parsing_forms() {
        assert_eq!(r("3"), ExtRational::from_integer(3));
        assert_eq!(r("3/2"), ExtRational::from_ratio(3, 2));
        assert_eq!(r("1.25"), ExtRational::from_ratio(5, 4));
        assert_eq!(r("0.1"), ExtRational::from_ratio(1, 10));
        assert_eq!(r(".5"), ExtRational::from_ratio(1, 2));
        assert_eq!(r("inf"), ExtRational::Infinity);
        assert_eq!(r("6/4"), ExtRational::from_ratio(3, 2));
        assert!("x".parse::<ExtRational>().is_err());
        assert!("-1".parse::<ExtRational>().is_err());
        assert!("1/0".parse::<ExtRational>().is_err());
        assert!("1.".parse::<ExtRational>().is_err());
    }

    #[test]
    fn display_always_fractional() {
        assert_eq!(r("4").to_string(), "4/1");
        assert_eq!(r("3/2").to_string(), "3/2");
        assert_eq!(ExtRational::Infinity.to_string(), "inf");
    }

    #[test]
    fn truncated_addition_and_monus() {
        assert_eq!(r("2").add(&r("1.5")), r("3.5"));
        assert_eq!(r("2").add(&ExtRational::Infinity), ExtRational::Infinity);
        assert_eq!(r("5").monus(&r("2")), r("3"));
        assert_eq!(r("2").monus(&r("5")), r("0"));
        assert_eq!(ExtRational::Infinity.monus(&r("7")), ExtRational::Infinity);
        assert_eq!(r("7").monus(&ExtRational::Infinity), r("0"));
        assert_eq!(ExtRational::Infinity.monus(&ExtRational::Infinity), r("0"));
    }

    #[test]
    fn order_is_numeric() {
        assert!(r("1/3") < r("1/2"));
        assert!(r("100") < ExtRational::Infinity);
        assert_eq!(r("2").min(r("3")), r("2"));
        assert_eq!(r("2").max(ExtRational::Infinity), ExtRational::Infinity);
    }
}
