//! Scalar layer: exact rationals and IEEE doubles behind one trait.
//!
//! Every formula in the recurrence layer has rational coefficients, so the
//! exact mode evaluates them without rounding; the float mode exists for the
//! spectral oracles, where √2 and eigenvalues live. Zero tests are exact for
//! rationals and τ-banded for floats: `x` is zero at scale `s` iff
//! |x| ≤ τ·max(1, |s|).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (maintained by `num_rational`).
pub type Rat = BigRational;

/// Default τ for float-mode zero tests.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Common interface of the two computation modes.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + PartialOrd
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// True when arithmetic (and therefore zero tests) are exact.
    const EXACT: bool;

    fn from_i64(n: i64) -> Self;

    fn zero() -> Self;

    fn one() -> Self;

    /// Zero test at a running scale. Exact mode ignores `scale` and `tol`.
    fn is_zero_at(&self, scale: &Self, tol: f64) -> bool;

    /// Strict sign: +1, −1, or 0 (no tolerance applied).
    fn sign0(&self) -> i8;

    fn abs_val(&self) -> Self;

    /// Lossy conversion for reports and float-mode handoff.
    fn to_f64_lossy(&self) -> f64;
}

impl Scalar for Rat {
    const EXACT: bool = true;

    fn from_i64(n: i64) -> Self {
        Rat::from_integer(BigInt::from(n))
    }

    fn zero() -> Self {
        <Rat as Zero>::zero()
    }

    fn one() -> Self {
        <Rat as num_traits::One>::one()
    }

    fn is_zero_at(&self, _scale: &Self, _tol: f64) -> bool {
        self.is_zero()
    }

    fn sign0(&self) -> i8 {
        if self.is_zero() {
            0
        } else if self.is_positive() {
            1
        } else {
            -1
        }
    }

    fn abs_val(&self) -> Self {
        Signed::abs(self)
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_i64(n: i64) -> Self {
        n as f64
    }

    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn is_zero_at(&self, scale: &Self, tol: f64) -> bool {
        self.abs() <= tol * scale.abs().max(1.0)
    }

    fn sign0(&self) -> i8 {
        if *self > 0.0 {
            1
        } else if *self < 0.0 {
            -1
        } else {
            0
        }
    }

    fn abs_val(&self) -> Self {
        self.abs()
    }

    fn to_f64_lossy(&self) -> f64 {
        *self
    }
}

/// Shorthand for p/q (panics on q = 0; test and fixture use).
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Shorthand for an integer rational.
pub fn rat_i(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

/// Parses `p/q`, an integer, or a decimal literal into an exact rational.
/// Decimals get power-of-ten denominators, so `0.1` is exactly 1/10.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let err = || Error::Parse(s.to_string());
    if s.is_empty() {
        return Err(err());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| err())?;
        let q: BigInt = q.trim().parse().map_err(|_| err())?;
        if q.is_zero() {
            return Err(err());
        }
        return Ok(Rat::new(p, q));
    }
    let (sign, digits) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return Err(err());
    }
    let mut numer: BigInt = if int_part.is_empty() {
        BigInt::from(0)
    } else {
        int_part.parse().map_err(|_| err())?
    };
    let mut denom = BigInt::from(1);
    for c in frac_part.chars() {
        numer = numer * 10 + (c as u8 - b'0');
        denom *= 10;
    }
    Ok(Rat::new(BigInt::from(sign) * numer, denom))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_reduced_with_positive_denominator() {
        let x = rat(6, -4);
        assert_eq!(x, rat(-3, 2));
        assert!(x.denom() > &BigInt::from(0));
    }

    #[test]
    fn float_zero_test_scales() {
        let tol = 1e-12;
        assert!(0.0f64.is_zero_at(&1.0, tol));
        assert!(5e-13f64.is_zero_at(&1.0, tol));
        assert!(!5e-12f64.is_zero_at(&1.0, tol));
        // At scale 1e6 the band widens accordingly.
        assert!(5e-8f64.is_zero_at(&1e6, tol));
        assert!(!5e-5f64.is_zero_at(&1e6, tol));
    }

    #[test]
    fn exact_zero_test_ignores_tolerance() {
        assert!(rat(0, 5).is_zero_at(&rat_i(1), 1e30));
        assert!(!rat(1, 1_000_000_000).is_zero_at(&rat_i(1), 1e30));
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rat("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rat("-3/4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rat("3/-4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rat("-10").unwrap(), rat_i(-10));
        assert_eq!(parse_rat("0.5").unwrap(), rat(1, 2));
        assert_eq!(parse_rat("-0.125").unwrap(), rat(-1, 8));
        assert_eq!(parse_rat(".25").unwrap(), rat(1, 4));
        assert_eq!(parse_rat("2.").unwrap(), rat_i(2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("abc").is_err());
        assert!(parse_rat("").is_err());
        assert!(parse_rat("1.2.3").is_err());
    }

    #[test]
    fn signs() {
        assert_eq!(rat(-1, 3).sign0(), -1);
        assert_eq!(rat_i(0).sign0(), 0);
        assert_eq!(2.5f64.sign0(), 1);
        assert_eq!((-0.0f64).sign0(), 0);
    }
}
