//! Arithmetic modes.
//!
//! Every construction in the crate is written once against [`Field`] and runs
//! either in `f64` (metric computation) or in exact [`Rational`] arithmetic
//! (synthetic constructions, predicates, certificates). Complex values only
//! appear in the Cayley-Klein module, where the absolute meets a real line in
//! a conjugate pair.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Exact rational scalar.
pub type Rational = BigRational;

/// Relative tolerance used by every float-mode degeneracy test.
pub const FLOAT_TOL: f64 = 1e-9;

/// A commutative field with an exactness flag and a float magnitude.
pub trait Field:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// True when arithmetic is exact and zero tests need no tolerance.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    /// Absolute value as an `f64`, used for pivoting and tolerances.
    fn magnitude(&self) -> f64;
    fn is_zero(&self) -> bool;
    /// Multiplication by a float factor (exact fields take its binary value).
    fn mul_f64(&self, s: f64) -> Self;

    /// Zero relative to `scale`. Exact fields ignore the scale.
    fn negligible(&self, scale: f64) -> bool {
        if Self::EXACT {
            self.is_zero()
        } else {
            self.magnitude() <= FLOAT_TOL * scale
        }
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }
}

/// An ordered field convertible to and from `f64`.
pub trait RealField: Field + PartialOrd {
    fn to_f64(&self) -> f64;
    /// Conversion from a finite float; exact fields take the binary value.
    fn from_f64(v: f64) -> Self;

    fn abs(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Sign as -1, 0 or 1, where zero means `negligible(scale)`.
    fn sign(&self, scale: f64) -> i8 {
        if self.negligible(scale) {
            0
        } else if *self > Self::zero() {
            1
        } else {
            -1
        }
    }

    fn max_of(a: Self, b: Self) -> Self {
        if a >= b {
            a
        } else {
            b
        }
    }

    fn min_of(a: Self, b: Self) -> Self {
        if a <= b {
            a
        } else {
            b
        }
    }
}

impl Field for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn magnitude(&self) -> f64 {
        f64::abs(*self)
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn mul_f64(&self, s: f64) -> Self {
        self * s
    }
}

impl RealField for f64 {
    fn to_f64(&self) -> f64 {
        *self
    }
    fn from_f64(v: f64) -> Self {
        v
    }
}

impl Field for BigRational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn magnitude(&self) -> f64 {
        ToPrimitive::to_f64(&Signed::abs(self)).unwrap_or(f64::INFINITY)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul_f64(&self, s: f64) -> Self {
        self * BigRational::from_float(s).expect("finite float")
    }
}

impl RealField for BigRational {
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn from_f64(v: f64) -> Self {
        BigRational::from_float(v).expect("finite float")
    }
}

impl Field for Complex64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn mul_f64(&self, s: f64) -> Self {
        self * s
    }
}

/// Parses `"p/q"`, an integer or a decimal literal into an exact rational.
///
/// Decimals are read digit by digit, so `"0.1"` is exactly `1/10`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num: BigInt = num.trim().parse().ok()?;
        let den: BigInt = den.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(BigRational::new(num, den));
    }
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(pos) => (&text[..pos], text[pos + 1..].parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let negative = int_part.starts_with('-');
    let digits = format!("{}{}", int_part.trim_start_matches(['-', '+']), frac_part);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let mut value = BigRational::from_integer(digits.parse::<BigInt>().ok()?);
    let shift = exponent - frac_part.len() as i32;
    let ten = BigRational::from_integer(BigInt::from(10));
    for _ in 0..shift.unsigned_abs() {
        value = if shift > 0 {
            value * &ten
        } else {
            value / &ten
        };
    }
    Some(if negative { -value } else { value })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rational_forms() {
        assert_eq!(parse_rational("3/8"), Some(Rational::from_ratio(3, 8)));
        assert_eq!(parse_rational("-0.25"), Some(Rational::from_ratio(-1, 4)));
        assert_eq!(parse_rational("0.1"), Some(Rational::from_ratio(1, 10)));
        assert_eq!(parse_rational("2"), Some(Rational::from_i64(2)));
        assert_eq!(parse_rational("1.5e2"), Some(Rational::from_i64(150)));
        assert_eq!(parse_rational("25e-2"), Some(Rational::from_ratio(1, 4)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
        assert_eq!(parse_rational("."), None);
    }

    #[test]
    fn float_negligible_is_scale_relative() {
        assert!(1e-12_f64.negligible(1.0));
        assert!(!1e-6_f64.negligible(1.0));
        assert!(1e-6_f64.negligible(1e4));
        assert!(!Rational::from_ratio(1, 1_000_000_000_000).negligible(1e6));
    }
}
