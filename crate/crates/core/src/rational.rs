//! Helpers for exact rationals crossing text boundaries and for
//! floating-point logarithms of arbitrarily large integers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `num/den` or a bare integer.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("malformed rational {text:?}, expected num/den"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Formats as `num/den`, or a bare integer when the denominator is 1.
pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Serde adapter writing a rational as its `num/den` string.
pub fn serialize_rational<S: serde::Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(x))
}

/// Natural log of `|x|`; `-inf` for zero. Exact for magnitudes beyond f64.
pub fn ln_abs_int(x: &BigInt) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 1000 {
        return x.abs().to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    let top: BigInt = x.abs() >> shift;
    top.to_f64().unwrap_or(f64::INFINITY).ln() + shift as f64 * std::f64::consts::LN_2
}

pub fn ln_abs(x: &Rational) -> f64 {
    ln_abs_int(x.numer()) - ln_abs_int(x.denom())
}

/// `num/den` as f64 without first reducing; handles operands beyond f64 range.
pub fn ratio_to_f64(num: &BigInt, den: &BigInt) -> f64 {
    if num.is_zero() {
        return 0.0;
    }
    if num.bits() < 1000 && den.bits() < 1000 {
        if let (Some(n), Some(d)) = (num.to_f64(), den.to_f64()) {
            return n / d;
        }
    }
    let sign = if num.is_negative() != den.is_negative() { -1.0 } else { 1.0 };
    sign * (ln_abs_int(num) - ln_abs_int(den)).exp()
}

/// Magnitude of a sequence element on a log scale, used by the growth fits.
pub trait LogMagnitude {
    fn ln_abs(&self) -> f64;
    fn is_positive(&self) -> bool;
}

impl LogMagnitude for f64 {
    fn ln_abs(&self) -> f64 {
        self.abs().ln()
    }
    fn is_positive(&self) -> bool {
        *self > 0.0
    }
}

impl LogMagnitude for BigInt {
    fn ln_abs(&self) -> f64 {
        ln_abs_int(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
}

impl LogMagnitude for Rational {
    fn ln_abs(&self) -> f64 {
        ln_abs(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
}
