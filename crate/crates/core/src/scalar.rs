//! Scalar types.
//!
//! The exact path runs on [`Scalar`] (arbitrary-precision rationals, always in
//! lowest terms). Most tensor code is generic over [`Field`] so that the
//! normal-form stage can reuse it with `f64` once square roots are needed.

use std::fmt::{Debug, Display};

use num::bigint::BigInt;
use num::traits::{FromPrimitive, NumAssign, Signed, ToPrimitive};
use num::{BigRational, One, Zero};

use crate::error::Error;

/// Exact rational number. `num` keeps it normalized with a positive denominator.
pub type Scalar = BigRational;

/// The arithmetic needed by the tensor, algebra and decomposition code.
pub trait Field:
    Clone + Debug + Display + PartialEq + PartialOrd + NumAssign + Signed + FromPrimitive
{
    /// Exact value, if this scalar type carries one.
    fn to_exact(&self) -> Option<Scalar>;

    /// Lossy conversion used by reports and the normal-form stage.
    fn to_f64(&self) -> f64;

    fn from_int(value: i64) -> Self {
        Self::from_i64(value).expect("every i64 is representable")
    }
}

impl Field for Scalar {
    fn to_exact(&self) -> Option<Scalar> {
        Some(self.clone())
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Field for f64 {
    fn to_exact(&self) -> Option<Scalar> {
        None
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

/// Shorthand for the integer `value` as a [`Scalar`].
pub fn int(value: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(value))
}

/// Shorthand for `num / den` as a [`Scalar`]. Panics when `den == 0`.
pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p"`, `"p/q"` (q nonzero) or a finite decimal such as `"-0.25"`.
///
/// Decimals are converted exactly; no binary floating point is involved.
pub fn parse_scalar(text: &str) -> Result<Scalar, Error> {
    let malformed = || Error::MalformedRational(text.to_string());
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(malformed());
    }
    if let Some((num, den)) = trimmed.split_once('/') {
        let num: BigInt = parse_integer(num).ok_or_else(malformed)?;
        let den: BigInt = parse_integer(den).ok_or_else(malformed)?;
        if den.is_zero() {
            return Err(malformed());
        }
        return Ok(Scalar::new(num, den));
    }
    if let Some((whole, frac)) = trimmed.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        if !whole_digits.bytes().all(|b| b.is_ascii_digit()) || whole.len() > whole_digits.len() + 1
        {
            return Err(malformed());
        }
        let digits = format!("{whole_digits}{frac}");
        let mut num: BigInt = digits.parse().map_err(|_| malformed())?;
        if negative {
            num = -num;
        }
        let den = num::pow(BigInt::from(10), frac.len());
        return Ok(Scalar::new(num, den));
    }
    parse_integer(trimmed)
        .map(Scalar::from_integer)
        .ok_or_else(malformed)
}

fn parse_integer(text: &str) -> Option<BigInt> {
    let digits = text.strip_prefix(['-', '+']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_scalar(value: &Scalar) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub(crate) fn half<T: Field>() -> T {
    T::one() / T::from_int(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_fractions_and_decimals() {
        assert_eq!(parse_scalar("3").unwrap(), int(3));
        assert_eq!(parse_scalar("-7").unwrap(), int(-7));
        assert_eq!(parse_scalar("2/4").unwrap(), ratio(1, 2));
        assert_eq!(parse_scalar("3/-6").unwrap(), ratio(-1, 2));
        assert_eq!(parse_scalar("0.25").unwrap(), ratio(1, 4));
        assert_eq!(parse_scalar("-1.5").unwrap(), ratio(-3, 2));
    }

    #[test]
    fn rejects_malformed_rationals() {
        for bad in [
            "", "1/0", "abc", "1/", "/2", "1.", "1e3", "--1", "1/2/3", " - 1",
        ] {
            assert!(parse_scalar(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn lowest_terms_text_form() {
        assert_eq!(format_scalar(&parse_scalar("2/4").unwrap()), "1/2");
        assert_eq!(format_scalar(&parse_scalar("-6/3").unwrap()), "-2");
        assert_eq!(format_scalar(&int(0)), "0");
    }

    #[test]
    fn arithmetic_is_exact() {
        let x = ratio(1, 3);
        let y = ratio(2, 7);
        assert_eq!((x.clone() + y.clone()) - y, x);
        assert_eq!(ratio(1, 10) + ratio(2, 10), ratio(3, 10));
    }
}
