//! Exact rational scalars.
//!
//! Every value in the library is a [`Scalar`], an arbitrary-precision
//! rational. The textual grammar accepted by [`parse_scalar`] is
//!
//! ```text
//! scalar := sign? digits ( "/" digits )?
//! sign   := "+" | "-"
//! ```
//!
//! with a strictly positive denominator.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational number.
pub type Scalar = BigRational;

/// Builds an integral scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Builds `num / den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// `2^k` as a scalar.
pub fn pow2(k: u32) -> Scalar {
    Scalar::from_integer(BigInt::one() << k)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarParseError {
    #[error("empty rational string")]
    Empty,
    #[error("invalid rational `{0}`: expected [sign]integer[/integer]")]
    Syntax(String),
    #[error("invalid rational `{0}`: denominator must be positive")]
    Denominator(String),
}

fn all_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

/// Parses a rational string such as `-3`, `+7/2` or `0`.
pub fn parse_scalar(text: &str) -> Result<Scalar, ScalarParseError> {
    if text.is_empty() {
        return Err(ScalarParseError::Empty);
    }
    let (negative, body) = match text.as_bytes()[0] {
        b'-' => (true, &text[1..]),
        b'+' => (false, &text[1..]),
        _ => (false, text),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    if !all_digits(num) || den.is_some_and(|d| !all_digits(d)) {
        return Err(ScalarParseError::Syntax(text.to_owned()));
    }
    let mut numer: BigInt = num.parse().map_err(|_| ScalarParseError::Syntax(text.to_owned()))?;
    if negative {
        numer = -numer;
    }
    let denom: BigInt = match den {
        Some(d) => d.parse().map_err(|_| ScalarParseError::Syntax(text.to_owned()))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(ScalarParseError::Denominator(text.to_owned()));
    }
    Ok(Scalar::new(numer, denom))
}

/// Canonical text form: `n` for integers, `n/d` in lowest terms otherwise.
pub fn format_scalar(value: &Scalar) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Display adapter for [`Scalar`] using [`format_scalar`].
pub struct Exact<'a>(pub &'a Scalar);

impl fmt::Display for Exact<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&format_scalar(self.0))
    }
}
