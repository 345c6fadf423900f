//! Exact rational arithmetic helpers.
//!
//! Every probability, transport amount and curvature value in this crate is a
//! [`Rational`]: an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator. No value is ever rounded.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::Serializer;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RationalParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("decimal literal {0:?} rejected; write it as num/den")]
    Decimal(String),
    #[error("malformed rational literal {0:?}")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// `num/den` as a rational.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"a/b"` or `"a"`. Decimal notation is refused so that exactness is
/// never silently lost at the boundary.
pub fn parse_rational(text: &str) -> Result<Rational, RationalParseError> {
    let s = text.trim();
    if s.is_empty() {
        return Err(RationalParseError::Empty);
    }
    if s.contains('.') || s.contains('e') || s.contains('E') {
        return Err(RationalParseError::Decimal(s.to_string()));
    }
    let parse_int = |part: &str| -> Result<BigInt, RationalParseError> {
        let part = part.trim();
        let digits = part.strip_prefix(['-', '+']).unwrap_or(part);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(RationalParseError::Malformed(s.to_string()));
        }
        BigInt::from_str(part).map_err(|_| RationalParseError::Malformed(s.to_string()))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let n = parse_int(n)?;
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(RationalParseError::ZeroDenominator(s.to_string()));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Canonical `num/den` rendering; integers keep their `/1`.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// A `Display` adapter for the canonical form.
pub struct Canonical<'a>(pub &'a Rational);

impl fmt::Display for Canonical<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

/// Informational decimal rendering with a fixed number of fractional digits
/// (truncated toward zero). Never fed back into a computation.
pub fn decimal_hint(r: &Rational, digits: usize) -> String {
    let neg = r.is_negative();
    let abs = r.abs();
    let whole = abs.numer() / abs.denom();
    let mut rem = abs.numer() % abs.denom();
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&whole.to_string());
    out.push('.');
    let ten = BigInt::from(10);
    for _ in 0..digits {
        rem *= &ten;
        let d = &rem / abs.denom();
        rem %= abs.denom();
        out.push_str(&d.to_string());
    }
    out
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

pub fn floor(r: &Rational) -> Rational {
    r.floor()
}

pub fn ceil(r: &Rational) -> Rational {
    r.ceil()
}

/// Fractional part in `[0, 1)`.
pub fn frac(r: &Rational) -> Rational {
    r - r.floor()
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Least common multiple of all denominators, as an integer.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Converts an exact integer-valued rational into `i128`, if it fits.
pub fn to_i128(r: &Rational) -> Option<i128> {
    if !is_integer(r) {
        return None;
    }
    r.numer().to_i128()
}

pub fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / int(2)
}

pub(crate) fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

pub(crate) fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
    let text: String = serde::Deserialize::deserialize(d)?;
    parse_rational(&text).map_err(de::Error::custom)
}
