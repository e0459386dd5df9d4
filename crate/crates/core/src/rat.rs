//! Exact rational arithmetic.
//!
//! All numeric values in this crate are arbitrary-precision rationals; there
//! is no floating-point representation anywhere. [`Rat`] is backed by
//! `num_rational::BigRational`, which keeps every value in lowest terms with
//! a positive denominator, so equality is structural.
//!
//! Rationals serialize as the string `"p/q"`, or `"p"` when the denominator
//! is 1, with an optional leading minus on the numerator only. `BigRational`'s
//! `Display` already produces exactly this form; [`parse_rat`] accepts exactly
//! this form and nothing else.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms, denominator > 0.
pub type Rat = num_rational::BigRational;

/// Rational from an integer pair. Panics if `den == 0`; intended for literals.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Binomial coefficient `n choose 2` as a rational.
pub fn choose2(n: u32) -> Rat {
    let n = i64::from(n);
    rat_int(n * (n - 1) / 2)
}

/// Parse the exact serialization format: `"p/q"` or `"p"`, optional leading
/// minus on `p` only, `q` a positive integer.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::InvalidRational(s.to_string());
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num = parse_int(num_str, true).ok_or_else(bad)?;
    let den = match den_str {
        Some(d) => parse_int(d, false).ok_or_else(bad)?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(num, den))
}

fn parse_int(s: &str, allow_minus: bool) -> Option<BigInt> {
    let digits = match s.strip_prefix('-') {
        Some(rest) if allow_minus => rest,
        Some(_) => return None,
        None => s,
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let n: BigInt = digits.parse().ok()?;
    Some(if s.starts_with('-') { -n } else { n })
}

/// Sign of a rational: -1, 0 or 1.
pub fn sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// The value as a positive machine integer, if it is one.
pub fn as_positive_int(r: &Rat) -> Option<u32> {
    if !r.is_integer() || !r.is_positive() {
        return None;
    }
    u32::try_from(r.to_integer()).ok()
}
