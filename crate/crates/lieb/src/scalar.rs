//! Exact rational scalars.
//!
//! Every coefficient handled by the crate is a [`Scalar`], an arbitrary
//! precision rational number kept in lowest terms with a positive
//! denominator. No floating point value is ever involved.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational number.
pub type Scalar = BigRational;

/// Builds the integer `n` as a scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Builds the fraction `num / den` in lowest terms.
///
/// # Panics
///
/// Panics if `den` is zero.
pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// The scalar zero.
pub fn zero() -> Scalar {
    Scalar::zero()
}

/// The scalar one.
pub fn one() -> Scalar {
    Scalar::one()
}

/// Returns `-1` raised to `k`.
pub fn sign(k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        one()
    } else {
        -one()
    }
}

/// Parses `"p/q"`, `"p"` or a decimal-free signed integer into a scalar.
///
/// Surrounding whitespace is ignored and a leading `+` is accepted.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let t = text.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    let bad = || Error::Parse(format!("`{text}` is not a rational number"));
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("`{text}` has a zero denominator")));
            }
            Ok(Scalar::new(p, q))
        }
        None => {
            let p: BigInt = t.parse().map_err(|_| bad())?;
            Ok(Scalar::from_integer(p))
        }
    }
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_scalar(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Factorial of `n` as a scalar.
pub fn factorial(n: usize) -> Scalar {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Scalar::from_integer(acc)
}

/// True when `x` is a negative scalar.
pub fn is_negative(x: &Scalar) -> bool {
    x.is_negative()
}

/// True when `x` is an integer.
pub fn is_integer(x: &Scalar) -> bool {
    x.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for (text, canon) in [("3/2", "3/2"), ("-4/6", "-2/3"), (" 7 ", "7"), ("+0/5", "0"), ("2/-4", "-1/2")] {
            assert_eq!(format_scalar(&parse_scalar(text).unwrap()), canon);
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_scalar("1.5").is_err());
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(5), int(120));
    }
}
