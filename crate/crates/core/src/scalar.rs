//! Exact rational scalars and their text form (`p/q` or `p`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Every coefficient in the engine. Always kept in lowest terms with a
/// positive denominator by `num_rational`.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"`, surrounding whitespace allowed.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let err = || Error::Parse {
        what: "rational",
        token: s.to_string(),
    };
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let valid = |x: &str| {
        let digits = x.strip_prefix(['-', '+']).unwrap_or(x);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num) || !valid(den) {
        return Err(err());
    }
    let n: BigInt = num.trim_start_matches('+').parse().map_err(|_| err())?;
    let d: BigInt = den.trim_start_matches('+').parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    Ok(Scalar::new(n, d))
}

/// Canonical text: `p` for integers, `p/q` otherwise.
pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

/// `base^exp` for any integer exponent; `base` must be nonzero when `exp < 0`.
pub fn pow(base: &Scalar, exp: i64) -> Scalar {
    if exp == 0 {
        return Scalar::one();
    }
    let mut acc = Scalar::one();
    let mut b = if exp < 0 { base.recip() } else { base.clone() };
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

pub fn is_integer(x: &Scalar) -> bool {
    x.is_integer()
}

/// Largest integer not exceeding `x`.
pub fn floor(x: &Scalar) -> Scalar {
    x.floor()
}

pub fn abs(x: &Scalar) -> Scalar {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_scalar("3").unwrap(), int(3));
        assert_eq!(parse_scalar(" -2/4 ").unwrap(), ratio(-1, 2));
        assert_eq!(format_scalar(&ratio(6, -4)), "-3/2");
        assert_eq!(format_scalar(&int(7)), "7");
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
        assert!(parse_scalar("1.5").is_err());
        assert!(parse_scalar("").is_err());
    }

    #[test]
    fn powers() {
        assert_eq!(pow(&int(2), -2), ratio(1, 4));
        assert_eq!(pow(&int(-1), 3), int(-1));
        assert_eq!(pow(&ratio(2, 3), 3), ratio(8, 27));
        assert_eq!(pow(&int(0), 0), int(1));
    }
}
