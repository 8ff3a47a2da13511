//! Laurent polynomials over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{format_scalar, parse_scalar, pow, Scalar};

/// A finitely supported map exponent -> coefficient with no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Scalar>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Scalar::one(), 0)
    }

    /// `t`
    pub fn t() -> Self {
        Self::monomial(Scalar::one(), 1)
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Scalar, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    /// `t - a`
    pub fn linear(a: &Scalar) -> Self {
        Self::t() - Self::constant(a.clone())
    }

    /// Coefficients `c[0] + c[1] t + ...`.
    pub fn from_coeffs<I: IntoIterator<Item = Scalar>>(coeffs: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in coeffs.into_iter().enumerate() {
            p.add_term(e as i64, c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Scalar)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Scalar {
        self.terms.get(&exp).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Scalar)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Highest exponent, `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest exponent, `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.values().next_back()
    }

    /// True when all exponents are nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.valuation().is_none_or(|v| v >= 0)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, x)| (e + k, x.clone())).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.terms
            .iter()
            .map(|(e, c)| c * pow(x, *e))
            .fold(Scalar::zero(), |a, b| a + b)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Euclidean division of genuine polynomials: `self = q * divisor + r`
    /// with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(self.is_polynomial() && divisor.is_polynomial());
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc_inv = divisor.leading_coeff().unwrap().recip();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.coeff(rd) * &lc_inv;
            let step = Self::monomial(c.clone(), rd - dd);
            rem = &rem - &(&step * divisor);
            quot.add_term(rd - dd, c);
        }
        (quot, rem)
    }

    /// Parses sums of `c*t^e` terms such as `1 + 2t^-1 - 1/2t^3`.
    pub fn parse(s: &str) -> Result<Self> {
        let err = |tok: &str| Error::Parse {
            what: "Laurent polynomial",
            token: tok.to_string(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err(s));
        }
        // Split at '+'/'-' that do not follow '^' (exponent sign) or '/' .
        let mut pieces = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for (idx, &b) in bytes.iter().enumerate() {
            if (b == b'+' || b == b'-') && idx > start {
                let prev = bytes[idx - 1];
                if prev != b'^' && prev != b'/' && prev != b'*' {
                    pieces.push(&compact[start..idx]);
                    start = idx;
                }
            }
        }
        pieces.push(&compact[start..]);

        let mut poly = Self::zero();
        for piece in pieces {
            let (sign, body) = match piece.as_bytes().first() {
                Some(b'-') => (-Scalar::one(), &piece[1..]),
                Some(b'+') => (Scalar::one(), &piece[1..]),
                _ => (Scalar::one(), piece),
            };
            if body.is_empty() {
                return Err(err(piece));
            }
            let (coeff, exp) = match body.find('t') {
                None => (parse_scalar(body).map_err(|_| err(piece))?, 0),
                Some(pos) => {
                    let head = body[..pos].trim_end_matches('*');
                    let coeff = if head.is_empty() {
                        Scalar::one()
                    } else {
                        parse_scalar(head).map_err(|_| err(piece))?
                    };
                    let tail = &body[pos + 1..];
                    let exp = if tail.is_empty() {
                        1
                    } else {
                        tail.strip_prefix('^')
                            .and_then(|e| e.parse::<i64>().ok())
                            .ok_or_else(|| err(piece))?
                    };
                    (coeff, exp)
                }
            };
            poly.add_term(exp, sign * coeff);
        }
        Ok(poly)
    }
}

impl fmt::Display for LaurentPoly {
    /// Descending exponents, no spaces: `t^2+2t+1`, `-1/2t^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if n > 0 {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            } else if neg {
                write!(f, "-")?;
            }
            let mag = c.abs();
            if *e == 0 {
                write!(f, "{}", format_scalar(&mag))?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{}", format_scalar(&mag))?;
            }
            if *e == 1 {
                write!(f, "t")?;
            } else {
                write!(f, "t^{e}")?;
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-Scalar::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    #[test]
    fn parse_mixed_terms() {
        let p = LaurentPoly::parse("1 + 2t^-1 - 1/2t^3").unwrap();
        assert_eq!(p.coeff(0), int(1));
        assert_eq!(p.coeff(-1), int(2));
        assert_eq!(p.coeff(3), ratio(-1, 2));
        assert_eq!(p.to_string(), "-1/2t^3+1+2t^-1");
        assert_eq!(LaurentPoly::parse("t^2+2t+1").unwrap().to_string(), "t^2+2t+1");
        assert_eq!(LaurentPoly::parse("3*t^2 - t").unwrap().to_string(), "3t^2-t");
        assert_eq!(LaurentPoly::parse("-t^-2").unwrap().coeff(-2), int(-1));
        assert_eq!(LaurentPoly::parse("t - t").unwrap(), LaurentPoly::zero());
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "t^", "2x", "1/0t", "t^1.5", "++1"] {
            assert!(LaurentPoly::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn division() {
        let p = LaurentPoly::parse("t^3 - 1").unwrap();
        let d = LaurentPoly::parse("t - 1").unwrap();
        let (q, r) = p.div_rem(&d);
        assert!(r.is_zero());
        assert_eq!(q.to_string(), "t^2+t+1");
        let (_, r) = LaurentPoly::parse("t^2").unwrap().div_rem(&LaurentPoly::parse("t^2+2t+1").unwrap());
        assert_eq!(r.to_string(), "-2t-1");
    }
}
