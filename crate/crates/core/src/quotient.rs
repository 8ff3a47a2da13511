//! The quotient rings `Q[t, t^-1] / <P>` for polynomials `P` with `P(0) != 0`.
//!
//! Classes are represented by their unique remainder of degree `< deg P` in
//! nonnegative powers of `t`; negative powers are cleared through the
//! inverse of `t`, which exists because the constant term of `P` is nonzero.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::scalar::Scalar;

#[derive(Debug)]
struct RingData {
    modulus: LaurentPoly,
    degree: usize,
    t_inverse: LaurentPoly,
    /// `t^s mod P` for `s in 0..2d-1`, as dense coefficient vectors.
    power_table: Vec<Vec<Scalar>>,
}

/// Handle to `Q[t^±1]/<P>` with `P` normalized monic. Cheap to clone.
#[derive(Clone, Debug)]
pub struct QuotientRing(Arc<RingData>);

impl PartialEq for QuotientRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.modulus == other.0.modulus
    }
}
impl Eq for QuotientRing {}

impl QuotientRing {
    pub fn new(modulus: &LaurentPoly) -> Result<Self> {
        let invalid = || Error::InvalidModulus(modulus.to_string());
        if modulus.is_zero() || !modulus.is_polynomial() {
            return Err(invalid());
        }
        let degree = modulus.degree().unwrap();
        if degree < 1 || modulus.coeff(0).is_zero() {
            return Err(invalid());
        }
        let monic = modulus.monic();
        let d = degree as usize;
        // t * (t^{d-1} + p_{d-1} t^{d-2} + ... + p_1) = -p_0  (mod P)
        let p0 = monic.coeff(0);
        let cofactor = LaurentPoly::from_terms((1..=degree).map(|e| (e - 1, monic.coeff(e))));
        let t_inverse = cofactor.scale(&(-p0.recip()));

        let mut ring = RingData {
            modulus: monic,
            degree: d,
            t_inverse,
            power_table: Vec::new(),
        };
        ring.power_table = (0..(2 * d).saturating_sub(1))
            .map(|s| {
                let r = LaurentPoly::monomial(Scalar::one(), s as i64).div_rem(&ring.modulus).1;
                dense(&r, d)
            })
            .collect();
        Ok(Self(Arc::new(ring)))
    }

    pub fn modulus(&self) -> &LaurentPoly {
        &self.0.modulus
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    /// Unique remainder of degree `< deg P` congruent to `p`.
    pub fn reduce_poly(&self, p: &LaurentPoly) -> LaurentPoly {
        let Some(val) = p.valuation() else {
            return LaurentPoly::zero();
        };
        if val >= 0 {
            return p.div_rem(&self.0.modulus).1;
        }
        // p = t^val * q with q a polynomial
        let q = p.shift(-val).div_rem(&self.0.modulus).1;
        let mut acc = q;
        for _ in 0..(-val) {
            acc = (&acc * &self.0.t_inverse).div_rem(&self.0.modulus).1;
        }
        acc
    }

    pub fn reduce(&self, p: &LaurentPoly) -> QuotientClass {
        QuotientClass {
            ring: self.clone(),
            rep: self.reduce_poly(p),
        }
    }

    /// Coordinates of `t^j` in the residue basis `1, t, ..., t^{d-1}`.
    pub fn power_coords(&self, j: i64) -> Vec<Scalar> {
        if (0..self.0.power_table.len() as i64).contains(&j) {
            return self.0.power_table[j as usize].clone();
        }
        dense(&self.reduce_poly(&LaurentPoly::monomial(Scalar::one(), j)), self.0.degree)
    }

    /// Coordinates of `t^a * t^b` for residues `a, b < d`.
    pub fn product_coords(&self, a: usize, b: usize) -> &[Scalar] {
        &self.0.power_table[a + b]
    }

    pub fn class_from_coords(&self, coords: &[Scalar]) -> QuotientClass {
        QuotientClass {
            ring: self.clone(),
            rep: LaurentPoly::from_coeffs(coords.iter().cloned()),
        }
    }
}

fn dense(p: &LaurentPoly, d: usize) -> Vec<Scalar> {
    (0..d as i64).map(|e| p.coeff(e)).collect()
}

/// An element of `Q[t^±1]/<P>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientClass {
    ring: QuotientRing,
    rep: LaurentPoly,
}

impl QuotientClass {
    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    pub fn representative(&self) -> &LaurentPoly {
        &self.rep
    }

    pub fn coords(&self) -> Vec<Scalar> {
        dense(&self.rep, self.ring.degree())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::MixedAlgebras);
        }
        Ok(self.ring.reduce(&(&self.rep * &other.rep)))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::MixedAlgebras);
        }
        Ok(QuotientClass {
            ring: self.ring.clone(),
            rep: &self.rep + &other.rep,
        })
    }
}

impl fmt::Display for QuotientClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

/// Reduces `p` modulo `modulus`.
pub fn quot_reduce(p: &LaurentPoly, modulus: &LaurentPoly) -> Result<QuotientClass> {
    Ok(QuotientRing::new(modulus)?.reduce(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn inverse_of_t() {
        let r = quot_reduce(&lp("t^-1"), &lp("t^2+2t+1")).unwrap();
        assert_eq!(r.representative(), &lp("-t-2"));
        // oracle: t * (-t - 2) = -t^2 - 2t = 1 - (t+1)^2
        let back = r.mul(&quot_reduce(&lp("t"), &lp("t^2+2t+1")).unwrap()).unwrap();
        assert_eq!(back.representative(), &LaurentPoly::one());
    }

    #[test]
    fn examples() {
        assert_eq!(quot_reduce(&lp("t^2"), &lp("t^2+2t+1")).unwrap().representative(), &lp("-2t-1"));
        assert_eq!(quot_reduce(&lp("1"), &lp("t-1")).unwrap().representative(), &lp("1"));
        assert_eq!(quot_reduce(&lp("t^-5 + t^7"), &lp("t-1")).unwrap().representative(), &lp("2"));
    }

    #[test]
    fn rejects_bad_moduli() {
        assert!(QuotientRing::new(&lp("t^2+t")).is_err());
        assert!(QuotientRing::new(&lp("3")).is_err());
        assert!(QuotientRing::new(&lp("t^-1+1")).is_err());
        assert!(QuotientRing::new(&LaurentPoly::zero()).is_err());
    }

    #[test]
    fn power_coords_match_reduction() {
        let ring = QuotientRing::new(&lp("2t^3 - t + 5")).unwrap();
        for j in -6..9 {
            let direct = ring.reduce(&LaurentPoly::monomial(Scalar::one(), j));
            assert_eq!(ring.class_from_coords(&ring.power_coords(j)), direct, "t^{j}");
        }
    }
}
