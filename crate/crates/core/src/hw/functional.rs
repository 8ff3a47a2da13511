//! Highest-weight functionals on `L_0` and the criteria deciding when the
//! irreducible quotient is Harish-Chandra and when the Verma module is
//! reducible.

use std::ops::RangeInclusive;

use num_traits::One;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::seq::{Annihilator, ExpPolySeq, Sequence};

/// `k -> φ(d_0 ⊗ t^k)` and `k -> φ(c ⊗ t^k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HWFunctional {
    pub phi_d: Sequence,
    pub phi_c: Sequence,
}

impl HWFunctional {
    pub fn new(phi_d: impl Into<Sequence>, phi_c: impl Into<Sequence>) -> Self {
        Self {
            phi_d: phi_d.into(),
            phi_c: phi_c.into(),
        }
    }

    pub fn zero() -> Self {
        Self::new(Sequence::zero(), Sequence::zero())
    }

    /// The evaluation functional `φ(d_0(k)) = h e^k`, `φ(c(k)) = ċ e^k`.
    pub fn evaluation(central_charge: Scalar, h: Scalar, e: Scalar) -> Result<Self> {
        Ok(Self::new(
            ExpPolySeq::geometric(h, e.clone())?,
            ExpPolySeq::geometric(central_charge, e)?,
        ))
    }

    /// `φ(d_0)`, the highest weight.
    pub fn lambda(&self) -> Scalar {
        self.phi_d.eval(0)
    }

    /// Least common multiple of the two minimal annihilators.
    pub fn hc_annihilator(&self) -> Option<Annihilator> {
        Some(self.phi_d.annihilator()?.lcm(&self.phi_c.annihilator()?))
    }

    pub fn is_annihilated_by(&self, p: &LaurentPoly) -> bool {
        self.phi_d.is_annihilated_by(p) && self.phi_c.is_annihilated_by(p)
    }
}

/// The monic minimal `P` with `φ(d_0 ⊗ t^k P) = φ(c ⊗ t^k P) = 0` for all `k`,
/// or `None` when the irreducible quotient has an infinite-dimensional
/// weight space.
pub fn hc_test(phi: &HWFunctional) -> Option<LaurentPoly> {
    phi.hc_annihilator().map(|a| a.to_poly())
}

/// Outcome of the Verma reducibility criterion; `certificate` is present
/// exactly when the module is reducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VermaVerdict {
    pub certificate: Option<LaurentPoly>,
}

impl VermaVerdict {
    pub fn is_reducible(&self) -> bool {
        self.certificate.is_some()
    }
}

/// Reducible iff `phi_d` has an annihilator; `phi_c` plays no role.
pub fn verma_reducibility_test(phi: &HWFunctional) -> VermaVerdict {
    VermaVerdict {
        certificate: phi.phi_d.annihilator().map(|a| a.to_poly()),
    }
}

/// Searches for a nonzero `Q` supported in `window` with
/// `φ(d_0 ⊗ t^k Q) = 0` for every `k`, i.e. a singular vector
/// `(d_{-1} ⊗ Q) v_0` at depth one. Returns the one of least degree, made
/// monic.
pub fn depth1_singular_search(phi: &HWFunctional, window: RangeInclusive<i64>) -> Option<LaurentPoly> {
    let (lo, hi) = (*window.start(), *window.end());
    if lo > hi {
        return None;
    }
    let f = &phi.phi_d;
    // Shifts k at which sum_j Q_j f(k+j) has to vanish.
    let shifts: Vec<i64> = match f {
        // The shifted sums form a sequence killed by the annihilator of f,
        // so `deg` consecutive zeros force all of them to vanish.
        Sequence::ExpPoly(s) => (0..s.annihilator().degree() as i64).collect(),
        Sequence::Finite(s) => match s.support() {
            None => Vec::new(),
            Some((a, b)) => (a - hi..=b - lo).collect(),
        },
    };
    for top in lo..=hi {
        let cols = (top - lo + 1) as usize;
        let rows: Vec<Vec<Scalar>> = shifts
            .iter()
            .map(|k| (lo..=top).map(|j| f.eval(k + j)).collect())
            .collect();
        let kernel = Matrix::from_rows_with_cols(rows, cols).kernel_basis();
        if let Some(v) = kernel.into_iter().next() {
            let q = LaurentPoly::from_terms(v.into_iter().enumerate().map(|(o, c)| (lo + o as i64, c)));
            if !q.is_zero() {
                return Some(q.monic());
            }
        }
    }
    None
}

/// One coprime factor `(t - root)^multiplicity` of the certificate together
/// with the part of φ it annihilates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionalFactor {
    pub root: Scalar,
    pub multiplicity: u32,
    pub functional: HWFunctional,
}

impl FunctionalFactor {
    pub fn modulus(&self) -> LaurentPoly {
        LaurentPoly::linear(&self.root).pow(self.multiplicity)
    }
}

/// Splits a Harish-Chandra φ into the summands belonging to the coprime
/// factors `(t - a_i)^{n_i}` of its certificate.
pub fn split_functional(phi: &HWFunctional) -> Result<Vec<FunctionalFactor>> {
    let ann = phi.hc_annihilator().ok_or(Error::NotHarishChandra)?;
    let as_exp = |s: &Sequence| -> ExpPolySeq {
        match s {
            Sequence::ExpPoly(e) => e.clone(),
            // only the zero finite sequence has an annihilator
            Sequence::Finite(_) => ExpPolySeq::zero(),
        }
    };
    let (pd, pc) = (as_exp(&phi.phi_d), as_exp(&phi.phi_c));
    Ok(ann
        .factors()
        .map(|(root, multiplicity)| FunctionalFactor {
            root: root.clone(),
            multiplicity,
            functional: HWFunctional::new(pd.part(root), pc.part(root)),
        })
        .collect())
}

/// Modulus to build the truncated Verma module of φ on. When the certificate
/// is the unit polynomial (φ = 0) any admissible modulus works; `t - 1` is used.
pub fn working_modulus(phi: &HWFunctional) -> Result<LaurentPoly> {
    let p = hc_test(phi).ok_or(Error::NotHarishChandra)?;
    if p.degree() == Some(0) {
        Ok(LaurentPoly::linear(&Scalar::one()))
    } else {
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use crate::seq::FiniteSeq;

    fn example() -> HWFunctional {
        HWFunctional::new(
            ExpPolySeq::new([(int(-1), vec![int(0), int(1)])]).unwrap(),
            Sequence::zero(),
        )
    }

    fn lp(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn hc_examples() {
        assert_eq!(hc_test(&example()), Some(lp("t^2+2t+1")));
        let ev = HWFunctional::evaluation(int(2), ratio(1, 3), int(5)).unwrap();
        assert_eq!(hc_test(&ev), Some(lp("t-5")));
        let ind = HWFunctional::new(FiniteSeq::indicator(0), Sequence::zero());
        assert_eq!(hc_test(&ind), None);
        let only_c = HWFunctional::new(Sequence::zero(), FiniteSeq::indicator(3));
        assert_eq!(hc_test(&only_c), None);
    }

    #[test]
    fn verma_examples() {
        assert_eq!(verma_reducibility_test(&example()).certificate, Some(lp("t^2+2t+1")));
        let ind = HWFunctional::new(FiniteSeq::indicator(0), Sequence::zero());
        assert!(!verma_reducibility_test(&ind).is_reducible());
        let zero = verma_reducibility_test(&HWFunctional::zero());
        assert_eq!(zero.certificate, Some(LaurentPoly::one()));
        // phi_c does not matter
        let c_finite = HWFunctional::new(example().phi_d, FiniteSeq::indicator(1));
        assert!(verma_reducibility_test(&c_finite).is_reducible());
        assert_eq!(hc_test(&c_finite), None);
    }

    #[test]
    fn singular_search_examples() {
        assert_eq!(depth1_singular_search(&example(), 0..=2), Some(lp("t^2+2t+1")));
        assert_eq!(depth1_singular_search(&example(), 0..=1), None);
        assert_eq!(depth1_singular_search(&example(), -3..=1), Some(lp("1+2t^-1+t^-2").shift(-1)));
        let ind = HWFunctional::new(FiniteSeq::indicator(0), Sequence::zero());
        for w in 0..=8 {
            assert_eq!(depth1_singular_search(&ind, -4..=(w - 4)), None);
        }
        assert_eq!(depth1_singular_search(&HWFunctional::zero(), 0..=3), Some(LaurentPoly::one()));
    }

    #[test]
    fn split_examples() {
        let two_bases = HWFunctional::new(
            ExpPolySeq::new([(int(2), vec![int(1)]), (int(3), vec![int(1)])]).unwrap(),
            Sequence::zero(),
        );
        let parts = split_functional(&two_bases).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].modulus(), lp("t-2"));
        assert_eq!(parts[1].modulus(), lp("t-3"));
        for k in -5..=5 {
            let sum = parts[0].functional.phi_d.eval(k) + parts[1].functional.phi_d.eval(k);
            assert_eq!(sum, two_bases.phi_d.eval(k));
        }
        let single = split_functional(&example()).unwrap();
        assert_eq!(single.len(), 1);
        let sq = HWFunctional::new(
            ExpPolySeq::new([(int(2), vec![int(1), int(1)])]).unwrap(),
            Sequence::zero(),
        );
        let parts = split_functional(&sq).unwrap();
        assert_eq!(parts[0].modulus(), lp("t^2-4t+4"));
        let ind = HWFunctional::new(FiniteSeq::indicator(0), Sequence::zero());
        assert_eq!(split_functional(&ind), Err(Error::NotHarishChandra));
    }
}
