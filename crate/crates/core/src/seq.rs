//! Two-sided integer-indexed sequences: exp-polynomial and finitely supported,
//! together with their minimal annihilating polynomials.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::scalar::{int, pow, Scalar};

/// One summand `p(k) * base^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExpTerm {
    base: Scalar,
    /// `poly[m]` is the coefficient of `k^m`; trimmed, never all zero.
    poly: Vec<Scalar>,
}

impl ExpTerm {
    pub fn base(&self) -> &Scalar {
        &self.base
    }

    pub fn poly(&self) -> &[Scalar] {
        &self.poly
    }

    pub fn poly_degree(&self) -> usize {
        self.poly.len() - 1
    }
}

/// `k -> sum_i p_i(k) a_i^k` in canonical form: bases distinct, nonzero and
/// sorted ascending; every polynomial nonzero and trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExpPolySeq {
    terms: Vec<ExpTerm>,
}

impl ExpPolySeq {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Builds the canonical form from `(base, poly coefficients)` pairs,
    /// merging equal bases.
    pub fn new<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Scalar, Vec<Scalar>)>,
    {
        let mut merged: BTreeMap<Scalar, Vec<Scalar>> = BTreeMap::new();
        for (base, poly) in terms {
            if base.is_zero() {
                return Err(Error::Zero("exp-polynomial base"));
            }
            let slot = merged.entry(base).or_default();
            if slot.len() < poly.len() {
                slot.resize(poly.len(), Scalar::zero());
            }
            for (s, c) in slot.iter_mut().zip(poly) {
                *s += c;
            }
        }
        let terms = merged
            .into_iter()
            .filter_map(|(base, mut poly)| {
                while poly.last().is_some_and(Zero::is_zero) {
                    poly.pop();
                }
                (!poly.is_empty()).then_some(ExpTerm { base, poly })
            })
            .collect();
        Ok(Self { terms })
    }

    /// `c * base^k`
    pub fn geometric(c: Scalar, base: Scalar) -> Result<Self> {
        Self::new([(base, vec![c])])
    }

    pub fn terms(&self) -> &[ExpTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, k: i64) -> Scalar {
        let kk = int(k);
        let mut total = Scalar::zero();
        for term in &self.terms {
            // Horner in k
            let p = term
                .poly
                .iter()
                .rev()
                .fold(Scalar::zero(), |acc, c| acc * &kk + c);
            total += p * pow(&term.base, k);
        }
        total
    }

    pub fn add(&self, other: &Self) -> Self {
        let all = self
            .terms
            .iter()
            .chain(&other.terms)
            .map(|t| (t.base.clone(), t.poly.clone()));
        Self::new(all).expect("bases of canonical sequences are nonzero")
    }

    /// Restriction to the terms with the given base.
    pub fn part(&self, base: &Scalar) -> Self {
        Self {
            terms: self.terms.iter().filter(|t| &t.base == base).cloned().collect(),
        }
    }

    pub fn annihilator(&self) -> Annihilator {
        Annihilator {
            factors: self
                .terms
                .iter()
                .map(|t| (t.base.clone(), t.poly.len() as u32))
                .collect(),
        }
    }
}

/// Finitely supported sequence; no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FiniteSeq {
    values: BTreeMap<i64, Scalar>,
}

impl FiniteSeq {
    pub fn new<I: IntoIterator<Item = (i64, Scalar)>>(values: I) -> Self {
        let mut map = BTreeMap::new();
        for (k, v) in values {
            let slot = map.entry(k).or_insert_with(Scalar::zero);
            *slot += v;
        }
        map.retain(|_, v: &mut Scalar| !v.is_zero());
        Self { values: map }
    }

    /// The sequence equal to 1 at `k` and 0 elsewhere.
    pub fn indicator(k: i64) -> Self {
        Self::new([(k, Scalar::one())])
    }

    pub fn values(&self) -> impl Iterator<Item = (i64, &Scalar)> + '_ {
        self.values.iter().map(|(k, v)| (*k, v))
    }

    pub fn support(&self) -> Option<(i64, i64)> {
        Some((*self.values.keys().next()?, *self.values.keys().next_back()?))
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn eval(&self, k: i64) -> Scalar {
        self.values.get(&k).cloned().unwrap_or_else(Scalar::zero)
    }
}

/// The two accepted representations of a sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Sequence {
    ExpPoly(ExpPolySeq),
    Finite(FiniteSeq),
}

impl Sequence {
    pub fn zero() -> Self {
        Sequence::ExpPoly(ExpPolySeq::zero())
    }

    pub fn eval(&self, k: i64) -> Scalar {
        match self {
            Sequence::ExpPoly(s) => s.eval(k),
            Sequence::Finite(s) => s.eval(k),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Sequence::ExpPoly(s) => s.is_zero(),
            Sequence::Finite(s) => s.is_zero(),
        }
    }

    /// Minimal annihilator in factored form; `None` when no polynomial
    /// with nonzero constant term kills the sequence.
    pub fn annihilator(&self) -> Option<Annihilator> {
        match self {
            Sequence::ExpPoly(s) => Some(s.annihilator()),
            // A recurrence with P(0) != 0 run backwards from the top of a
            // finite support forces every value to vanish.
            Sequence::Finite(s) if s.is_zero() => Some(Annihilator::one()),
            Sequence::Finite(_) => None,
        }
    }

    /// `sum_j P_j f(k + j)`
    pub fn shifted_sum(&self, p: &LaurentPoly, k: i64) -> Scalar {
        p.terms()
            .map(|(j, c)| c * self.eval(k + j))
            .fold(Scalar::zero(), |a, b| a + b)
    }

    /// Whether `p` kills the sequence at every integer.
    ///
    /// Exact: for exp-polynomial sequences this is divisibility by the
    /// minimal annihilator; for finite ones the shifted sums are checked on
    /// every shift touching the support.
    pub fn is_annihilated_by(&self, p: &LaurentPoly) -> bool {
        if p.is_zero() {
            return true;
        }
        match self {
            Sequence::ExpPoly(s) => {
                let normalized = p.shift(-p.valuation().unwrap());
                normalized
                    .div_rem(&s.annihilator().to_poly())
                    .1
                    .is_zero()
            }
            Sequence::Finite(s) => match s.support() {
                None => true,
                Some((lo, hi)) => {
                    let (pl, ph) = (p.valuation().unwrap(), p.degree().unwrap());
                    (lo - ph..=hi - pl).all(|k| self.shifted_sum(p, k).is_zero())
                }
            },
        }
    }
}

impl From<ExpPolySeq> for Sequence {
    fn from(s: ExpPolySeq) -> Self {
        Sequence::ExpPoly(s)
    }
}

impl From<FiniteSeq> for Sequence {
    fn from(s: FiniteSeq) -> Self {
        Sequence::Finite(s)
    }
}

/// A monic polynomial `prod (t - a)^m` kept in factored form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Annihilator {
    factors: BTreeMap<Scalar, u32>,
}

impl Annihilator {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_factors<I: IntoIterator<Item = (Scalar, u32)>>(factors: I) -> Self {
        Self {
            factors: factors.into_iter().filter(|(_, m)| *m > 0).collect(),
        }
    }

    /// `(root, multiplicity)` pairs, roots ascending.
    pub fn factors(&self) -> impl Iterator<Item = (&Scalar, u32)> + '_ {
        self.factors.iter().map(|(a, m)| (a, *m))
    }

    pub fn degree(&self) -> u32 {
        self.factors.values().sum()
    }

    pub fn multiplicity(&self, root: &Scalar) -> u32 {
        self.factors.get(root).copied().unwrap_or(0)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        for (a, m) in &other.factors {
            let slot = factors.entry(a.clone()).or_insert(0);
            *slot = (*slot).max(*m);
        }
        Self { factors }
    }

    pub fn to_poly(&self) -> LaurentPoly {
        self.factors
            .iter()
            .fold(LaurentPoly::one(), |acc, (a, m)| &acc * &LaurentPoly::linear(a).pow(*m))
    }
}

/// Minimal monic annihilator with nonzero constant term, or `None`.
pub fn seq_annihilator(f: &Sequence) -> Option<LaurentPoly> {
    f.annihilator().map(|a| a.to_poly())
}

pub fn seq_eval(f: &Sequence, k: i64) -> Scalar {
    f.eval(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn alt_k() -> Sequence {
        ExpPolySeq::new([(int(-1), vec![int(0), int(1)])]).unwrap().into()
    }

    #[test]
    fn evaluation() {
        assert_eq!(alt_k().eval(3), int(-3));
        assert_eq!(Sequence::zero().eval(17), int(0));
        let two = Sequence::from(ExpPolySeq::geometric(int(1), int(2)).unwrap());
        assert_eq!(two.eval(-2), ratio(1, 4));
    }

    #[test]
    fn annihilators() {
        assert_eq!(seq_annihilator(&alt_k()).unwrap().to_string(), "t^2+2t+1");
        let two = Sequence::from(ExpPolySeq::geometric(int(1), int(2)).unwrap());
        assert_eq!(seq_annihilator(&two).unwrap().to_string(), "t-2");
        assert_eq!(seq_annihilator(&FiniteSeq::indicator(0).into()), None);
        assert_eq!(seq_annihilator(&Sequence::zero()).unwrap(), LaurentPoly::one());
        assert_eq!(seq_annihilator(&FiniteSeq::default().into()).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn canonical_merging() {
        let s = ExpPolySeq::new([
            (int(3), vec![int(1)]),
            (int(2), vec![int(1), int(0)]),
            (int(3), vec![int(-1), int(0), int(0)]),
        ])
        .unwrap();
        assert_eq!(s.terms().len(), 1);
        assert_eq!(s.terms()[0].base(), &int(2));
        assert_eq!(s.terms()[0].poly(), &[int(1)]);
        assert!(ExpPolySeq::new([(int(0), vec![int(1)])]).is_err());
    }

    #[test]
    fn annihilation_checks() {
        let p = LaurentPoly::parse("t^2+2t+1").unwrap();
        assert!(alt_k().is_annihilated_by(&p));
        assert!(alt_k().is_annihilated_by(&p.shift(-3)));
        assert!(!alt_k().is_annihilated_by(&LaurentPoly::parse("t+1").unwrap()));
        let ind = Sequence::from(FiniteSeq::indicator(2));
        assert!(!ind.is_annihilated_by(&p));
        assert!(Sequence::from(FiniteSeq::default()).is_annihilated_by(&p));
    }

    #[test]
    fn lcm_takes_max_multiplicity() {
        let a = Annihilator::from_factors([(int(2), 1), (int(3), 2)]);
        let b = Annihilator::from_factors([(int(3), 1), (int(5), 1)]);
        let l = a.lcm(&b);
        assert_eq!(l.degree(), 4);
        assert_eq!(l.multiplicity(&int(3)), 2);
    }
}
