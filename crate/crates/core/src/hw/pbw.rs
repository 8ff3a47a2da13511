//! PBW monomials in the lowering generators `d_{-i} ⊗ t^j` of a quotient
//! algebra, their total order, and weight-space enumeration.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::lie::Basis;
use crate::scalar::Scalar;

/// The lowering generator `d_{-depth} ⊗ t^residue`. The derived order is the
/// lexicographic order on `(depth, residue)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factor {
    pub depth: u32,
    pub residue: u32,
}

impl Factor {
    pub fn new(depth: u32, residue: u32) -> Self {
        assert!(depth >= 1, "lowering generators have positive depth");
        Self { depth, residue }
    }

    pub fn as_basis(&self) -> Basis {
        Basis::D {
            degree: -(self.depth as i64),
            loop_index: self.residue as i64,
        }
    }
}

/// An ordered product `(d_{-i_1} ⊗ t^{j_1}) ... (d_{-i_r} ⊗ t^{j_r})` with
/// `(i_s, j_s) ⪰ (i_{s+1}, j_{s+1})`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PBWMonomial {
    factors: Vec<Factor>,
}

impl PBWMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// Sorts the factors into PBW order.
    pub fn new(mut factors: Vec<Factor>) -> Self {
        factors.sort_unstable_by(|a, b| b.cmp(a));
        Self { factors }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Number of factors.
    pub fn height(&self) -> usize {
        self.factors.len()
    }

    /// Sum of the factor depths.
    pub fn depth(&self) -> u32 {
        self.factors.iter().map(|f| f.depth).sum()
    }

    pub fn first(&self) -> Option<Factor> {
        self.factors.first().copied()
    }

    pub fn rest(&self) -> PBWMonomial {
        Self {
            factors: self.factors.get(1..).unwrap_or(&[]).to_vec(),
        }
    }

    /// `f * self`; caller guarantees `f` is not below the current first factor.
    pub(crate) fn prepend(&self, f: Factor) -> PBWMonomial {
        debug_assert!(self.first().is_none_or(|g| f >= g));
        let mut factors = Vec::with_capacity(self.factors.len() + 1);
        factors.push(f);
        factors.extend_from_slice(&self.factors);
        Self { factors }
    }

    /// Whether the monomial lies in the height filtration piece `U^r`.
    pub fn within_height(&self, r: usize) -> bool {
        self.height() <= r
    }
}

impl Ord for PBWMonomial {
    /// Compares `(r, i_1, ..., i_r, j_1, ..., j_r)` lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        self.height()
            .cmp(&other.height())
            .then_with(|| self.factors.iter().map(|f| f.depth).cmp(other.factors.iter().map(|f| f.depth)))
            .then_with(|| {
                self.factors
                    .iter()
                    .map(|f| f.residue)
                    .cmp(other.factors.iter().map(|f| f.residue))
            })
    }
}

impl PartialOrd for PBWMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PBWMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for factor in &self.factors {
            write!(f, "d(-{},{})", factor.depth, factor.residue)?;
        }
        Ok(())
    }
}

pub fn pbw_compare(a: &PBWMonomial, b: &PBWMonomial) -> Ordering {
    a.cmp(b)
}

/// Highest term of a linear combination, or `None` for zero
/// (whose height is -1 by convention).
pub fn highest_term(x: &BTreeMap<PBWMonomial, Scalar>) -> Option<(Scalar, PBWMonomial)> {
    x.iter()
        .rev()
        .find(|(_, c)| !c.is_zero())
        .map(|(m, c)| (c.clone(), m.clone()))
}

/// Height of a combination: that of its highest term, -1 for zero.
pub fn height(x: &BTreeMap<PBWMonomial, Scalar>) -> i64 {
    highest_term(x).map_or(-1, |(_, m)| m.height() as i64)
}

/// All PBW monomials of total depth `n` with residues `0..residues`, in
/// descending order.
pub fn enumerate_monomials(residues: u32, n: u32) -> Vec<PBWMonomial> {
    fn extend(
        remaining: u32,
        bound: Factor,
        residues: u32,
        prefix: &mut Vec<Factor>,
        out: &mut Vec<PBWMonomial>,
    ) {
        if remaining == 0 {
            out.push(PBWMonomial {
                factors: prefix.clone(),
            });
            return;
        }
        for depth in (1..=remaining.min(bound.depth)).rev() {
            let top = if depth == bound.depth { bound.residue } else { residues - 1 };
            for residue in (0..=top).rev() {
                let f = Factor { depth, residue };
                prefix.push(f);
                extend(remaining - depth, f, residues, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    if residues == 0 {
        if n == 0 {
            out.push(PBWMonomial::one());
        }
        return out;
    }
    let top = Factor {
        depth: n.max(1),
        residue: residues - 1,
    };
    extend(n, top, residues, &mut Vec::new(), &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Coefficient of `q^n` in `prod_{i>=1} (1 - q^i)^{-colors}`.
pub fn pbw_dimension(colors: u32, n: usize) -> u128 {
    let mut coeffs = vec![0u128; n + 1];
    coeffs[0] = 1;
    for part in 1..=n {
        for _ in 0..colors {
            for total in part..=n {
                coeffs[total] += coeffs[total - part];
            }
        }
    }
    coeffs[n]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn mono(fs: &[(u32, u32)]) -> PBWMonomial {
        PBWMonomial::new(fs.iter().map(|&(d, r)| Factor::new(d, r)).collect())
    }

    #[test]
    fn ordering_examples() {
        assert_eq!(pbw_compare(&mono(&[(1, 0), (1, 0)]), &mono(&[(2, 1)])), Ordering::Greater);
        assert_eq!(pbw_compare(&mono(&[(2, 0)]), &mono(&[(1, 0)])), Ordering::Greater);
        let m = mono(&[(3, 1), (1, 0)]);
        assert_eq!(pbw_compare(&m, &m), Ordering::Equal);
        // depths before residues
        assert_eq!(pbw_compare(&mono(&[(2, 0), (1, 0)]), &mono(&[(1, 1), (1, 1)])), Ordering::Greater);
    }

    #[test]
    fn highest_term_examples() {
        let mut x = BTreeMap::new();
        x.insert(mono(&[(1, 0)]), int(3));
        x.insert(mono(&[(2, 0)]), int(5));
        assert_eq!(highest_term(&x), Some((int(5), mono(&[(2, 0)]))));
        assert_eq!(height(&x), 1);
        assert_eq!(highest_term(&BTreeMap::new()), None);
        assert_eq!(height(&BTreeMap::new()), -1);
        let single = BTreeMap::from([(mono(&[(1, 1), (1, 0)]), int(-2))]);
        assert_eq!(highest_term(&single), Some((int(-2), mono(&[(1, 1), (1, 0)]))));
    }

    #[test]
    fn enumeration_examples() {
        let two = enumerate_monomials(2, 2);
        let expected = vec![
            mono(&[(1, 1), (1, 1)]),
            mono(&[(1, 1), (1, 0)]),
            mono(&[(1, 0), (1, 0)]),
            mono(&[(2, 1)]),
            mono(&[(2, 0)]),
        ];
        assert_eq!(two, expected);
        assert_eq!(enumerate_monomials(3, 0), vec![PBWMonomial::one()]);
        assert_eq!(enumerate_monomials(1, 3).len(), 3);
    }

    #[test]
    fn dimension_examples() {
        let d1: Vec<u128> = (0..=6).map(|n| pbw_dimension(1, n)).collect();
        assert_eq!(d1, vec![1, 1, 2, 3, 5, 7, 11]);
        let d2: Vec<u128> = (0..=4).map(|n| pbw_dimension(2, n)).collect();
        assert_eq!(d2, vec![1, 2, 5, 10, 20]);
        assert_eq!(pbw_dimension(7, 0), 1);
        assert_eq!(pbw_dimension(0, 3), 0);
    }

    #[test]
    fn enumeration_matches_closed_form() {
        for d in 1..=3u32 {
            for n in 0..=8u32 {
                let listed = enumerate_monomials(d, n);
                assert_eq!(listed.len() as u128, pbw_dimension(d, n as usize), "d={d} n={n}");
                assert!(listed.iter().all(|m| m.depth() == n));
                assert!(listed.windows(2).all(|w| w[0] > w[1]));
            }
        }
    }
}
