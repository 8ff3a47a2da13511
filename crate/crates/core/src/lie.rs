//! The loop-Virasoro algebra `Vir ⊗ Q[t^±1]` and its quotients
//! `Vir ⊗ Q[t^±1]/<P>`.
//!
//! Structure constants:
//! `[d_i(j), d_k(l)] = (k - i) d_{i+k}(j+l) + δ_{i+k,0} (i^3 - i)/12 c(j+l)`,
//! with every `c(j)` central.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::quotient::QuotientRing;
use crate::scalar::{format_scalar, int, parse_scalar, ratio, Scalar};

/// A basis symbol. In quotient mode `loop_index` is a residue `0..deg P`
/// standing for `t^loop_index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    D { degree: i64, loop_index: i64 },
    C { loop_index: i64 },
}

impl Basis {
    /// Position in the `Z`-gradation; central symbols sit in degree 0.
    pub fn degree(&self) -> i64 {
        match self {
            Basis::D { degree, .. } => *degree,
            Basis::C { .. } => 0,
        }
    }

    pub fn loop_index(&self) -> i64 {
        match self {
            Basis::D { loop_index, .. } | Basis::C { loop_index } => *loop_index,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::D { degree, loop_index } => write!(f, "d({degree},{loop_index})"),
            Basis::C { loop_index } => write!(f, "c({loop_index})"),
        }
    }
}

/// Which algebra an element lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Algebra {
    Full,
    Quotient(QuotientRing),
}

impl Algebra {
    pub fn quotient(modulus: &LaurentPoly) -> Result<Self> {
        Ok(Algebra::Quotient(QuotientRing::new(modulus)?))
    }

    /// `d_i ⊗ t^j`, reduced in quotient mode.
    pub fn d(&self, degree: i64, loop_exp: i64) -> LieElement {
        self.symbol(loop_exp, |loop_index| Basis::D { degree, loop_index })
    }

    /// `c ⊗ t^j`, reduced in quotient mode.
    pub fn c(&self, loop_exp: i64) -> LieElement {
        self.symbol(loop_exp, |loop_index| Basis::C { loop_index })
    }

    fn symbol(&self, loop_exp: i64, make: impl Fn(i64) -> Basis) -> LieElement {
        let mut el = LieElement::zero(self.clone());
        match self {
            Algebra::Full => el.add_term(make(loop_exp), Scalar::one()),
            Algebra::Quotient(ring) => {
                for (r, c) in ring.power_coords(loop_exp).into_iter().enumerate() {
                    el.add_term(make(r as i64), c);
                }
            }
        }
        el
    }

    /// `x ⊗ t^a · t^b` as loop-coordinate pairs.
    fn multiply_loops(&self, a: i64, b: i64) -> Vec<(i64, Scalar)> {
        match self {
            Algebra::Full => vec![(a + b, Scalar::one())],
            Algebra::Quotient(ring) => ring
                .product_coords(a as usize, b as usize)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(r, c)| (r as i64, c.clone()))
                .collect(),
        }
    }

    /// Bracket of two basis symbols as `(symbol, coefficient)` pairs.
    pub fn bracket_basis(&self, x: Basis, y: Basis) -> Vec<(Basis, Scalar)> {
        let (Basis::D { degree: i, loop_index: j }, Basis::D { degree: k, loop_index: l }) = (x, y)
        else {
            return Vec::new();
        };
        let mut out = Vec::new();
        let structure = int(k - i);
        let central = if i + k == 0 { ratio(i * i * i - i, 12) } else { Scalar::zero() };
        for (m, c) in self.multiply_loops(j, l) {
            if !structure.is_zero() {
                out.push((Basis::D { degree: i + k, loop_index: m }, &structure * &c));
            }
            if !central.is_zero() {
                out.push((Basis::C { loop_index: m }, &central * &c));
            }
        }
        out
    }
}

/// A finite linear combination of basis symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieElement {
    algebra: Algebra,
    terms: BTreeMap<Basis, Scalar>,
}

impl LieElement {
    pub fn zero(algebra: Algebra) -> Self {
        Self {
            algebra,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(algebra: Algebra, terms: impl IntoIterator<Item = (Basis, Scalar)>) -> Self {
        let mut out = Self::zero(algebra);
        for (b, c) in terms {
            out.add_term(b, c);
        }
        out
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn add_term(&mut self, b: Basis, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(b).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&b);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (Basis, &Scalar)> + '_ {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn coeff(&self, b: Basis) -> Scalar {
        self.terms.get(&b).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all terms, `None` if zero or inhomogeneous.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degrees = self.terms.keys().map(Basis::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.algebra.clone());
        for (b, x) in &self.terms {
            out.add_term(*b, x * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.algebra != other.algebra {
            return Err(Error::MixedAlgebras);
        }
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Scalar::one()))
    }

    /// Parses the inline grammar `[q*]d(i,j)` / `[q*]c(j)` joined by `+`/`-`.
    /// Loop exponents are reduced when `algebra` is a quotient.
    pub fn parse(s: &str, algebra: &Algebra) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |tok: &str| Error::Parse {
            what: "Lie element",
            token: tok.to_string(),
        };
        if compact.is_empty() {
            return Err(err(s));
        }
        let mut out = Self::zero(algebra.clone());
        if compact == "0" {
            return Ok(out);
        }
        // split at top-level signs (outside parentheses, not after '*' or '/' or ',')
        let bytes = compact.as_bytes();
        let mut depth = 0i32;
        let mut start = 0;
        let mut pieces = Vec::new();
        for (idx, &b) in bytes.iter().enumerate() {
            match b {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b'+' | b'-' if depth == 0 && idx > start => {
                    let prev = bytes[idx - 1];
                    if prev != b'*' && prev != b'/' {
                        pieces.push(&compact[start..idx]);
                        start = idx;
                    }
                }
                _ => {}
            }
        }
        pieces.push(&compact[start..]);
        for piece in pieces {
            let (sign, body) = match piece.as_bytes()[0] {
                b'-' => (-Scalar::one(), &piece[1..]),
                b'+' => (Scalar::one(), &piece[1..]),
                _ => (Scalar::one(), piece),
            };
            let (coeff, sym) = match body.rfind('*') {
                Some(pos) => (parse_scalar(&body[..pos]).map_err(|_| err(piece))?, &body[pos + 1..]),
                None => (Scalar::one(), body),
            };
            let args = |name: char| -> Option<Vec<i64>> {
                let inner = sym.strip_prefix(name)?.strip_prefix('(')?.strip_suffix(')')?;
                inner.split(',').map(|a| a.parse::<i64>().ok()).collect()
            };
            let symbol = match (args('d'), args('c')) {
                (Some(a), _) if a.len() == 2 => algebra.d(a[0], a[1]),
                (_, Some(a)) if a.len() == 1 => algebra.c(a[0]),
                _ => return Err(err(piece)),
            };
            out = out.add(&symbol.scale(&(sign * coeff)))?;
        }
        Ok(out)
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (b, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "{}*{b}", format_scalar(&mag))?;
            }
        }
        Ok(())
    }
}

/// Bilinear extension of the structure constants.
pub fn bracket(x: &LieElement, y: &LieElement) -> Result<LieElement> {
    if x.algebra != y.algebra {
        return Err(Error::MixedAlgebras);
    }
    let mut out = LieElement::zero(x.algebra.clone());
    for (bx, cx) in &x.terms {
        for (by, cy) in &y.terms {
            let cxy = cx * cy;
            for (b, c) in x.algebra.bracket_basis(*bx, *by) {
                out.add_term(b, c * &cxy);
            }
        }
    }
    Ok(out)
}

/// A triple whose Jacobi sum did not vanish.
#[derive(Clone, Debug)]
pub struct JacobiViolation {
    pub triple: [LieElement; 3],
    pub sum: LieElement,
}

#[derive(Clone, Debug)]
pub struct JacobiReport {
    pub triples_checked: usize,
    pub violations: Vec<JacobiViolation>,
}

impl JacobiReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The generators `d_i(j)` and `c(j)` for degrees and loop exponents in
/// the given windows (reduced in quotient mode).
pub fn window_generators(
    algebra: &Algebra,
    degrees: std::ops::RangeInclusive<i64>,
    loops: std::ops::RangeInclusive<i64>,
) -> Vec<LieElement> {
    let mut gens = Vec::new();
    for i in degrees {
        for j in loops.clone() {
            gens.push(algebra.d(i, j));
        }
    }
    for j in loops {
        gens.push(algebra.c(j));
    }
    gens
}

/// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]` over every ordered triple of window
/// generators.
pub fn jacobi_check(
    algebra: &Algebra,
    degrees: std::ops::RangeInclusive<i64>,
    loops: std::ops::RangeInclusive<i64>,
) -> JacobiReport {
    let gens = window_generators(algebra, degrees, loops);
    jacobi_check_elements(&gens)
}

pub fn jacobi_check_elements(gens: &[LieElement]) -> JacobiReport {
    let n = gens.len();
    let inner: Vec<Vec<LieElement>> = gens
        .iter()
        .map(|y| gens.iter().map(|z| bracket(y, z).expect("same algebra")).collect())
        .collect();
    // [gens[a], s] for every symbol s that shows up in an inner bracket
    let mut outer: Vec<HashMap<Basis, Vec<(Basis, Scalar)>>> = vec![HashMap::new(); n];
    for (a, g) in gens.iter().enumerate() {
        for s in inner.iter().flatten().flat_map(|e| e.terms.keys()) {
            outer[a].entry(*s).or_insert_with(|| {
                let sym = LieElement::from_terms(g.algebra.clone(), [(*s, Scalar::one())]);
                bracket(g, &sym).expect("same algebra").terms.into_iter().collect()
            });
        }
    }
    let mut acc: HashMap<Basis, Scalar> = HashMap::new();
    let mut violations = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                acc.clear();
                for (x, yz) in [(a, &inner[b][c]), (b, &inner[c][a]), (c, &inner[a][b])] {
                    for (s, coeff) in &yz.terms {
                        for (t, v) in &outer[x][s] {
                            *acc.entry(*t).or_insert_with(Scalar::zero) += coeff * v;
                        }
                    }
                }
                if acc.values().any(|v| !v.is_zero()) {
                    let mut sum = LieElement::zero(gens[a].algebra.clone());
                    for (t, v) in acc.drain() {
                        sum.add_term(t, v);
                    }
                    violations.push(JacobiViolation {
                        triple: [gens[a].clone(), gens[b].clone(), gens[c].clone()],
                        sum,
                    });
                }
            }
        }
    }
    JacobiReport {
        triples_checked: n * n * n,
        violations,
    }
}
