//! Verma modules over the truncated algebras `L/<P>` and their irreducible
//! quotients.
//!
//! Vectors of the depth-`n` weight space are coordinate vectors in the PBW
//! basis returned by [`VermaQuotientModule::weight_space_basis`]. Generators
//! act by straightening: a generator is commuted rightwards through the
//! PBW factors until it is either absorbed into an ordered monomial, kills
//! `v_0` (positive degree) or is evaluated by φ (degree zero).
//!
//! The maximal submodule is built depth by depth: `J_0 = 0`, and `J_n` is
//! the set of vectors sent into `J_{n-1}` by every `d_1 ⊗ t^j` and into
//! `J_{n-2}` by every `d_2 ⊗ t^j`. Those generate `L_+` of the quotient.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, MutexGuard};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::lie::{Algebra, Basis, LieElement};
use crate::linalg::Matrix;
use crate::quotient::QuotientRing;
use crate::scalar::Scalar;

use super::functional::HWFunctional;
use super::pbw::{enumerate_monomials, Factor, PBWMonomial};

type Sparse = BTreeMap<PBWMonomial, Scalar>;

fn add_scaled(acc: &mut Sparse, v: &Sparse, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    for (m, x) in v {
        let slot = acc.entry(m.clone()).or_insert_with(Scalar::zero);
        *slot += x * c;
        if slot.is_zero() {
            acc.remove(m);
        }
    }
}

#[derive(Debug)]
struct Level {
    /// Basis of `J_n`, each leading entry 1.
    submodule: Vec<Vec<Scalar>>,
    /// Reduced echelon rows spanning `J_n` and their pivots.
    reduced: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
    /// Complement of the pivots: coordinates of `V̄_n / J_n`.
    free: Vec<usize>,
}

impl Level {
    /// Coordinates of the class of `v` in `V̄_n / J_n`.
    fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = v.to_vec();
        for (row, &p) in self.reduced.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let c = w[p].clone();
            for (x, r) in w.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &c * r;
                }
            }
        }
        self.free.iter().map(|&i| w[i].clone()).collect()
    }
}

#[derive(Debug)]
struct Engine {
    algebra: Algebra,
    residues: u32,
    phi_d: Vec<Scalar>,
    phi_c: Vec<Scalar>,
    all_degrees: bool,
    act_cache: HashMap<(Basis, PBWMonomial), Sparse>,
    bases: Vec<Vec<PBWMonomial>>,
    index: Vec<HashMap<PBWMonomial, usize>>,
    levels: Vec<Level>,
}

impl Engine {
    fn basis(&mut self, n: usize) -> &[PBWMonomial] {
        while self.bases.len() <= n {
            let depth = self.bases.len() as u32;
            let list = enumerate_monomials(self.residues, depth);
            self.index
                .push(list.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect());
            self.bases.push(list);
        }
        &self.bases[n]
    }

    fn dense(&mut self, n: usize, v: &Sparse) -> Vec<Scalar> {
        let dim = self.basis(n).len();
        let mut out = vec![Scalar::zero(); dim];
        for (m, c) in v {
            out[self.index[n][m]] = c.clone();
        }
        out
    }

    fn sparse(&mut self, n: usize, v: &[Scalar]) -> Sparse {
        let basis = self.basis(n);
        basis
            .iter()
            .zip(v)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect()
    }

    /// `x · (m v_0)` in PBW coordinates.
    fn act(&mut self, x: Basis, m: &PBWMonomial) -> Sparse {
        let key = (x, m.clone());
        if let Some(hit) = self.act_cache.get(&key) {
            return hit.clone();
        }
        let out = match x {
            Basis::C { loop_index } => {
                let mut v = Sparse::new();
                add_scaled(&mut v, &Sparse::from([(m.clone(), Scalar::one())]), &self.phi_c[loop_index as usize]);
                v
            }
            Basis::D { degree, loop_index } if degree < 0 => {
                let f = Factor::new((-degree) as u32, loop_index as u32);
                match m.first() {
                    Some(g) if f < g => self.commute(x, m),
                    _ => Sparse::from([(m.prepend(f), Scalar::one())]),
                }
            }
            Basis::D { degree, loop_index } if m.is_one() => {
                let mut v = Sparse::new();
                if degree == 0 {
                    let c = self.phi_d[loop_index as usize].clone();
                    if !c.is_zero() {
                        v.insert(PBWMonomial::one(), c);
                    }
                }
                v
            }
            Basis::D { .. } => self.commute(x, m),
        };
        self.act_cache.insert(key, out.clone());
        out
    }

    /// `x y R v_0 = y (x R v_0) + [x, y] R v_0` with `y` the first factor.
    fn commute(&mut self, x: Basis, m: &PBWMonomial) -> Sparse {
        let y = m.first().expect("nonempty monomial").as_basis();
        let rest = m.rest();
        let inner = self.act(x, &rest);
        let mut out = Sparse::new();
        for (mono, c) in &inner {
            let moved = self.act(y, mono);
            add_scaled(&mut out, &moved, c);
        }
        for (g, c) in self.algebra.bracket_basis(x, y) {
            let moved = self.act(g, &rest);
            add_scaled(&mut out, &moved, &c);
        }
        out
    }

    fn act_sparse(&mut self, x: Basis, v: &Sparse) -> Sparse {
        let mut out = Sparse::new();
        for (m, c) in v {
            let image = self.act(x, m);
            add_scaled(&mut out, &image, c);
        }
        out
    }

    fn raising_degrees(&self, n: usize) -> Vec<usize> {
        if self.all_degrees {
            (1..=n).collect()
        } else {
            (1..=n.min(2)).collect()
        }
    }

    fn level(&mut self, n: usize) -> &Level {
        while self.levels.len() <= n {
            let next = self.compute_level(self.levels.len());
            self.levels.push(next);
        }
        &self.levels[n]
    }

    fn compute_level(&mut self, n: usize) -> Level {
        let cols = self.basis(n).len();
        if n == 0 {
            return Level {
                submodule: Vec::new(),
                reduced: Vec::new(),
                pivots: Vec::new(),
                free: (0..cols).collect(),
            };
        }
        let monomials = self.basis(n).to_vec();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for k in self.raising_degrees(n) {
            for r in 0..self.residues {
                let gen = Basis::D {
                    degree: k as i64,
                    loop_index: r as i64,
                };
                // images of each basis monomial, projected to V̄_{n-k}/J_{n-k}
                let mut images = Vec::with_capacity(cols);
                for m in &monomials {
                    let image = self.act(gen, m);
                    let dense = self.dense(n - k, &image);
                    images.push(self.level(n - k).project(&dense));
                }
                let qdim = images.first().map_or(0, Vec::len);
                for q in 0..qdim {
                    rows.push(images.iter().map(|img| img[q].clone()).collect());
                }
            }
        }
        let submodule = Matrix::from_rows_with_cols(rows, cols).kernel_basis();
        let (reduced_m, pivots) = Matrix::from_rows_with_cols(submodule.clone(), cols).rref();
        let reduced = (0..pivots.len()).map(|r| reduced_m.row(r).to_vec()).collect();
        let free = (0..cols).filter(|c| !pivots.contains(c)).collect();
        Level {
            submodule,
            reduced,
            pivots,
            free,
        }
    }
}

/// Result of [`VermaQuotientModule::character_table`] at one depth.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CharacterRow {
    pub depth: usize,
    pub pbw_dim: usize,
    pub j_dim: usize,
    pub irreducible_dim: usize,
}

/// The Verma module `V̄_P(φ)` over `L/<P>` with cached weight-space data.
/// Safe to share between threads; queries serialize on an internal lock.
#[derive(Debug)]
pub struct VermaQuotientModule {
    ring: QuotientRing,
    phi: HWFunctional,
    engine: Mutex<Engine>,
}

impl VermaQuotientModule {
    /// Fails unless `P(0) != 0`, `deg P >= 1` and `P` annihilates both
    /// sequences of `phi`.
    pub fn new(modulus: &LaurentPoly, phi: HWFunctional) -> Result<Self> {
        Self::with_options(modulus, phi, false)
    }

    /// With `all_degrees`, `J_n` is cut out by every raising degree `<= n`
    /// instead of degrees 1 and 2 only. The results must agree.
    pub fn with_options(modulus: &LaurentPoly, phi: HWFunctional, all_degrees: bool) -> Result<Self> {
        let ring = QuotientRing::new(modulus)?;
        if !phi.is_annihilated_by(ring.modulus()) {
            return Err(Error::NotAnnihilated(ring.modulus().to_string()));
        }
        let d = ring.degree();
        let engine = Engine {
            algebra: Algebra::Quotient(ring.clone()),
            residues: d as u32,
            phi_d: (0..d as i64).map(|j| phi.phi_d.eval(j)).collect(),
            phi_c: (0..d as i64).map(|j| phi.phi_c.eval(j)).collect(),
            all_degrees,
            act_cache: HashMap::new(),
            bases: Vec::new(),
            index: Vec::new(),
            levels: Vec::new(),
        };
        Ok(Self {
            ring,
            phi,
            engine: Mutex::new(engine),
        })
    }

    fn engine(&self) -> MutexGuard<'_, Engine> {
        self.engine.lock().unwrap_or_else(|e| e.into_inner())
    }

    pub fn modulus(&self) -> &LaurentPoly {
        self.ring.modulus()
    }

    pub fn algebra(&self) -> Algebra {
        Algebra::Quotient(self.ring.clone())
    }

    pub fn functional(&self) -> &HWFunctional {
        &self.phi
    }

    /// Number of residues `deg P`.
    pub fn residues(&self) -> usize {
        self.ring.degree()
    }

    /// Highest weight `λ = φ(d_0)`; only used for labels.
    pub fn lambda(&self) -> Scalar {
        self.phi.lambda()
    }

    /// The depth-`n` PBW basis in descending order.
    pub fn weight_space_basis(&self, n: usize) -> Vec<PBWMonomial> {
        self.engine().basis(n).to_vec()
    }

    /// Action of a basis symbol of `L/<P>` on a depth-`n` coordinate
    /// vector. Returns the target depth and coordinates there; `None` when
    /// the target depth would be negative (the image is zero).
    pub fn apply_basis(&self, gen: Basis, n: usize, v: &[Scalar]) -> Option<(usize, Vec<Scalar>)> {
        let target = n as i64 - gen.degree();
        if target < 0 {
            return None;
        }
        let target = target as usize;
        let mut e = self.engine();
        let sv = e.sparse(n, v);
        let image = e.act_sparse(gen, &sv);
        Some((target, e.dense(target, &image)))
    }

    /// `(d_k ⊗ t^j) v` for `k >= 1` and a residue `j`; `v` has depth `n`.
    /// Empty when `k > n`.
    pub fn apply_raising(&self, k: u32, residue: u32, n: usize, v: &[Scalar]) -> Vec<Scalar> {
        assert!(k >= 1 && (residue as usize) < self.residues());
        let gen = Basis::D {
            degree: k as i64,
            loop_index: residue as i64,
        };
        self.apply_basis(gen, n, v).map(|(_, w)| w).unwrap_or_default()
    }

    /// Action of a homogeneous element of `L/<P>`.
    pub fn apply_element(&self, x: &LieElement, n: usize, v: &[Scalar]) -> Result<Option<(usize, Vec<Scalar>)>> {
        if x.algebra() != &self.algebra() {
            return Err(Error::MixedAlgebras);
        }
        let Some(deg) = x.homogeneous_degree() else {
            return if x.is_zero() {
                Ok(Some((n, vec![Scalar::zero(); v.len()])))
            } else {
                Err(Error::NotHomogeneous)
            };
        };
        let target = n as i64 - deg;
        if target < 0 {
            return Ok(None);
        }
        let mut e = self.engine();
        let sv = e.sparse(n, v);
        let mut acc = Sparse::new();
        for (b, c) in x.terms() {
            let image = e.act_sparse(b, &sv);
            add_scaled(&mut acc, &image, c);
        }
        Ok(Some((target as usize, e.dense(target as usize, &acc))))
    }

    /// Basis of `J_n`, the depth-`n` part of the maximal proper submodule.
    pub fn maximal_submodule_basis(&self, n: usize) -> Vec<Vec<Scalar>> {
        self.engine().level(n).submodule.clone()
    }

    /// Coordinates of the class of `v` in `V̄_n / J_n`.
    pub fn project_to_quotient(&self, n: usize, v: &[Scalar]) -> Vec<Scalar> {
        self.engine().level(n).project(v)
    }

    /// `dim V(φ)_{λ-n}` for `n = 0..=max_depth`.
    pub fn irreducible_character(&self, max_depth: usize) -> Vec<usize> {
        self.character_table(max_depth)
            .into_iter()
            .map(|r| r.irreducible_dim)
            .collect()
    }

    pub fn character_table(&self, max_depth: usize) -> Vec<CharacterRow> {
        let mut e = self.engine();
        (0..=max_depth)
            .map(|n| {
                let pbw_dim = e.basis(n).len();
                let j_dim = e.level(n).submodule.len();
                CharacterRow {
                    depth: n,
                    pbw_dim,
                    j_dim,
                    irreducible_dim: pbw_dim - j_dim,
                }
            })
            .collect()
    }
}
