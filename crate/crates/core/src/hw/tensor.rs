//! Character identity for the tensor factorization along coprime factors
//! of the certificate: `dim V(φ)_{λ-n}` equals the convolution of the
//! factor characters.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::functional::{split_functional, working_modulus, HWFunctional};
use super::verma::VermaQuotientModule;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorCharacter {
    pub root: Scalar,
    pub multiplicity: u32,
    pub character: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorReport {
    /// Character of `V(φ)` computed on the full certificate.
    pub full: Vec<usize>,
    pub factors: Vec<FactorCharacter>,
    /// Convolution of the factor characters.
    pub convolution: Vec<usize>,
    /// Depths where `full` and `convolution` differ.
    pub mismatches: Vec<usize>,
}

impl TensorReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Truncated Cauchy product of characters, up to `max_depth`.
pub fn convolve(a: &[usize], b: &[usize], max_depth: usize) -> Vec<usize> {
    (0..=max_depth)
        .map(|n| {
            (0..=n)
                .map(|i| a.get(i).copied().unwrap_or(0) * b.get(n - i).copied().unwrap_or(0))
                .sum()
        })
        .collect()
}

/// Character of the irreducible quotient `V(φ)` up to `max_depth`.
pub fn irreducible_character_of(phi: &HWFunctional, max_depth: usize) -> Result<Vec<usize>> {
    let modulus = working_modulus(phi)?;
    Ok(VermaQuotientModule::new(&modulus, phi.clone())?.irreducible_character(max_depth))
}

pub fn tensor_character_check(phi: &HWFunctional, max_depth: usize) -> Result<TensorReport> {
    if phi.hc_annihilator().is_none() {
        return Err(Error::NotHarishChandra);
    }
    let full = irreducible_character_of(phi, max_depth)?;
    let mut factors = Vec::new();
    let mut convolution: Vec<usize> = (0..=max_depth).map(|n| usize::from(n == 0)).collect();
    for part in split_functional(phi)? {
        let module = VermaQuotientModule::new(&part.modulus(), part.functional)?;
        let character = module.irreducible_character(max_depth);
        convolution = convolve(&convolution, &character, max_depth);
        factors.push(FactorCharacter {
            root: part.root,
            multiplicity: part.multiplicity,
            character,
        });
    }
    let mismatches = (0..=max_depth).filter(|&n| full[n] != convolution[n]).collect();
    Ok(TensorReport {
        full,
        factors,
        convolution,
        mismatches,
    })
}
