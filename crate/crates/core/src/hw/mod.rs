//! Highest-weight modules: PBW bookkeeping, truncated Verma modules,
//! characters and the Harish-Chandra / reducibility criteria.

pub mod functional;
pub mod pbw;
pub mod tensor;
pub mod verma;

pub use functional::{
    depth1_singular_search, hc_test, split_functional, verma_reducibility_test, working_modulus,
    FunctionalFactor, HWFunctional, VermaVerdict,
};
pub use pbw::{enumerate_monomials, highest_term, pbw_compare, pbw_dimension, Factor, PBWMonomial};
pub use tensor::{convolve, tensor_character_check, FactorCharacter, TensorReport};
pub use verma::{CharacterRow, VermaQuotientModule};
