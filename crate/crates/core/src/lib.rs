//! Exact computations with the loop-Virasoro algebra `Vir ⊗ Q[t^±1]`, its
//! truncations `Vir ⊗ Q[t^±1]/<P>`, modules of the intermediate series and
//! highest-weight modules.
//!
//! Everything is exact rational arithmetic. The main entry points:
//!
//! - [`lie::bracket`] and [`lie::jacobi_check`] for the algebra itself;
//! - [`intseries::EvalModule`] and [`intseries::functional_equation_check`] for
//!   evaluation modules of the intermediate series;
//! - [`hw::VermaQuotientModule`] for characters of irreducible
//!   highest-weight modules, with [`hw::hc_test`] and
//!   [`hw::verma_reducibility_test`] deciding the finiteness and
//!   reducibility criteria.

pub mod error;
pub mod format;
pub mod hw;
pub mod intseries;
pub mod laurent;
pub mod lie;
pub mod linalg;
pub mod quotient;
pub mod scalar;
pub mod seq;

pub use error::{Error, Result};
pub use hw::{
    depth1_singular_search, hc_test, pbw_dimension, split_functional, tensor_character_check,
    verma_reducibility_test, HWFunctional, PBWMonomial, VermaQuotientModule,
};
pub use intseries::{EvalModule, IntSeriesKind};
pub use laurent::LaurentPoly;
pub use lie::{bracket, jacobi_check, Algebra, Basis, LieElement};
pub use linalg::Matrix;
pub use quotient::{quot_reduce, QuotientClass, QuotientRing};
pub use scalar::Scalar;
pub use seq::{seq_annihilator, seq_eval, Annihilator, ExpPolySeq, FiniteSeq, Sequence};
