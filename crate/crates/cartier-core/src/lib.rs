//! Exact workbench for quasitriangular quasi-bialgebras carrying an
//! infinitesimal R-matrix.
//!
//! Everything is computed over ℚ(i) with coefficients truncated at a fixed
//! power of the formal parameter ħ, so every check in this crate is an exact
//! identity between tensors — there are no floating-point tolerances.
//!
//! The layering, bottom up:
//!
//! * [`scalar`] — Gaussian rationals and truncated ħ-polynomials over them.
//! * [`algebra`] — finite-dimensional associative algebras via structure
//!   constants.
//! * [`tensor`] / [`morphism`] — sparse elements of tensor powers and algebra
//!   maps `H → H^⊗m` (coproducts, counits).
//! * [`quasibialgebra`] / [`precartier`] — the axiom checkers: coassociativity
//!   up to a reassociator, R-matrix hexagons, infinitesimal R-matrix laws,
//!   gauge twisting, and ħ-order-by-order quantization.
//! * [`families`] — the built-in `E(n)` family (a group algebra extended by
//!   nilpotent generators) and the group algebra `H(2)` with its nontrivial
//!   reassociator.
//! * [`cartier_ring`] — matrix representations of the braid-like operators
//!   attached to an R-matrix and infinitesimal R-matrix on tensor powers of a
//!   module.
//! * [`bundle`] — JSON import/export of whole structures.

pub mod algebra;
pub mod bundle;
pub mod cartier_ring;
pub mod error;
pub mod families;
pub mod morphism;
pub mod precartier;
pub mod quasibialgebra;
pub mod report;
pub mod scalar;
pub mod solve;
pub mod tensor;

#[cfg(test)]
pub(crate) mod testutil;

pub use algebra::{same_algebra, FiniteAlgebra, SparseVec};
pub use bundle::{AlgebraData, Bundle, BundleData, BundleMetadata};
pub use cartier_ring::{
    check_cartier_ring_relations, check_t13_presentations, check_t14_presentations,
    check_tij_braid_relations, evaluate_word, rep_beta, rep_beta_inv, rep_gamma, CartierLetter,
    CartierRep, CartierWord, LinearOperator, ModuleRep, ModuleRepData,
};
pub use error::{Error, Result};
pub use families::{
    build_en, build_en_twisted, build_h2, en_algebra, rmatrix_power_closed_form, EnBasisIndex,
    EnSpec, H2Sign,
};
pub use morphism::AlgebraMorphism;
pub use precartier::{
    check_chi13_bialgebra, check_chi13_quasi, check_infinitesimal_braid,
    check_infinitesimal_qqybe, check_quantization_preconditions, check_qybe, chi13_bar,
    chi_braid_set, quantize, theta_set, twist_chi, upsilon_set, verify_cartier,
    verify_precartier, BraidSet, PreCartier, Scale,
};
pub use quasibialgebra::{
    check_triangular, gauge_twist, gauge_twist_bialgebra, verify_quasibialgebra,
    verify_quasitriangular, QuasiBialgebra, QuasiTriangular,
};
pub use report::{CheckEntry, CheckReport};
pub use scalar::{GaussRat, HPoly, Rational};
pub use tensor::{TensorData, TensorElement, TensorTermData};
