//! Exact verification and construction of finite-dimensional ternary
//! hom-algebras, hom-coalgebras, trimodules, matched pairs and infinitesimal
//! bialgebras over ℚ(√d).
//!
//! Everything is given by structure constants in a fixed basis. Indices are
//! 0-based in the API; violation reports use 1-based basis labels.

pub mod algebra;
pub mod coalgebra;
mod conditions;
pub mod duality;
pub mod error;
pub mod fixtures;
pub mod infinitesimal_bialgebra;
pub mod linalg;
pub mod matched_pair;
mod rational;
pub mod report;
pub mod scalar;
pub mod trimodule;

pub use algebra::{
    check_algebra_morphism, check_hom_associativity, check_multiplicative, evaluate_mu,
    multiplication_operators, yau_twist, AssocMode, MorphismReport, MultiplicationOperators,
    TernaryAlgebra,
};
pub use coalgebra::{
    check_coalgebra_morphism, check_comultiplicative, check_hom_coassociativity, evaluate_delta,
    structure_identity_check, CoassocMode, TernaryCoalgebra,
};
pub use duality::{dualize_algebra, dualize_coalgebra, dualize_linear_map};
pub use error::{Error, Result};
pub use infinitesimal_bialgebra::{
    check_bialgebra, check_bialgebra_equivalence, check_compatibility,
    check_compatibility_sigma_form, check_compatibility_sigma_form_with,
    compatibility_identity_check, dualize_bialgebra, sign_variant, ExchangeOp, TernaryBialgebra,
};
pub use linalg::{tensor3_map, Matrix, Tensor3, Tensor4, Vector};
pub use matched_pair::{bicrossed_product, check_matched_pair, MatchedPairData};
pub use report::{LawId, LawReport, Residual, Violation};
pub use scalar::QuadScalar;
pub use trimodule::{
    check_trimodule, regular_actions, semidirect_product, ActionMode, BihomModule, RegularKind,
    TrimoduleActions, TrimoduleLevel,
};
