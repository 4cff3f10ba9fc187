//! Polynomial-level involutive machinery: normal forms, autoreduction,
//! Pommaret completion, a Buchberger oracle, δ-regularity detection and
//! coordinate repair, and degree-component ideals.

mod buchberger;
mod completion;
mod component;
mod delta;
mod nf;

pub use buchberger::{buchberger, ideal_membership, polynomial_normal_form, GroebnerBasis};
pub use completion::{
    pommaret_complete, verify_closure, CompletionResult, DeltaSingularWitness, PommaretBasis,
};
pub use component::{
    component_dimension, component_ideal, find_componentwise_delta_regular,
    is_componentwise_delta_regular,
};
pub use delta::{
    find_delta_regular_coordinates, is_delta_regular, leading_ideal, random_unitriangular, Repair,
    RepairOptions, RepairStrategy,
};
pub use nf::{
    involutive_autoreduce, involutive_normal_form, involutive_normal_form_with,
    sort_by_leading as sort_polynomials_by_leading, InvolutiveReduction,
};

use crate::monomial::IdealError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("the zero ideal has no basis")]
    ZeroIdeal,
    #[error("the ideal is not proper")]
    UnitIdeal,
    #[error("input generators must be homogeneous")]
    NotHomogeneous,
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("coordinate repair exhausted after {attempts} attempts")]
    RepairExhausted { attempts: u32 },
    #[error("internal invariant violation: {0}")]
    Internal(String),
}
