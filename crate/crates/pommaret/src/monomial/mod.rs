//! Monomial-ideal algebra: minimal generators, colon and saturation
//! operators, dimension, quasi-stability and stability tests, monomial
//! Pommaret completion, P-graphs and linear quotients.

mod completion;
mod ideal;
mod pgraph;
pub(crate) mod quasistable;

pub use completion::{
    monomial_pommaret_complete, MonomialCompletionOutcome, MonomialPommaretBasis,
};
pub use ideal::{IdealError, MonomialIdeal, PurePowerProfile};
pub use pgraph::{
    inverse_p_ordering, linear_quotients_check, p_graph, LinearQuotientStep,
    LinearQuotientsReport, PEdge, PGraph, PGraphError,
};
pub use quasistable::{
    associated_primes_bruteforce, is_quasi_stable, is_stable, quasi_stable_breakdown,
    QuasiStableMethod, ALL_METHODS,
};
