//! Pommaret bases for polynomial and monomial ideals.
//!
//! This crate computes Pommaret (involutive) bases of homogeneous polynomial
//! ideals over exact coefficient fields (ℚ or a prime field), detects and
//! repairs δ-singular coordinates, and reads homological invariants —
//! Castelnuovo–Mumford regularity, projective dimension, depth, dimension,
//! satiety, free-resolution ranks, extremal Betti numbers, Hilbert series —
//! directly off the basis. On the monomial side it decides quasi-stability
//! through five independent characterisations, certifies stability, builds
//! P-graphs and inverse P-orderings, and checks linear quotients.
//!
//! # Variable convention
//!
//! Variables are numbered x₁, …, x_n and the *first* variable plays the role
//! that the *last* variable plays in most computer algebra systems: the class
//! of a term is the smallest index of a variable occurring in it, and its
//! multiplicative variables are x₁, …, x_cls. The default term order
//! compares by total degree first and then declares x^μ ≺ x^ν whenever the
//! first non-vanishing entry of μ − ν is positive. This equals standard
//! degrevlex taken on the reversed variable list, so to reproduce a
//! computation from a degrevlex system, declare your variables here in
//! reverse order.
//!
//! # Entry points
//!
//! - [`engine::pommaret_complete`] — involutive completion of a generating set.
//! - [`engine::find_delta_regular_coordinates`] — coordinate repair.
//! - [`invariants::invariant_report`] — the full invariant report.
//! - [`monomial`] — quasi-stability, stability, P-graphs, linear quotients.
//! - [`complin`] — componentwise linearity, Betti bounds, gin sampling.
//! - [`cli`] — the ideal-file format and the batch front end used by the
//!   `pommaret` binary.
//!
//! ```
//! use pommaret::engine::pommaret_complete;
//! use pommaret::exponent::ExponentVector;
//! use pommaret::field::Rationals;
//! use pommaret::invariants::{invariant_report, BasisProfile};
//! use pommaret::poly::PolyRing;
//! use pommaret::ring::RingContext;
//!
//! let ring = PolyRing::new(RingContext::rational(&["x", "y"]), Rationals);
//! let gens = vec![
//!     ring.monomial(ExponentVector::new(vec![2, 0])), // x²
//!     ring.monomial(ExponentVector::new(vec![0, 2])), // y²
//! ];
//! let basis = pommaret_complete(&ring, &gens, None)
//!     .unwrap()
//!     .into_basis()
//!     .expect("these coordinates are δ-regular");
//! // completion adjoins x²y, pushing the regularity to three
//! assert_eq!(basis.len(), 3);
//! let report = invariant_report(&BasisProfile::from_pommaret(&basis));
//! assert_eq!(report.reg, 3);
//! assert_eq!(report.resolution_ranks.total, vec![3, 2]);
//! ```

pub mod cli;
pub mod complin;
pub mod engine;
pub mod exponent;
pub mod field;
pub mod invariants;
pub mod linear;
pub mod monomial;
pub mod order;
pub mod poly;
pub mod ring;

pub use exponent::ExponentVector;
pub use field::{CoefficientField, PrimeField, Rationals};
pub use linear::LinearChange;
pub use order::TermOrder;
pub use poly::{PolyRing, Polynomial, Term};
pub use ring::RingContext;
