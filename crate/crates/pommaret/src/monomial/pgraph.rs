//! P-graphs, inverse P-orderings and linear quotients of monomial bases.
//!
//! The P-graph of a complete basis has one edge per non-multiplicative
//! variable of each element, pointing to the unique involutive divisor of
//! the prolongation. Sorting the elements by class descending and then by
//! reversed-lex descending always produces a topological order of this
//! graph, the inverse P-ordering.

use super::completion::MonomialPommaretBasis;
use super::ideal::MonomialIdeal;
use crate::exponent::ExponentVector;
use crate::order::TermOrder;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PEdge {
    /// Index of the source element in the graph's vertex list.
    pub from: usize,
    /// Index of the unique involutive divisor of x_variable · source.
    pub to: usize,
    /// The non-multiplicative variable labelling the edge (1-based).
    pub variable: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PGraph {
    /// Vertices in inverse P-ordering.
    pub vertices: Vec<ExponentVector>,
    pub edges: Vec<PEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PGraphError {
    #[error("prolongation {0:?} has no involutive divisor: basis is not complete")]
    Incomplete(ExponentVector),
    #[error("prolongation {0:?} has several involutive divisors: basis is not autoreduced")]
    NotAutoreduced(ExponentVector),
}

/// Sort basis elements by class descending, then reversed-lex descending.
/// Every P-graph edge then points from a later list element to an earlier
/// one.
pub fn inverse_p_ordering(basis: &MonomialPommaretBasis) -> Vec<ExponentVector> {
    let mut list = basis.elements().to_vec();
    list.sort_by(|a, b| {
        let ca = a.class().expect("basis elements are nonzero");
        let cb = b.class().expect("basis elements are nonzero");
        cb.cmp(&ca)
            .then_with(|| TermOrder::LexReversed.compare(b, a))
    });
    list
}

pub fn p_graph(basis: &MonomialPommaretBasis) -> Result<PGraph, PGraphError> {
    let vertices = inverse_p_ordering(basis);
    let mut edges = Vec::new();
    for (from, h) in vertices.iter().enumerate() {
        for j in h.non_multiplicative() {
            let prolonged = h.mul_variable(j);
            let mut targets = vertices
                .iter()
                .enumerate()
                .filter(|(_, e)| e.involutive_divides(&prolonged));
            let (to, _) = targets
                .next()
                .ok_or_else(|| PGraphError::Incomplete(prolonged.clone()))?;
            if targets.next().is_some() {
                return Err(PGraphError::NotAutoreduced(prolonged));
            }
            edges.push(PEdge { from, to, variable: j });
        }
    }
    Ok(PGraph { vertices, edges })
}

impl PGraph {
    /// Out-degree of each vertex equals the number of its
    /// non-multiplicative variables by construction; this checks the
    /// ordering is topological (edges point strictly backwards), which
    /// also forces acyclicity.
    pub fn is_topologically_ordered(&self) -> bool {
        self.edges.iter().all(|e| e.to < e.from)
    }
}

/// One row of the linear-quotients table: the colon ideal
/// ⟨m₁,…,m_{k−1}⟩ : m_k in minimal form, whether it is generated by
/// variables, and whether it equals exactly the non-multiplicative
/// variables of m_k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearQuotientStep {
    pub index: usize,
    pub colon: MonomialIdeal,
    pub variable_generated: bool,
    pub equals_non_multiplicative: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearQuotientsReport {
    pub steps: Vec<LinearQuotientStep>,
    /// Every colon is variable generated.
    pub has_linear_quotients: bool,
    /// Every colon equals the non-multiplicative variables exactly.
    pub colon_identity_holds: bool,
}

/// Check linear quotients along an ordered list of distinct nonzero
/// monomials. The first entry's colon is the zero ideal, so the exact
/// identity at k = 1 forces a class-n element up front.
pub fn linear_quotients_check(ordered: &[ExponentVector], num_vars: usize) -> LinearQuotientsReport {
    let mut steps = Vec::with_capacity(ordered.len());
    for (k, m) in ordered.iter().enumerate() {
        let colon = if k == 0 {
            MonomialIdeal::zero(num_vars)
        } else {
            let gens = ordered[..k]
                .iter()
                .map(|prev| prev.div(&prev.gcd(m)).expect("gcd divides"));
            MonomialIdeal::from_raw(num_vars, gens.collect())
        };
        let variable_generated =
            !colon.is_unit() && colon.generators().iter().all(|g| g.degree() == 1);
        let expected: Vec<ExponentVector> = m
            .non_multiplicative()
            .map(|j| ExponentVector::variable(num_vars, j))
            .collect();
        let expected_ideal = MonomialIdeal::from_raw(num_vars, expected);
        let equals_non_multiplicative = colon == expected_ideal;
        steps.push(LinearQuotientStep {
            index: k + 1,
            colon,
            variable_generated,
            equals_non_multiplicative,
        });
    }
    LinearQuotientsReport {
        has_linear_quotients: steps.iter().skip(1).all(|s| s.variable_generated),
        colon_identity_holds: steps.iter().all(|s| s.equals_non_multiplicative),
        steps,
    }
}
