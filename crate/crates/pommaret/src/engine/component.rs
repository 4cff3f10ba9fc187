//! Degree-component ideals I_⟨d⟩ and componentwise δ-regularity.

use super::buchberger::{buchberger, GroebnerBasis};
use super::delta::{
    find_delta_regular_coordinates, is_delta_regular, random_unitriangular, Repair, RepairOptions,
};
use super::{completion::CompletionResult, pommaret_complete, EngineError};
use crate::exponent::{monomials_of_degree, ExponentVector};
use crate::field::CoefficientField;
use crate::linear::row_reduce;
use crate::poly::{PolyRing, Polynomial, Term};
use rand::rngs::StdRng;
use rand::SeedableRng;

/// A vector-space basis of the degree-d part of the ideal, in row echelon
/// form with distinct leading monomials: generators of I_⟨d⟩. Empty below
/// the minimal generator degree.
pub fn component_ideal<F: CoefficientField>(
    ring: &PolyRing<F>,
    gb: &GroebnerBasis<F::Elem>,
    d: u32,
) -> Vec<Polynomial<F::Elem>> {
    // columns: degree-d monomials, leading (largest) first
    let mut columns = monomials_of_degree(ring.num_vars(), d);
    columns.sort_by(|a, b| ring.order.compare(b, a));
    let index_of = |e: &ExponentVector| columns.iter().position(|c| c == e).expect("degree match");

    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    for g in gb.elements() {
        let deg = g.degree().expect("nonzero");
        if deg > d {
            continue;
        }
        for shift in monomials_of_degree(ring.num_vars(), d - deg) {
            let product = ring.mul_term(g, &ring.field.one(), &shift);
            let mut row = vec![ring.field.zero(); columns.len()];
            for t in product.terms() {
                row[index_of(&t.exponent)] = t.coefficient.clone();
            }
            rows.push(row);
        }
    }
    row_reduce(&mut rows, &ring.field);
    rows.into_iter()
        .map(|row| {
            let terms = row
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !ring.field.is_zero(c))
                .map(|(idx, coefficient)| Term {
                    coefficient,
                    exponent: columns[idx].clone(),
                })
                .collect();
            ring.normalize(terms)
        })
        .collect()
}

/// dim_k I_d, the rank of the degree-d multiples of the reduced basis.
pub fn component_dimension<F: CoefficientField>(
    ring: &PolyRing<F>,
    gb: &GroebnerBasis<F::Elem>,
    d: u32,
) -> usize {
    component_ideal(ring, gb, d).len()
}

/// All component ideals I_⟨d⟩ for d up to the regularity must admit finite
/// bases; the regularity is read off the basis of I itself, so a
/// δ-singular I answers false immediately.
pub fn is_componentwise_delta_regular<F: CoefficientField>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
) -> Result<bool, EngineError> {
    if !is_delta_regular(ring, gens)? {
        return Ok(false);
    }
    let basis = match pommaret_complete(ring, gens, None)? {
        CompletionResult::Basis(b) => b,
        CompletionResult::DeltaSingular(_) => return Ok(false),
    };
    let reg = basis.max_degree();
    let gb = buchberger(ring, gens)?;
    for d in gb.min_degree()..=reg {
        let component = component_ideal(ring, &gb, d);
        if component.is_empty() {
            continue;
        }
        if !is_delta_regular(ring, &component)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Repair towards coordinates that are δ-regular for every component at
/// once: repair the ideal itself first, then retry seeded unitriangular
/// changes until all components pass.
pub fn find_componentwise_delta_regular<F: CoefficientField>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    options: &RepairOptions,
) -> Result<Repair<F::Elem>, EngineError> {
    let repair = find_delta_regular_coordinates(ring, gens, options)?;
    if is_componentwise_delta_regular(ring, &repair.transformed)? {
        return Ok(repair);
    }
    for trial in 0..options.random_trials {
        let trial_seed = options
            .seed
            .wrapping_mul(0x2545_F491_4F6C_DD1D)
            .wrapping_add(trial as u64);
        let mut rng = StdRng::seed_from_u64(trial_seed);
        let movement = random_unitriangular(ring, &mut rng, options.entry_bound);
        let candidate: Vec<Polynomial<F::Elem>> = repair
            .transformed
            .iter()
            .map(|g| ring.apply_linear_change(g, &movement))
            .collect();
        if is_componentwise_delta_regular(ring, &candidate)? {
            let change = movement.then(&repair.change, &ring.field);
            let basis = match pommaret_complete(ring, &candidate, None)? {
                CompletionResult::Basis(b) => b,
                CompletionResult::DeltaSingular(_) => {
                    return Err(EngineError::Internal(
                        "componentwise-regular system failed to complete".into(),
                    ))
                }
            };
            return Ok(Repair {
                change,
                transformed: candidate,
                basis,
            });
        }
    }
    Err(EngineError::RepairExhausted {
        attempts: options.random_trials,
    })
}
