//! Componentwise linearity, Betti bounds, minimal-resolution detection,
//! basis extension by linear quotients, and generic-initial-ideal sampling.
//!
//! The gin sampler is EXPERIMENTAL by design: a vote over random
//! coordinate changes can never certify that a leading ideal is the
//! generic one, so its output feeds comparison reports only and is never
//! consumed by any other operation here.

use crate::engine::{
    buchberger, component_dimension, component_ideal, find_componentwise_delta_regular,
    ideal_membership, pommaret_complete, verify_closure, CompletionResult, EngineError,
    PommaretBasis, Repair, RepairOptions,
};
use crate::exponent::{binomial, monomials_of_degree, ExponentVector};
use crate::field::CoefficientField;
use crate::invariants::{resolution_ranks, BasisProfile, ResolutionRanks};
use crate::linear::{invert, LinearChange};
use crate::monomial::{is_quasi_stable, is_stable, MonomialIdeal, QuasiStableMethod};
use crate::poly::{PolyRing, Polynomial};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use std::collections::BTreeMap;

/// Graded minimal generator counts β₀,d = dim I_d − dim (m·I)_d.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Beta0Profile {
    pub by_degree: BTreeMap<u32, u64>,
    pub total: u64,
}

/// Exact graded minimal-generator counts via row reduction of monomial
/// multiples, for degrees up to the regularity.
pub fn beta0<F: CoefficientField>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    reg: u32,
) -> Result<Beta0Profile, EngineError> {
    let gb = buchberger(ring, gens)?;
    let mut by_degree = BTreeMap::new();
    let mut total = 0u64;
    let mut previous_dim = 0usize; // dim I_{d-1}
    for d in gb.min_degree()..=reg {
        let dim_d = component_dimension(ring, &gb, d);
        // (m·I)_d is spanned by the variable multiples of I_{d−1}
        let m_i_dim = if previous_dim == 0 {
            0
        } else {
            let lower = component_ideal(ring, &gb, d - 1);
            let mut multiples = Vec::new();
            for f in &lower {
                for var in 1..=ring.num_vars() {
                    multiples.push(ring.mul_variable(f, var));
                }
            }
            rank_of(ring, &multiples, d)
        };
        let count = (dim_d - m_i_dim) as u64;
        if count > 0 {
            by_degree.insert(d, count);
            total += count;
        }
        previous_dim = dim_d;
    }
    Ok(Beta0Profile { by_degree, total })
}

fn rank_of<F: CoefficientField>(
    ring: &PolyRing<F>,
    polys: &[Polynomial<F::Elem>],
    degree: u32,
) -> usize {
    let mut columns = monomials_of_degree(ring.num_vars(), degree);
    columns.sort_by(|a, b| ring.order.compare(b, a));
    let mut rows = Vec::with_capacity(polys.len());
    for p in polys {
        let mut row = vec![ring.field.zero(); columns.len()];
        for t in p.terms() {
            let idx = columns
                .iter()
                .position(|c| c == &t.exponent)
                .expect("degree mismatch");
            row[idx] = t.coefficient.clone();
        }
        rows.push(row);
    }
    crate::linear::row_reduce(&mut rows, &ring.field)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ComponentwiseRoute {
    /// Decision route: the leading ideal is stable and β₀(I) = β₀(lt I).
    StableBetaZero,
    /// Cross-check route: every component ideal has regularity equal to
    /// its generating degree.
    PerComponentRegularity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentRegularityRow {
    pub degree: u32,
    pub component_regularity: u32,
    pub linear: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentwiseVerdict {
    pub verdict: bool,
    pub route: ComponentwiseRoute,
    pub leading_ideal_stable: bool,
    pub beta0_ideal: u64,
    pub beta0_leading: u64,
    /// Per-degree linear-resolution table from the cross-check route.
    pub per_degree: Vec<ComponentRegularityRow>,
}

/// Decide componentwise linearity in componentwise δ-regular coordinates
/// (repaired first when needed). The stable-plus-β₀ route decides; the
/// per-component route is evaluated alongside and both must agree.
pub fn is_componentwise_linear<F: CoefficientField>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    options: &RepairOptions,
) -> Result<(ComponentwiseVerdict, Repair<F::Elem>), EngineError> {
    let repair = find_componentwise_delta_regular(ring, gens, options)?;
    let verdict = componentwise_verdict_in_place(ring, &repair)?;
    Ok((verdict, repair))
}

/// The verdict for coordinates already certified componentwise δ-regular.
fn componentwise_verdict_in_place<F: CoefficientField>(
    ring: &PolyRing<F>,
    repair: &Repair<F::Elem>,
) -> Result<ComponentwiseVerdict, EngineError> {
    let gens = &repair.transformed;
    let basis = &repair.basis;
    let lt_ideal = basis.leading_ideal();
    let reg = basis.max_degree();

    let stable = is_stable(&lt_ideal)?;
    let beta0_leading = lt_ideal.generators().len() as u64;
    let beta0_ideal = beta0(ring, gens, reg)?.total;
    let decision = stable && beta0_ideal == beta0_leading;

    // cross-check: reg I_⟨d⟩ = d for every degree through the regularity
    let gb = buchberger(ring, gens)?;
    let mut per_degree = Vec::new();
    let mut all_linear = true;
    for d in gb.min_degree()..=reg {
        let component = component_ideal(ring, &gb, d);
        if component.is_empty() {
            continue;
        }
        let component_basis = match pommaret_complete(ring, &component, None)? {
            CompletionResult::Basis(b) => b,
            CompletionResult::DeltaSingular(_) => {
                return Err(EngineError::Internal(
                    "component of a componentwise δ-regular ideal must complete".into(),
                ))
            }
        };
        let creg = component_basis.max_degree();
        let linear = creg == d;
        all_linear &= linear;
        per_degree.push(ComponentRegularityRow {
            degree: d,
            component_regularity: creg,
            linear,
        });
    }
    if decision != all_linear {
        return Err(EngineError::Internal(format!(
            "componentwise-linearity routes disagree: stable+beta0 says {decision}, \
             per-component says {all_linear}"
        )));
    }
    Ok(ComponentwiseVerdict {
        verdict: decision,
        route: ComponentwiseRoute::StableBetaZero,
        leading_ideal_stable: stable,
        beta0_ideal,
        beta0_leading,
        per_degree,
    })
}

/// For componentwise linear ideals the induced resolution is minimal, so
/// its ranks are the Betti numbers; they must dominate the binomial lower
/// bound C(p+1, i+1).
pub fn betti_bound_check(ranks: &ResolutionRanks, pd: usize) -> bool {
    (0..=pd).all(|i| {
        let bound = binomial(pd as u64 + 1, i as u64 + 1);
        ranks.total.get(i).copied().unwrap_or(0) >= bound
    })
}

/// Total-Betti persistence: a nonzero β_i forces nonzero β_{i'} for every
/// i' below it.
pub fn betti_persistence_check(ranks: &ResolutionRanks) -> bool {
    let last_nonzero = ranks.total.iter().rposition(|&r| r > 0);
    match last_nonzero {
        None => true,
        Some(top) => ranks.total[..=top].iter().all(|&r| r > 0),
    }
}

/// The induced resolution is minimal exactly when no recorded involutive
/// standard representation carries a constant coefficient.
pub fn minimal_resolution_test<F: CoefficientField>(
    ring: &PolyRing<F>,
    basis: &PommaretBasis<F::Elem>,
) -> bool {
    for quotients in basis.representations().values() {
        for q in quotients {
            if q.terms()
                .iter()
                .any(|t| t.exponent.is_zero() && !ring.field.is_zero(&t.coefficient))
            {
                return false;
            }
        }
    }
    true
}

/// Why an extension attempt was refused.
#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum ExtendRejection<C: std::fmt::Debug> {
    #[error("the leading term of the new element already occurs in the basis")]
    LeadingTermPresent,
    #[error("the new element must be homogeneous and nonzero")]
    BadElement,
    #[error("a non-multiplicative multiple does not lie in the ideal")]
    ColonMissesVariable { variable: usize },
    #[error("a multiplicative multiple of degree {degree} lies in the ideal")]
    ColonTooLarge { degree: u32 },
    #[error("the extended set fails the involutive closure check")]
    ClosureFails { remainder: Polynomial<C> },
}

/// Extend a Pommaret basis by one element whose colon ideal is exactly its
/// non-multiplicative variables. The sufficient condition is verified
/// directly: every non-multiplicative multiple reduces to zero against the
/// old basis, the union passes the closure check, and no multiplicative
/// multiple falls into the old ideal up to the degree where the new
/// regularity caps the colon.
pub fn extend_basis<F: CoefficientField>(
    ring: &PolyRing<F>,
    basis: &PommaretBasis<F::Elem>,
    new_element: &Polynomial<F::Elem>,
) -> Result<PommaretBasis<F::Elem>, ExtendRejection<F::Elem>> {
    if new_element.is_zero() || !new_element.is_homogeneous() {
        return Err(ExtendRejection::BadElement);
    }
    let new_element = ring.make_monic(new_element);
    let lead = new_element.leading_exponent().expect("nonzero").clone();
    if basis
        .leading_exponents()
        .iter()
        .any(|e| e == &lead)
    {
        return Err(ExtendRejection::LeadingTermPresent);
    }

    // containment direction: non-multiplicative multiples land in the ideal
    for j in lead.non_multiplicative() {
        let multiple = ring.mul_variable(&new_element, j);
        let reduced =
            crate::engine::involutive_normal_form(ring, &multiple, basis.elements()).remainder;
        if !reduced.is_zero() {
            return Err(ExtendRejection::ColonMissesVariable { variable: j });
        }
    }

    // closure of the union certifies the extended Pommaret basis
    let mut extended: Vec<Polynomial<F::Elem>> = basis.elements().to_vec();
    extended.push(new_element.clone());
    crate::engine::sort_polynomials_by_leading(ring, &mut extended);
    if let Err(remainder) = verify_closure(ring, &extended) {
        return Err(ExtendRejection::ClosureFails { remainder });
    }

    // equality direction, certified degree by degree: no multiplicative
    // multiple of the new element may fall into the old ideal
    let gb = buchberger(ring, basis.elements()).expect("basis generates a proper ideal");
    let new_reg = extended
        .iter()
        .filter_map(|h| h.degree())
        .max()
        .expect("nonempty");
    let own_degree = new_element.degree().expect("nonzero");
    let cls = lead.class().expect("nonzero");
    let max_cofactor = (new_reg + 1).saturating_sub(own_degree);
    for e in 1..=max_cofactor {
        for mu in monomials_of_degree(cls, e) {
            let mut padded = mu.entries().to_vec();
            padded.resize(ring.num_vars(), 0);
            let cofactor = ExponentVector::new(padded);
            let multiple = ring.mul_term(&new_element, &ring.field.one(), &cofactor);
            if ideal_membership(ring, &multiple, &gb) {
                return Err(ExtendRejection::ColonTooLarge {
                    degree: own_degree + e,
                });
            }
        }
    }

    match pommaret_complete(ring, &extended, None) {
        Ok(CompletionResult::Basis(b)) => Ok(b),
        _ => Err(ExtendRejection::ClosureFails {
            remainder: Polynomial::zero(),
        }),
    }
}

/// One sampled leading ideal with its multiplicity in the vote.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GinVote {
    pub leading_ideal: MonomialIdeal,
    pub count: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GinSampleReport {
    /// Probabilistic output: a vote, not a certificate.
    pub experimental: bool,
    pub trials: u32,
    pub seed: u64,
    pub entry_bound: i64,
    pub votes: Vec<GinVote>,
    /// Most frequent leading ideal; `None` on a tie, which is reported
    /// rather than silently broken.
    pub candidate: Option<MonomialIdeal>,
    pub tie: bool,
    pub candidate_quasi_stable: Option<bool>,
    /// Stability of the candidate; meaningful in characteristic zero.
    pub candidate_stable: Option<bool>,
    /// Draws rejected because the sampled leading ideal failed
    /// quasi-stability (a non-generic draw) and were resampled.
    pub rejected_draws: u32,
}

/// Sample the generic initial ideal by voting over dense random changes of
/// coordinates. Characteristic zero is the intended habitat; prime fields
/// are allowed and flagged by the caller.
pub fn gin_sample<F: CoefficientField>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    trials: u32,
    seed: u64,
    entry_bound: i64,
) -> Result<GinSampleReport, EngineError> {
    assert!(trials >= 1, "at least one trial");
    let n = ring.num_vars();
    let mut votes: Vec<GinVote> = Vec::new();
    let mut rejected = 0u32;
    for trial in 0..trials {
        let mut rng = StdRng::seed_from_u64(
            seed.wrapping_add((trial as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)),
        );
        let lt_ideal = loop {
            let change = random_dense_invertible(ring, &mut rng, entry_bound, n);
            let moved: Vec<Polynomial<F::Elem>> = gens
                .iter()
                .map(|g| ring.apply_linear_change(g, &change))
                .collect();
            let lt = crate::engine::leading_ideal(ring, &moved)?;
            // a δ-singular draw is non-generic: resample
            if is_quasi_stable(&lt, QuasiStableMethod::ColonEq)? {
                break lt;
            }
            rejected += 1;
            if rejected > 64 * trials {
                return Err(EngineError::Internal(
                    "random coordinate changes keep producing δ-singular draws".into(),
                ));
            }
        };
        match votes.iter_mut().find(|v| v.leading_ideal == lt_ideal) {
            Some(v) => v.count += 1,
            None => votes.push(GinVote {
                leading_ideal: lt_ideal,
                count: 1,
            }),
        }
    }
    votes.sort_by(|a, b| b.count.cmp(&a.count));
    let tie = votes.len() > 1 && votes[0].count == votes[1].count;
    let candidate = if tie {
        None
    } else {
        Some(votes[0].leading_ideal.clone())
    };
    let (candidate_quasi_stable, candidate_stable) = match &candidate {
        None => (None, None),
        Some(c) => (
            Some(is_quasi_stable(c, QuasiStableMethod::ColonEq)?),
            Some(is_stable(c)?),
        ),
    };
    Ok(GinSampleReport {
        experimental: true,
        trials,
        seed,
        entry_bound,
        votes,
        candidate,
        tie,
        candidate_quasi_stable,
        candidate_stable,
        rejected_draws: rejected,
    })
}

fn random_dense_invertible<F: CoefficientField>(
    ring: &PolyRing<F>,
    rng: &mut StdRng,
    bound: i64,
    n: usize,
) -> LinearChange<F::Elem> {
    loop {
        let matrix: Vec<Vec<F::Elem>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| ring.field.from_i64(rng.gen_range(-bound..=bound)))
                    .collect()
            })
            .collect();
        if invert(&matrix, &ring.field).is_some() {
            return LinearChange::new(matrix, &ring.field).expect("checked invertible");
        }
    }
}

/// Entrywise comparison of bigraded ranks: every entry of `left` is at
/// most the matching entry of `right`.
pub fn bigraded_dominated(left: &ResolutionRanks, right: &ResolutionRanks) -> bool {
    left.bigraded
        .iter()
        .all(|(key, &l)| right.bigraded.get(key).copied().unwrap_or(0) >= l)
}

/// Ranks of the candidate gin's basis, for the comparison reports.
pub fn gin_candidate_ranks(candidate: &MonomialIdeal) -> Result<ResolutionRanks, EngineError> {
    let cap = (2 * candidate.max_generator_degree() * candidate.num_vars() as u32)
        .max(candidate.max_generator_degree() + 1);
    match crate::monomial::monomial_pommaret_complete(candidate, cap)? {
        crate::monomial::MonomialCompletionOutcome::Basis(b) => {
            Ok(resolution_ranks(&BasisProfile::from_monomial(&b)))
        }
        crate::monomial::MonomialCompletionOutcome::NotQuasiStable { .. } => Err(
            EngineError::Internal("gin candidate must be quasi-stable".into()),
        ),
    }
}
