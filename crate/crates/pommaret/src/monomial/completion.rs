//! Monomial Pommaret completion: saturate a minimal generating set under
//! non-multiplicative prolongations until every term of the ideal has a
//! unique involutive divisor, or report the obstruction.

use super::ideal::{IdealError, MonomialIdeal};
use crate::exponent::ExponentVector;
use crate::order::TermOrder;

/// A complete, involutively autoreduced set of terms: the multiplicative
/// cones of the elements partition the monomials of the ideal, so every
/// term of the ideal has exactly one involutive divisor here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialPommaretBasis {
    num_vars: usize,
    elements: Vec<ExponentVector>,
    ideal: MonomialIdeal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialCompletionOutcome {
    Basis(MonomialPommaretBasis),
    /// The completion left the degree cap; the witness is the first
    /// prolongation beyond it. Not a failure: callers re-check with the
    /// exact criteria.
    NotQuasiStable { witness: ExponentVector },
}

impl MonomialPommaretBasis {
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn elements(&self) -> &[ExponentVector] {
        &self.elements
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn max_degree(&self) -> u32 {
        self.elements.iter().map(|e| e.degree()).max().unwrap_or(0)
    }

    pub fn min_class(&self) -> usize {
        self.elements
            .iter()
            .map(|e| e.class().expect("basis elements are nonzero"))
            .min()
            .expect("basis is nonempty")
    }

    /// The unique involutive divisor of `m` among the elements, if any.
    pub fn involutive_divisor(&self, m: &ExponentVector) -> Option<&ExponentVector> {
        self.elements.iter().find(|e| e.involutive_divides(m))
    }

    /// Number of involutive divisors of `m` among the elements; 1 on the
    /// ideal and 0 outside it, for a genuine basis.
    pub fn involutive_divisor_count(&self, m: &ExponentVector) -> usize {
        self.elements
            .iter()
            .filter(|e| e.involutive_divides(m))
            .count()
    }
}

/// Complete the minimal generators of `ideal`. Prolongations are processed
/// lowest degree first, then lowest class, then lex, so the output is
/// deterministic; a prolongation past `degree_cap` aborts with the witness.
///
/// Coverage by the multiplicative cones only ever grows: inserting a term
/// t removes exactly the elements whose cones t's cone contains, so a
/// pending prolongation found covered stays covered and the queue can be
/// drained lazily.
pub fn monomial_pommaret_complete(
    ideal: &MonomialIdeal,
    degree_cap: u32,
) -> Result<MonomialCompletionOutcome, IdealError> {
    if ideal.is_unit() {
        return Err(IdealError::UnitIdeal);
    }
    if ideal.is_zero() {
        return Err(IdealError::ZeroIdeal);
    }
    let n = ideal.num_vars();
    let mut elements: Vec<ExponentVector> = ideal.generators().to_vec();
    let mut pending: std::collections::BTreeMap<CandidateKey, ExponentVector> =
        std::collections::BTreeMap::new();
    for h in &elements {
        push_prolongations(h, &mut pending);
    }
    while let Some((_, candidate)) = pending.pop_first() {
        if elements.iter().any(|e| e.involutive_divides(&candidate)) {
            continue;
        }
        if candidate.degree() > degree_cap {
            return Ok(MonomialCompletionOutcome::NotQuasiStable { witness: candidate });
        }
        // keep the set involutively autoreduced
        elements.retain(|e| !candidate.involutive_divides(e));
        push_prolongations(&candidate, &mut pending);
        elements.push(candidate);
    }
    elements.sort_by(|a, b| TermOrder::DegRevLexReversed.compare(a, b));
    Ok(MonomialCompletionOutcome::Basis(MonomialPommaretBasis {
        num_vars: n,
        elements,
        ideal: ideal.clone(),
    }))
}

/// Sort key realizing the (degree, class, reversed-lex) processing order;
/// storing the entries back to front makes the natural vector order agree
/// with the reversed-lex comparison.
type CandidateKey = (u32, usize, Vec<u32>);

fn candidate_key(e: &ExponentVector) -> CandidateKey {
    let reversed: Vec<u32> = e.entries().iter().rev().copied().collect();
    (e.degree(), e.class().expect("nonzero"), reversed)
}

fn push_prolongations(
    h: &ExponentVector,
    pending: &mut std::collections::BTreeMap<CandidateKey, ExponentVector>,
) {
    for j in h.non_multiplicative() {
        let prolonged = h.mul_variable(j);
        pending.entry(candidate_key(&prolonged)).or_insert(prolonged);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponent::monomials_of_degree;

    fn ev(entries: &[u32]) -> ExponentVector {
        ExponentVector::new(entries.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimal_generators(n, gens.iter().map(|g| ev(g))).unwrap()
    }

    fn complete(i: &MonomialIdeal) -> MonomialPommaretBasis {
        match monomial_pommaret_complete(i, 64).unwrap() {
            MonomialCompletionOutcome::Basis(b) => b,
            MonomialCompletionOutcome::NotQuasiStable { witness } => {
                panic!("unexpected cap hit at {witness:?}")
            }
        }
    }

    #[test]
    fn x2_y2_completion_adds_x2y() {
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        let basis = complete(&i);
        // canonical storage is ascending under the default order
        assert_eq!(
            basis.elements(),
            &[ev(&[2, 0]), ev(&[0, 2]), ev(&[2, 1])]
        );
    }

    #[test]
    fn m2_is_its_own_basis() {
        let m2 = ideal(
            3,
            &[&[0, 0, 2], &[0, 1, 1], &[0, 2, 0], &[1, 0, 1], &[1, 1, 0], &[2, 0, 0]],
        );
        let basis = complete(&m2);
        assert_eq!(basis.elements().len(), 6);
        assert_eq!(basis.max_degree(), 2);
    }

    #[test]
    fn class_one_principal_ideal_diverges() {
        let x = ideal(2, &[&[1, 0]]);
        match monomial_pommaret_complete(&x, 12).unwrap() {
            MonomialCompletionOutcome::NotQuasiStable { witness } => {
                assert!(witness.degree() > 12);
            }
            MonomialCompletionOutcome::Basis(_) => panic!("<x> must not complete"),
        }
    }

    #[test]
    fn last_variable_is_complete_alone() {
        let y = ideal(2, &[&[0, 1]]);
        let basis = complete(&y);
        assert_eq!(basis.elements(), &[ev(&[0, 1])]);
    }

    #[test]
    fn disjoint_cone_decomposition() {
        // every monomial of the ideal has exactly one involutive divisor,
        // every monomial outside has none
        for (n, gens) in [
            (2usize, vec![vec![2u32, 0], vec![0, 2]]),
            (3, vec![vec![0, 0, 2], vec![0, 1, 1]]),
        ] {
            let i = MonomialIdeal::minimal_generators(n, gens.into_iter().map(ExponentVector::new))
                .unwrap();
            let basis = complete(&i);
            for d in 0..=6u32 {
                for m in monomials_of_degree(n, d) {
                    let expected = usize::from(i.contains(&m));
                    assert_eq!(basis.involutive_divisor_count(&m), expected, "{m:?}");
                }
            }
        }
    }

    #[test]
    fn cone_sizes_sum_to_hilbert_function() {
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        let basis = complete(&i);
        for q in 0..=8u32 {
            let by_cones: u64 = basis
                .elements()
                .iter()
                .filter(|h| h.degree() <= q)
                .map(|h| {
                    let cls = h.class().unwrap() as u64;
                    crate::exponent::binomial((q - h.degree()) as u64 + cls - 1, cls - 1)
                })
                .sum();
            assert_eq!(by_cones, i.count_monomials_of_degree(q) as u64);
        }
    }
}
