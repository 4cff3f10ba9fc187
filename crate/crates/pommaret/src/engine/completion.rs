//! Pommaret completion of polynomial ideals.
//!
//! The loop is the local involutive criterion turned into an algorithm:
//! autoreduce, then adjoin the involutive normal form of every
//! non-multiplicative prolongation that does not vanish, lowest degree
//! first. Once no prolongation survives reduction the set is a Pommaret
//! basis and the recorded quotients are the involutive standard
//! representations. Termination is a property of the coordinates alone:
//! when the degree cap is hit, the exact quasi-stability test on the
//! Buchberger leading ideal either certifies termination (the cap rises)
//! or produces a δ-singularity witness.

use super::buchberger::buchberger;
use super::nf::{involutive_autoreduce, involutive_normal_form, leading_exponents, sort_by_leading};
use super::EngineError;
use crate::exponent::ExponentVector;
use crate::field::CoefficientField;
use crate::monomial::{
    monomial_pommaret_complete, MonomialCompletionOutcome, MonomialIdeal,
};
use crate::order::TermOrder;
use crate::poly::{PolyRing, Polynomial};
use std::collections::BTreeMap;

/// A Pommaret basis: monic elements with pairwise distinct leading terms
/// whose leading exponents form a monomial Pommaret basis of the leading
/// ideal, together with the involutive standard representation of every
/// non-multiplicative prolongation.
#[derive(Clone, Debug, PartialEq)]
pub struct PommaretBasis<C> {
    elements: Vec<Polynomial<C>>,
    /// (element index, non-multiplicative variable) → quotients, aligned
    /// with `elements`.
    representations: BTreeMap<(usize, usize), Vec<Polynomial<C>>>,
}

/// Evidence that the coordinates are δ-singular: the exact leading ideal
/// and the first failing colon equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaSingularWitness {
    pub leading_ideal: MonomialIdeal,
    pub failing_variable: usize,
    pub variable_saturation: MonomialIdeal,
    pub suffix_saturation: MonomialIdeal,
}

#[derive(Clone, Debug, PartialEq)]
pub enum CompletionResult<C> {
    Basis(PommaretBasis<C>),
    DeltaSingular(DeltaSingularWitness),
}

impl<C> CompletionResult<C> {
    pub fn into_basis(self) -> Option<PommaretBasis<C>> {
        match self {
            CompletionResult::Basis(b) => Some(b),
            CompletionResult::DeltaSingular(_) => None,
        }
    }
}

impl<C: Clone> PommaretBasis<C> {
    pub fn elements(&self) -> &[Polynomial<C>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_exponents(&self) -> Vec<ExponentVector> {
        leading_exponents(&self.elements)
    }

    pub fn leading_ideal(&self) -> MonomialIdeal {
        let n = self.elements[0].leading_exponent().expect("nonzero").len();
        MonomialIdeal::from_raw(n, self.leading_exponents())
    }

    pub fn max_degree(&self) -> u32 {
        self.elements
            .iter()
            .filter_map(|h| h.degree())
            .max()
            .expect("basis is nonempty")
    }

    pub fn min_class(&self) -> usize {
        self.elements
            .iter()
            .map(|h| h.leading_exponent().expect("nonzero").class().expect("nonzero"))
            .min()
            .expect("basis is nonempty")
    }

    /// Quotients for the prolongation of element `index` by `variable`.
    pub fn representation(&self, index: usize, variable: usize) -> Option<&[Polynomial<C>]> {
        self.representations
            .get(&(index, variable))
            .map(|v| v.as_slice())
    }

    pub fn representations(&self) -> &BTreeMap<(usize, usize), Vec<Polynomial<C>>> {
        &self.representations
    }
}

/// Degree bound used before any Gröbner information is available.
fn initial_cap<C: Clone>(gens: &[Polynomial<C>], requested: Option<u32>) -> u32 {
    requested.unwrap_or_else(|| {
        let d = gens.iter().filter_map(|g| g.degree()).max().unwrap_or(1);
        2 + 2 * d
    })
}

pub fn pommaret_complete<F: CoefficientField>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    degree_cap: Option<u32>,
) -> Result<CompletionResult<F::Elem>, EngineError> {
    if gens.iter().any(|g| !g.is_homogeneous()) {
        return Err(EngineError::NotHomogeneous);
    }
    let mut elements = involutive_autoreduce(ring, gens.to_vec());
    if elements.is_empty() {
        return Err(EngineError::ZeroIdeal);
    }
    if elements.iter().any(|g| g.degree() == Some(0)) {
        return Err(EngineError::UnitIdeal);
    }
    let mut cap = initial_cap(gens, degree_cap);
    let mut certified = false;
    let mut rounds = 0usize;
    loop {
        rounds += 1;
        if rounds > 100_000 {
            return Err(EngineError::Internal(
                "completion failed to close on a certified δ-regular input".into(),
            ));
        }
        let adjoin = match next_nonzero_prolongation(ring, &elements) {
            None => break,
            Some(p) => p,
        };
        let degree = adjoin.degree().expect("nonzero");
        if degree > cap {
            if certified {
                cap *= 2;
            } else {
                // decide exactly through the leading ideal
                let lt_ideal = exact_leading_ideal(ring, gens)?;
                match crate::monomial::quasistable::colon_eq_witness(&lt_ideal)? {
                    Some((k, single, suffix)) => {
                        return Ok(CompletionResult::DeltaSingular(DeltaSingularWitness {
                            leading_ideal: lt_ideal,
                            failing_variable: k,
                            variable_saturation: single,
                            suffix_saturation: suffix,
                        }));
                    }
                    None => {
                        certified = true;
                        cap = cap.max(certified_cap(&lt_ideal)?);
                    }
                }
                if degree > cap {
                    cap = degree + 1;
                }
            }
        }
        elements.push(adjoin);
        elements = involutive_autoreduce(ring, elements);
    }
    sort_by_leading(ring, &mut elements);
    let representations = record_representations(ring, &elements)?;
    Ok(CompletionResult::Basis(PommaretBasis {
        elements,
        representations,
    }))
}

/// The involutive normal form of the smallest unresolved prolongation,
/// ordered by degree, then class, then reversed lex of the product's
/// leading term.
fn next_nonzero_prolongation<F: CoefficientField>(
    ring: &PolyRing<F>,
    elements: &[Polynomial<F::Elem>],
) -> Option<Polynomial<F::Elem>> {
    let mut candidates: Vec<(usize, usize, ExponentVector)> = Vec::new();
    for (i, h) in elements.iter().enumerate() {
        let lead = h.leading_exponent().expect("nonzero");
        for j in lead.non_multiplicative() {
            candidates.push((i, j, lead.mul_variable(j)));
        }
    }
    candidates.sort_by(|(_, _, a), (_, _, b)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.class().cmp(&b.class()))
            .then_with(|| TermOrder::LexReversed.compare(a, b))
    });
    for (i, j, _) in candidates {
        let prolonged = ring.mul_variable(&elements[i], j);
        let reduced = involutive_normal_form(ring, &prolonged, elements).remainder;
        if !reduced.is_zero() {
            return Some(ring.make_monic(&reduced));
        }
    }
    None
}

fn exact_leading_ideal<F: CoefficientField>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
) -> Result<MonomialIdeal, EngineError> {
    let gb = buchberger(ring, gens)?;
    Ok(MonomialIdeal::from_raw(
        ring.num_vars(),
        gb.leading_exponents(),
    ))
}

/// Once the leading ideal is certified quasi-stable its monomial completion
/// degree bounds the basis degree, with one degree of slack for the
/// in-flight prolongation.
fn certified_cap(lt_ideal: &MonomialIdeal) -> Result<u32, EngineError> {
    let mut cap = (2 * lt_ideal.max_generator_degree() * lt_ideal.num_vars() as u32)
        .max(lt_ideal.max_generator_degree() + 1);
    for _ in 0..8 {
        match monomial_pommaret_complete(lt_ideal, cap)? {
            MonomialCompletionOutcome::Basis(b) => return Ok(b.max_degree() + 1),
            MonomialCompletionOutcome::NotQuasiStable { .. } => cap *= 2,
        }
    }
    Err(EngineError::Internal(
        "monomial completion of a certified quasi-stable leading ideal did not close".into(),
    ))
}

fn record_representations<F: CoefficientField>(
    ring: &PolyRing<F>,
    elements: &[Polynomial<F::Elem>],
) -> Result<BTreeMap<(usize, usize), Vec<Polynomial<F::Elem>>>, EngineError> {
    let mut reps = BTreeMap::new();
    for (i, h) in elements.iter().enumerate() {
        let lead = h.leading_exponent().expect("nonzero").clone();
        for j in lead.non_multiplicative() {
            let prolonged = ring.mul_variable(h, j);
            let out = involutive_normal_form(ring, &prolonged, elements);
            if !out.remainder.is_zero() {
                return Err(EngineError::Internal(format!(
                    "closed basis left a nonzero prolongation at element {i}, variable {j}"
                )));
            }
            reps.insert((i, j), out.quotients);
        }
    }
    Ok(reps)
}

/// Check the local involutive criterion on a head-autoreduced set: every
/// non-multiplicative prolongation must reduce to zero. Returns the
/// representations when it holds.
#[allow(clippy::type_complexity)]
pub fn verify_closure<F: CoefficientField>(
    ring: &PolyRing<F>,
    elements: &[Polynomial<F::Elem>],
) -> Result<BTreeMap<(usize, usize), Vec<Polynomial<F::Elem>>>, Polynomial<F::Elem>> {
    let mut reps = BTreeMap::new();
    for (i, h) in elements.iter().enumerate() {
        let lead = h.leading_exponent().expect("nonzero").clone();
        for j in lead.non_multiplicative() {
            let prolonged = ring.mul_variable(h, j);
            let out = involutive_normal_form(ring, &prolonged, elements);
            if !out.remainder.is_zero() {
                return Err(out.remainder);
            }
            reps.insert((i, j), out.quotients);
        }
    }
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::ring::RingContext;

    type Poly = Polynomial<num_rational::BigRational>;

    fn ring3() -> PolyRing<Rationals> {
        PolyRing::new(RingContext::rational(&["x", "y", "z"]), Rationals)
    }

    fn ring2() -> PolyRing<Rationals> {
        PolyRing::new(RingContext::rational(&["x", "y"]), Rationals)
    }

    fn mono(ring: &PolyRing<Rationals>, e: &[u32]) -> Poly {
        ring.monomial(ExponentVector::new(e.to_vec()))
    }

    fn ev(e: &[u32]) -> ExponentVector {
        ExponentVector::new(e.to_vec())
    }

    #[test]
    fn gorenstein_completion_adds_exactly_one_element() {
        let r = ring3();
        let gens = vec![
            r.sub(&mono(&r, &[0, 0, 2]), &mono(&r, &[1, 1, 0])),
            mono(&r, &[0, 1, 1]),
            mono(&r, &[0, 2, 0]),
            mono(&r, &[1, 0, 1]),
            mono(&r, &[2, 0, 0]),
        ];
        let basis = pommaret_complete(&r, &gens, None)
            .unwrap()
            .into_basis()
            .expect("δ-regular");
        assert_eq!(basis.len(), 6);
        let leads = basis.leading_exponents();
        assert!(leads.contains(&ev(&[2, 1, 0])), "x²y missing: {leads:?}");
        // the added element is the monomial x²y itself
        let added = basis
            .elements()
            .iter()
            .find(|h| h.leading_exponent() == Some(&ev(&[2, 1, 0])))
            .unwrap();
        assert_eq!(added, &mono(&r, &[2, 1, 0]));
    }

    #[test]
    fn monomial_input_matches_monomial_completion() {
        let r = ring2();
        let gens = vec![mono(&r, &[2, 0]), mono(&r, &[0, 2])];
        let basis = pommaret_complete(&r, &gens, None)
            .unwrap()
            .into_basis()
            .unwrap();
        assert_eq!(
            basis.leading_exponents(),
            vec![ev(&[2, 0]), ev(&[0, 2]), ev(&[2, 1])]
        );
        assert_eq!(
            basis.elements()[2],
            mono(&r, &[2, 1]),
        );
    }

    #[test]
    fn class_one_generator_is_delta_singular() {
        let r = ring2();
        let gens = vec![mono(&r, &[1, 0])];
        match pommaret_complete(&r, &gens, None).unwrap() {
            CompletionResult::DeltaSingular(witness) => {
                assert_eq!(
                    witness.leading_ideal.generators(),
                    &[ev(&[1, 0])]
                );
            }
            CompletionResult::Basis(_) => panic!("<x> must be δ-singular"),
        }
    }

    #[test]
    fn completion_is_idempotent() {
        let r = ring3();
        let gens = vec![
            r.sub(&mono(&r, &[0, 0, 2]), &mono(&r, &[1, 1, 0])),
            mono(&r, &[0, 1, 1]),
            mono(&r, &[0, 2, 0]),
            mono(&r, &[1, 0, 1]),
            mono(&r, &[2, 0, 0]),
        ];
        let basis = pommaret_complete(&r, &gens, None)
            .unwrap()
            .into_basis()
            .unwrap();
        let again = pommaret_complete(&r, basis.elements(), None)
            .unwrap()
            .into_basis()
            .unwrap();
        assert_eq!(basis.elements(), again.elements());
    }

    #[test]
    fn representations_re_expand_and_respect_multiplicative_support() {
        let r = ring3();
        let gens = vec![
            r.sub(&mono(&r, &[0, 0, 2]), &mono(&r, &[1, 1, 0])),
            mono(&r, &[0, 1, 1]),
            mono(&r, &[0, 2, 0]),
            mono(&r, &[1, 0, 1]),
            mono(&r, &[2, 0, 0]),
        ];
        let basis = pommaret_complete(&r, &gens, None)
            .unwrap()
            .into_basis()
            .unwrap();
        for (&(i, j), quotients) in basis.representations() {
            let prolonged = r.mul_variable(&basis.elements()[i], j);
            let mut acc = Polynomial::zero();
            for (q, h) in quotients.iter().zip(basis.elements()) {
                acc = r.add(&acc, &r.mul(q, h));
            }
            assert_eq!(acc, prolonged, "re-expansion of ({i}, {j})");
            for (q, h) in quotients.iter().zip(basis.elements()) {
                if q.is_zero() {
                    continue;
                }
                let cls = h.leading_exponent().unwrap().class().unwrap();
                for t in q.terms() {
                    let multiplicative = t
                        .exponent
                        .entries()
                        .iter()
                        .enumerate()
                        .all(|(idx, &e)| e == 0 || idx + 1 <= cls);
                    assert!(
                        multiplicative,
                        "quotient term uses a non-multiplicative variable"
                    );
                }
                // lt(q·h) never exceeds lt of the prolongation
                let product = r.mul(q, h);
                assert_ne!(
                    r.order.compare(
                        product.leading_exponent().unwrap(),
                        prolonged.leading_exponent().unwrap()
                    ),
                    std::cmp::Ordering::Greater
                );
            }
        }
    }

    #[test]
    fn closure_check_distinguishes_groebner_bases() {
        // {x², y²} is a reduced basis of its ideal but not involutively closed
        let r = ring2();
        let set = vec![mono(&r, &[2, 0]), mono(&r, &[0, 2])];
        assert!(verify_closure(&r, &set).is_err());
        let completed = vec![mono(&r, &[2, 0]), mono(&r, &[0, 2]), mono(&r, &[2, 1])];
        assert!(verify_closure(&r, &completed).is_ok());
    }
}
