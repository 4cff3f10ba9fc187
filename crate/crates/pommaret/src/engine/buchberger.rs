//! A plain Buchberger engine producing reduced Gröbner bases. It serves as
//! the independent oracle next to the involutive completion: it supplies
//! the exact leading ideal for δ-regularity decisions, cross-checks the
//! completed basis, and decides ideal membership.

use super::nf::sort_by_leading;
use super::EngineError;
use crate::exponent::ExponentVector;
use crate::field::CoefficientField;
use crate::poly::{PolyRing, Polynomial};

/// A reduced Gröbner basis: monic elements, no term of any element
/// divisible by the leading term of another, sorted ascending by leading
/// term.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis<C> {
    elements: Vec<Polynomial<C>>,
}

impl<C: Clone> GroebnerBasis<C> {
    pub fn elements(&self) -> &[Polynomial<C>] {
        &self.elements
    }

    pub fn leading_exponents(&self) -> Vec<ExponentVector> {
        self.elements
            .iter()
            .map(|g| g.leading_exponent().expect("nonzero").clone())
            .collect()
    }

    pub fn max_degree(&self) -> u32 {
        self.elements
            .iter()
            .filter_map(|g| g.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn min_degree(&self) -> u32 {
        self.elements
            .iter()
            .filter_map(|g| g.degree())
            .min()
            .unwrap_or(0)
    }
}

/// Full reduction by plain divisibility, scanning reducers in list order.
pub fn polynomial_normal_form<F: CoefficientField>(
    ring: &PolyRing<F>,
    f: &Polynomial<F::Elem>,
    basis: &[Polynomial<F::Elem>],
) -> Polynomial<F::Elem> {
    let mut remainder = Vec::new();
    let mut work = f.clone();
    while let Some(lead) = work.leading_term().cloned() {
        let reducer = basis.iter().find(|h| {
            h.leading_exponent()
                .map(|e| e.divides(&lead.exponent))
                .unwrap_or(false)
        });
        match reducer {
            None => {
                remainder.push(lead);
                work = work.tail();
            }
            Some(h) => {
                let h_lead = h.leading_term().expect("nonzero");
                let q_exp = lead.exponent.div(&h_lead.exponent).expect("divides");
                let q_coeff = ring.field.div(&lead.coefficient, &h_lead.coefficient);
                work = ring.sub_scaled(&work, &q_coeff, &q_exp, h);
            }
        }
    }
    ring.normalize(remainder)
}

/// Buchberger's algorithm with the normal selection strategy (lowest lcm
/// degree first) and full reduction, followed by minimalization and
/// inter-reduction.
pub fn buchberger<F: CoefficientField>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
) -> Result<GroebnerBasis<F::Elem>, EngineError> {
    let mut basis: Vec<Polynomial<F::Elem>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| ring.make_monic(g))
        .collect();
    if basis.is_empty() {
        return Err(EngineError::ZeroIdeal);
    }
    if basis.iter().any(|g| !g.is_homogeneous()) {
        return Err(EngineError::NotHomogeneous);
    }
    sort_by_leading(ring, &mut basis);

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }
    while !pairs.is_empty() {
        // normal strategy: smallest lcm first
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                let la = pair_lcm(&basis, a);
                let lb = pair_lcm(&basis, b);
                la.degree()
                    .cmp(&lb.degree())
                    .then_with(|| ring.order.compare(&la, &lb))
                    .then_with(|| a.cmp(b))
            })
            .map(|(idx, _)| idx)
            .expect("nonempty");
        let (i, j) = pairs.swap_remove(best);
        let lt_i = basis[i].leading_exponent().expect("nonzero").clone();
        let lt_j = basis[j].leading_exponent().expect("nonzero").clone();
        let lcm = lt_i.lcm(&lt_j);
        if lcm == lt_i.mul(&lt_j) {
            continue; // coprime leading terms
        }
        let one = ring.field.one();
        let s_poly = ring.sub(
            &ring.mul_term(&basis[i], &one, &lcm.div(&lt_i).expect("divides")),
            &ring.mul_term(&basis[j], &one, &lcm.div(&lt_j).expect("divides")),
        );
        let reduced = polynomial_normal_form(ring, &s_poly, &basis);
        if !reduced.is_zero() {
            let new_index = basis.len();
            basis.push(ring.make_monic(&reduced));
            for k in 0..new_index {
                pairs.push((k, new_index));
            }
        }
    }

    let reduced = reduce_basis(ring, basis);
    if reduced.iter().any(|g| g.degree() == Some(0)) {
        return Err(EngineError::UnitIdeal);
    }
    Ok(GroebnerBasis { elements: reduced })
}

fn pair_lcm<C: Clone>(basis: &[Polynomial<C>], pair: &(usize, usize)) -> ExponentVector {
    let a = basis[pair.0].leading_exponent().expect("nonzero");
    let b = basis[pair.1].leading_exponent().expect("nonzero");
    a.lcm(b)
}

/// Keep only elements with minimal leading terms, then reduce every tail
/// against the rest until stable.
fn reduce_basis<F: CoefficientField>(
    ring: &PolyRing<F>,
    mut basis: Vec<Polynomial<F::Elem>>,
) -> Vec<Polynomial<F::Elem>> {
    sort_by_leading(ring, &mut basis);
    let mut kept: Vec<Polynomial<F::Elem>> = Vec::new();
    for g in basis {
        let lt = g.leading_exponent().expect("nonzero");
        if !kept
            .iter()
            .any(|k| k.leading_exponent().expect("nonzero").divides(lt))
        {
            kept.push(g);
        }
    }
    loop {
        let mut changed = false;
        for i in 0..kept.len() {
            let mut others = kept.clone();
            others.remove(i);
            let r = polynomial_normal_form(ring, &kept[i], &others);
            debug_assert!(!r.is_zero(), "minimalized element reduced to zero");
            if r != kept[i] {
                kept[i] = ring.make_monic(&r);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    sort_by_leading(ring, &mut kept);
    kept
}

/// Ideal membership through the reduced basis: the normal form vanishes.
pub fn ideal_membership<F: CoefficientField>(
    ring: &PolyRing<F>,
    f: &Polynomial<F::Elem>,
    gb: &GroebnerBasis<F::Elem>,
) -> bool {
    polynomial_normal_form(ring, f, &gb.elements).is_zero()
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

    fn mono(ring: &PolyRing<Rationals>, e: &[u32]) -> Poly {
        ring.monomial(ExponentVector::new(e.to_vec()))
    }

    fn gorenstein_gens(r: &PolyRing<Rationals>) -> Vec<Poly> {
        vec![
            r.sub(&mono(r, &[0, 0, 2]), &mono(r, &[1, 1, 0])),
            mono(r, &[0, 1, 1]),
            mono(r, &[0, 2, 0]),
            mono(r, &[1, 0, 1]),
            mono(r, &[2, 0, 0]),
        ]
    }

    #[test]
    fn gorenstein_generators_are_already_reduced() {
        let r = ring3();
        let gens = gorenstein_gens(&r);
        let gb = buchberger(&r, &gens).unwrap();
        assert_eq!(gb.elements().len(), 5);
        for g in gb.elements() {
            assert!(gens.contains(g), "unexpected element {}", r.format(g));
        }
    }

    #[test]
    fn monomial_input_returns_minimal_generators() {
        let r = ring3();
        let gens = vec![mono(&r, &[2, 0, 0]), mono(&r, &[2, 1, 0]), mono(&r, &[0, 2, 0])];
        let gb = buchberger(&r, &gens).unwrap();
        assert_eq!(gb.elements().len(), 2);
    }

    #[test]
    fn linear_elimination() {
        let r = PolyRing::new(RingContext::rational(&["x", "y"]), Rationals);
        let gens = vec![
            r.sub(&r.variable(1), &r.variable(2)),
            r.variable(2),
        ];
        let gb = buchberger(&r, &gens).unwrap();
        assert_eq!(gb.elements().len(), 2);
        assert_eq!(
            gb.leading_exponents(),
            vec![
                ExponentVector::new(vec![1, 0]),
                ExponentVector::new(vec![0, 1])
            ]
        );
    }

    #[test]
    fn membership_in_the_gorenstein_ideal() {
        let r = ring3();
        let gb = buchberger(&r, &gorenstein_gens(&r)).unwrap();
        // x²y = y·x² lies in the ideal, xy is the lone standard quadric
        assert!(ideal_membership(&r, &mono(&r, &[2, 1, 0]), &gb));
        assert!(!ideal_membership(&r, &mono(&r, &[1, 1, 0]), &gb));
        for g in gb.elements() {
            assert!(ideal_membership(&r, g, &gb));
        }
    }

    #[test]
    fn zero_and_unit_ideals_are_rejected() {
        let r = ring3();
        assert_eq!(
            buchberger(&r, &[Polynomial::zero()]).unwrap_err(),
            EngineError::ZeroIdeal
        );
        let inhomogeneous = r.add(&r.variable(1), &r.constant(r.field.from_i64(1)));
        assert_eq!(
            buchberger(&r, &[inhomogeneous]).unwrap_err(),
            EngineError::NotHomogeneous
        );
    }
}
