//! Involutive normal forms and involutive autoreduction.

use crate::exponent::ExponentVector;
use crate::field::CoefficientField;
use crate::poly::{PolyRing, Polynomial, Term};

/// Result of an involutive reduction: the remainder plus, per basis
/// element, the quotient it was multiplied by. When the remainder is zero
/// the quotients form the involutive standard representation: each one uses
/// only multiplicative variables of its element and satisfies
/// lt(q·h) ≼ lt(f).
#[derive(Clone, Debug, PartialEq)]
pub struct InvolutiveReduction<C> {
    pub remainder: Polynomial<C>,
    pub quotients: Vec<Polynomial<C>>,
}

/// Involutive normal form with the deterministic reducer choice (first
/// applicable element in list order).
pub fn involutive_normal_form<F: CoefficientField>(
    ring: &PolyRing<F>,
    f: &Polynomial<F::Elem>,
    basis: &[Polynomial<F::Elem>],
) -> InvolutiveReduction<F::Elem> {
    involutive_normal_form_with(ring, f, basis, &mut |choices: &[usize]| choices[0])
}

/// Involutive normal form with an explicit choice among applicable
/// reducers. On a complete basis the involutive divisor of every reducible
/// term is unique, so the chooser never matters there; exposing it lets
/// tests assert exactly that.
pub fn involutive_normal_form_with<F: CoefficientField>(
    ring: &PolyRing<F>,
    f: &Polynomial<F::Elem>,
    basis: &[Polynomial<F::Elem>],
    chooser: &mut dyn FnMut(&[usize]) -> usize,
) -> InvolutiveReduction<F::Elem> {
    let mut quotient_terms: Vec<Vec<Term<F::Elem>>> = vec![Vec::new(); basis.len()];
    let mut remainder_terms: Vec<Term<F::Elem>> = Vec::new();
    let mut work = f.clone();
    while let Some(lead) = work.leading_term().cloned() {
        let applicable: Vec<usize> = basis
            .iter()
            .enumerate()
            .filter(|(_, h)| {
                h.leading_exponent()
                    .map(|e| e.involutive_divides(&lead.exponent))
                    .unwrap_or(false)
            })
            .map(|(i, _)| i)
            .collect();
        if applicable.is_empty() {
            remainder_terms.push(lead);
            work = work.tail();
        } else {
            let idx = chooser(&applicable);
            let h = &basis[idx];
            let h_lead = h.leading_term().expect("basis elements are nonzero");
            let q_exp = lead
                .exponent
                .div(&h_lead.exponent)
                .expect("involutive divisor divides");
            let q_coeff = ring.field.div(&lead.coefficient, &h_lead.coefficient);
            quotient_terms[idx].push(Term {
                coefficient: q_coeff.clone(),
                exponent: q_exp.clone(),
            });
            work = ring.sub_scaled(&work, &q_coeff, &q_exp, h);
        }
    }
    InvolutiveReduction {
        remainder: ring.normalize(remainder_terms),
        quotients: quotient_terms
            .into_iter()
            .map(|terms| ring.normalize(terms))
            .collect(),
    }
}

/// Involutive autoreduction: rewrite every element to involutive normal
/// form against the others until nothing changes. Output elements are
/// monic with pairwise distinct leading terms, and no leading term
/// involutively divides another.
pub fn involutive_autoreduce<F: CoefficientField>(
    ring: &PolyRing<F>,
    polys: Vec<Polynomial<F::Elem>>,
) -> Vec<Polynomial<F::Elem>> {
    let mut set: Vec<Polynomial<F::Elem>> = polys
        .into_iter()
        .filter(|p| !p.is_zero())
        .map(|p| ring.make_monic(&p))
        .collect();
    sort_by_leading(ring, &mut set);
    loop {
        let mut changed = false;
        for i in 0..set.len() {
            let mut others = set.clone();
            others.remove(i);
            let reduced = involutive_normal_form(ring, &set[i], &others).remainder;
            if reduced != set[i] {
                set.remove(i);
                if !reduced.is_zero() {
                    set.push(ring.make_monic(&reduced));
                }
                sort_by_leading(ring, &mut set);
                changed = true;
                break;
            }
        }
        if !changed {
            return set;
        }
    }
}

/// Sort polynomials ascending by leading exponent under the ring's order.
pub fn sort_by_leading<F: CoefficientField>(
    ring: &PolyRing<F>,
    polys: &mut [Polynomial<F::Elem>],
) {
    polys.sort_by(|a, b| {
        ring.order.compare(
            a.leading_exponent().expect("nonzero"),
            b.leading_exponent().expect("nonzero"),
        )
    });
}

pub(crate) fn leading_exponents<C: Clone>(polys: &[Polynomial<C>]) -> Vec<ExponentVector> {
    polys
        .iter()
        .map(|p| p.leading_exponent().expect("nonzero").clone())
        .collect()
}
