//! Shared fixtures and seeded random generators for the integration and
//! acceptance suites.

use num_rational::BigRational;
use pommaret::exponent::{monomials_of_degree, ExponentVector};
use pommaret::field::{CoefficientField, Rationals};
use pommaret::monomial::MonomialIdeal;
use pommaret::poly::{PolyRing, Polynomial, Term};
use pommaret::ring::RingContext;
use rand::rngs::StdRng;
use rand::Rng;

pub type Poly = Polynomial<BigRational>;

pub fn ring(names: &[&str]) -> PolyRing<Rationals> {
    PolyRing::new(RingContext::rational(names), Rationals)
}

pub fn mono(ring: &PolyRing<Rationals>, e: &[u32]) -> Poly {
    ring.monomial(ExponentVector::new(e.to_vec()))
}

pub fn ev(e: &[u32]) -> ExponentVector {
    ExponentVector::new(e.to_vec())
}

/// The squared maximal ideal in three variables.
pub fn m2_generators(r: &PolyRing<Rationals>) -> Vec<Poly> {
    [
        [0, 0, 2],
        [0, 1, 1],
        [0, 2, 0],
        [1, 0, 1],
        [1, 1, 0],
        [2, 0, 0],
    ]
    .iter()
    .map(|e| mono(r, e))
    .collect()
}

/// The Gorenstein fixture ⟨z² − xy, yz, y², xz, x²⟩.
pub fn gorenstein_generators(r: &PolyRing<Rationals>) -> Vec<Poly> {
    vec![
        r.sub(&mono(r, &[0, 0, 2]), &mono(r, &[1, 1, 0])),
        mono(r, &[0, 1, 1]),
        mono(r, &[0, 2, 0]),
        mono(r, &[1, 0, 1]),
        mono(r, &[2, 0, 0]),
    ]
}

/// A random proper nonzero monomial ideal.
pub fn random_monomial_ideal(
    rng: &mut StdRng,
    num_vars: usize,
    max_degree: u32,
    max_generators: usize,
) -> MonomialIdeal {
    loop {
        let count = rng.gen_range(1..=max_generators);
        let gens: Vec<ExponentVector> = (0..count)
            .map(|_| random_exponent(rng, num_vars, max_degree))
            .collect();
        if let Ok(ideal) = MonomialIdeal::minimal_generators(num_vars, gens) {
            if ideal.is_proper_nonzero() {
                return ideal;
            }
        }
    }
}

fn random_exponent(rng: &mut StdRng, num_vars: usize, max_degree: u32) -> ExponentVector {
    loop {
        let degree = rng.gen_range(1..=max_degree);
        let mut entries = vec![0u32; num_vars];
        for _ in 0..degree {
            entries[rng.gen_range(0..num_vars)] += 1;
        }
        let e = ExponentVector::new(entries);
        if !e.is_zero() {
            return e;
        }
    }
}

/// A random homogeneous ideal over ℚ with one to three generators of
/// degree at most `max_degree`.
pub fn random_homogeneous_ideal(
    rng: &mut StdRng,
    r: &PolyRing<Rationals>,
    max_degree: u32,
) -> Vec<Poly> {
    let count = rng.gen_range(1..=3);
    (0..count)
        .map(|_| random_homogeneous_poly(rng, r, max_degree))
        .collect()
}

fn random_homogeneous_poly(rng: &mut StdRng, r: &PolyRing<Rationals>, max_degree: u32) -> Poly {
    loop {
        let degree = rng.gen_range(1..=max_degree);
        let mut terms = Vec::new();
        for e in monomials_of_degree(r.num_vars(), degree) {
            if rng.gen_bool(0.4) {
                let c = rng.gen_range(-3i64..=3);
                if c != 0 {
                    terms.push(Term {
                        coefficient: r.field.from_i64(c),
                        exponent: e,
                    });
                }
            }
        }
        let poly = r.normalize(terms);
        if !poly.is_zero() {
            return poly;
        }
    }
}
