//! Read regularity, projective dimension, depth, dimension, satiety,
//! q-vector, resolution ranks and extremal Betti numbers off a basis.

use pommaret::engine::{pommaret_complete, CompletionResult};
use pommaret::exponent::ExponentVector;
use pommaret::field::Rationals;
use pommaret::invariants::{invariant_report, BasisProfile};
use pommaret::poly::PolyRing;
use pommaret::ring::RingContext;

fn main() {
    // ⟨x², y²⟩: the completion adds x²y, pushing the regularity to 3
    let ring = PolyRing::new(RingContext::rational(&["x", "y"]), Rationals);
    let mono = |e: &[u32]| ring.monomial(ExponentVector::new(e.to_vec()));
    let basis = pommaret_complete(&ring, &[mono(&[2, 0]), mono(&[0, 2])], None)
        .unwrap()
        .into_basis()
        .unwrap();
    let report = invariant_report(&BasisProfile::from_pommaret(&basis));
    println!("ideal <x^2, y^2> in k[x, y]:");
    println!("  basis: {:?}", basis.leading_exponents());
    println!("  reg {}   pd {}   depth(P/I) {}   dim {}", report.reg, report.pd, report.depth_quotient, report.dim);
    println!("  satiety {:?}   q-vector {:?}", report.satiety, report.q_vector);
    println!("  resolution ranks {:?}", report.resolution_ranks.total);
    println!("  extremal Betti {:?}", report.extremal_betti);

    // the squared maximal ideal in three variables
    let ring3 = PolyRing::new(RingContext::rational(&["x", "y", "z"]), Rationals);
    let m = |e: &[u32]| ring3.monomial(ExponentVector::new(e.to_vec()));
    let m2 = vec![
        m(&[0, 0, 2]),
        m(&[0, 1, 1]),
        m(&[0, 2, 0]),
        m(&[1, 0, 1]),
        m(&[1, 1, 0]),
        m(&[2, 0, 0]),
    ];
    let basis = match pommaret_complete(&ring3, &m2, None).unwrap() {
        CompletionResult::Basis(b) => b,
        CompletionResult::DeltaSingular(_) => unreachable!("stable ideal"),
    };
    let report = invariant_report(&BasisProfile::from_pommaret(&basis));
    println!("\nideal m^2 in k[x, y, z]:");
    println!("  reg {}   pd {}   depth(P/I) {}   dim {}", report.reg, report.pd, report.depth_quotient, report.dim);
    println!("  cohen-macaulay: {}", report.cohen_macaulay);
    println!("  census by class: {:?}", report.census.by_class);
    println!("  resolution ranks {:?}", report.resolution_ranks.total);
    println!("  bigraded ranks {:?}", report.resolution_ranks.bigraded);
    println!("  extremal Betti {:?}", report.extremal_betti);
}
