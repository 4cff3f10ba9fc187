//! EXPERIMENTAL generic-initial-ideal sampling: vote over dense random
//! coordinate changes, then compare the transferable invariants of the
//! candidate against the input ideal.
//!
//! There is no effective certificate that a sampled leading ideal is the
//! generic one, so the result is a report, never an input to further
//! computation.

use pommaret::complin::gin_sample;
use pommaret::engine::{find_delta_regular_coordinates, RepairOptions};
use pommaret::exponent::ExponentVector;
use pommaret::field::Rationals;
use pommaret::invariants::{invariant_report, BasisProfile};
use pommaret::monomial::{monomial_pommaret_complete, MonomialCompletionOutcome};
use pommaret::poly::PolyRing;
use pommaret::ring::RingContext;

fn main() {
    let ring = PolyRing::new(RingContext::rational(&["x", "y", "z"]), Rationals);
    let mono = |e: &[u32]| ring.monomial(ExponentVector::new(e.to_vec()));
    let generators = vec![
        ring.sub(&mono(&[0, 0, 2]), &mono(&[1, 1, 0])),
        mono(&[0, 1, 1]),
        mono(&[0, 2, 0]),
        mono(&[1, 0, 1]),
        mono(&[2, 0, 0]),
    ];

    let report = gin_sample(&ring, &generators, 16, 7, 10).unwrap();
    println!("trials: {}   rejected draws: {}", report.trials, report.rejected_draws);
    for vote in &report.votes {
        println!(
            "  {} votes for {:?}",
            vote.count,
            vote.leading_ideal.generators()
        );
    }
    let candidate = report.candidate.expect("unanimous on this fixture");
    println!("\ncandidate gin: {:?}", candidate.generators());
    println!("quasi-stable: {:?}", report.candidate_quasi_stable);
    println!("stable (char 0): {:?}", report.candidate_stable);

    // invariants transfer from the ideal to the candidate
    let repair =
        find_delta_regular_coordinates(&ring, &generators, &RepairOptions::default()).unwrap();
    let own = invariant_report(&BasisProfile::from_pommaret(&repair.basis));
    let candidate_basis = match monomial_pommaret_complete(&candidate, 64).unwrap() {
        MonomialCompletionOutcome::Basis(b) => b,
        MonomialCompletionOutcome::NotQuasiStable { .. } => unreachable!("checked above"),
    };
    let gin_invariants = invariant_report(&BasisProfile::from_monomial(&candidate_basis));
    println!("\n                 ideal   candidate");
    println!("reg            {:>7} {:>9}", own.reg, gin_invariants.reg);
    println!("pd             {:>7} {:>9}", own.pd, gin_invariants.pd);
    println!(
        "depth(P/I)     {:>7} {:>9}",
        own.depth_quotient, gin_invariants.depth_quotient
    );
    println!(
        "satiety        {:>7?} {:>9?}",
        own.satiety, gin_invariants.satiety
    );
    println!(
        "extremal Betti {:?} / {:?}",
        own.extremal_betti, gin_invariants.extremal_betti
    );
}
