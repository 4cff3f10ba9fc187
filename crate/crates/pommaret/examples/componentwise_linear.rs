//! Componentwise linearity: the stable-plus-β₀ decision with the
//! per-degree cross-check, the binomial Betti bounds, and extending a
//! basis along a variable-generated colon ideal.

use pommaret::complin::{
    betti_bound_check, betti_persistence_check, extend_basis, is_componentwise_linear,
    minimal_resolution_test,
};
use pommaret::engine::{pommaret_complete, RepairOptions};
use pommaret::exponent::ExponentVector;
use pommaret::field::Rationals;
use pommaret::invariants::{resolution_ranks, BasisProfile};
use pommaret::poly::PolyRing;
use pommaret::ring::RingContext;

fn main() {
    let ring = PolyRing::new(RingContext::rational(&["x", "y", "z"]), Rationals);
    let mono = |e: &[u32]| ring.monomial(ExponentVector::new(e.to_vec()));
    let options = RepairOptions::default();

    for (label, gens) in [
        (
            "m^2",
            vec![
                mono(&[0, 0, 2]),
                mono(&[0, 1, 1]),
                mono(&[0, 2, 0]),
                mono(&[1, 0, 1]),
                mono(&[1, 1, 0]),
                mono(&[2, 0, 0]),
            ],
        ),
        ("<z^2, zy>", vec![mono(&[0, 0, 2]), mono(&[0, 1, 1])]),
        (
            "Gorenstein <z^2 - xy, yz, y^2, xz, x^2>",
            vec![
                ring.sub(&mono(&[0, 0, 2]), &mono(&[1, 1, 0])),
                mono(&[0, 1, 1]),
                mono(&[0, 2, 0]),
                mono(&[1, 0, 1]),
                mono(&[2, 0, 0]),
            ],
        ),
    ] {
        let (verdict, repair) = is_componentwise_linear(&ring, &gens, &options).unwrap();
        println!("{label}:");
        println!(
            "  componentwise linear: {}   (leading ideal stable: {}, beta0 {} vs {})",
            verdict.verdict, verdict.leading_ideal_stable, verdict.beta0_ideal,
            verdict.beta0_leading
        );
        for row in &verdict.per_degree {
            println!(
                "    component degree {}: regularity {} -> linear {}",
                row.degree, row.component_regularity, row.linear
            );
        }
        println!(
            "  induced resolution minimal: {}",
            minimal_resolution_test(&ring, &repair.basis)
        );
        if verdict.verdict {
            let ranks = resolution_ranks(&BasisProfile::from_pommaret(&repair.basis));
            let pd = ring.num_vars() - repair.basis.min_class();
            println!(
                "  Betti numbers {:?} meet the binomial bounds: {}   persistence: {}",
                ranks.total,
                betti_bound_check(&ranks, pd),
                betti_persistence_check(&ranks)
            );
        }
        println!();
    }

    // extend <z², zy> by y²: the colon is exactly the non-multiplicative z
    let base = pommaret_complete(&ring, &[mono(&[0, 0, 2]), mono(&[0, 1, 1])], None)
        .unwrap()
        .into_basis()
        .unwrap();
    match extend_basis(&ring, &base, &mono(&[0, 2, 0])) {
        Ok(extended) => println!(
            "extension by y^2 accepted, new basis {:?}",
            extended.leading_exponents()
        ),
        Err(rejection) => println!("extension rejected: {rejection}"),
    }
    // x cannot extend <z²>: y·x misses the ideal
    let principal = pommaret_complete(&ring, &[mono(&[0, 0, 2])], None)
        .unwrap()
        .into_basis()
        .unwrap();
    match extend_basis(&ring, &principal, &mono(&[1, 0, 0])) {
        Ok(_) => println!("unexpected acceptance"),
        Err(rejection) => println!("extension of <z^2> by x rejected: {rejection}"),
    }
}
