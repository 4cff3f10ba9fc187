//! Detect δ-singular coordinates and repair them, deterministically and
//! with the seeded random fallback.
//!
//! The principal ideal ⟨x⟩ has no finite Pommaret basis: x has class 1, so
//! y·x, y²·x, … all need new generators. One elementary move x ↦ x + y
//! turns the leading term into the top variable and the completion closes
//! immediately.

use pommaret::engine::{
    find_delta_regular_coordinates, is_delta_regular, RepairOptions, RepairStrategy,
};
use pommaret::field::{CoefficientField, Rationals};
use pommaret::poly::PolyRing;
use pommaret::ring::RingContext;

fn main() {
    let ring = PolyRing::new(RingContext::rational(&["x", "y"]), Rationals);
    let generators = vec![ring.variable(1)];

    println!(
        "is <x> delta-regular as given? {}",
        is_delta_regular(&ring, &generators).unwrap()
    );

    let repair =
        find_delta_regular_coordinates(&ring, &generators, &RepairOptions::default()).unwrap();
    println!("\ndeterministic repair:");
    println!("  change matrix (row i = image of variable i):");
    for row in repair.change.matrix() {
        let rendered: Vec<String> = row.iter().map(|c| ring.field.format(c)).collect();
        println!("    [{}]", rendered.join(", "));
    }
    println!(
        "  transformed generators: {:?}",
        repair
            .transformed
            .iter()
            .map(|g| ring.format(g))
            .collect::<Vec<_>>()
    );
    println!(
        "  basis leading terms: {:?}",
        repair.basis.leading_exponents()
    );

    let random = find_delta_regular_coordinates(
        &ring,
        &generators,
        &RepairOptions {
            strategy: RepairStrategy::Random,
            seed: 11,
            ..RepairOptions::default()
        },
    )
    .unwrap();
    println!("\nrandom repair with seed 11:");
    println!(
        "  transformed generators: {:?}",
        random
            .transformed
            .iter()
            .map(|g| ring.format(g))
            .collect::<Vec<_>>()
    );
    println!(
        "  delta-regular now? {}",
        is_delta_regular(&ring, &random.transformed).unwrap()
    );
}
