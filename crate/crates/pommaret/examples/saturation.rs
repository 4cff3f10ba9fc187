//! Saturation read off the basis: strip the x₁ power from every class-one
//! element, then eliminate involutive redundancies.

use pommaret::engine::pommaret_complete;
use pommaret::exponent::ExponentVector;
use pommaret::field::Rationals;
use pommaret::invariants::{satiety, saturation_from_basis, BasisProfile};
use pommaret::poly::PolyRing;
use pommaret::ring::RingContext;

fn main() {
    let ring = PolyRing::new(RingContext::rational(&["x", "y", "z"]), Rationals);
    let mono = |e: &[u32]| ring.monomial(ExponentVector::new(e.to_vec()));

    // m² is artinian: a unit enters the weak basis, the saturation is P
    let m2 = vec![
        mono(&[0, 0, 2]),
        mono(&[0, 1, 1]),
        mono(&[0, 2, 0]),
        mono(&[1, 0, 1]),
        mono(&[1, 1, 0]),
        mono(&[2, 0, 0]),
    ];
    let basis = pommaret_complete(&ring, &m2, None)
        .unwrap()
        .into_basis()
        .unwrap();
    let result = saturation_from_basis(&ring, &basis).unwrap();
    println!("m^2:");
    println!(
        "  weak basis after stripping x-powers: {:?}",
        result
            .weak_basis
            .iter()
            .map(|h| ring.format(h))
            .collect::<Vec<_>>()
    );
    println!("  saturated: {}", result.saturated);
    println!("  saturation is the whole ring: {}", result.basis.is_none());
    println!(
        "  satiety: {:?}",
        satiety(&BasisProfile::from_pommaret(&basis))
    );

    // ⟨yz, z²⟩ has no class-one elements at all
    let sat = vec![mono(&[0, 1, 1]), mono(&[0, 0, 2])];
    let basis = pommaret_complete(&ring, &sat, None)
        .unwrap()
        .into_basis()
        .unwrap();
    let result = saturation_from_basis(&ring, &basis).unwrap();
    println!("\n<yz, z^2>:");
    println!("  saturated: {}", result.saturated);
    println!(
        "  basis of the saturation: {:?}",
        result
            .basis
            .map(|b| b.elements().iter().map(|h| ring.format(h)).collect::<Vec<_>>())
    );
}
