//! Complete a polynomial ideal to a Pommaret basis and inspect the
//! recorded involutive standard representations.
//!
//! The ideal ⟨z² − xy, yz, y², xz, x²⟩ is already a reduced basis of
//! itself; involutive completion adds exactly one element, x²y, and then
//! every non-multiplicative prolongation rewrites to zero.

use pommaret::engine::{pommaret_complete, CompletionResult};
use pommaret::exponent::ExponentVector;
use pommaret::field::Rationals;
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

    println!("generators:");
    for g in &generators {
        println!("  {}", ring.format(g));
    }

    let basis = match pommaret_complete(&ring, &generators, None).unwrap() {
        CompletionResult::Basis(basis) => basis,
        CompletionResult::DeltaSingular(witness) => {
            println!("δ-singular coordinates: {witness:?}");
            return;
        }
    };

    println!("\ncompleted basis ({} elements):", basis.len());
    for (i, h) in basis.elements().iter().enumerate() {
        let lead = h.leading_exponent().unwrap();
        println!(
            "  h{} = {}   (class {}, degree {})",
            i + 1,
            ring.format(h),
            lead.class().unwrap(),
            lead.degree()
        );
    }

    println!("\ninvolutive standard representations of the prolongations:");
    for (&(i, j), quotients) in basis.representations() {
        let parts: Vec<String> = quotients
            .iter()
            .enumerate()
            .filter(|(_, q)| !q.is_zero())
            .map(|(k, q)| format!("({})*h{}", ring.format(q), k + 1))
            .collect();
        println!(
            "  {} * h{} = {}",
            ring.context.name(j),
            i + 1,
            parts.join(" + ")
        );
    }
}
