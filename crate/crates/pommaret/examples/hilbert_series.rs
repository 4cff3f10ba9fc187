//! The Hilbert series from the disjoint-cone decomposition of a basis,
//! cross-checked against direct monomial counting.

use pommaret::engine::pommaret_complete;
use pommaret::exponent::ExponentVector;
use pommaret::field::Rationals;
use pommaret::invariants::{hilbert_series, BasisProfile, HilbertSeries};
use pommaret::poly::PolyRing;
use pommaret::ring::RingContext;

fn main() {
    let ring = PolyRing::new(RingContext::rational(&["x", "y"]), Rationals);
    let mono = |e: &[u32]| ring.monomial(ExponentVector::new(e.to_vec()));
    let basis = pommaret_complete(&ring, &[mono(&[2, 0]), mono(&[0, 2])], None)
        .unwrap()
        .into_basis()
        .unwrap();
    let profile = BasisProfile::from_pommaret(&basis);
    let series = hilbert_series(&profile);

    println!("ideal <x^2, y^2> in k[x, y]");
    println!(
        "numerator over (1-t)^{}: {:?}",
        series.num_vars, series.numerator
    );
    println!("\n q | dim I_q (series) | dim I_q (cones) | dim I_q (counting) | dim (P/I)_q");
    let lt = basis.leading_ideal();
    for q in 0..=8u32 {
        println!(
            "{:>2} | {:>16} | {:>15} | {:>18} | {:>11}",
            q,
            series.coefficient(q),
            HilbertSeries::cone_count(&profile, q),
            lt.count_monomials_of_degree(q),
            series.quotient_coefficient(q),
        );
    }
}
