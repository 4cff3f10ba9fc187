//! Five independent routes to the same quasi-stability verdict, plus
//! stability and the brute-force associated primes.

use pommaret::exponent::ExponentVector;
use pommaret::monomial::{
    associated_primes_bruteforce, is_stable, quasi_stable_breakdown, MonomialIdeal,
};

fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::minimal_generators(n, gens.iter().map(|g| ExponentVector::new(g.to_vec())))
        .unwrap()
}

fn inspect(label: &str, i: &MonomialIdeal) {
    println!("{label}:");
    for (method, verdict) in quasi_stable_breakdown(i).unwrap() {
        println!("  {method:?}: {verdict}");
    }
    println!("  stable: {}", is_stable(i).unwrap());
    let bound = i.max_generator_degree() + i.num_vars() as u32;
    println!(
        "  associated primes (brute force, degree bound {bound}): {:?}",
        associated_primes_bruteforce(i, bound)
    );
    println!();
}

fn main() {
    // quasi-stable but not stable: the completion must add x²y
    inspect("<x^2, y^2> in k[x, y]", &ideal(2, &[&[2, 0], &[0, 2]]));

    // stable: the minimal generators are already a Pommaret basis
    inspect(
        "m^2 in k[x, y, z]",
        &ideal(
            3,
            &[&[0, 0, 2], &[0, 1, 1], &[0, 2, 0], &[1, 0, 1], &[1, 1, 0], &[2, 0, 0]],
        ),
    );

    // not quasi-stable: a class-one generator whose prolongations never stop
    inspect("<x> in k[x, y]", &ideal(2, &[&[1, 0]]));

    // not quasi-stable: no pure power of the top variable
    inspect("<xz, y^2> in k[x, y, z]", &ideal(3, &[&[1, 0, 1], &[0, 2, 0]]));

    // saturated and quasi-stable, dimension two
    inspect("<yz, z^2> in k[x, y, z]", &ideal(3, &[&[0, 1, 1], &[0, 0, 2]]));
}
