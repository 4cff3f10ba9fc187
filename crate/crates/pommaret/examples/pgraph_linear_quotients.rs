//! The P-graph of the six quadrics z², yz, y², xz, xy, x², their inverse
//! P-ordering, and the linear-quotients colon table along it.

use pommaret::exponent::ExponentVector;
use pommaret::monomial::{
    inverse_p_ordering, linear_quotients_check, monomial_pommaret_complete, p_graph,
    MonomialCompletionOutcome, MonomialIdeal,
};
use pommaret::ring::RingContext;

fn main() {
    let context = RingContext::rational(&["x", "y", "z"]);
    let ideal = MonomialIdeal::minimal_generators(
        3,
        [
            [0u32, 0, 2],
            [0, 1, 1],
            [0, 2, 0],
            [1, 0, 1],
            [1, 1, 0],
            [2, 0, 0],
        ]
        .iter()
        .map(|e| ExponentVector::new(e.to_vec())),
    )
    .unwrap();

    let basis = match monomial_pommaret_complete(&ideal, 64).unwrap() {
        MonomialCompletionOutcome::Basis(b) => b,
        MonomialCompletionOutcome::NotQuasiStable { witness } => {
            println!("not quasi-stable, completion grows past {witness:?}");
            return;
        }
    };
    println!(
        "the {} minimal generators are already a Pommaret basis",
        basis.elements().len()
    );

    let show = |e: &ExponentVector| {
        let mut s = String::new();
        for (i, &exp) in e.entries().iter().enumerate() {
            for _ in 0..exp {
                s.push_str(context.name(i + 1));
            }
        }
        s
    };

    let ordering = inverse_p_ordering(&basis);
    println!("\ninverse P-ordering:");
    for (i, e) in ordering.iter().enumerate() {
        println!("  h{} = {}", i + 1, show(e));
    }

    let graph = p_graph(&basis).unwrap();
    println!("\nP-graph edges (source --variable--> involutive divisor):");
    for edge in &graph.edges {
        println!(
            "  h{} --{}--> h{}",
            edge.from + 1,
            context.name(edge.variable),
            edge.to + 1
        );
    }

    let check = linear_quotients_check(&ordering, 3);
    println!("\ncolon table along the ordering:");
    for step in &check.steps {
        let colon: Vec<String> = step.colon.generators().iter().map(&show).collect();
        println!(
            "  <h1..h{}> : h{}  =  <{}>   equals non-multiplicative set: {}",
            step.index.saturating_sub(1),
            step.index,
            colon.join(", "),
            step.equals_non_multiplicative
        );
    }
    println!(
        "\nlinear quotients: {}   colon identity: {}",
        check.has_linear_quotients, check.colon_identity_holds
    );
}
