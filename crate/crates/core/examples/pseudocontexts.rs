//! Pseudocontexts: vertex sets whose sums agree on every two-valued state
//! without being contexts, and true-implies-false pairs.

use std::collections::BTreeSet;

use contextuality::hypergraph::mep;
use contextuality::states::{enumerate_states, max_classical_sum, pseudocontexts, tifs_pairs};
use contextuality::VertexId;

fn main() {
    let t = enumerate_states(&mep());
    let pairs = pseudocontexts(&t, 3);
    println!("{} pseudocontext pairs with sets of size <= 3", pairs.len());

    let left: BTreeSet<VertexId> = [5u32, 11, 17].map(VertexId::from).into();
    let right: BTreeSet<VertexId> = [1u32, 7, 13].map(VertexId::from).into();
    let p = pairs.iter().find(|p| p.is(&left, &right)).expect("listed");
    println!("{{5,11,17}} ~ {{1,7,13}}, classical maximum {}", p.max_classical_sum);
    println!("sums per state: {:?}", t.set_sums(&left).unwrap());
    assert_eq!(max_classical_sum(&t, &right).unwrap(), 1);

    println!("\ntrue-implies-false pairs:");
    for (u, v) in tifs_pairs(&t) {
        println!("  a{u} = 1 forces a{v} = 0");
    }
}
