//! Each vertex as the set of states on which it is 1. Contexts become
//! partitions of the state set.

use contextuality::hypergraph::mep;
use contextuality::states::{enumerate_states, partition_logic};

fn main() {
    let h = mep();
    let p = partition_logic(&enumerate_states(&h)).expect("nonempty state set");
    for (v, atom) in &p.atoms {
        println!("a{v:<3} {atom:?}");
    }

    for c in h.contexts() {
        let mut union: Vec<usize> = c.members().iter().flat_map(|m| p.atoms[m].iter().copied()).collect();
        union.sort();
        assert_eq!(union, (1..=p.state_count).collect::<Vec<_>>());
    }
    println!("\nevery context partitions {{1..{}}}", p.state_count);
}
