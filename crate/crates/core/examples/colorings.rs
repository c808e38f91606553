//! Rainbow 3-colorings of the MEP hypergraph, their classes up to color
//! permutation, and which two-valued states extend to a coloring.

use contextuality::chromatic::{color_classes, enumerate_colorings, extendable_states, reduced_state};
use contextuality::hypergraph::mep;
use contextuality::states::enumerate_states;

fn main() {
    let h = mep();
    let cs = enumerate_colorings(&h, 3);
    let classes = color_classes(&cs, 3);
    println!("{} colorings in {} classes", cs.len(), classes.len());
    for c in &classes {
        println!("  {:?} ({} members)", c.representative.row(), c.members.len());
    }

    let t = enumerate_states(&h);
    let ext = extendable_states(&t, &cs);
    println!("states that are no color class: {:?}", ext.non_extendable);

    let s = reduced_state(&classes[0].representative, 1);
    println!(
        "color 1 of the first class as a state: admissible = {}",
        s.is_admissible(&h)
    );
}
