//! Two-valued states of the MEP hypergraph and whether they separate
//! its vertices.

use contextuality::hypergraph::mep;
use contextuality::states::{enumerate_states, is_separating};

fn main() {
    let h = mep();
    let t = enumerate_states(&h);
    println!("{} contexts on {} vertices", h.contexts().len(), h.vertex_count());
    println!("{} two-valued states\n", t.state_count());
    print!("{}", t.to_table());

    let sep = is_separating(&t);
    println!("\nseparating: {}", sep.separating);

    // the same states as a CSV Travis matrix
    print!("\n{}", t.to_csv());
}
