//! Correlation polytope of the nine-pair path A1A3, A3A5, ..., A17A1:
//! vertices from the two-valued states, facets by exact double
//! description, and the cdd H-representation.

use contextuality::hypergraph::mep;
use contextuality::polytope::cdd::write_ine;
use contextuality::polytope::{
    build_vertices, facet_enumeration, match_reference_inequalities, vertex_coordinates, PairConfiguration,
};
use contextuality::states::enumerate_states;

fn main() {
    let t = enumerate_states(&mep());
    let cfg = PairConfiguration::mep_path();
    let names = cfg.names();
    let vertices = build_vertices(&t, &cfg).unwrap();
    for v in &vertices {
        println!("state {:>2}: {:?}", v.state_index, v.coords);
    }

    let h = facet_enumeration(&vertex_coordinates(&vertices));
    println!("\naffine dimension {} in R^{}", h.dimension, h.ambient_dimension);
    for e in &h.equalities {
        println!("  {}", e.render(&names));
    }
    for (i, f) in h.inequalities.iter().enumerate() {
        println!("{:>3}: {}", i + 1, f.render(&names));
    }

    let m = match_reference_inequalities(&h);
    println!("\nreference list matched one-to-one: {}", m.is_bijection());
    print!("\n{}", write_ine(&h.forms()));
}
