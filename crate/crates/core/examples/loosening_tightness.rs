//! Dropping the two diagonal contexts, or replacing them with a third,
//! changes how tightly the hypergraph constrains its states.

use contextuality::chromatic::enumerate_colorings;
use contextuality::geometry::{build_variant_a_for, verify_for, DEFAULT_TOL_MARGIN, DEFAULT_TOL_ZERO};
use contextuality::hypergraph::Builtin;
use contextuality::polytope::{build_vertices, facet_enumeration, vertex_coordinates, PairConfiguration};
use contextuality::states::{enumerate_states, is_separating};

fn main() {
    println!(
        "{:<8} {:>8} {:>7} {:>10} {:>9} {:>7}",
        "graph", "contexts", "states", "separating", "colorings", "facets"
    );
    for b in Builtin::ALL {
        let h = b.hypergraph();
        let t = enumerate_states(&h);
        let pts = vertex_coordinates(&build_vertices(&t, &PairConfiguration::default_for(b)).unwrap());
        let hull = facet_enumeration(&pts);
        println!(
            "{:<8} {:>8} {:>7} {:>10} {:>9} {:>7}",
            b.name(),
            h.contexts().len(),
            t.state_count(),
            is_separating(&t).separating,
            enumerate_colorings(&h, 3).len(),
            hull.inequalities.len()
        );
    }

    // the third diagonal {6,12,18} with its vector labels
    let r = verify_for(
        &Builtin::A.hypergraph(),
        &build_variant_a_for(),
        DEFAULT_TOL_ZERO,
        DEFAULT_TOL_MARGIN,
    )
    .unwrap();
    println!("\nvariant a labels faithful: {}", r.faithful);
    for v in &r.violations {
        println!("  {} and {}: {:?}", v.u, v.v, v.kind);
    }
}
