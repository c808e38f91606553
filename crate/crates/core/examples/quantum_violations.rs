//! Replace each A_j by the Householder reflection 1 - 2 v_j v_j^T and
//! find the smallest eigenvalue of every facet operator.

use contextuality::geometry::build_mep_for;
use contextuality::hypergraph::mep;
use contextuality::polytope::{
    build_vertices, facet_enumeration, quantum_violation, vertex_coordinates, PairConfiguration,
};
use contextuality::states::enumerate_states;

fn main() {
    let cfg = PairConfiguration::mep_path();
    let t = enumerate_states(&mep());
    let h = facet_enumeration(&vertex_coordinates(&build_vertices(&t, &cfg).unwrap()));
    let f = build_mep_for();
    let names = cfg.names();

    for (i, form) in h.inequalities.iter().enumerate() {
        let q = quantum_violation(form, &f, &cfg).unwrap();
        println!(
            "{:>3} {:>10.6} {:>9.6} {}  {}",
            i + 1,
            q.min_eigenvalue,
            q.margin,
            if q.violated { "violated" } else { "        " },
            form.render(&names)
        );
    }
}
