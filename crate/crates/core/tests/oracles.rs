mod common;

use std::collections::BTreeSet;

use num_traits::Zero;

use contextuality::chromatic::enumerate_colorings;
use contextuality::hypergraph::Builtin;
use contextuality::polytope::{build_vertices, facet_enumeration, vertex_coordinates, PairConfiguration};
use contextuality::states::enumerate_states;

use common::*;

#[test]
fn states_match_exhaustive_filter() {
    for b in Builtin::ALL {
        let h = b.hypergraph();
        let t = enumerate_states(&h);
        assert_eq!(t.rows(), exhaustive_states(&h).as_slice(), "{b}");
    }
}

#[test]
fn colorings_match_naive_search() {
    for b in [Builtin::Pruned, Builtin::C] {
        let h = b.hypergraph();
        let ours: BTreeSet<Vec<u8>> = enumerate_colorings(&h, 3).iter().map(|c| c.row()).collect();
        assert_eq!(ours, naive_colorings(&h, 3), "{b}");
    }
}

#[test]
fn colorings_match_state_triples() {
    for b in Builtin::ALL {
        let h = b.hypergraph();
        let list = enumerate_colorings(&h, 3);
        let ours: BTreeSet<Vec<u8>> = list.iter().map(|c| c.row()).collect();
        assert_eq!(ours.len(), list.len(), "{b}: duplicate colorings");
        assert_eq!(ours, colorings_from_states(&exhaustive_states(&h)), "{b}");
    }
}

#[test]
fn two_colors_never_suffice_for_triangles() {
    for b in Builtin::ALL {
        assert!(enumerate_colorings(&b.hypergraph(), 2).is_empty());
    }
}

fn check_against_oracle(b: Builtin) {
    let h = b.hypergraph();
    let t = enumerate_states(&h);
    let cfg = PairConfiguration::default_for(b);
    let points = vertex_coordinates(&build_vertices(&t, &cfg).unwrap());
    let rep = facet_enumeration(&points);
    let (dim, facets) = brute_force_facets(&points);
    assert_eq!(rep.dimension, dim, "{b}");
    assert_eq!(rep.equalities.len(), rep.ambient_dimension - dim, "{b}");
    for e in &rep.equalities {
        assert!(points.iter().all(|p| e.evaluate_int(p).is_zero()), "{b}: {e}");
    }
    let ours: BTreeSet<_> = rep.inequalities.iter().map(|f| slack_key(f, &points)).collect();
    assert_eq!(ours.len(), rep.inequalities.len(), "{b}: duplicate facets");
    assert_eq!(ours, facets, "{b}");
}

#[test]
fn mep_hull_matches_subset_oracle() {
    let t = enumerate_states(&Builtin::Mep.hypergraph());
    let points = vertex_coordinates(&build_vertices(&t, &PairConfiguration::mep_path()).unwrap());
    assert_eq!(affine_dimension(&points), 7);
    assert_eq!(binomial(points.len() as u64, 7), 792);
    check_against_oracle(Builtin::Mep);
}

#[test]
fn small_hulls_match_subset_oracle() {
    check_against_oracle(Builtin::Pruned);
    check_against_oracle(Builtin::C);
}
