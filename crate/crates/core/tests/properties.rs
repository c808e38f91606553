mod common;

use std::collections::BTreeSet;

use num_traits::Zero;
use proptest::prelude::*;

use contextuality::chromatic::{enumerate_colorings, reduced_state};
use contextuality::geometry::{
    build_gadget_for, build_mep_for, build_variant_a_for, householder, projector, LabeledFor, Mat3, Vec3,
};
use contextuality::hypergraph::{mep, Builtin};
use contextuality::polytope::cdd::{parse_ext, parse_ine, write_ext, write_ine};
use contextuality::polytope::{
    build_vertices, facet_enumeration, vertex_coordinates, FormKind, LinearForm, PairConfiguration,
};
use contextuality::states::{enumerate_states, is_admissible_row};
use contextuality::Hypergraph;

use common::*;

const OPERATOR_TOL: f64 = 1e-12;
const GADGET_TOL: f64 = 1e-9;

fn unit_vector() -> impl Strategy<Value = Vec3> {
    prop::array::uniform3(-1.0f64..1.0)
        .prop_filter("away from zero", |a| a.iter().map(|x| x * x).sum::<f64>() > 1e-2)
        .prop_map(|a| Vec3::from(a).normalized().unwrap())
}

#[test]
fn builtin_hulls_cross_validate() {
    for b in Builtin::ALL {
        let t = enumerate_states(&b.hypergraph());
        let points = vertex_coordinates(&build_vertices(&t, &PairConfiguration::default_for(b)).unwrap());
        let rep = facet_enumeration(&points);
        cross_validate(&rep, &points).unwrap();
        // every vertex of a polytope lies on at least `dim` facets
        for p in &points {
            let on = rep.inequalities.iter().filter(|f| f.evaluate_int(p).is_zero()).count();
            assert!(on >= rep.dimension, "{b}: vertex {p:?} on {on} facets");
        }
    }
}

#[test]
fn builtin_states_are_admissible() {
    for b in Builtin::ALL {
        let h = b.hypergraph();
        let t = enumerate_states(&h);
        assert!(t.rows().iter().all(|r| is_admissible_row(&h, r)), "{b}");
    }
}

#[test]
fn builtin_for_operators() {
    for f in [build_mep_for(), build_variant_a_for(), build_gadget_for()] {
        for v in f.vectors.values() {
            let a = householder(*v).unwrap();
            assert!((a * a).max_abs_diff(&Mat3::IDENTITY) <= OPERATOR_TOL);
            let e = projector(*v).unwrap();
            assert!((e * e).max_abs_diff(&e) <= OPERATOR_TOL);
        }
    }
}

fn gadget_sum(f: &LabeledFor) -> Mat3 {
    let b = |n: u32| f.householder(&n.into()).unwrap();
    b(4) * b(5) + b(6) * b(7) + b(8) * b(9)
}

#[test]
fn gadget_identity() {
    let s = gadget_sum(&build_gadget_for());
    assert!(s.max_abs_diff(&Mat3::IDENTITY.scale(-1.0)) <= GADGET_TOL);
}

fn sub_hypergraph(mask: u16) -> Option<Hypergraph> {
    let h = mep();
    let ctx: Vec<Vec<u32>> = h
        .contexts()
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, c)| c.members().iter().map(|m| m.as_str().parse().unwrap()).collect())
        .collect();
    let refs: Vec<&[u32]> = ctx.iter().map(Vec::as_slice).collect();
    (!refs.is_empty()).then(|| Hypergraph::from_numeric(&refs).unwrap())
}

fn form_strategy(d: usize) -> impl Strategy<Value = LinearForm> {
    (prop::collection::vec(-5i64..=5, d), -5i64..=5, any::<bool>())
        .prop_filter("nonzero", |(c, _, _)| c.iter().any(|&x| x != 0))
        .prop_map(|(c, a, eq)| {
            let kind = if eq { FormKind::Equality } else { FormKind::InequalityGe };
            LinearForm::from_ints(&c, a, kind).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn householder_squares_to_identity(v in unit_vector(), scale in 0.1f64..10.0) {
        let a = householder(v.scale(scale)).unwrap();
        prop_assert!((a * a).max_abs_diff(&Mat3::IDENTITY) <= OPERATOR_TOL);
        prop_assert!(a.asymmetry() <= OPERATOR_TOL);
        prop_assert!((a.trace() - 1.0).abs() <= OPERATOR_TOL);
    }

    #[test]
    fn projector_is_idempotent(v in unit_vector(), scale in 0.1f64..10.0) {
        let e = projector(v.scale(scale)).unwrap();
        prop_assert!((e * e).max_abs_diff(&e) <= OPERATOR_TOL);
        prop_assert!((e.trace() - 1.0).abs() <= OPERATOR_TOL);
    }

    #[test]
    fn gadget_identity_is_rotation_invariant(u in unit_vector(), w in unit_vector()) {
        // two reflections compose to a rotation
        let r = householder(u).unwrap() * householder(w).unwrap();
        let mut f = LabeledFor::new();
        for (k, v) in &build_gadget_for().vectors {
            f.insert(k.clone(), r * *v);
        }
        prop_assert!(gadget_sum(&f).max_abs_diff(&Mat3::IDENTITY.scale(-1.0)) <= GADGET_TOL);
    }

    #[test]
    fn sub_hypergraph_states_match_oracle(mask in 1u16..(1 << 11)) {
        let h = sub_hypergraph(mask).unwrap();
        let t = enumerate_states(&h);
        prop_assert!(t.rows().iter().all(|r| is_admissible_row(&h, r)));
        let oracle = exhaustive_states(&h);
        prop_assert_eq!(t.rows(), oracle.as_slice());
    }

    #[test]
    fn sub_hypergraph_reduced_states_are_admissible(mask in 1u16..(1 << 11)) {
        let h = sub_hypergraph(mask).unwrap();
        let states: BTreeSet<Vec<u8>> = enumerate_states(&h).rows().iter().cloned().collect();
        for c in enumerate_colorings(&h, 3) {
            prop_assert!(c.is_rainbow(&h));
            for color in 1..=3 {
                let s = reduced_state(&c, color);
                prop_assert!(s.is_admissible(&h));
                let row: Vec<u8> = h.vertices().iter().map(|v| s.value(v).unwrap()).collect();
                prop_assert!(states.contains(&row));
            }
        }
    }

    #[test]
    fn random_hulls_match_oracle(
        points in prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 1..9)
    ) {
        let rep = facet_enumeration(&points);
        cross_validate(&rep, &points).unwrap();
        let (dim, facets) = brute_force_facets(&points);
        prop_assert_eq!(rep.dimension, dim);
        let ours: BTreeSet<_> = rep.inequalities.iter().map(|f| slack_key(f, &points)).collect();
        prop_assert_eq!(ours, facets);
    }

    #[test]
    fn ine_round_trip(forms in prop::collection::vec(form_strategy(4), 1..8)) {
        let text = write_ine(&forms);
        let parsed = parse_ine(&text).unwrap();
        let mut expected: Vec<LinearForm> = forms.iter().filter(|f| f.is_equality()).cloned().collect();
        expected.extend(forms.iter().filter(|f| !f.is_equality()).cloned());
        prop_assert_eq!(&parsed, &expected);
        prop_assert_eq!(write_ine(&parsed), text);
    }

    #[test]
    fn ext_round_trip(points in prop::collection::vec(prop::collection::vec(-9i64..=9, 5), 1..10)) {
        let parsed = parse_ext(&write_ext(&points)).unwrap();
        let back: Vec<Vec<i64>> = parsed
            .iter()
            .map(|r| r.iter().map(|x| x.to_integer().try_into().unwrap()).collect())
            .collect();
        prop_assert_eq!(back, points);
    }
}
