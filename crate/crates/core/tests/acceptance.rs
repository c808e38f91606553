//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so every line reaches stdout; exits nonzero if any fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Zero;

use contextuality::chromatic::{color_classes, enumerate_colorings, extendable_states, reduced_state};
use contextuality::geometry::{
    build_gadget_for, build_mep_for, build_variant_a_for, eigen_sym3, householder, projector, verify_for, LabeledFor,
    Mat3, DEFAULT_EIGEN_TOL,
};
use contextuality::golden;
use contextuality::hypergraph::{mep, Builtin};
use contextuality::polytope::{
    build_vertices, facet_enumeration, match_reference_inequalities, quantum_violation, vertex_coordinates,
    PairConfiguration,
};
use contextuality::states::{enumerate_states, is_admissible_row, is_separating, max_classical_sum, partition_logic};
use contextuality::VertexId;

use common::*;

const STATES_TIME_LIMIT: Duration = Duration::from_secs(1);
const HULL_TIME_LIMIT: Duration = Duration::from_secs(5);
const COLORINGS_TIME_LIMIT: Duration = Duration::from_secs(1);
const OPERATOR_IDENTITY_TOL: f64 = 1e-9;
const EIGENVALUE_TOL: f64 = 1e-4;
const CLOSED_FORM_TOL: f64 = 1e-9;
const FOR_TOL_ZERO: f64 = 1e-9;
const FOR_TOL_MARGIN: f64 = 1e-6;
const CYCLE_CLOSURE_TOL: f64 = 1e-9;
const VIOLATION_EIGENVALUE_TOL: f64 = 1e-4;
const EIGENVECTOR_OVERLAP: f64 = 1.0 - 1e-3;
const HOUSEHOLDER_TOL: f64 = 1e-12;
const GADGET_TOL: f64 = 1e-9;
const PSEUDOCONTEXT_EIGENVALUE: f64 = 1.43016;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn set(xs: &[u32]) -> BTreeSet<VertexId> {
    xs.iter().map(|&x| x.into()).collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let t = enumerate_states(&mep());
    let elapsed = start.elapsed();
    let ours: BTreeSet<Vec<u8>> = t.rows().iter().cloned().collect();
    let reference: BTreeSet<Vec<u8>> = golden::STATES.iter().map(|r| r.to_vec()).collect();
    ensure(t.state_count() == 12, format!("{} states", t.state_count()))?;
    ensure(ours == reference, "state set differs from the reference")?;
    ensure(elapsed < STATES_TIME_LIMIT, format!("took {elapsed:?}"))?;
    Ok(format!("12 states equal to the reference in {elapsed:?}"))
}

fn criterion_2() -> Outcome {
    let p = partition_logic(&enumerate_states(&mep())).map_err(|e| e.to_string())?;
    for (v, want) in golden::PARTITION {
        let got: Vec<usize> = p
            .atom(&v.into())
            .map(|a| a.iter().copied().collect())
            .unwrap_or_default();
        ensure(got == want, format!("vertex {v}: {got:?} vs {want:?}"))?;
    }
    let a18: Vec<usize> = p.atom(&18.into()).unwrap().iter().copied().collect();
    ensure(a18 == [4, 6, 7, 8, 10, 12], "a_18")?;
    Ok("all 18 partition elements equal the reference".into())
}

fn criterion_3() -> Outcome {
    let s = is_separating(&enumerate_states(&mep()));
    ensure(s.separating, format!("not separated: {:?}", s.witness))?;
    Ok("MEP states are separating".into())
}

fn criterion_4() -> Outcome {
    let t = enumerate_states(&mep());
    let (l, r) = golden::PSEUDOCONTEXTS;
    let mut detail = Vec::new();
    for s in [set(&l), set(&r)] {
        let m = max_classical_sum(&t, &s).map_err(|e| e.to_string())?;
        ensure(m == 1, format!("max sum {m} on {s:?}"))?;
        // witness computed directly from the rows
        let idx: Vec<usize> = s.iter().map(|v| t.hypergraph().index_of(v).unwrap()).collect();
        let zero = t
            .rows()
            .iter()
            .position(|row| idx.iter().map(|&i| row[i] as u32).sum::<u32>() == 0)
            .ok_or("no state with sum 0")?;
        detail.push(format!("state {} sums to 0", zero + 1));
    }
    Ok(format!(
        "max classical sum 1 on {{5,11,17}} and {{1,7,13}}; {}",
        detail.join(", ")
    ))
}

/// `(1/6)(10 − 10∛(2/(3√69−11)) + 2^{2/3}∛(3√69−11))`
fn closed_form() -> f64 {
    let s = 3.0 * 69f64.sqrt() - 11.0;
    (10.0 - 10.0 * (2.0 / s).cbrt() + 2f64.powf(2.0 / 3.0) * s.cbrt()) / 6.0
}

fn sum_projectors(f: &LabeledFor, xs: &[u32]) -> Mat3 {
    xs.iter().fold(Mat3::ZERO, |m, &x| m + f.projector(&x.into()).unwrap())
}

fn criterion_5() -> Outcome {
    let f = build_mep_for();
    let (l, r) = golden::PSEUDOCONTEXTS;
    let a = sum_projectors(&f, &l);
    let residual = a.max_abs_diff(&sum_projectors(&f, &r));
    ensure(
        residual <= OPERATOR_IDENTITY_TOL,
        format!("operator residual {residual:e}"),
    )?;
    let spec = eigen_sym3(&a, DEFAULT_EIGEN_TOL).map_err(|e| e.to_string())?;
    // the degenerate pair among the three eigenvalues
    let v = spec.values;
    let (x, y) = [(0, 1), (1, 2), (0, 2)]
        .into_iter()
        .map(|(i, j)| (v[i], v[j]))
        .min_by(|p, q| (p.0 - p.1).abs().total_cmp(&(q.0 - q.1).abs()))
        .unwrap();
    let degenerate = (x + y) / 2.0;
    ensure(
        (degenerate - PSEUDOCONTEXT_EIGENVALUE).abs() <= EIGENVALUE_TOL,
        format!("degenerate eigenvalue {degenerate}"),
    )?;
    let closed = closed_form();
    ensure(
        (closed - degenerate).abs() <= CLOSED_FORM_TOL,
        format!("closed form {closed} vs {degenerate}"),
    )?;
    Ok(format!(
        "residual {residual:.1e}, degenerate eigenvalue {degenerate:.6} (closed form {closed:.10})"
    ))
}

fn criterion_6() -> Outcome {
    let mut notes = Vec::new();
    let mut failures = Vec::new();
    for (name, h, f) in [
        ("mep", mep(), build_mep_for()),
        ("variant (a)", Builtin::A.hypergraph(), build_variant_a_for()),
    ] {
        let r = verify_for(&h, &f, FOR_TOL_ZERO, FOR_TOL_MARGIN).map_err(|e| e.to_string())?;
        if r.faithful {
            notes.push(format!("{name} faithful"));
        } else {
            let pairs: Vec<String> = r
                .violations
                .iter()
                .map(|v| format!("{}-{} {:?}", v.u, v.v, v.kind))
                .collect();
            failures.push(format!("{name} not faithful: {}", pairs.join(", ")));
        }
    }
    let f = build_mep_for();
    let v5 = f.get(&5.into()).unwrap();
    let v7 = f.get(&7.into()).unwrap();
    let closure = v5.dot(v7) / (v5.norm() * v7.norm());
    if closure.abs() > CYCLE_CLOSURE_TOL {
        failures.push(format!("v5.v7 = {closure:e}"));
    } else {
        notes.push(format!("v5.v7 = {closure:.1e}"));
    }
    if failures.is_empty() {
        Ok(notes.join("; "))
    } else {
        Err(format!("{}; {}", failures.join("; "), notes.join("; ")))
    }
}

fn mep_points() -> Vec<Vec<i64>> {
    let t = enumerate_states(&mep());
    vertex_coordinates(&build_vertices(&t, &PairConfiguration::mep_path()).unwrap())
}

fn criterion_7() -> Outcome {
    let points = mep_points();
    let start = Instant::now();
    let rep = facet_enumeration(&points);
    let elapsed = start.elapsed();
    ensure(
        rep.dimension == golden::HULL_DIMENSION,
        format!("dimension {}", rep.dimension),
    )?;
    ensure(
        rep.equalities.len() == 2,
        format!("{} equalities", rep.equalities.len()),
    )?;
    ensure(
        rep.inequalities.len() == 28,
        format!("{} inequalities", rep.inequalities.len()),
    )?;
    let m = match_reference_inequalities(&rep);
    ensure(m.equalities_match, "equalities differ from the reference pair")?;
    ensure(
        m.is_bijection(),
        format!("unmatched {:?} / {:?}", m.unmatched_reference, m.unmatched_computed),
    )?;
    ensure(elapsed < HULL_TIME_LIMIT, format!("took {elapsed:?}"))?;
    let subsets = binomial(points.len() as u64, rep.dimension as u64);
    let (dim, oracle) = brute_force_facets(&points);
    let ours: BTreeSet<_> = rep.inequalities.iter().map(|f| slack_key(f, &points)).collect();
    ensure(dim == rep.dimension && ours == oracle, "subset oracle disagrees")?;
    Ok(format!(
        "dim 7, 2 equalities, 28 inequalities in bijection, {elapsed:?}; oracle over {subsets} subsets agrees"
    ))
}

fn criterion_8() -> Outcome {
    let rep = facet_enumeration(&mep_points());
    let m = match_reference_inequalities(&rep);
    let f = build_mep_for();
    let cfg = PairConfiguration::mep_path();
    let mut bad = Vec::new();
    for row in &golden::VIOLATIONS {
        let Some(i) = m.computed_for(row.inequality) else {
            bad.push(format!("row {}: no facet", row.inequality));
            continue;
        };
        let q = quantum_violation(&rep.inequalities[i], &f, &cfg).map_err(|e| e.to_string())?;
        let p = row.eigenvector;
        let pn = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
        let v = q.eigenvector.to_array();
        let overlap = (v[0] * p[0] + v[1] * p[1] + v[2] * p[2]).abs() / (pn * q.eigenvector.norm());
        let value_ok = (q.min_eigenvalue - row.eigenvalue).abs() <= VIOLATION_EIGENVALUE_TOL;
        if !value_ok || overlap < EIGENVECTOR_OVERLAP {
            bad.push(format!(
                "row {}: {:.5} vs {:.5}, overlap {:.4}",
                row.inequality, q.min_eigenvalue, row.eigenvalue, overlap
            ));
        }
    }
    let total = golden::VIOLATIONS.len();
    if bad.is_empty() {
        Ok(format!("all {total} reference violation rows reproduce"))
    } else {
        Err(format!("{} of {total} rows differ: {}", bad.len(), bad.join("; ")))
    }
}

/// Orbit representative under color permutation: colors renumbered by
/// first appearance.
fn normal_form(row: &[u8]) -> Vec<u8> {
    let mut map = BTreeMap::new();
    row.iter()
        .map(|c| {
            let next = map.len() as u8 + 1;
            *map.entry(*c).or_insert(next)
        })
        .collect()
}

fn criterion_9() -> Outcome {
    let h = mep();
    let t = enumerate_states(&h);
    let start = Instant::now();
    let cs = enumerate_colorings(&h, 3);
    let classes = color_classes(&cs, 3);
    let ext = extendable_states(&t, &cs);
    let elapsed = start.elapsed();
    ensure(cs.len() == golden::COLORING_COUNT, format!("{} colorings", cs.len()))?;
    let oracle = colorings_from_states(&exhaustive_states(&h));
    let ours: BTreeSet<Vec<u8>> = cs.iter().map(|c| c.row()).collect();
    ensure(ours == oracle, "coloring set differs from the state-triple oracle")?;
    ensure(
        classes.len() == 3 && classes.iter().all(|c| c.members.len() == 6),
        format!("{} classes", classes.len()),
    )?;
    let reps: BTreeSet<Vec<u8>> = classes.iter().map(|c| normal_form(&c.representative.row())).collect();
    let reference: BTreeSet<Vec<u8>> = golden::COLORING_CLASSES.iter().map(|r| normal_form(r)).collect();
    ensure(reps == reference, "class representatives differ from the reference")?;
    let non: BTreeSet<usize> = golden::NON_EXTENDABLE_STATES.into_iter().collect();
    ensure(
        ext.non_extendable == non,
        format!("non-extendable {:?}", ext.non_extendable),
    )?;
    let (l, r) = golden::PSEUDOCONTEXTS;
    for c in &cs {
        for color in 1..=3 {
            let s = reduced_state(c, color);
            for p in [l, r] {
                let sum: u32 = p.iter().map(|&x| s.value(&x.into()).unwrap() as u32).sum();
                ensure(sum == 1, format!("reduced state sums to {sum}"))?;
            }
        }
    }
    ensure(elapsed < COLORINGS_TIME_LIMIT, format!("took {elapsed:?}"))?;
    Ok(format!(
        "18 colorings, 3 classes of 6 matching the reference, non-extendable {{4, 8, 10}}, {elapsed:?}"
    ))
}

fn criterion_10() -> Outcome {
    for b in Builtin::ALL {
        let h = b.hypergraph();
        let t = enumerate_states(&h);
        ensure(
            t.rows().iter().all(|r| is_admissible_row(&h, r)),
            format!("{b}: inadmissible state"),
        )?;
        ensure(
            t.rows() == exhaustive_states(&h).as_slice(),
            format!("{b}: exhaustive filter disagrees"),
        )?;
        let points = vertex_coordinates(&build_vertices(&t, &PairConfiguration::default_for(b)).unwrap());
        let rep = facet_enumeration(&points);
        cross_validate(&rep, &points).map_err(|e| format!("{b}: {e}"))?;
        for p in &points {
            let on = rep.inequalities.iter().filter(|f| f.evaluate_int(p).is_zero()).count();
            ensure(on >= rep.dimension, format!("{b}: vertex on {on} facets"))?;
        }
    }
    let mut worst = 0f64;
    for f in [build_mep_for(), build_variant_a_for(), build_gadget_for()] {
        for v in f.vectors.values() {
            let a = householder(*v).map_err(|e| e.to_string())?;
            let e = projector(*v).map_err(|e| e.to_string())?;
            worst = worst
                .max((a * a).max_abs_diff(&Mat3::IDENTITY))
                .max((e * e).max_abs_diff(&e));
        }
    }
    ensure(worst <= HOUSEHOLDER_TOL, format!("A^2 / E^2 residual {worst:e}"))?;
    let g = build_gadget_for();
    let b = |n: u32| g.householder(&n.into()).unwrap();
    let gadget = (b(4) * b(5) + b(6) * b(7) + b(8) * b(9)).max_abs_diff(&Mat3::IDENTITY.scale(-1.0));
    ensure(gadget <= GADGET_TOL, format!("gadget residual {gadget:e}"))?;
    Ok(format!(
        "mep, pruned, a, b, c: admissible, oracle-equal, hulls cross-validated; operator residual {worst:.1e}, gadget {gadget:.1e}"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("two-valued states", criterion_1),
        ("partition logic", criterion_2),
        ("separating", criterion_3),
        ("pseudocontext bound", criterion_4),
        ("quantum pseudocontext", criterion_5),
        ("FOR faithfulness", criterion_6),
        ("correlation hull", criterion_7),
        ("quantum violations", criterion_8),
        ("colorings", criterion_9),
        ("property suites", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
