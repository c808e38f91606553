//! Command implementations behind the `contextuality` binary.
//!
//! Every command produces a [`Report`] (serialized as the JSON document), a
//! plain-text rendering for stdout, optional CSV/cdd files, and a list of
//! failures. Under `assert_paper` the reference values in [`golden`] are
//! checked as well and any mismatch counts as a failure.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::chromatic::{
    color_classes, colorings_to_csv, enumerate_colorings, extendable_states, reduced_state, Coloring,
};
use crate::error::{Error, Result};
use crate::geometry::{
    build_gadget_for, build_mep_for, build_variant_a_for, eigen_sym3, pseudocontext_eigenvalue_closed_form, verify_for,
    LabeledFor, Mat3, DEFAULT_EIGEN_TOL, DEFAULT_TOL_MARGIN, DEFAULT_TOL_ZERO,
};
use crate::golden;
use crate::hypergraph::{mep, parse_hypergraph, Builtin, Format, Hypergraph, VertexId};
use crate::polytope::cdd::{write_ext, write_ine};
use crate::polytope::{
    build_vertices, facet_enumeration, match_reference_inequalities, quantum_violation, vertex_coordinates,
    HRepresentation, LinearForm, Matching, PairConfiguration, QuantumViolation,
};
use crate::states::{
    enumerate_states, is_separating, partition_logic, pseudocontexts, tifs_pairs, TravisMatrix,
    DEFAULT_PSEUDOCONTEXT_SIZE,
};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Identity residual allowed for operator checks against the fixtures.
pub const OPERATOR_TOL: f64 = 1e-9;
/// Slack allowed before an unlisted inequality counts as violated.
pub const UNLISTED_MARGIN_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Section {
    States,
    Partition,
    Pseudocontexts,
    ForVerify,
    Hull,
    Violations,
    Colorings,
}

impl Section {
    pub const ALL: [Section; 7] = [
        Section::States,
        Section::Partition,
        Section::Pseudocontexts,
        Section::ForVerify,
        Section::Hull,
        Section::Violations,
        Section::Colorings,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Section::States => "states",
            Section::Partition => "partition",
            Section::Pseudocontexts => "pseudocontexts",
            Section::ForVerify => "for-verify",
            Section::Hull => "hull",
            Section::Violations => "violations",
            Section::Colorings => "colorings",
        }
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Section {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Section::ALL
            .into_iter()
            .find(|x| x.name() == s || (s == "polytope" && *x == Section::Hull))
            .ok_or_else(|| Error::Unsupported(format!("unknown section `{s}`")))
    }
}

/// Where the hypergraph comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Builtin(Builtin),
    /// Format is guessed from the extension (`.mmp`) when absent.
    File {
        path: PathBuf,
        format: Option<Format>,
    },
}

/// Where the vector labels come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ForSource {
    Builtin,
    File(PathBuf),
}

impl FromStr for ForSource {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Ok(if s == "builtin" {
            ForSource::Builtin
        } else {
            ForSource::File(s.into())
        })
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub source: Source,
    pub for_source: ForSource,
    /// `j-k` pairs; the built-in configuration when absent.
    pub pairs: Option<String>,
    pub max_size: usize,
    pub colors: u8,
    pub tol_zero: f64,
    pub tol_margin: f64,
    pub skip: BTreeSet<Section>,
    pub assert_paper: bool,
}

impl Options {
    pub fn new(source: Source) -> Self {
        Options {
            source,
            for_source: ForSource::Builtin,
            pairs: None,
            max_size: DEFAULT_PSEUDOCONTEXT_SIZE,
            colors: 3,
            tol_zero: DEFAULT_TOL_ZERO,
            tol_margin: DEFAULT_TOL_MARGIN,
            skip: BTreeSet::new(),
            assert_paper: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub tool_version: String,
}

/// One comparison against a reference value.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Report,
    pub text: String,
    /// `(file name, contents)` for `--csv DIR`.
    pub files: Vec<(String, String)>,
    pub failures: Vec<String>,
}

impl Outcome {
    pub fn success(&self) -> bool {
        self.failures.is_empty()
    }

    /// Pretty JSON with a trailing newline.
    pub fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.report).expect("report serializes");
        s.push('\n');
        s
    }
}

// ---------------------------------------------------------------------------
// Formatting

/// `%.6g`-style rendering.
pub fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..6).contains(&exp) {
        let m = mantissa.trim_end_matches('0').trim_end_matches('.');
        return format!("{m}e{exp}");
    }
    let decimals = (5 - exp).max(0) as usize;
    let s = format!("{x:.decimals$}");
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    };
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

fn vec3_text(v: [f64; 3]) -> String {
    format!("({}, {}, {})", sig6(v[0]), sig6(v[1]), sig6(v[2]))
}

fn set_text<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    let v: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", v.join(", "))
}

/// Right-aligned plain-text table.
fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let parts: Vec<String> = cells
            .iter()
            .zip(&width)
            .map(|(c, w)| format!("{:>w$}", c, w = w))
            .collect();
        parts.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(headers.to_vec());
    let rule: Vec<String> = width.iter().map(|w| "-".repeat(*w)).collect();
    out.push_str(&line(rule.iter().map(String::as_str).collect()));
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

fn csv_text(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(headers).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn labels(set: &BTreeSet<VertexId>) -> Vec<String> {
    set.iter().map(|v| v.to_string()).collect()
}

// ---------------------------------------------------------------------------
// Session

struct Session<'a> {
    opts: &'a Options,
    h: Hypergraph,
    /// The built-in this hypergraph coincides with, if any.
    builtin: Option<Builtin>,
    t: TravisMatrix,
}

struct SectionOut {
    json: Value,
    text: String,
    files: Vec<(String, String)>,
    failures: Vec<String>,
    checks: Vec<Check>,
}

impl SectionOut {
    fn new(json: Value, text: String) -> Self {
        SectionOut {
            json,
            text,
            files: Vec::new(),
            failures: Vec::new(),
            checks: Vec::new(),
        }
    }
}

pub fn load_hypergraph(source: &Source) -> Result<Hypergraph> {
    match source {
        Source::Builtin(b) => Ok(b.hypergraph()),
        Source::File { path, format } => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            let format = format.unwrap_or_else(|| {
                if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("mmp")) {
                    Format::Mmp
                } else {
                    Format::Simple
                }
            });
            parse_hypergraph(&text, format).map_err(|e| match e {
                Error::Parse { line, column, message } => Error::Parse {
                    line,
                    column,
                    message: format!("{}: {message}", path.display()),
                },
                other => other,
            })
        }
    }
}

/// The built-in FOR for a hypergraph equal to one of the built-ins.
pub fn builtin_for(b: Builtin) -> Option<LabeledFor> {
    match b {
        Builtin::Mep => Some(build_mep_for()),
        Builtin::A => Some(build_variant_a_for()),
        Builtin::Pruned => Some(build_gadget_for()),
        Builtin::B | Builtin::C => None,
    }
}

impl Session<'_> {
    fn is_mep(&self) -> bool {
        self.builtin == Some(Builtin::Mep)
    }

    fn labeled_for(&self) -> Result<(LabeledFor, String)> {
        match &self.opts.for_source {
            ForSource::Builtin => {
                let f = self.builtin.and_then(builtin_for).ok_or_else(|| {
                    Error::Unsupported("no built-in vector labels for this hypergraph; pass --for FILE".into())
                })?;
                Ok((f, "builtin".into()))
            }
            ForSource::File(p) => {
                let text = std::fs::read_to_string(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
                Ok((LabeledFor::from_text(&text)?, p.display().to_string()))
            }
        }
    }

    fn pairs(&self) -> Result<PairConfiguration> {
        match (&self.opts.pairs, self.builtin) {
            (Some(text), _) => PairConfiguration::parse(&self.h, text),
            (None, Some(b)) => Ok(PairConfiguration::default_for(b)),
            (None, None) => Err(Error::Unsupported(
                "no built-in pair configuration for this hypergraph; pass --pairs".into(),
            )),
        }
    }

    fn reference_pairs(&self, cfg: &PairConfiguration) -> bool {
        self.is_mep() && *cfg == PairConfiguration::mep_path()
    }

    fn hull(&self, cfg: &PairConfiguration) -> Result<HRepresentation> {
        if self.t.is_empty() {
            return Err(Error::Unsupported(
                "no two-valued states: the correlation polytope is empty".into(),
            ));
        }
        Ok(facet_enumeration(&vertex_coordinates(&build_vertices(&self.t, cfg)?)))
    }

    fn run(&self, s: Section) -> Result<SectionOut> {
        match s {
            Section::States => self.states(),
            Section::Partition => self.partition(),
            Section::Pseudocontexts => self.pseudocontexts(),
            Section::ForVerify => self.for_verify(),
            Section::Hull => self.hull_section(),
            Section::Violations => self.violations(),
            Section::Colorings => self.colorings(),
        }
    }

    // -- states --------------------------------------------------------------

    fn states(&self) -> Result<SectionOut> {
        let t = &self.t;
        let sep = is_separating(t);
        let mut text = format!(
            "{} states, separating: {}\n",
            t.state_count(),
            if sep.separating { "yes" } else { "no" }
        );
        if let Some((u, v)) = &sep.witness {
            text.push_str(&format!("vertices {u} and {v} are not separated\n"));
        }
        text.push('\n');
        text.push_str(&t.to_table());
        let mut out = SectionOut::new(
            json!({
                "state_count": t.state_count(),
                "vertices": t.vertex_order(),
                "states": t.rows(),
                "separating": sep.separating,
                "separation_witness": sep.witness,
            }),
            text,
        );
        out.files.push(("states.csv".into(), t.to_csv()));
        if self.opts.assert_paper && self.is_mep() {
            let rows: Vec<Vec<u8>> = golden::STATES.iter().map(|r| r.to_vec()).collect();
            out.checks.push(check(
                "states: reference states in reference order",
                t.rows() == rows.as_slice(),
                format!("{} states computed", t.state_count()),
            ));
            out.checks.push(check("states: separating", sep.separating, ""));
        }
        Ok(out)
    }

    // -- partition -----------------------------------------------------------

    fn partition(&self) -> Result<SectionOut> {
        let p = partition_logic(&self.t)?;
        let rows: Vec<Vec<String>> = p.atoms.iter().map(|(v, a)| vec![v.to_string(), set_text(a)]).collect();
        let mut text = format!("partition logic over {} states\n\n", p.state_count);
        text.push_str(&table(&["vertex", "states"], &rows));
        let atoms: Vec<Value> = p.atoms.iter().map(|(v, a)| json!({"vertex": v, "states": a})).collect();
        let mut out = SectionOut::new(json!({"state_count": p.state_count, "atoms": atoms}), text);
        let csv_rows: Vec<Vec<String>> = p
            .atoms
            .iter()
            .map(|(v, a)| {
                vec![
                    v.to_string(),
                    a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "),
                ]
            })
            .collect();
        out.files
            .push(("partition.csv".into(), csv_text(&["vertex", "states"], &csv_rows)));
        if self.opts.assert_paper && self.is_mep() {
            let mismatched: Vec<u32> = golden::PARTITION
                .iter()
                .filter(|(v, want)| {
                    let got = p.atom(&VertexId::from(*v));
                    got.map(|g| g.iter().copied().collect::<Vec<_>>()) != Some(want.to_vec())
                })
                .map(|(v, _)| *v)
                .collect();
            out.checks.push(check(
                "partition: reference partition elements",
                mismatched.is_empty(),
                if mismatched.is_empty() {
                    String::new()
                } else {
                    format!("mismatched vertices {mismatched:?}")
                },
            ));
        }
        Ok(out)
    }

    // -- pseudocontexts --------------------------------------------------------

    fn pseudocontexts(&self) -> Result<SectionOut> {
        let t = &self.t;
        let pairs = pseudocontexts(t, self.opts.max_size);
        let tifs = tifs_pairs(t);
        let mut rows = Vec::new();
        let mut items = Vec::new();
        for p in &pairs {
            let sums = t.set_sums(&p.left)?;
            let zero = sums.iter().position(|&s| s == 0).map(|i| i + 1);
            rows.push(vec![
                set_text(&p.left),
                set_text(&p.right),
                p.max_classical_sum.to_string(),
                zero.map_or("-".into(), |z| z.to_string()),
            ]);
            items.push(json!({
                "left": labels(&p.left),
                "right": labels(&p.right),
                "max_classical_sum": p.max_classical_sum,
                "zero_sum_state": zero,
            }));
        }
        let mut text = format!(
            "{} pseudocontext pairs (sets of size <= {}), {} TIFS pairs\n\n",
            pairs.len(),
            self.opts.max_size,
            tifs.len()
        );
        text.push_str(&table(&["left", "right", "max sum", "zero-sum state"], &rows));
        if !tifs.is_empty() {
            let list: Vec<String> = tifs.iter().map(|(u, v)| format!("({u},{v})")).collect();
            text.push_str(&format!("\nTIFS pairs: {}\n", list.join(" ")));
        }
        let tifs_json: Vec<[&VertexId; 2]> = tifs.iter().map(|(u, v)| [u, v]).collect();
        let mut out = SectionOut::new(
            json!({"max_size": self.opts.max_size, "pairs": items, "tifs_pairs": tifs_json}),
            text,
        );
        out.files.push((
            "pseudocontexts.csv".into(),
            csv_text(&["left", "right", "max_classical_sum", "zero_sum_state"], &rows),
        ));
        if self.opts.assert_paper && self.is_mep() {
            let (l, r) = golden::PSEUDOCONTEXTS;
            let l: BTreeSet<VertexId> = l.iter().map(|&x| x.into()).collect();
            let r: BTreeSet<VertexId> = r.iter().map(|&x| x.into()).collect();
            let found = pairs.iter().find(|p| p.is(&l, &r));
            out.checks.push(check(
                "pseudocontexts: {5,11,17} ~ {1,7,13} with classical bound 1",
                found.is_some_and(|p| p.max_classical_sum == golden::PSEUDOCONTEXT_CLASSICAL_BOUND),
                format!("found: {}", found.is_some()),
            ));
            let zero = t.set_sums(&l)?.contains(&0);
            out.checks.push(check("pseudocontexts: a state with sum 0", zero, ""));
            let missing: Vec<(u32, u32)> = golden::TIFS_PAIRS
                .iter()
                .copied()
                .filter(|&(u, v)| !tifs.contains(&(u.into(), v.into())))
                .collect();
            out.checks.push(check(
                "pseudocontexts: TIFS pairs (2,10), (4,14), (8,16)",
                missing.is_empty(),
                format!("missing {missing:?}"),
            ));
        }
        Ok(out)
    }

    // -- for-verify ------------------------------------------------------------

    fn for_verify(&self) -> Result<SectionOut> {
        let (f, source) = self.labeled_for()?;
        let r = verify_for(&self.h, &f, self.opts.tol_zero, self.opts.tol_margin)?;
        let mut text = format!(
            "faithful: {} ({} pairs, max co-contextual overlap {}, min non-adjacent overlap {})\n",
            if r.faithful { "yes" } else { "no" },
            r.pairs_checked,
            sig6(r.max_adjacent_overlap),
            sig6(r.min_margin),
        );
        if !r.violations.is_empty() {
            let rows: Vec<Vec<String>> = r
                .violations
                .iter()
                .map(|v| {
                    vec![
                        v.u.to_string(),
                        v.v.to_string(),
                        format!("{:?}", v.kind),
                        sig6(v.overlap),
                    ]
                })
                .collect();
            text.push('\n');
            text.push_str(&table(&["u", "v", "kind", "overlap"], &rows));
        }

        // pseudocontext operator identities Σ E_left = Σ E_right
        let sum_e = |set: &BTreeSet<VertexId>| -> Result<Mat3> {
            let mut m = Mat3::ZERO;
            for v in set {
                m += f.projector(v)?;
            }
            Ok(m)
        };
        let mut ops = Vec::new();
        let mut op_rows = Vec::new();
        if !self.t.is_empty() {
            for p in pseudocontexts(&self.t, self.opts.max_size) {
                let (a, b) = (sum_e(&p.left)?, sum_e(&p.right)?);
                let residual = a.max_abs_diff(&b);
                let spec = eigen_sym3(&a, DEFAULT_EIGEN_TOL)?;
                op_rows.push(vec![
                    set_text(&p.left),
                    set_text(&p.right),
                    sig6(residual),
                    vec3_text(spec.values),
                ]);
                ops.push(json!({
                    "left": labels(&p.left),
                    "right": labels(&p.right),
                    "residual": residual,
                    "eigenvalues": spec.values,
                }));
            }
        }
        if !op_rows.is_empty() {
            text.push('\n');
            text.push_str(&table(
                &["left", "right", "max |diff|", "spectrum of sum(E_left)"],
                &op_rows,
            ));
        }
        let vec_rows: Vec<Vec<String>> = f
            .vectors
            .iter()
            .map(|(k, v)| vec![k.to_string(), sig6(v.x), sig6(v.y), sig6(v.z)])
            .collect();
        text.push('\n');
        text.push_str(&table(&["vertex", "x", "y", "z"], &vec_rows));

        let mut out = SectionOut::new(
            json!({
                "source": source,
                "tol_zero": self.opts.tol_zero,
                "tol_margin": self.opts.tol_margin,
                "verification": r,
                "pseudocontext_operators": ops,
                "vectors": f.to_json(),
            }),
            text,
        );
        let csv_rows: Vec<Vec<String>> = f
            .vectors
            .iter()
            .map(|(k, v)| vec![k.to_string(), v.x.to_string(), v.y.to_string(), v.z.to_string()])
            .collect();
        out.files
            .push(("for.csv".into(), csv_text(&["vertex", "x", "y", "z"], &csv_rows)));
        if !r.faithful {
            out.failures.push(format!(
                "for-verify: representation is not faithful ({} violations)",
                r.violations.len()
            ));
        }
        if self.opts.assert_paper && self.is_mep() {
            out.checks.extend(self.reference_for_checks(&f, r.faithful)?);
        }
        Ok(out)
    }

    fn reference_for_checks(&self, f: &LabeledFor, faithful: bool) -> Result<Vec<Check>> {
        let mut checks = vec![check("for-verify: MEP representation faithful", faithful, "")];
        let (l, r) = golden::PSEUDOCONTEXTS;
        let sum = |s: [u32; 3]| -> Result<Mat3> {
            let mut m = Mat3::ZERO;
            for x in s {
                m += f.projector(&x.into())?;
            }
            Ok(m)
        };
        let (a, b) = (sum(l)?, sum(r)?);
        let residual = a.max_abs_diff(&b);
        checks.push(check(
            "for-verify: E5+E11+E17 = E1+E7+E13",
            residual <= OPERATOR_TOL,
            format!("max |diff| {residual:e}"),
        ));
        let spec = eigen_sym3(&a, DEFAULT_EIGEN_TOL)?;
        let closed = pseudocontext_eigenvalue_closed_form();
        let degenerate = spec.values[0];
        checks.push(check(
            "for-verify: degenerate eigenvalue 1.43016",
            (degenerate - golden::PSEUDOCONTEXT_EIGENVALUE).abs() <= golden::PRINTED_TOLERANCE
                && (spec.values[1] - degenerate).abs() <= OPERATOR_TOL
                && (closed - degenerate).abs() <= OPERATOR_TOL,
            format!("computed {degenerate:.10}, closed form {closed:.10}"),
        ));
        let closure = f.at(5).ray()?.dot(f.at(7).ray()?);
        checks.push(check(
            "for-verify: cycle closure v5 . v7 = 0",
            closure.abs() <= OPERATOR_TOL,
            format!("{closure:e}"),
        ));
        Ok(checks)
    }

    // -- hull -------------------------------------------------------------------

    fn hull_section(&self) -> Result<SectionOut> {
        let cfg = self.pairs()?;
        let names = cfg.names();
        let vertices = build_vertices(&self.t, &cfg)?;
        let h = self.hull(&cfg)?;
        let matching = self.reference_pairs(&cfg).then(|| match_reference_inequalities(&h));
        let label_of = |i: usize| {
            matching
                .as_ref()
                .and_then(|m| m.pairs.iter().find(|p| p.1 == i).map(|p| p.0))
        };

        let mut text = format!(
            "{} vertices in {} coordinates ({}); affine dimension {}; {} equalities, {} inequalities\n\n",
            vertices.len(),
            h.ambient_dimension,
            names.join(" "),
            h.dimension,
            h.equalities.len(),
            h.inequalities.len()
        );
        let mut rows = Vec::new();
        for (i, e) in h.equalities.iter().enumerate() {
            rows.push(vec![format!("E{}", i + 1), "-".into(), e.render(&names)]);
        }
        for (i, f) in h.inequalities.iter().enumerate() {
            rows.push(vec![
                (i + 1).to_string(),
                label_of(i).map_or("-".into(), |l| l.to_string()),
                f.render(&names),
            ]);
        }
        text.push_str(&table(&["#", "reference", "form"], &rows));
        if let Some(m) = &matching {
            text.push_str(&format!(
                "\nreference list: {} of 28 inequalities matched, equalities {}\n",
                m.pairs.len(),
                if m.equalities_match { "match" } else { "differ" }
            ));
        }
        let ineqs: Vec<Value> = h
            .inequalities
            .iter()
            .enumerate()
            .map(|(i, f)| json!({"index": i + 1, "reference_label": label_of(i), "form": f, "text": f.render(&names)}))
            .collect();
        let mut out = SectionOut::new(
            json!({
                "pairs": names,
                "vertices": vertices,
                "ambient_dimension": h.ambient_dimension,
                "dimension": h.dimension,
                "equalities": h.equalities,
                "inequalities": ineqs,
                "matching": matching,
            }),
            text,
        );
        let mut csv_headers = vec![
            "index".to_string(),
            "reference_label".into(),
            "kind".into(),
            "constant".into(),
        ];
        csv_headers.extend(names.iter().cloned());
        let mut csv_rows = Vec::new();
        for (i, f) in h.equalities.iter().chain(&h.inequalities).enumerate() {
            let (index, label) = match i.checked_sub(h.equalities.len()) {
                None => (format!("E{}", i + 1), String::new()),
                Some(j) => (
                    (j + 1).to_string(),
                    label_of(j).map_or(String::new(), |l| l.to_string()),
                ),
            };
            let kind = if f.is_equality() { "eq" } else { "ge" };
            let mut r = vec![index, label, kind.to_string(), f.constant.to_string()];
            r.extend(f.coefficients.iter().map(|c| c.to_string()));
            csv_rows.push(r);
        }
        let hdr: Vec<&str> = csv_headers.iter().map(String::as_str).collect();
        out.files.push(("hull.csv".into(), csv_text(&hdr, &csv_rows)));
        out.files.push(("hull.ine".into(), write_ine(&h.forms())));
        out.files
            .push(("hull.ext".into(), write_ext(&vertex_coordinates(&vertices))));
        if self.opts.assert_paper && self.is_mep() {
            out.checks.extend(hull_checks(&h, matching.as_ref()));
        }
        Ok(out)
    }

    // -- violations ------------------------------------------------------------

    fn violations(&self) -> Result<SectionOut> {
        let (f, source) = self.labeled_for()?;
        let cfg = self.pairs()?;
        let names = cfg.names();
        let h = self.hull(&cfg)?;
        let matching = self.reference_pairs(&cfg).then(|| match_reference_inequalities(&h));
        let label_of = |i: usize| {
            matching
                .as_ref()
                .and_then(|m| m.pairs.iter().find(|p| p.1 == i).map(|p| p.0))
        };

        let mut computed: Vec<(usize, Option<usize>, &LinearForm, QuantumViolation)> = Vec::new();
        for (i, form) in h.inequalities.iter().enumerate() {
            computed.push((i, label_of(i), form, quantum_violation(form, &f, &cfg)?));
        }
        // reference numbering when available
        computed.sort_by_key(|(i, l, _, _)| (l.unwrap_or(usize::MAX), *i));

        let mut rows = Vec::new();
        let mut items = Vec::new();
        for (i, label, form, q) in &computed {
            rows.push(vec![
                (i + 1).to_string(),
                label.map_or("-".into(), |l| l.to_string()),
                sig6(q.min_eigenvalue),
                sig6(q.constant),
                sig6(q.margin),
                if q.violated { "yes" } else { "no" }.into(),
                vec3_text(q.eigenvector.to_array()),
            ]);
            items.push(json!({
                "index": i + 1,
                "reference_label": label,
                "form": form,
                "text": form.render(&names),
                "min_eigenvalue": q.min_eigenvalue,
                "eigenvector": q.eigenvector,
                "constant": q.constant,
                "margin": q.margin,
                "violated": q.violated,
            }));
        }
        let violated = computed.iter().filter(|c| c.3.violated).count();
        let mut text = format!("{violated} of {} inequalities violated\n\n", computed.len());
        let headers = [
            "#",
            "reference",
            "min eigenvalue",
            "bound a",
            "margin",
            "violated",
            "eigenvector",
        ];
        text.push_str(&table(&headers, &rows));
        let mut out = SectionOut::new(json!({"for_source": source, "pairs": names, "rows": items}), text);
        out.files.push(("violations.csv".into(), csv_text(&headers, &rows)));
        if self.opts.assert_paper && self.is_mep() {
            let by_label: BTreeMap<usize, &QuantumViolation> =
                computed.iter().filter_map(|(_, l, _, q)| l.map(|l| (l, q))).collect();
            out.checks.extend(violation_checks(&by_label));
        }
        Ok(out)
    }

    // -- colorings ---------------------------------------------------------------

    fn colorings(&self) -> Result<SectionOut> {
        let k = self.opts.colors;
        let cs = enumerate_colorings(&self.h, k);
        let classes = color_classes(&cs, k);
        let ext = extendable_states(&self.t, &cs);
        let mut text = format!(
            "{} colorings with {k} colors, {} classes up to color permutation\n",
            cs.len(),
            classes.len()
        );
        text.push_str(&format!(
            "extendable states: {}\nnon-extendable states: {}\n\n",
            set_text(&ext.extendable),
            set_text(&ext.non_extendable)
        ));
        let mut headers = vec!["class".to_string(), "size".to_string()];
        headers.extend(self.h.vertices().iter().map(|v| v.to_string()));
        let rows: Vec<Vec<String>> = classes
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let mut r = vec![(i + 1).to_string(), c.members.len().to_string()];
                r.extend(c.representative.row().iter().map(u8::to_string));
                r
            })
            .collect();
        let hdr: Vec<&str> = headers.iter().map(String::as_str).collect();
        text.push_str(&table(&hdr, &rows));
        let class_json: Vec<Value> = classes
            .iter()
            .map(|c| json!({"representative": c.representative.row(), "size": c.members.len()}))
            .collect();
        let rows_json: Vec<Vec<u8>> = cs.iter().map(Coloring::row).collect();
        let mut out = SectionOut::new(
            json!({
                "colors": k,
                "count": cs.len(),
                "vertices": self.h.vertices(),
                "colorings": rows_json,
                "classes": class_json,
                "extendable": ext.extendable,
                "non_extendable": ext.non_extendable,
            }),
            text,
        );
        out.files.push(("colorings.csv".into(), colorings_to_csv(&self.h, &cs)));
        if self.opts.assert_paper && self.is_mep() {
            out.checks.extend(coloring_checks(&cs, k, &ext.non_extendable));
        }
        Ok(out)
    }
}

fn hull_checks(h: &HRepresentation, matching: Option<&Matching>) -> Vec<Check> {
    let mut checks = vec![check(
        "hull: affine dimension 7",
        h.dimension == golden::HULL_DIMENSION,
        format!("computed {}", h.dimension),
    )];
    match matching {
        Some(m) => {
            checks.push(check(
                "hull: 2 equalities spanning the reference ones",
                h.equalities.len() == golden::EQUALITIES.len() && m.equalities_match,
                format!("{} equalities", h.equalities.len()),
            ));
            checks.push(check(
                "hull: 28 inequalities in bijection with the reference list",
                h.inequalities.len() == golden::INEQUALITIES.len() && m.is_bijection(),
                format!(
                    "unmatched reference {:?}, unmatched computed {:?}",
                    m.unmatched_reference, m.unmatched_computed
                ),
            ));
        }
        None => checks.push(check(
            "hull: reference pair configuration",
            false,
            "custom --pairs in use",
        )),
    }
    checks
}

fn violation_checks(by_label: &BTreeMap<usize, &QuantumViolation>) -> Vec<Check> {
    let mut checks = Vec::new();
    let listed: BTreeSet<usize> = golden::VIOLATIONS.iter().map(|r| r.inequality).collect();
    for row in &golden::VIOLATIONS {
        let Some(q) = by_label.get(&row.inequality) else {
            checks.push(check(
                format!("violations: reference violation row {}", row.inequality),
                false,
                "no such facet",
            ));
            continue;
        };
        let v = q.eigenvector.to_array();
        let p = row.eigenvector;
        let norm = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
        let overlap = (v[0] * p[0] + v[1] * p[1] + v[2] * p[2]).abs() / norm;
        let value_ok = (q.min_eigenvalue - row.eigenvalue).abs() <= golden::PRINTED_TOLERANCE;
        let vector_ok = overlap >= golden::EIGENVECTOR_OVERLAP;
        checks.push(check(
            format!("violations: reference violation row {}", row.inequality),
            value_ok && vector_ok,
            format!(
                "eigenvalue {} (reference {}), overlap {}",
                sig6(q.min_eigenvalue),
                sig6(row.eigenvalue),
                sig6(overlap)
            ),
        ));
    }
    let violated_unlisted: Vec<usize> = by_label
        .iter()
        .filter(|(l, q)| !listed.contains(l) && q.margin < -UNLISTED_MARGIN_TOL)
        .map(|(l, _)| *l)
        .collect();
    checks.push(check(
        "violations: inequalities absent from the reference violations are not violated",
        violated_unlisted.is_empty(),
        format!("violated: {violated_unlisted:?}"),
    ));
    checks
}

/// Canonical relabelling: colors renumbered by first appearance.
fn first_appearance(row: &[u8]) -> Vec<u8> {
    let mut map = BTreeMap::new();
    row.iter()
        .map(|c| {
            let next = map.len() as u8 + 1;
            *map.entry(*c).or_insert(next)
        })
        .collect()
}

fn coloring_checks(cs: &[Coloring], k: u8, non_extendable: &BTreeSet<usize>) -> Vec<Check> {
    let classes = color_classes(cs, k);
    let mut checks = vec![
        check(
            "colorings: 18 colorings",
            cs.len() == golden::COLORING_COUNT,
            format!("computed {}", cs.len()),
        ),
        check(
            "colorings: 3 classes of 6",
            classes.len() == 3 && classes.iter().all(|c| c.members.len() == 6),
            format!("{} classes", classes.len()),
        ),
    ];
    let ours: BTreeSet<Vec<u8>> = classes
        .iter()
        .map(|c| first_appearance(&c.representative.row()))
        .collect();
    let theirs: BTreeSet<Vec<u8>> = golden::COLORING_CLASSES.iter().map(|r| first_appearance(r)).collect();
    checks.push(check("colorings: reference class representatives", ours == theirs, ""));
    let want: BTreeSet<usize> = golden::NON_EXTENDABLE_STATES.into_iter().collect();
    checks.push(check(
        "colorings: non-extendable states {4, 8, 10}",
        non_extendable == &want,
        format!("computed {}", set_text(non_extendable)),
    ));
    let (l, r) = golden::PSEUDOCONTEXTS;
    let all_one = cs.iter().all(|c| {
        (1..=k).all(|color| {
            let s = reduced_state(c, color);
            [l, r]
                .iter()
                .all(|set| set.iter().map(|&x| s.value(&x.into()).unwrap_or(0) as u32).sum::<u32>() == 1)
        })
    });
    checks.push(check(
        "colorings: reduced states sum to 1 on both pseudocontexts",
        all_one,
        "",
    ));
    checks
}

// ---------------------------------------------------------------------------
// Entry point

fn inputs_json(opts: &Options, h: &Hypergraph, command: Option<Section>) -> Value {
    let hypergraph = match &opts.source {
        Source::Builtin(b) => json!({"builtin": b.name()}),
        Source::File { path, format } => json!({
            "path": path.display().to_string(),
            "format": format.map(|f| format!("{f:?}").to_lowercase()),
        }),
    };
    let uses = |s: Section| command.map_or(!opts.skip.contains(&s), |c| c == s);
    let mut m = serde_json::Map::new();
    m.insert("hypergraph".into(), hypergraph);
    m.insert("vertex_count".into(), json!(h.vertex_count()));
    m.insert("context_count".into(), json!(h.contexts().len()));
    if uses(Section::ForVerify) || uses(Section::Violations) {
        let f = match &opts.for_source {
            ForSource::Builtin => "builtin".to_string(),
            ForSource::File(p) => p.display().to_string(),
        };
        m.insert("for".into(), json!(f));
    }
    if uses(Section::Hull) || uses(Section::Violations) {
        m.insert("pairs".into(), json!(opts.pairs));
    }
    if uses(Section::ForVerify) {
        m.insert("tol_zero".into(), json!(opts.tol_zero));
        m.insert("tol_margin".into(), json!(opts.tol_margin));
    }
    if uses(Section::Pseudocontexts) || uses(Section::ForVerify) {
        m.insert("max_size".into(), json!(opts.max_size));
    }
    if uses(Section::Colorings) {
        m.insert("colors".into(), json!(opts.colors));
    }
    if command.is_none() {
        let skip: Vec<&str> = opts.skip.iter().map(|s| s.name()).collect();
        m.insert("skip".into(), json!(skip));
    }
    m.insert("assert_paper".into(), json!(opts.assert_paper));
    Value::Object(m)
}

/// Runs one section, or the full report when `command` is `None`.
/// Unusable inputs are errors for a single section; in the full report
/// they are recorded against the section and the others still run.
pub fn run(command: Option<Section>, opts: &Options) -> Result<Outcome> {
    let h = load_hypergraph(&opts.source)?;
    let builtin = Builtin::ALL.into_iter().find(|b| b.hypergraph().same_as(&h));
    let session = Session {
        opts,
        t: enumerate_states(&h),
        builtin,
        h,
    };
    let sections: Vec<Section> = match command {
        Some(s) => vec![s],
        None => Section::ALL.into_iter().filter(|s| !opts.skip.contains(s)).collect(),
    };

    let mut failures = Vec::new();
    let mut checks = Vec::new();
    let mut files = Vec::new();
    let mut text = String::new();
    let mut results = serde_json::Map::new();
    for s in &sections {
        if command.is_none() {
            text.push_str(&format!("== {s} ==\n"));
        }
        match session.run(*s) {
            Ok(out) => {
                text.push_str(&out.text);
                results.insert(s.name().into(), out.json);
                files.extend(out.files);
                failures.extend(out.failures);
                checks.extend(out.checks);
            }
            Err(e) if command.is_some() => return Err(e),
            Err(e) => {
                text.push_str(&format!("error: {e}\n"));
                results.insert(s.name().into(), json!({"error": e.to_string()}));
                failures.push(format!("{s}: {e}"));
            }
        }
        if command.is_none() {
            text.push('\n');
        }
    }

    if opts.assert_paper {
        if !session.is_mep() {
            failures.push("--assert-paper: reference values exist only for the MEP hypergraph".into());
        }
        if !checks.is_empty() {
            text.push_str(if command.is_none() {
                "== reference checks ==\n"
            } else {
                "
reference checks:\n"
            });
            for c in &checks {
                let status = if c.passed { "ok  " } else { "FAIL" };
                if c.detail.is_empty() {
                    text.push_str(&format!("{status} {}\n", c.name));
                } else {
                    text.push_str(&format!("{status} {} ({})\n", c.name, c.detail));
                }
            }
        }
        failures.extend(
            checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| format!("reference check failed: {}", c.name)),
        );
    }

    let results = match command {
        Some(s) => {
            let mut r = results.remove(s.name()).expect("section ran");
            if opts.assert_paper {
                if let Value::Object(m) = &mut r {
                    m.insert("reference_checks".into(), json!(checks));
                }
            }
            r
        }
        None => {
            if opts.assert_paper {
                results.insert("reference_checks".into(), json!(checks));
            }
            Value::Object(results)
        }
    };
    let report = Report {
        command: command.map_or("report", |s| s.name()).to_string(),
        inputs: inputs_json(opts, &session.h, command),
        results,
        tool_version: TOOL_VERSION.to_string(),
    };
    Ok(Outcome {
        report,
        text,
        files,
        failures,
    })
}

/// True when `h` is the MEP hypergraph (up to context and member order).
pub fn is_mep(h: &Hypergraph) -> bool {
    h.same_as(&mep())
}
