//! Two-valued states, the Travis matrix, partition logic and the
//! classical structures derived from them (TIFS pairs, pseudocontexts).

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexId};

/// A dispersion-free measure: exactly one member of every context is 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TwoValuedState {
    pub assignment: BTreeMap<VertexId, u8>,
}

impl TwoValuedState {
    pub fn value(&self, v: &VertexId) -> Option<u8> {
        self.assignment.get(v).copied()
    }

    /// Exclusivity and completeness on every context of `h`.
    pub fn is_admissible(&self, h: &Hypergraph) -> bool {
        h.contexts().iter().all(|c| {
            c.members()
                .iter()
                .map(|m| self.value(m).map(u32::from).unwrap_or(2))
                .sum::<u32>()
                == 1
        })
    }
}

/// Whether a bit row (indexed like `h.vertices()`) is an admissible state.
pub fn is_admissible_row(h: &Hypergraph, row: &[u8]) -> bool {
    row.len() == h.vertex_count()
        && row.iter().all(|&b| b <= 1)
        && h.context_indices()
            .iter()
            .all(|c| c.iter().map(|&i| row[i] as u32).sum::<u32>() == 1)
}

/// All two-valued states of a hypergraph, one row per state and one column
/// per vertex.
///
/// Rows are kept in descending lexicographic order of their bit strings,
/// so the state that is 1 on the earliest vertex comes first. Row `i`
/// is referred to as state `i + 1` throughout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TravisMatrix {
    hypergraph: Hypergraph,
    rows: Vec<Vec<u8>>,
}

impl TravisMatrix {
    /// Wraps externally supplied rows, checking admissibility, distinctness
    /// and then restoring canonical order.
    pub fn from_rows(h: &Hypergraph, mut rows: Vec<Vec<u8>>) -> Result<Self> {
        for (i, row) in rows.iter().enumerate() {
            if row.len() != h.vertex_count() {
                return Err(Error::DimensionMismatch {
                    expected: h.vertex_count(),
                    got: row.len(),
                });
            }
            if !is_admissible_row(h, row) {
                return Err(Error::InvalidHypergraph(format!(
                    "row {} is not an admissible state",
                    i + 1
                )));
            }
        }
        sort_canonical(&mut rows);
        if rows.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidHypergraph("duplicate state rows".into()));
        }
        Ok(TravisMatrix {
            hypergraph: h.clone(),
            rows,
        })
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.hypergraph
    }

    pub fn vertex_order(&self) -> &[VertexId] {
        self.hypergraph.vertices()
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn state_count(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn state(&self, index: usize) -> TwoValuedState {
        TwoValuedState {
            assignment: self
                .vertex_order()
                .iter()
                .cloned()
                .zip(self.rows[index].iter().copied())
                .collect(),
        }
    }

    pub fn states(&self) -> Vec<TwoValuedState> {
        (0..self.rows.len()).map(|i| self.state(i)).collect()
    }

    pub fn column(&self, v: &VertexId) -> Result<Vec<u8>> {
        let j = self.col(v)?;
        Ok(self.rows.iter().map(|r| r[j]).collect())
    }

    fn col(&self, v: &VertexId) -> Result<usize> {
        self.hypergraph
            .index_of(v)
            .ok_or_else(|| Error::UnknownVertex(v.to_string()))
    }

    /// Per-state sum of the values on `set`.
    pub fn set_sums<'a, I>(&self, set: I) -> Result<Vec<u32>>
    where
        I: IntoIterator<Item = &'a VertexId>,
    {
        let cols = set.into_iter().map(|v| self.col(v)).collect::<Result<Vec<_>>>()?;
        Ok(self
            .rows
            .iter()
            .map(|r| cols.iter().map(|&j| r[j] as u32).sum())
            .collect())
    }

    /// CSV with the vertex labels as header and one 0/1 row per state.
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(vec![]);
        w.write_record(self.vertex_order().iter().map(VertexId::as_str))
            .expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(|b| b.to_string()))
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii csv")
    }

    pub fn from_csv(h: &Hypergraph, text: &str) -> Result<Self> {
        let mut r = csv::ReaderBuilder::new().from_reader(text.as_bytes());
        let header = r.headers().map_err(|e| Error::Io(e.to_string()))?.clone();
        let labels: Vec<&str> = header.iter().collect();
        let order: Vec<&str> = h.vertices().iter().map(VertexId::as_str).collect();
        if labels != order {
            return Err(Error::InvalidHypergraph(format!(
                "CSV header {labels:?} does not match vertex order {order:?}"
            )));
        }
        let mut rows = Vec::new();
        for rec in r.records() {
            let rec = rec.map_err(|e| Error::Io(e.to_string()))?;
            let row = rec
                .iter()
                .map(|s| match s.trim() {
                    "0" => Ok(0),
                    "1" => Ok(1),
                    other => Err(Error::InvalidHypergraph(format!("not a bit: `{other}`"))),
                })
                .collect::<Result<Vec<u8>>>()?;
            rows.push(row);
        }
        TravisMatrix::from_rows(h, rows)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "vertices": self.vertex_order(),
            "states": self.rows,
        })
    }

    /// Plain-text table: state number followed by the bit row.
    pub fn to_table(&self) -> String {
        let labels = self.vertex_order();
        let width: Vec<usize> = labels.iter().map(|l| l.as_str().len().max(1)).collect();
        let mut out = String::from("  #");
        for (l, w) in labels.iter().zip(&width) {
            out.push_str(&format!(" {:>w$}", l.as_str(), w = w));
        }
        out.push('\n');
        for (i, row) in self.rows.iter().enumerate() {
            out.push_str(&format!("{:>3}", i + 1));
            for (b, w) in row.iter().zip(&width) {
                out.push_str(&format!(" {:>w$}", b, w = w));
            }
            out.push('\n');
        }
        out
    }
}

fn sort_canonical(rows: &mut [Vec<u8>]) {
    rows.sort_by(|a, b| b.cmp(a));
}

// ---------------------------------------------------------------------------
// Enumeration

struct Search<'a> {
    contexts: &'a [Vec<usize>],
    /// contexts containing each vertex
    incidence: Vec<Vec<usize>>,
    order: Vec<usize>,
    value: Vec<Option<u8>>,
    trail: Vec<usize>,
    found: Vec<Vec<u8>>,
}

impl Search<'_> {
    fn assign(&mut self, v: usize, bit: u8, queue: &mut Vec<usize>) -> bool {
        match self.value[v] {
            Some(b) => b == bit,
            None => {
                self.value[v] = Some(bit);
                self.trail.push(v);
                queue.push(v);
                true
            }
        }
    }

    /// Unit propagation. Returns false on a contradiction.
    fn propagate(&mut self, mut queue: Vec<usize>) -> bool {
        let contexts = self.contexts;
        while let Some(v) = queue.pop() {
            for k in 0..self.incidence[v].len() {
                let ctx = &contexts[self.incidence[v][k]];
                if self.value[v] == Some(1) {
                    for &m in ctx {
                        if m != v && !self.assign(m, 0, &mut queue) {
                            return false;
                        }
                    }
                } else {
                    let mut ones = 0;
                    let mut open = Vec::new();
                    for &m in ctx {
                        match self.value[m] {
                            Some(1) => ones += 1,
                            Some(_) => {}
                            None => open.push(m),
                        }
                    }
                    if ones == 0 {
                        match open.as_slice() {
                            [] => return false,
                            [last] => {
                                let last = *last;
                                if !self.assign(last, 1, &mut queue) {
                                    return false;
                                }
                            }
                            _ => {}
                        }
                    }
                }
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = self.trail.pop().expect("trail above mark");
            self.value[v] = None;
        }
    }

    fn run(&mut self) {
        let Some(&next) = self.order.iter().find(|&&v| self.value[v].is_none()) else {
            self.found
                .push(self.value.iter().map(|b| b.expect("complete assignment")).collect());
            return;
        };
        for bit in [1u8, 0] {
            let mark = self.trail.len();
            let mut queue = Vec::new();
            if self.assign(next, bit, &mut queue) && self.propagate(queue) {
                self.run();
            }
            self.undo_to(mark);
        }
    }
}

/// All two-valued states by backtracking with unit propagation.
///
/// Branching visits vertices by descending context degree. Setting a vertex
/// to 1 zeroes the rest of its contexts; a context whose assigned members
/// are all 0 forces its last open member to 1.
pub fn enumerate_states(h: &Hypergraph) -> TravisMatrix {
    let contexts = h.context_indices();
    let n = h.vertex_count();
    let mut incidence = vec![Vec::new(); n];
    for (c, members) in contexts.iter().enumerate() {
        for &m in members {
            incidence[m].push(c);
        }
    }
    let degree = h.degrees();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| degree[b].cmp(&degree[a]).then(a.cmp(&b)));

    let mut search = Search {
        contexts: &contexts,
        incidence,
        order,
        value: vec![None; n],
        trail: Vec::new(),
        found: Vec::new(),
    };
    search.run();
    let mut rows = search.found;
    sort_canonical(&mut rows);
    rows.dedup();
    TravisMatrix {
        hypergraph: h.clone(),
        rows,
    }
}

// ---------------------------------------------------------------------------
// Derived structures

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Separation {
    pub separating: bool,
    /// A pair of distinct vertices no state tells apart.
    pub witness: Option<(VertexId, VertexId)>,
}

/// Whether every pair of distinct vertices is distinguished by some state.
pub fn is_separating(t: &TravisMatrix) -> Separation {
    let labels = t.vertex_order();
    let cols: Vec<Vec<u8>> = (0..labels.len())
        .map(|j| t.rows.iter().map(|r| r[j]).collect())
        .collect();
    let mut first_with: HashMap<&[u8], usize> = HashMap::new();
    for (j, col) in cols.iter().enumerate() {
        if let Some(&i) = first_with.get(col.as_slice()) {
            return Separation {
                separating: false,
                witness: Some((labels[i].clone(), labels[j].clone())),
            };
        }
        first_with.insert(col, j);
    }
    Separation {
        separating: true,
        witness: None,
    }
}

/// Vertex ↦ set of (1-based) indices of the states taking value 1 there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionLogic {
    pub state_count: usize,
    pub atoms: BTreeMap<VertexId, BTreeSet<usize>>,
}

impl PartitionLogic {
    pub fn atom(&self, v: &VertexId) -> Option<&BTreeSet<usize>> {
        self.atoms.get(v)
    }
}

pub fn partition_logic(t: &TravisMatrix) -> Result<PartitionLogic> {
    if t.is_empty() {
        return Err(Error::Unsupported(
            "no two-valued states: partition logic is empty".into(),
        ));
    }
    let atoms: BTreeMap<VertexId, BTreeSet<usize>> = t
        .vertex_order()
        .iter()
        .enumerate()
        .map(|(j, v)| {
            let set = t
                .rows
                .iter()
                .enumerate()
                .filter(|(_, r)| r[j] == 1)
                .map(|(i, _)| i + 1)
                .collect();
            (v.clone(), set)
        })
        .collect();
    let all: BTreeSet<usize> = (1..=t.state_count()).collect();
    for c in t.hypergraph.contexts() {
        let mut union = BTreeSet::new();
        for m in c.members() {
            for &s in &atoms[m] {
                if !union.insert(s) {
                    return Err(Error::PartitionViolation {
                        context: c.to_string(),
                        message: format!("state {s} lies in two blocks"),
                    });
                }
            }
        }
        if union != all {
            return Err(Error::PartitionViolation {
                context: c.to_string(),
                message: "blocks do not cover every state".into(),
            });
        }
    }
    Ok(PartitionLogic {
        state_count: t.state_count(),
        atoms,
    })
}

/// Ordered pairs `(u, v)` of non-co-contextual vertices with
/// `m(u) = 1 ⇒ m(v) = 0` in every state.
pub fn tifs_pairs(t: &TravisMatrix) -> BTreeSet<(VertexId, VertexId)> {
    let h = &t.hypergraph;
    let adj = h.adjacency();
    let labels = h.vertices();
    let n = labels.len();
    let mut out = BTreeSet::new();
    for u in 0..n {
        for v in 0..n {
            if u == v || adj[u][v] {
                continue;
            }
            if t.rows.iter().all(|r| !(r[u] == 1 && r[v] == 1)) {
                out.insert((labels[u].clone(), labels[v].clone()));
            }
        }
    }
    out
}

/// Two disjoint vertex sets whose sums agree on every two-valued state.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct PseudocontextPair {
    pub left: BTreeSet<VertexId>,
    pub right: BTreeSet<VertexId>,
    pub max_classical_sum: u32,
}

impl PseudocontextPair {
    /// Same pair, either orientation.
    pub fn is(&self, a: &BTreeSet<VertexId>, b: &BTreeSet<VertexId>) -> bool {
        (&self.left == a && &self.right == b) || (&self.left == b && &self.right == a)
    }
}

pub const DEFAULT_PSEUDOCONTEXT_SIZE: usize = 3;

/// All pairs of disjoint non-context vertex sets of size `1..=max_size`
/// with identical per-state sums. Each unordered pair appears once, with
/// `left` the smaller set in (size, labels) order.
pub fn pseudocontexts(t: &TravisMatrix, max_size: usize) -> Vec<PseudocontextPair> {
    let h = &t.hypergraph;
    let n = h.vertex_count();
    let mut groups: BTreeMap<Vec<u32>, Vec<Vec<usize>>> = BTreeMap::new();
    let mut subset = Vec::new();
    collect_subsets(n, max_size.min(n), 0, &mut subset, &mut |s| {
        let set: BTreeSet<VertexId> = s.iter().map(|&i| h.vertices()[i].clone()).collect();
        if h.is_context(&set) {
            return;
        }
        let sums: Vec<u32> = t.rows.iter().map(|r| s.iter().map(|&i| r[i] as u32).sum()).collect();
        groups.entry(sums).or_default().push(s.to_vec());
    });

    let mut out = Vec::new();
    for (sums, members) in &groups {
        let max = sums.iter().copied().max().unwrap_or(0);
        for (i, a) in members.iter().enumerate() {
            for b in &members[i + 1..] {
                if a.iter().any(|x| b.contains(x)) {
                    continue;
                }
                let (a, b) = if (a.len(), a) <= (b.len(), b) { (a, b) } else { (b, a) };
                let label = |s: &Vec<usize>| s.iter().map(|&i| h.vertices()[i].clone()).collect();
                out.push(PseudocontextPair {
                    left: label(a),
                    right: label(b),
                    max_classical_sum: max,
                });
            }
        }
    }
    out.sort_by(|x, y| {
        (x.left.len(), x.right.len(), &x.left, &x.right).cmp(&(y.left.len(), y.right.len(), &y.left, &y.right))
    });
    out
}

fn collect_subsets(n: usize, max_size: usize, start: usize, current: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if !current.is_empty() {
        visit(current);
    }
    if current.len() == max_size {
        return;
    }
    for i in start..n {
        current.push(i);
        collect_subsets(n, max_size, i + 1, current, visit);
        current.pop();
    }
}

/// Largest value of `Σ_{v∈set} m(v)` over all two-valued states.
pub fn max_classical_sum<'a, I>(t: &TravisMatrix, set: I) -> Result<u32>
where
    I: IntoIterator<Item = &'a VertexId>,
{
    Ok(t.set_sums(set)?.into_iter().max().unwrap_or(0))
}
