//! Rainbow colorings of context hypergraphs and their relation to
//! two-valued states.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexId};
use crate::states::{TravisMatrix, TwoValuedState};

/// Colors `1..=k`, pairwise distinct within every context.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Coloring {
    pub colors: BTreeMap<VertexId, u8>,
}

impl Coloring {
    pub fn from_row(h: &Hypergraph, row: &[u8]) -> Result<Self> {
        if row.len() != h.vertex_count() {
            return Err(Error::DimensionMismatch {
                expected: h.vertex_count(),
                got: row.len(),
            });
        }
        Ok(Coloring {
            colors: h.vertices().iter().cloned().zip(row.iter().copied()).collect(),
        })
    }

    /// Colors in vertex-label order.
    pub fn row(&self) -> Vec<u8> {
        self.colors.values().copied().collect()
    }

    pub fn color(&self, v: &VertexId) -> Option<u8> {
        self.colors.get(v).copied()
    }

    pub fn is_rainbow(&self, h: &Hypergraph) -> bool {
        h.contexts().iter().all(|c| {
            let seen: Option<BTreeSet<u8>> = c.members().iter().map(|m| self.color(m)).collect();
            seen.is_some_and(|s| s.len() == c.len())
        })
    }

    /// Applies `perm`, where color `i` becomes `perm[i - 1]`.
    pub fn permuted(&self, perm: &[u8]) -> Coloring {
        Coloring {
            colors: self
                .colors
                .iter()
                .map(|(v, &c)| (v.clone(), perm[c as usize - 1]))
                .collect(),
        }
    }
}

fn search_order(h: &Hypergraph) -> Vec<usize> {
    let n = h.vertex_count();
    let ctx = h.context_indices();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while let Some(start) = ctx.iter().flatten().copied().find(|&v| !seen[v]) {
        seen[start] = true;
        order.push(start);
        let mut head = order.len() - 1;
        // breadth-first over contexts touching the visited set
        while head < order.len() {
            let v = order[head];
            head += 1;
            for c in ctx.iter().filter(|c| c.contains(&v)) {
                for &m in c {
                    if !seen[m] {
                        seen[m] = true;
                        order.push(m);
                    }
                }
            }
        }
    }
    order
}

/// All rainbow colorings with colors `1..=k`, sorted by their rows.
/// Color symmetry is not broken, so every orbit appears in full.
pub fn enumerate_colorings(h: &Hypergraph, k: u8) -> Vec<Coloring> {
    let n = h.vertex_count();
    if k == 0 || k > 31 {
        return Vec::new();
    }
    let adj = h.adjacency();
    let neighbours: Vec<Vec<usize>> = (0..n).map(|v| (0..n).filter(|&u| adj[v][u]).collect()).collect();
    let order = search_order(h);
    let full = (1u32 << k) - 1;
    let mut domains = vec![full; n];
    let mut row = vec![0u8; n];
    let mut rows = Vec::new();

    fn go(
        depth: usize,
        order: &[usize],
        neighbours: &[Vec<usize>],
        domains: &mut Vec<u32>,
        row: &mut Vec<u8>,
        rows: &mut Vec<Vec<u8>>,
    ) {
        if depth == order.len() {
            rows.push(row.clone());
            return;
        }
        let v = order[depth];
        let mut options = domains[v];
        while options != 0 {
            let bit = options.trailing_zeros();
            options &= options - 1;
            let saved = domains.clone();
            let mut dead = false;
            for &u in &neighbours[v] {
                if row[u] == 0 {
                    domains[u] &= !(1 << bit);
                    dead |= domains[u] == 0;
                }
            }
            if !dead {
                row[v] = bit as u8 + 1;
                go(depth + 1, order, neighbours, domains, row, rows);
                row[v] = 0;
            }
            *domains = saved;
        }
    }
    go(0, &order, &neighbours, &mut domains, &mut row, &mut rows);
    rows.sort();
    rows.iter()
        .map(|r| Coloring::from_row(h, r).expect("row length"))
        .collect()
}

fn permutations(k: u8) -> Vec<Vec<u8>> {
    fn rec(rest: &mut Vec<u8>, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            rec(rest, cur, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut (1..=k).collect(), &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoringClass {
    /// Least member by row.
    pub representative: Coloring,
    /// Sorted by row.
    pub members: Vec<Coloring>,
}

/// Orbits of `colorings` under the permutations of `1..=k`, ordered by
/// representative. Members absent from `colorings` are still listed, so a
/// class is always a full orbit.
pub fn color_classes(colorings: &[Coloring], k: u8) -> Vec<ColoringClass> {
    let perms = permutations(k);
    let mut classes: BTreeMap<Vec<u8>, BTreeSet<Vec<u8>>> = BTreeMap::new();
    let mut template: BTreeMap<Vec<u8>, &Coloring> = BTreeMap::new();
    for c in colorings {
        let orbit: BTreeSet<Vec<u8>> = perms.iter().map(|p| c.permuted(p).row()).collect();
        let rep = orbit.first().expect("nonempty orbit").clone();
        template.entry(rep.clone()).or_insert(c);
        classes.entry(rep).or_insert(orbit);
    }
    classes
        .into_iter()
        .map(|(rep, orbit)| {
            let t = template[&rep];
            let relabel = |row: &Vec<u8>| Coloring {
                colors: t.colors.keys().cloned().zip(row.iter().copied()).collect(),
            };
            ColoringClass {
                representative: relabel(&rep),
                members: orbit.iter().map(relabel).collect(),
            }
        })
        .collect()
}

/// The two-valued state `v ↦ [c(v) = color]`.
pub fn reduced_state(c: &Coloring, color: u8) -> TwoValuedState {
    TwoValuedState {
        assignment: c
            .colors
            .iter()
            .map(|(v, &x)| (v.clone(), u8::from(x == color)))
            .collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extendability {
    /// 1-based Travis-matrix rows.
    pub extendable: BTreeSet<usize>,
    pub non_extendable: BTreeSet<usize>,
}

/// Splits the states of `t` by whether they arise as a reduced state of
/// some coloring.
pub fn extendable_states(t: &TravisMatrix, colorings: &[Coloring]) -> Extendability {
    let mut reduced: BTreeSet<Vec<u8>> = BTreeSet::new();
    for c in colorings {
        let palette: BTreeSet<u8> = c.colors.values().copied().collect();
        for color in palette {
            reduced.insert(c.row().iter().map(|&x| u8::from(x == color)).collect());
        }
    }
    let (ext, non): (Vec<usize>, Vec<usize>) = (1..=t.state_count()).partition(|&i| reduced.contains(&t.rows()[i - 1]));
    Extendability {
        extendable: ext.into_iter().collect(),
        non_extendable: non.into_iter().collect(),
    }
}

pub fn colorings_to_csv(h: &Hypergraph, colorings: &[Coloring]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(h.vertices().iter().map(VertexId::as_str))
        .expect("in-memory write");
    for c in colorings {
        w.write_record(c.row().iter().map(u8::to_string))
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

pub fn colorings_to_json(colorings: &[Coloring]) -> serde_json::Value {
    serde_json::to_value(colorings).expect("serializable")
}
