//! Correlation polytope of a pair configuration: vertices from two-valued
//! states, exact facet enumeration and quantum violations of the facets.

pub mod cdd;
pub mod form;
pub mod hull;
pub mod linear;
pub mod matching;
pub mod violation;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Builtin, Hypergraph, VertexId};
use crate::states::TravisMatrix;

pub use form::{FormKind, LinearForm};
pub use hull::{affine_hull, facet_enumeration, AffineHull, HRepresentation};
pub use linear::Rational;
pub use matching::{match_forms, match_reference_inequalities, Matching};
pub use violation::{quantum_violation, QuantumViolation, VIOLATION_TOL};

/// One vertex `w` of the correlation polytope, `w_(j,k) = A_j A_k` with
/// `A = 1 − 2s` evaluated on a two-valued state `s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorrelationVertex {
    pub coords: Vec<i64>,
    /// 1-based row of the Travis matrix.
    pub state_index: usize,
}

/// Ordered list of co-contextual pairs whose products form the coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairConfiguration {
    pub pairs: Vec<(VertexId, VertexId)>,
}

impl PairConfiguration {
    pub fn new(h: &Hypergraph, pairs: Vec<(VertexId, VertexId)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::Unsupported("pair configuration is empty".into()));
        }
        for (u, v) in &pairs {
            for x in [u, v] {
                if h.index_of(x).is_none() {
                    return Err(Error::UnknownVertex(x.to_string()));
                }
            }
            if u == v || !h.co_contextual(u, v) {
                return Err(Error::PairNotCoContextual(u.to_string(), v.to_string()));
            }
        }
        Ok(PairConfiguration { pairs })
    }

    pub fn from_numeric(h: &Hypergraph, pairs: &[(u32, u32)]) -> Result<Self> {
        PairConfiguration::new(h, pairs.iter().map(|&(a, b)| (a.into(), b.into())).collect())
    }

    /// Closed path `1−3−5−…−(2n−1)−1` through the odd vertices.
    fn odd_path(n: u32) -> Vec<(u32, u32)> {
        (0..n).map(|i| (2 * i + 1, (2 * i + 2) % (2 * n) + 1)).collect()
    }

    /// The nine pairs `A1A3, A3A5, …, A17A1` on `mep()`.
    pub fn mep_path() -> Self {
        PairConfiguration::default_for(Builtin::Mep)
    }

    /// Built-in configuration for each built-in hypergraph: the odd path
    /// around the cycle, or the three legs of the pruned gadget.
    pub fn default_for(b: Builtin) -> Self {
        let h = b.hypergraph();
        let pairs = match b {
            Builtin::Mep | Builtin::A | Builtin::B => Self::odd_path(9),
            Builtin::C => Self::odd_path(6),
            Builtin::Pruned => vec![(4, 5), (6, 7), (8, 9)],
        };
        PairConfiguration::from_numeric(&h, &pairs).expect("built-in pairs are co-contextual")
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Coordinate names such as `A1A3`.
    pub fn names(&self) -> Vec<String> {
        self.pairs.iter().map(|(u, v)| format!("A{u}A{v}")).collect()
    }

    /// Parses `j-k` pairs separated by commas or whitespace.
    pub fn parse(h: &Hypergraph, text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for tok in text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
        {
            let (a, b) = tok.split_once('-').ok_or_else(|| Error::Parse {
                line: 1,
                column: 1,
                message: format!("expected a pair like 1-3, got {tok:?}"),
            })?;
            pairs.push((h.vertex(a)?.clone(), h.vertex(b)?.clone()));
        }
        PairConfiguration::new(h, pairs)
    }
}

/// One correlation vertex per state, in Travis-matrix order.
pub fn build_vertices(t: &TravisMatrix, cfg: &PairConfiguration) -> Result<Vec<CorrelationVertex>> {
    let h = t.hypergraph();
    let cols: Vec<(usize, usize)> = cfg
        .pairs
        .iter()
        .map(|(u, v)| {
            let j = h.index_of(u).ok_or_else(|| Error::UnknownVertex(u.to_string()))?;
            let k = h.index_of(v).ok_or_else(|| Error::UnknownVertex(v.to_string()))?;
            Ok((j, k))
        })
        .collect::<Result<_>>()?;
    let a = |s: u8| 1 - 2 * s as i64;
    Ok(t.rows()
        .iter()
        .enumerate()
        .map(|(i, row)| CorrelationVertex {
            coords: cols.iter().map(|&(j, k)| a(row[j]) * a(row[k])).collect(),
            state_index: i + 1,
        })
        .collect())
}

pub fn vertex_coordinates(vertices: &[CorrelationVertex]) -> Vec<Vec<i64>> {
    vertices.iter().map(|v| v.coords.clone()).collect()
}
