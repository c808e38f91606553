//! Orthogonality hypergraphs: vertices, contexts (hyperedges) and the
//! built-in hypergraphs used throughout the crate.
//!
//! Two text formats are understood:
//!
//! * **simple**: one context per line, labels separated by commas and/or
//!   whitespace. `#` starts a comment; blank lines are skipped.
//! * **mmp**: single-character labels, contexts separated by commas, the
//!   line terminated by a period, e.g. `123,345,567.`

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex label.
///
/// Labels are plain strings. Ordering is "natural": labels that parse as
/// unsigned integers come first in numeric order, everything else follows
/// lexicographically. This is only used for display and canonical forms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        if label.is_empty() {
            return Err(Error::InvalidHypergraph("empty vertex label".into()));
        }
        Ok(VertexId(label))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    fn sort_key(&self) -> (u8, u64, &str) {
        match self.0.parse::<u64>() {
            Ok(n) => (0, n, &self.0),
            Err(_) => (1, 0, &self.0),
        }
    }
}

impl Ord for VertexId {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for VertexId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<u32> for VertexId {
    fn from(n: u32) -> Self {
        VertexId(n.to_string())
    }
}

impl FromStr for VertexId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        VertexId::new(s)
    }
}

/// A context: a maximal set of mutually exclusive outcomes. Members keep
/// their input order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Context {
    members: Vec<VertexId>,
}

impl Context {
    pub fn new(members: Vec<VertexId>) -> Result<Self> {
        if members.len() < 2 {
            return Err(Error::InvalidHypergraph(format!(
                "context {} has fewer than 2 members",
                fmt_members(&members)
            )));
        }
        let mut seen = BTreeSet::new();
        for m in &members {
            if !seen.insert(m) {
                return Err(Error::InvalidHypergraph(format!(
                    "duplicate vertex `{m}` in context {}",
                    fmt_members(&members)
                )));
            }
        }
        Ok(Context { members })
    }

    pub fn members(&self) -> &[VertexId] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        self.members.contains(v)
    }

    pub fn sorted_members(&self) -> Vec<VertexId> {
        let mut m = self.members.clone();
        m.sort();
        m
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_members(&self.members))
    }
}

fn fmt_members(members: &[VertexId]) -> String {
    let inner: Vec<&str> = members.iter().map(VertexId::as_str).collect();
    format!("{{{}}}", inner.join(","))
}

/// A hypergraph of contexts.
///
/// Vertices are exactly the union of the context members, kept sorted in
/// natural label order; contexts keep input order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    vertices: Vec<VertexId>,
    contexts: Vec<Context>,
    index: HashMap<VertexId, usize>,
}

impl Hypergraph {
    pub fn new(contexts: Vec<Context>) -> Result<Self> {
        if contexts.is_empty() {
            return Err(Error::InvalidHypergraph("no contexts".into()));
        }
        let mut seen = BTreeSet::new();
        for c in &contexts {
            if !seen.insert(c.sorted_members()) {
                return Err(Error::InvalidHypergraph(format!("duplicate context {c}")));
            }
        }
        let vertices: Vec<VertexId> = contexts
            .iter()
            .flat_map(|c| c.members().iter().cloned())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index = vertices.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
        Ok(Hypergraph {
            vertices,
            contexts,
            index,
        })
    }

    /// Builds a hypergraph from integer-labelled contexts.
    pub fn from_numeric(contexts: &[&[u32]]) -> Result<Self> {
        let contexts = contexts
            .iter()
            .map(|c| Context::new(c.iter().map(|&n| VertexId::from(n)).collect()))
            .collect::<Result<Vec<_>>>()?;
        Hypergraph::new(contexts)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn contexts(&self) -> &[Context] {
        &self.contexts
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn index_of(&self, v: &VertexId) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn vertex(&self, label: &str) -> Result<&VertexId> {
        self.vertices
            .iter()
            .find(|v| v.as_str() == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    /// Contexts as lists of vertex indices into [`Hypergraph::vertices`].
    pub fn context_indices(&self) -> Vec<Vec<usize>> {
        self.contexts
            .iter()
            .map(|c| c.members().iter().map(|m| self.index[m]).collect())
            .collect()
    }

    /// Number of contexts each vertex belongs to, indexed like `vertices()`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for c in self.context_indices() {
            for i in c {
                deg[i] += 1;
            }
        }
        deg
    }

    /// Whether `u` and `v` (distinct) share a context.
    pub fn co_contextual(&self, u: &VertexId, v: &VertexId) -> bool {
        u != v && self.contexts.iter().any(|c| c.contains(u) && c.contains(v))
    }

    /// Adjacency matrix of the co-contextuality graph over vertex indices.
    pub fn adjacency(&self) -> Vec<Vec<bool>> {
        let n = self.vertices.len();
        let mut adj = vec![vec![false; n]; n];
        for c in self.context_indices() {
            for &a in &c {
                for &b in &c {
                    if a != b {
                        adj[a][b] = true;
                    }
                }
            }
        }
        adj
    }

    pub fn is_context(&self, set: &BTreeSet<VertexId>) -> bool {
        self.contexts
            .iter()
            .any(|c| c.len() == set.len() && c.members().iter().all(|m| set.contains(m)))
    }

    /// Contexts sorted by their sorted member lists, members sorted too.
    pub fn canonical(&self) -> Hypergraph {
        let mut contexts: Vec<Context> = self
            .contexts
            .iter()
            .map(|c| Context {
                members: c.sorted_members(),
            })
            .collect();
        contexts.sort_by(|a, b| a.members.cmp(&b.members));
        Hypergraph {
            vertices: self.vertices.clone(),
            contexts,
            index: self.index.clone(),
        }
    }

    /// Equality up to context order and member order.
    pub fn same_as(&self, other: &Hypergraph) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn validate(&self) -> ValidationReport {
        validate(self)
    }

    pub fn to_simple(&self) -> String {
        let mut out = String::new();
        for c in &self.contexts {
            let labels: Vec<&str> = c.members().iter().map(VertexId::as_str).collect();
            out.push_str(&labels.join(" "));
            out.push('\n');
        }
        out
    }

    /// MMP rendering; fails unless every label is a single printable,
    /// non-separator character.
    pub fn to_mmp(&self) -> Result<String> {
        let mut parts = Vec::with_capacity(self.contexts.len());
        for c in &self.contexts {
            let mut s = String::new();
            for m in c.members() {
                let mut chars = m.as_str().chars();
                match (chars.next(), chars.next()) {
                    (Some(ch), None) if is_mmp_label(ch) => s.push(ch),
                    _ => {
                        return Err(Error::Unsupported(format!(
                            "label `{m}` cannot be written in MMP format"
                        )))
                    }
                }
            }
            parts.push(s);
        }
        Ok(format!("{}.", parts.join(",")))
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.contexts.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join("-"))
    }
}

impl Serialize for Hypergraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Hypergraph", 2)?;
        st.serialize_field("vertices", &self.vertices)?;
        st.serialize_field("contexts", &self.contexts)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Hypergraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            contexts: Vec<Vec<VertexId>>,
        }
        let raw = Raw::deserialize(d)?;
        let contexts = raw
            .contexts
            .into_iter()
            .map(Context::new)
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Hypergraph::new(contexts).map_err(serde::de::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// Parsing

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Simple,
    Mmp,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "simple" => Ok(Format::Simple),
            "mmp" => Ok(Format::Mmp),
            other => Err(Error::Unsupported(format!("unknown format `{other}`"))),
        }
    }
}

pub fn parse_hypergraph(text: &str, format: Format) -> Result<Hypergraph> {
    match format {
        Format::Simple => parse_simple(text),
        Format::Mmp => parse_mmp(text),
    }
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn is_simple_label_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '-' | '.')
}

fn is_mmp_label(c: char) -> bool {
    c.is_ascii_graphic() && c != ',' && c != '.'
}

fn parse_simple(text: &str) -> Result<Hypergraph> {
    if text.trim().is_empty() {
        return Err(parse_err(1, 1, "empty input"));
    }
    let mut contexts: Vec<Context> = Vec::new();
    let mut seen: BTreeMap<Vec<VertexId>, usize> = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        let line = match line.find('#') {
            Some(pos) => &line[..pos],
            None => line,
        };
        // (column, label) tokens
        let mut tokens: Vec<(usize, String)> = Vec::new();
        let mut current = String::new();
        let mut start = 0;
        for (col, ch) in line.chars().enumerate() {
            let col = col + 1;
            if ch == ',' || ch.is_whitespace() {
                if !current.is_empty() {
                    tokens.push((start, std::mem::take(&mut current)));
                }
            } else if is_simple_label_char(ch) {
                if current.is_empty() {
                    start = col;
                }
                current.push(ch);
            } else {
                return Err(parse_err(lineno, col, format!("unexpected character `{ch}`")));
            }
        }
        if !current.is_empty() {
            tokens.push((start, current));
        }
        if tokens.is_empty() {
            continue;
        }
        let mut members: Vec<VertexId> = Vec::with_capacity(tokens.len());
        for (col, label) in &tokens {
            let v = VertexId(label.clone());
            if members.contains(&v) {
                return Err(parse_err(
                    lineno,
                    *col,
                    format!("duplicate vertex `{label}` in context"),
                ));
            }
            members.push(v);
        }
        if members.len() < 2 {
            return Err(parse_err(lineno, tokens[0].0, "context needs at least 2 vertices"));
        }
        let mut key = members.clone();
        key.sort();
        if let Some(prev) = seen.insert(key, lineno) {
            return Err(parse_err(
                lineno,
                tokens[0].0,
                format!("duplicate context (first seen on line {prev})"),
            ));
        }
        contexts.push(Context { members });
    }
    if contexts.is_empty() {
        return Err(parse_err(1, 1, "no contexts in input"));
    }
    Hypergraph::new(contexts)
}

fn parse_mmp(text: &str) -> Result<Hypergraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)))
        .filter(|(_, l)| !l.trim().is_empty());
    let Some((lineno, line)) = lines.next() else {
        return Err(parse_err(1, 1, "empty input"));
    };
    if let Some((extra, l)) = lines.next() {
        let col = l.chars().take_while(|c| c.is_whitespace()).count() + 1;
        return Err(parse_err(extra, col, "trailing content after MMP line"));
    }
    let mut contexts = Vec::new();
    let mut seen: BTreeMap<Vec<VertexId>, usize> = BTreeMap::new();
    let mut members: Vec<VertexId> = Vec::new();
    let mut ctx_start = 1;
    let mut terminated = false;
    for (col, ch) in line.chars().enumerate() {
        let col = col + 1;
        if terminated {
            if ch.is_whitespace() {
                continue;
            }
            return Err(parse_err(lineno, col, "content after terminating `.`"));
        }
        match ch {
            ',' | '.' => {
                if members.len() < 2 {
                    return Err(parse_err(lineno, ctx_start, "context needs at least 2 vertices"));
                }
                let mut key = members.clone();
                key.sort();
                if seen.insert(key, ctx_start).is_some() {
                    return Err(parse_err(lineno, ctx_start, "duplicate context"));
                }
                contexts.push(Context {
                    members: std::mem::take(&mut members),
                });
                ctx_start = col + 1;
                terminated = ch == '.';
            }
            c if c.is_whitespace() => {}
            c if is_mmp_label(c) => {
                let v = VertexId(c.to_string());
                if members.contains(&v) {
                    return Err(parse_err(lineno, col, format!("duplicate vertex `{c}` in context")));
                }
                members.push(v);
            }
            c => return Err(parse_err(lineno, col, format!("unexpected character `{c}`"))),
        }
    }
    if !terminated {
        let col = line.chars().count() + 1;
        return Err(parse_err(lineno, col, "missing terminating `.`"));
    }
    Hypergraph::new(contexts)
}

// ---------------------------------------------------------------------------
// Built-in hypergraphs

const NINE_CYCLE: [[u32; 3]; 9] = [
    [1, 2, 3],
    [3, 4, 5],
    [5, 6, 7],
    [7, 8, 9],
    [9, 10, 11],
    [11, 12, 13],
    [13, 14, 15],
    [15, 16, 17],
    [17, 18, 1],
];

fn numeric(contexts: &[[u32; 3]]) -> Hypergraph {
    let refs: Vec<&[u32]> = contexts.iter().map(|c| &c[..]).collect();
    Hypergraph::from_numeric(&refs).expect("built-in hypergraph is valid")
}

/// The Möbius–Escher–Penrose hypergraph: the nine-cycle of contexts that
/// spirals back onto `{1,2,3}`, tied together by `{2,8,14}` and `{4,10,16}`.
pub fn mep() -> Hypergraph {
    let mut contexts = NINE_CYCLE.to_vec();
    contexts.push([2, 8, 14]);
    contexts.push([4, 10, 16]);
    numeric(&contexts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Four contexts: `{1,2,3}` with a leg hanging off each of its members.
    PrunedGadget,
    /// Nine-cycle plus the single intertwining context `{6,12,18}`.
    A,
    /// The bare nine-cycle.
    B,
    /// Six-cycle on twelve vertices.
    C,
}

pub fn variant(which: Variant) -> Hypergraph {
    match which {
        Variant::PrunedGadget => numeric(&[[1, 2, 3], [1, 4, 5], [2, 6, 7], [3, 8, 9]]),
        Variant::A => {
            let mut contexts = NINE_CYCLE.to_vec();
            contexts.push([6, 12, 18]);
            numeric(&contexts)
        }
        Variant::B => numeric(&NINE_CYCLE),
        Variant::C => numeric(&[[1, 2, 3], [3, 4, 5], [5, 6, 7], [7, 8, 9], [9, 10, 11], [11, 12, 1]]),
    }
}

/// Names accepted on the command line for the built-in hypergraphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Builtin {
    Mep,
    Pruned,
    A,
    B,
    C,
}

impl Builtin {
    pub const ALL: [Builtin; 5] = [Builtin::Mep, Builtin::Pruned, Builtin::A, Builtin::B, Builtin::C];

    pub fn hypergraph(self) -> Hypergraph {
        match self {
            Builtin::Mep => mep(),
            Builtin::Pruned => variant(Variant::PrunedGadget),
            Builtin::A => variant(Variant::A),
            Builtin::B => variant(Variant::B),
            Builtin::C => variant(Variant::C),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Builtin::Mep => "mep",
            Builtin::Pruned => "pruned",
            Builtin::A => "a",
            Builtin::B => "b",
            Builtin::C => "c",
        }
    }
}

impl FromStr for Builtin {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Builtin::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown built-in hypergraph `{s}`")))
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

// ---------------------------------------------------------------------------
// Validation

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub vertex_count: usize,
    pub context_count: usize,
    /// All contexts have the same size.
    pub uniform: bool,
    /// The common context size when uniform.
    pub context_size: Option<usize>,
    pub degrees: BTreeMap<VertexId, usize>,
    /// Number of vertices lying in two or more contexts.
    pub intertwining: usize,
    pub max_degree: usize,
}

pub fn validate(h: &Hypergraph) -> ValidationReport {
    let sizes: BTreeSet<usize> = h.contexts().iter().map(Context::len).collect();
    let uniform = sizes.len() == 1;
    let deg = h.degrees();
    let degrees = h.vertices().iter().cloned().zip(deg.iter().copied()).collect();
    ValidationReport {
        vertex_count: h.vertex_count(),
        context_count: h.contexts().len(),
        uniform,
        context_size: if uniform { sizes.first().copied() } else { None },
        degrees,
        intertwining: deg.iter().filter(|&&d| d >= 2).count(),
        max_degree: deg.iter().copied().max().unwrap_or(0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: u32) -> VertexId {
        VertexId::from(n)
    }

    #[test]
    fn two_context_chain() {
        let h = parse_hypergraph("1 2 3\n3 4 5", Format::Simple).unwrap();
        assert_eq!(h.vertex_count(), 5);
        assert_eq!(h.contexts().len(), 2);
    }

    #[test]
    fn duplicate_vertex_in_context_reports_position() {
        let err = parse_hypergraph("1 1 2", Format::Simple).unwrap_err();
        match err {
            Error::Parse { line, column, message } => {
                assert_eq!((line, column), (1, 3));
                assert!(message.contains("duplicate vertex"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn duplicate_context_is_rejected() {
        let err = parse_hypergraph("1 2 3\n# c\n3,2,1\n", Format::Simple).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, column: 1, .. }), "{err:?}");
    }

    #[test]
    fn empty_and_comment_only_input() {
        assert!(matches!(parse_hypergraph("", Format::Simple), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_hypergraph("# nothing\n\n", Format::Simple),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_hypergraph("  \n", Format::Mmp),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn unparsable_token() {
        let err = parse_hypergraph("1 2 3\n4 5 $\n", Format::Simple).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, column: 5, .. }), "{err:?}");
    }

    #[test]
    fn crlf_commas_and_trailing_comments() {
        let h = parse_hypergraph("1,2,3 # first\r\n3, 4 ,5\r\n", Format::Simple).unwrap();
        assert_eq!(h.contexts().len(), 2);
        assert_eq!(h.contexts()[1].members(), &[v(3), v(4), v(5)]);
    }

    #[test]
    fn mmp_format() {
        let h = parse_hypergraph("abc,cde,efg.\n", Format::Mmp).unwrap();
        assert_eq!(h.vertex_count(), 7);
        assert_eq!(h.to_mmp().unwrap(), "abc,cde,efg.");
        assert!(matches!(
            parse_hypergraph("abc,cde", Format::Mmp),
            Err(Error::Parse { line: 1, column: 8, .. })
        ));
        assert!(matches!(
            parse_hypergraph("aab.", Format::Mmp),
            Err(Error::Parse { column: 2, .. })
        ));
        assert!(matches!(
            parse_hypergraph("abc,bca.", Format::Mmp),
            Err(Error::Parse { column: 5, .. })
        ));
    }

    #[test]
    fn mep_structure() {
        let h = mep();
        assert_eq!(h.contexts().len(), 11);
        assert_eq!(h.vertex_count(), 18);
        let containing = |x: u32| -> Vec<Vec<VertexId>> {
            h.contexts()
                .iter()
                .filter(|c| c.contains(&v(x)))
                .map(Context::sorted_members)
                .collect()
        };
        assert_eq!(containing(2), vec![vec![v(1), v(2), v(3)], vec![v(2), v(8), v(14)]]);
        assert_eq!(containing(6), vec![vec![v(5), v(6), v(7)]]);
        assert!(h.degrees().iter().all(|&d| d == 1 || d == 2));
    }

    #[test]
    fn variants() {
        assert_eq!(variant(Variant::A).contexts().len(), 10);
        assert_eq!(variant(Variant::B).contexts().len(), 9);
        let c = variant(Variant::C);
        assert_eq!((c.vertex_count(), c.contexts().len()), (12, 6));
        let g = variant(Variant::PrunedGadget);
        assert_eq!((g.vertex_count(), g.contexts().len()), (9, 4));
    }

    #[test]
    fn validation_reports() {
        let r = mep().validate();
        assert!(r.uniform);
        assert_eq!(r.context_size, Some(3));
        // vertices 6, 12, 18 are the only ones outside the intertwining
        let lonely: Vec<_> = r
            .degrees
            .iter()
            .filter(|(_, &d)| d == 1)
            .map(|(k, _)| k.clone())
            .collect();
        assert_eq!(lonely, vec![v(6), v(12), v(18)]);
        assert_eq!(r.intertwining, 15);

        let one = Hypergraph::from_numeric(&[&[1, 2, 3]]).unwrap().validate();
        assert!(one.uniform);
        assert_eq!(one.intertwining, 0);

        let mixed = Hypergraph::from_numeric(&[&[1, 2], &[2, 3, 4]]).unwrap().validate();
        assert!(!mixed.uniform);
        assert_eq!(mixed.context_size, None);
    }

    #[test]
    fn builtins_have_degree_at_most_two() {
        for b in Builtin::ALL {
            assert!(b.hypergraph().validate().max_degree <= 2, "{b}");
            assert_eq!(b.name().parse::<Builtin>().unwrap(), b);
        }
    }

    #[test]
    fn natural_label_order() {
        let mut labels: Vec<VertexId> = ["10", "b", "2", "a", "1"].iter().map(|s| s.parse().unwrap()).collect();
        labels.sort();
        let s: Vec<&str> = labels.iter().map(VertexId::as_str).collect();
        assert_eq!(s, ["1", "2", "10", "a", "b"]);
    }

    #[test]
    fn canonical_equality_ignores_order() {
        let a = parse_hypergraph("1 2 3\n3 4 5", Format::Simple).unwrap();
        let b = parse_hypergraph("5 3 4\n2 1 3", Format::Simple).unwrap();
        assert_ne!(a, b);
        assert!(a.same_as(&b));
    }

    #[test]
    fn json_round_trip() {
        let h = mep();
        let json = serde_json::to_string(&h).unwrap();
        let back: Hypergraph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, h);
    }
}
