//! The semigraph data model.
//!
//! Vertices are `0..n`. Edges are stored in canonical orientation (the
//! lexicographically smaller of the sequence and its reversal) and the edge
//! list is kept sorted, so two semigraphs with the same edge set compare
//! equal.

mod generators;

use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

pub use generators::{random_semigraph, star_type1, star_type2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0 + 1)
    }
}

/// An ordered edge in canonical orientation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(Vec<usize>);

impl Edge {
    /// Canonicalizes `vertices` without validating them.
    pub fn canonical(mut vertices: Vec<usize>) -> Self {
        let reversed: Vec<usize> = vertices.iter().rev().copied().collect();
        if reversed < vertices {
            vertices = reversed;
        }
        Edge(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    /// Consecutive pairs `(u_i, u_{i+1})`.
    pub fn consecutive_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.windows(2).map(|w| (w[0], w[1]))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "v{}", v + 1)?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexClass {
    PureEnd,
    PureMiddle,
    MiddleEnd,
    Isolated,
}

impl fmt::Display for VertexClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VertexClass::PureEnd => "pure-end",
            VertexClass::PureMiddle => "pure-middle",
            VertexClass::MiddleEnd => "middle-end",
            VertexClass::Isolated => "isolated",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeClass {
    /// Both ends are pure end vertices.
    Full,
    /// Exactly one end is a middle end vertex.
    HalfOnePartial,
    /// Both ends are middle end vertices and the edge has three or more vertices.
    HalfTwoPartial,
    /// A two-vertex edge whose ends are both middle end vertices.
    Quarter,
}

/// Edge counts per class: `m1` full, `m2` quarter, `m3` half edges with one
/// partial half edge, `m4` half edges with two.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EdgeCounts {
    pub m1: usize,
    pub m2: usize,
    pub m3: usize,
    pub m4: usize,
}

impl EdgeCounts {
    pub fn total(&self) -> usize {
        self.m1 + self.m2 + self.m3 + self.m4
    }
}

/// Construction errors. `edge` fields are 0-based positions in the input
/// list; messages count edges from 1.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SemigraphError {
    #[error("a semigraph needs at least one vertex")]
    NoVertices,
    #[error("edge #{} has {len} vertices; edges need at least two", edge + 1)]
    EdgeTooShort { edge: usize, len: usize },
    #[error("edge #{} repeats vertex v{}", edge + 1, vertex + 1)]
    DuplicateVertexInEdge { edge: usize, vertex: usize },
    #[error("edge #{} uses vertex v{}, but there are only {n} vertices", edge + 1, vertex + 1)]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        n: usize,
    },
    #[error("edge #{} is equal to edge #{} up to reversal", second + 1, first + 1)]
    DuplicateEdge { first: usize, second: usize },
    #[error(
        "vertex pair (v{}, v{}) appears in edge #{} and edge #{}; edges may share at most one vertex",
        pair.0 + 1, pair.1 + 1, first + 1, second + 1
    )]
    PairInTwoEdges {
        pair: (usize, usize),
        first: usize,
        second: usize,
    },
    #[error("edge {0} is not an edge of this semigraph")]
    EdgeNotInGraph(Edge),
    #[error("the semigraph has no edges")]
    EmptyEdgeSet,
}

impl SemigraphError {
    /// The input edge positions an error refers to, for location reporting.
    pub fn edge_positions(&self) -> Vec<usize> {
        match *self {
            SemigraphError::EdgeTooShort { edge, .. }
            | SemigraphError::DuplicateVertexInEdge { edge, .. }
            | SemigraphError::VertexOutOfRange { edge, .. } => vec![edge],
            SemigraphError::DuplicateEdge { first, second }
            | SemigraphError::PairInTwoEdges { first, second, .. } => vec![first, second],
            _ => Vec::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semigraph {
    n: usize,
    edges: Vec<Edge>,
    // (edge index, position within the edge) for every vertex
    incidence: Vec<Vec<(usize, usize)>>,
}

impl Semigraph {
    /// Validates and canonicalizes an edge list over vertices `0..n`.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self, SemigraphError> {
        if n == 0 {
            return Err(SemigraphError::NoVertices);
        }
        let mut seen_edges: HashMap<Edge, usize> = HashMap::new();
        let mut pair_owner: HashMap<(usize, usize), usize> = HashMap::new();
        let mut canonical = Vec::with_capacity(edges.len());
        for (idx, seq) in edges.into_iter().enumerate() {
            if seq.len() < 2 {
                return Err(SemigraphError::EdgeTooShort {
                    edge: idx,
                    len: seq.len(),
                });
            }
            for &v in &seq {
                if v >= n {
                    return Err(SemigraphError::VertexOutOfRange {
                        edge: idx,
                        vertex: v,
                        n,
                    });
                }
            }
            let mut sorted = seq.clone();
            sorted.sort_unstable();
            if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
                return Err(SemigraphError::DuplicateVertexInEdge {
                    edge: idx,
                    vertex: w[0],
                });
            }
            let edge = Edge::canonical(seq);
            if let Some(&first) = seen_edges.get(&edge) {
                return Err(SemigraphError::DuplicateEdge { first, second: idx });
            }
            for (i, &a) in sorted.iter().enumerate() {
                for &b in &sorted[i + 1..] {
                    if let Some(&first) = pair_owner.get(&(a, b)) {
                        return Err(SemigraphError::PairInTwoEdges {
                            pair: (a, b),
                            first,
                            second: idx,
                        });
                    }
                    pair_owner.insert((a, b), idx);
                }
            }
            seen_edges.insert(edge.clone(), idx);
            canonical.push(edge);
        }
        Ok(Self::from_canonical(n, canonical))
    }

    /// Builds from edges already known to be valid and canonical.
    pub(crate) fn from_canonical(n: usize, mut edges: Vec<Edge>) -> Self {
        edges.sort();
        let mut incidence = vec![Vec::new(); n];
        for (ei, e) in edges.iter().enumerate() {
            for (pos, &v) in e.vertices().iter().enumerate() {
                incidence[v].push((ei, pos));
            }
        }
        Semigraph {
            n,
            edges,
            incidence,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edges in sorted order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    /// Edges through `v` as `(edge index, position in edge)`.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.incidence[v]
    }

    pub fn classify_vertex(&self, v: VertexId) -> VertexClass {
        let mut is_end = false;
        let mut is_middle = false;
        for &(ei, pos) in &self.incidence[v.0] {
            if pos == 0 || pos + 1 == self.edges[ei].len() {
                is_end = true;
            } else {
                is_middle = true;
            }
        }
        match (is_end, is_middle) {
            (false, false) => VertexClass::Isolated,
            (true, false) => VertexClass::PureEnd,
            (false, true) => VertexClass::PureMiddle,
            (true, true) => VertexClass::MiddleEnd,
        }
    }

    pub fn vertex_classes(&self) -> Vec<VertexClass> {
        (0..self.n)
            .map(|v| self.classify_vertex(VertexId(v)))
            .collect()
    }

    pub fn classify_edge(&self, e: &Edge) -> Result<EdgeClass, SemigraphError> {
        if !self.contains_edge(e) {
            return Err(SemigraphError::EdgeNotInGraph(e.clone()));
        }
        Ok(self.edge_class_unchecked(e))
    }

    fn edge_class_unchecked(&self, e: &Edge) -> EdgeClass {
        let first = self.classify_vertex(VertexId(e.first())) == VertexClass::MiddleEnd;
        let last = self.classify_vertex(VertexId(e.last())) == VertexClass::MiddleEnd;
        match (first, last) {
            (false, false) => EdgeClass::Full,
            (true, true) if e.len() == 2 => EdgeClass::Quarter,
            (true, true) => EdgeClass::HalfTwoPartial,
            _ => EdgeClass::HalfOnePartial,
        }
    }

    pub fn edge_classes(&self) -> Vec<EdgeClass> {
        self.edges
            .iter()
            .map(|e| self.edge_class_unchecked(e))
            .collect()
    }

    pub fn edge_counts(&self) -> EdgeCounts {
        let mut c = EdgeCounts::default();
        for class in self.edge_classes() {
            match class {
                EdgeClass::Full => c.m1 += 1,
                EdgeClass::Quarter => c.m2 += 1,
                EdgeClass::HalfOnePartial => c.m3 += 1,
                EdgeClass::HalfTwoPartial => c.m4 += 1,
            }
        }
        c
    }

    /// True iff every vertex pair is joined by a chain of edges in which
    /// consecutive edges meet in a vertex.
    pub fn is_connected(&self) -> bool {
        if self.n == 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut used_edge = vec![false; self.edges.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &(ei, _) in &self.incidence[v] {
                if std::mem::replace(&mut used_edge[ei], true) {
                    continue;
                }
                for &w in self.edges[ei].vertices() {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// The graph skeleton: one two-vertex edge per consecutively adjacent pair.
    pub fn skeleton(&self) -> Semigraph {
        let edges = self
            .edges
            .iter()
            .flat_map(|e| {
                e.consecutive_pairs()
                    .map(|(a, b)| Edge::canonical(vec![a, b]))
            })
            .collect();
        Semigraph::from_canonical(self.n, edges)
    }

    /// Size of the largest edge.
    pub fn rank(&self) -> Result<usize, SemigraphError> {
        self.edges
            .iter()
            .map(Edge::len)
            .max()
            .ok_or(SemigraphError::EmptyEdgeSet)
    }

    /// True when every edge has two vertices.
    pub fn is_graph(&self) -> bool {
        self.edges.iter().all(|e| e.len() == 2)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.incidence.iter().any(Vec::is_empty)
    }
}

impl fmt::Display for Semigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} E={{", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}
