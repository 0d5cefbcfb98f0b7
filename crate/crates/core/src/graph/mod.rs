//! Simple undirected graphs over the ordered label universe
//! `u1 < ... < uk < v1 < v2 < ...`.
//!
//! Vertices are dense indices `0..order`. The first `u_count` indices carry
//! the labels `u1..uk`, the rest `v1, v2, ...`, so index order is label order.
//! Adjacency rows are single-word bitsets, which keeps edge tests,
//! neighbourhood intersections and hashing cheap at search scale.

mod graph6;
mod props;
mod set;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use graph6::{decode_graph6, encode_graph6};
pub use props::Girth;
pub use set::{Iter as VertexIter, VertexSet, MAX_ORDER};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("malformed graph6 input: {0}")]
    MalformedGraph6(String),
    #[error("graph of order {0} exceeds the supported maximum of {MAX_ORDER}")]
    TooLarge(usize),
    #[error("invalid vertex label {0:?}")]
    InvalidLabel(String),
}

/// A vertex label from the universe `u1..uk, v1, v2, ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    U(usize),
    V(usize),
}

impl Label {
    /// Label of vertex index `idx` in a graph whose first `u_count` vertices are u-labels.
    pub fn of_index(idx: usize, u_count: usize) -> Label {
        if idx < u_count {
            Label::U(idx + 1)
        } else {
            Label::V(idx - u_count + 1)
        }
    }

    pub fn index(self, u_count: usize) -> Option<usize> {
        match self {
            Label::U(i) if i >= 1 && i <= u_count => Some(i - 1),
            Label::V(i) if i >= 1 => Some(u_count + i - 1),
            _ => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::U(i) => write!(f, "u{i}"),
            Label::V(i) => write!(f, "v{i}"),
        }
    }
}

impl FromStr for Label {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::InvalidLabel(s.to_string());
        let (kind, num) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let n: usize = num.parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(bad());
        }
        match kind {
            "u" => Ok(Label::U(n)),
            "v" => Ok(Label::V(n)),
            _ => Err(bad()),
        }
    }
}

/// A simple undirected graph with value semantics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    rows: Vec<VertexSet>,
    u_count: usize,
}

impl LabeledGraph {
    /// Edgeless graph `v1..vn`.
    pub fn empty(n: usize) -> Self {
        Self::with_u_labels(n, 0)
    }

    /// Edgeless graph whose first `u_count` vertices are labelled `u1..`.
    pub fn with_u_labels(n: usize, u_count: usize) -> Self {
        assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
        assert!(u_count <= n);
        LabeledGraph {
            rows: vec![VertexSet::EMPTY; n],
            u_count,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn u_count(&self) -> usize {
        self.u_count
    }

    /// Same adjacency, different split of the label universe.
    pub fn relabel_universe(mut self, u_count: usize) -> Self {
        assert!(u_count <= self.order());
        self.u_count = u_count;
        self
    }

    pub fn label(&self, v: usize) -> Label {
        Label::of_index(v, self.u_count)
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> VertexSet {
        self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.rows[a].contains(b)
    }

    /// Adds `ab`; returns false if it was already present.
    pub fn add_edge(&mut self, a: usize, b: usize) -> bool {
        assert!(a != b, "self-loop at {a}");
        assert!(a < self.order() && b < self.order());
        if self.rows[a].contains(b) {
            return false;
        }
        self.rows[a].insert(b);
        self.rows[b].insert(a);
        true
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) -> bool {
        if !self.rows[a].contains(b) {
            return false;
        }
        self.rows[a].remove(b);
        self.rows[b].remove(a);
        true
    }

    /// Appends an isolated vertex and returns its index.
    pub fn add_vertex(&mut self) -> usize {
        assert!(self.order() < MAX_ORDER);
        self.rows.push(VertexSet::EMPTY);
        self.rows.len() - 1
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(a, r)| r.iter().filter(move |&b| b > a).map(move |b| (a, b)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.len()).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.rows.iter().map(|r| r.len()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.rows.iter().map(|r| r.len()).min().unwrap_or(0)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.rows.iter().all(|r| r.len() == d)
    }

    /// Sorted (descending) degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Subgraph induced by `keep`, re-indexed in ascending order. Labels become `v1..`.
    pub fn induced(&self, keep: VertexSet) -> LabeledGraph {
        let idx: Vec<usize> = keep.iter().collect();
        let mut pos = vec![usize::MAX; self.order()];
        for (i, &v) in idx.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = LabeledGraph::empty(idx.len());
        for (i, &v) in idx.iter().enumerate() {
            for w in (self.rows[v] & keep).iter() {
                g.rows[i].insert(pos[w]);
            }
        }
        g
    }

    /// The graph with every vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> LabeledGraph {
        assert_eq!(perm.len(), self.order());
        let mut g = LabeledGraph::with_u_labels(self.order(), self.u_count);
        for (a, b) in self.edges() {
            g.add_edge(perm[a], perm[b]);
        }
        g
    }

    /// Disjoint union; vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &LabeledGraph) -> LabeledGraph {
        let off = self.order();
        let mut g = LabeledGraph::empty(off + other.order());
        for (a, b) in self.edges() {
            g.add_edge(a, b);
        }
        for (a, b) in other.edges() {
            g.add_edge(a + off, b + off);
        }
        g
    }

    /// Adjacency list keyed by label, for reports.
    pub fn adjacency_list(&self) -> Vec<(String, Vec<String>)> {
        self.vertices()
            .map(|v| {
                (
                    self.label(v).to_string(),
                    self.rows[v].iter().map(|w| self.label(w).to_string()).collect(),
                )
            })
            .collect()
    }
}

impl fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabeledGraph(n={}, edges=[", self.order())?;
        for (i, (a, b)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}{}", self.label(a), self.label(b))?;
        }
        write!(f, "])")
    }
}
