//! Path-decompositions: validity, smoothness, associated graphs, the
//! high-degree-first transform and an exact path-width solver.

mod hdf;
mod pathwidth;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Label, LabeledGraph, VertexSet};

pub use hdf::{is_hdf, make_hdf};
pub use pathwidth::{pathwidth_exact, smooth_layout, vertex_separation, PATHWIDTH_MAX_ORDER};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecompositionError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("graph of order {0} exceeds the exact solver limit of {PATHWIDTH_MAX_ORDER}")]
    TooLarge(usize),
}

/// A sequence of bags over the vertex indices of a host graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathDecomposition {
    pub bags: Vec<VertexSet>,
}

impl PathDecomposition {
    pub fn new(bags: Vec<VertexSet>) -> Self {
        PathDecomposition { bags }
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    /// Largest bag size minus one; `None` for an empty decomposition.
    pub fn width(&self) -> Option<usize> {
        self.bags
            .iter()
            .map(|b| b.len())
            .max()
            .map(|m| m.saturating_sub(1))
    }

    /// The unique vertex of `bags[i] \ bags[i + 1]`, for smooth decompositions.
    pub fn leaving(&self, i: usize) -> Option<usize> {
        let d = self.bags[i] - *self.bags.get(i + 1)?;
        (d.len() == 1).then(|| d.first().unwrap())
    }

    /// The unique vertex of `bags[i + 1] \ bags[i]`, for smooth decompositions.
    pub fn entering(&self, i: usize) -> Option<usize> {
        let d = *self.bags.get(i + 1)? - self.bags[i];
        (d.len() == 1).then(|| d.first().unwrap())
    }

    pub fn to_json(&self, g: &LabeledGraph) -> DecompositionJson {
        DecompositionJson {
            width: self.width().unwrap_or(0),
            bags: self
                .bags
                .iter()
                .map(|b| b.iter().map(|v| g.label(v).to_string()).collect())
                .collect(),
        }
    }

    pub fn from_json(g: &LabeledGraph, json: &DecompositionJson) -> Result<Self, DecompositionError> {
        let mut bags = Vec::with_capacity(json.bags.len());
        for bag in &json.bags {
            let mut set = VertexSet::EMPTY;
            for s in bag {
                let label: Label = s
                    .parse()
                    .map_err(|e| DecompositionError::InvalidInput(format!("{e}")))?;
                let v = label
                    .index(g.u_count())
                    .filter(|&v| v < g.order())
                    .ok_or_else(|| DecompositionError::InvalidInput(format!("unknown vertex {s}")))?;
                set.insert(v);
            }
            bags.push(set);
        }
        Ok(PathDecomposition { bags })
    }
}

/// Serialised form: `{"width": w, "bags": [["v1", ...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub width: usize,
    pub bags: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvalidReason {
    UnknownVertex { bag: usize, vertex: usize },
    VertexUncovered(usize),
    EdgeUncovered(usize, usize),
    NotContiguous(usize),
    WidthExceeded { bag: usize, size: usize },
}

impl fmt::Display for InvalidReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvalidReason::UnknownVertex { bag, vertex } => {
                write!(f, "bag {bag} names unknown vertex {vertex}")
            }
            InvalidReason::VertexUncovered(v) => write!(f, "vertex {v} in no bag"),
            InvalidReason::EdgeUncovered(a, b) => write!(f, "edge {a}-{b} in no bag"),
            InvalidReason::NotContiguous(v) => write!(f, "bags containing vertex {v} are not contiguous"),
            InvalidReason::WidthExceeded { bag, size } => write!(f, "bag {bag} has {size} vertices"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Validity {
    Valid,
    ValidSmooth,
    Invalid(InvalidReason),
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        !matches!(self, Validity::Invalid(_))
    }
}

/// Checks the decomposition axioms, the width bound `k` and smoothness
/// (every bag has `k + 1` vertices and consecutive bags share `k`).
pub fn validate(g: &LabeledGraph, d: &PathDecomposition, k: usize) -> Validity {
    let all = g.vertex_set();
    for (i, b) in d.bags.iter().enumerate() {
        if let Some(v) = (*b - all).first() {
            return Validity::Invalid(InvalidReason::UnknownVertex { bag: i, vertex: v });
        }
    }
    let covered: VertexSet = d.bags.iter().fold(VertexSet::EMPTY, |acc, b| acc | *b);
    if let Some(v) = (all - covered).first() {
        return Validity::Invalid(InvalidReason::VertexUncovered(v));
    }
    for (a, b) in g.edges() {
        if !d.bags.iter().any(|bag| bag.contains(a) && bag.contains(b)) {
            return Validity::Invalid(InvalidReason::EdgeUncovered(a, b));
        }
    }
    for v in g.vertices() {
        let first = d.bags.iter().position(|b| b.contains(v)).unwrap();
        let last = d.bags.iter().rposition(|b| b.contains(v)).unwrap();
        if d.bags[first..=last].iter().any(|b| !b.contains(v)) {
            return Validity::Invalid(InvalidReason::NotContiguous(v));
        }
    }
    for (i, b) in d.bags.iter().enumerate() {
        if b.len() > k + 1 {
            return Validity::Invalid(InvalidReason::WidthExceeded {
                bag: i,
                size: b.len(),
            });
        }
    }
    let smooth =
        d.bags.iter().all(|b| b.len() == k + 1) && d.bags.windows(2).all(|w| (w[0] & w[1]).len() == k);
    if smooth {
        Validity::ValidSmooth
    } else {
        Validity::Valid
    }
}

/// `G_i`: the subgraph induced by the first `i + 1` bags (0-based `i`)
/// minus every edge inside bag `i`, on the original vertex indices; vertices
/// not yet introduced are isolated.
pub(crate) fn associated_full(g: &LabeledGraph, d: &PathDecomposition, i: usize) -> LabeledGraph {
    let seen = d.bags[..=i].iter().fold(VertexSet::EMPTY, |acc, b| acc | *b);
    let last = d.bags[i];
    let mut h = LabeledGraph::with_u_labels(g.order(), g.u_count());
    for (a, b) in g.edges() {
        if seen.contains(a) && seen.contains(b) && !(last.contains(a) && last.contains(b)) {
            h.add_edge(a, b);
        }
    }
    h
}

/// The graph associated with bag `i` (0-based), re-indexed onto the
/// vertices of the first `i + 1` bags in ascending order.
pub fn associated_graph(g: &LabeledGraph, d: &PathDecomposition, i: usize) -> LabeledGraph {
    let seen = d.bags[..=i].iter().fold(VertexSet::EMPTY, |acc, b| acc | *b);
    associated_full(g, d, i).induced(seen)
}
