//! The decomposition search.
//!
//! Pairs `(U, H)` are processed phase by phase, where the phase of a pair is
//! `|H| - k`. For each pair the engine first tries to close it into a class
//! member by adding edges inside `U`; any such member avoiding every pattern
//! is a counterexample of order `k + phase`. Otherwise each way of letting a
//! bag vertex leave yields the pairs of the next phase.
//!
//! [`Algorithm::Base`] enumerates every leaving vertex, neighbourhood and
//! completion without symmetry reduction and serves as the reference.
//! [`Algorithm::Optimized`] computes `Aut(U, H)` once per pair and only
//! explores one representative per orbit, picks the leaving vertex directly
//! for cubic classes when the high-degree-first rule applies, and drops
//! pairs isomorphic to one already queued.

mod checkpoint;
mod engine;
mod expand;
mod stats;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::class::GraphClass;
use crate::containment::PatternSet;
use crate::decomposition::PathDecomposition;
use crate::graph::{LabeledGraph, VertexSet, MAX_ORDER};
use crate::symmetry::DEFAULT_GROUP_CAP;

pub use checkpoint::{Checkpoint, CheckpointError, ConfigEcho, FramePair, CHECKPOINT_SCHEMA};
pub use engine::{run_search, run_search_base, Search};
pub use expand::{check_completions, leaving_candidates, successors};
pub use stats::{PhaseStats, SearchStats};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    /// No symmetry reduction.
    Base,
    #[default]
    Optimized,
}

/// Which earlier pairs a new pair is checked against for isomorphism.
///
/// Phases are processed strictly in order and pairs of different phases
/// have different orders, so both scopes admit exactly the same pairs. The
/// seen set is cleared at every phase boundary either way.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum DedupScope {
    /// Pairs currently waiting in the queue.
    Queue,
    /// Every pair ever enqueued.
    #[default]
    Seen,
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub k: usize,
    pub patterns: PatternSet,
    pub class: GraphClass,
    /// Largest order of a graph the search may produce.
    pub max_order: usize,
    pub algorithm: Algorithm,
    pub workers: usize,
    /// Pick the leaving vertex by the high-degree-first rule in cubic classes.
    pub hdf_shortcut: bool,
    pub dedup: DedupScope,
    pub group_cap: usize,
}

impl SearchConfig {
    /// Defaults: budget `2(k + 1)`, optimized, one worker, hdf shortcut on.
    pub fn new(k: usize, patterns: PatternSet, class: GraphClass) -> Self {
        SearchConfig {
            k,
            patterns,
            class,
            max_order: 2 * (k + 1),
            algorithm: Algorithm::Optimized,
            workers: 1,
            hdf_shortcut: true,
            dedup: DedupScope::Seen,
            group_cap: DEFAULT_GROUP_CAP,
        }
    }

    pub fn with_max_order(mut self, n: usize) -> Self {
        self.max_order = n;
        self
    }

    pub fn with_algorithm(mut self, a: Algorithm) -> Self {
        self.algorithm = a;
        self
    }

    pub fn with_workers(mut self, w: usize) -> Self {
        self.workers = w;
        self
    }

    pub fn with_hdf_shortcut(mut self, on: bool) -> Self {
        self.hdf_shortcut = on;
        self
    }

    pub fn with_dedup(mut self, d: DedupScope) -> Self {
        self.dedup = d;
        self
    }

    pub fn with_group_cap(mut self, cap: usize) -> Self {
        self.group_cap = cap;
        self
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        let bad = |m: String| Err(SearchError::InvalidConfig(m));
        if self.k < 1 {
            return bad("k must be at least 1".into());
        }
        // completions index the pairs of the bag in a 128-bit mask
        if self.k > 15 {
            return bad(format!("k = {} exceeds the supported maximum of 15", self.k));
        }
        if self.max_order < self.k + 1 {
            return bad(format!(
                "max order {} is below k + 1 = {}",
                self.max_order,
                self.k + 1
            ));
        }
        if self.max_order > MAX_ORDER {
            return bad(format!("max order {} exceeds {MAX_ORDER}", self.max_order));
        }
        if self.workers == 0 {
            return bad("workers must be at least 1".into());
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// A class member of path-width at most `k` containing no pattern.
    /// `phase` is its order minus `k`; values below 1 come from the
    /// sweep over graphs with at most `k` vertices.
    Counterexample {
        graph: LabeledGraph,
        phase: i64,
    },
    Unavoidable,
    /// Every graph up to this order was covered without a decision.
    Undecided {
        max_order: usize,
    },
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Counterexample { .. } => "counterexample",
            Verdict::Unavoidable => "unavoidable",
            Verdict::Undecided { .. } => "undecided",
        }
    }

    pub fn counterexample(&self) -> Option<&LabeledGraph> {
        match self {
            Verdict::Counterexample { graph, .. } => Some(graph),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub verdict: Verdict,
    pub stats: SearchStats,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("automorphism group of pair (graph6 {graph6}, bag {bag:?}) exceeds the cap of {cap} elements")]
    GroupTooLarge {
        graph6: String,
        bag: Vec<String>,
        cap: usize,
    },
    #[error(transparent)]
    Checkpoint(#[from] CheckpointError),
}

/// A search node: bag `U` and associated graph `H`.
///
/// Vertex `i` of `H` is the `i`-th label of `u1..uk, v1, v2, ...`; the
/// vertex introduced at step `t` is `k + 1 + t`. `trace[t]` is the vertex
/// that left at step `t`, which determines the decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pair {
    graph: LabeledGraph,
    bag: VertexSet,
    trace: Vec<u8>,
}

impl Pair {
    /// `({u1..uk, v1}, edgeless graph on that set)`.
    pub fn initial(k: usize) -> Pair {
        assert!(k >= 1);
        Pair {
            graph: LabeledGraph::with_u_labels(k + 1, k),
            bag: VertexSet::full(k + 1),
            trace: Vec::new(),
        }
    }

    pub(crate) fn from_parts(graph: LabeledGraph, bag: VertexSet, trace: Vec<u8>) -> Pair {
        Pair { graph, bag, trace }
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn bag(&self) -> VertexSet {
        self.bag
    }

    pub fn trace(&self) -> &[u8] {
        &self.trace
    }

    pub fn k(&self) -> usize {
        self.graph.u_count()
    }

    pub fn phase(&self) -> usize {
        self.graph.order() - self.k()
    }

    /// Lets `u` leave with new neighbours `ys` inside the bag and adds the next vertex.
    pub fn successor(&self, u: usize, ys: VertexSet) -> Pair {
        debug_assert!(self.bag.contains(u) && ys.is_subset(self.bag.without(u)));
        let mut graph = self.graph.clone();
        let new = graph.add_vertex();
        for y in ys.iter() {
            graph.add_edge(u, y);
        }
        let mut trace = self.trace.clone();
        trace.push(u as u8);
        Pair {
            graph,
            bag: self.bag.without(u).with(new),
            trace,
        }
    }

    /// The smooth decomposition recorded by the trace; its last bag is `U`.
    pub fn decomposition(&self) -> PathDecomposition {
        let k = self.k();
        let mut bag = VertexSet::full(k + 1);
        let mut bags = vec![bag];
        for (t, &u) in self.trace.iter().enumerate() {
            bag = bag.without(u as usize).with(k + 1 + t);
            bags.push(bag);
        }
        PathDecomposition::new(bags)
    }

    pub(crate) fn bag_labels(&self) -> Vec<String> {
        self.bag.iter().map(|v| self.graph.label(v).to_string()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{validate, Validity};

    #[test]
    fn initial_pairs() {
        let p = Pair::initial(3);
        assert_eq!(p.graph().order(), 4);
        assert_eq!(p.graph().size(), 0);
        assert_eq!(p.phase(), 1);
        assert_eq!(p.bag_labels(), vec!["u1", "u2", "u3", "v1"]);
        assert_eq!(Pair::initial(1).graph().order(), 2);
    }

    #[test]
    fn trace_replays_to_a_smooth_decomposition() {
        let p = Pair::initial(3);
        let q = p.successor(0, [1, 2, 3].into_iter().collect());
        let r = q.successor(1, [4].into_iter().collect());
        assert_eq!(r.phase(), 3);
        assert_eq!(r.bag(), [2, 3, 4, 5].into_iter().collect());
        assert_eq!(validate(r.graph(), &r.decomposition(), 3), Validity::ValidSmooth);
        assert_eq!(*r.decomposition().bags.last().unwrap(), r.bag());
    }

    #[test]
    fn config_validation() {
        let ps = PatternSet::cycles(3, 4);
        let ok = SearchConfig::new(3, ps.clone(), GraphClass::cubic());
        assert!(ok.validate().is_ok());
        assert_eq!(ok.max_order, 8);
        assert!(ok.clone().with_max_order(3).validate().is_err());
        assert!(SearchConfig::new(0, ps.clone(), GraphClass::cubic())
            .validate()
            .is_err());
        assert!(ok.with_workers(0).validate().is_err());
    }
}
