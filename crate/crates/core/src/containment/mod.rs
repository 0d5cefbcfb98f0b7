//! Pattern containment in subgraph, induced-subgraph and minor mode.

mod matching;
mod minor;

use std::fmt;
use std::str::FromStr;

use crate::graph::{LabeledGraph, VertexSet};
use crate::symmetry::canonical_key;

pub use matching::{contains_induced, contains_subgraph};
pub use minor::contains_minor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Subgraph,
    Induced,
    Minor,
}

impl Mode {
    pub fn contains(self, host: &LabeledGraph, pattern: &LabeledGraph) -> bool {
        match self {
            Mode::Subgraph => contains_subgraph(host, pattern),
            Mode::Induced => contains_induced(host, pattern),
            Mode::Minor => contains_minor(host, pattern),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::Subgraph => "subgraph",
            Mode::Induced => "induced",
            Mode::Minor => "minor",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "subgraph" => Ok(Mode::Subgraph),
            "induced" => Ok(Mode::Induced),
            "minor" => Ok(Mode::Minor),
            _ => Err(format!(
                "unknown mode {s:?} (expected subgraph, induced or minor)"
            )),
        }
    }
}

/// A set of forbidden patterns together with the containment relation.
///
/// Patterns are pairwise non-isomorphic and sorted by order, then size.
#[derive(Clone, Debug)]
pub struct PatternSet {
    patterns: Vec<LabeledGraph>,
    mode: Mode,
    /// `Some(L)` when the set is exactly `{C3, ..., CL}` in subgraph mode.
    cycles_up_to: Option<usize>,
}

impl PatternSet {
    pub fn new(patterns: Vec<LabeledGraph>, mode: Mode) -> Self {
        let mut keyed: Vec<_> = patterns
            .into_iter()
            .map(|p| {
                assert!(p.order() > 0, "patterns must be non-empty graphs");
                (p.order(), p.size(), canonical_key(&p), p)
            })
            .collect();
        keyed.sort_by(|a, b| (a.0, a.1, &a.2).cmp(&(b.0, b.1, &b.2)));
        keyed.dedup_by(|a, b| a.2 == b.2);
        let patterns: Vec<LabeledGraph> = keyed.into_iter().map(|t| t.3).collect();
        let cycles_up_to = (mode == Mode::Subgraph)
            .then(|| cycle_run_length(&patterns))
            .flatten();
        PatternSet {
            patterns,
            mode,
            cycles_up_to,
        }
    }

    /// `{C_a, ..., C_b}` in subgraph mode.
    pub fn cycles(a: usize, b: usize) -> Self {
        assert!(a >= 3, "cycles need length at least 3");
        Self::new((a..=b).map(crate::named::cycle).collect(), Mode::Subgraph)
    }

    pub fn empty(mode: Mode) -> Self {
        Self::new(Vec::new(), mode)
    }

    pub fn patterns(&self) -> &[LabeledGraph] {
        &self.patterns
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    /// `L` when the set is exactly the cycles of length `3..=L` in subgraph mode.
    pub fn cycle_bound(&self) -> Option<usize> {
        self.cycles_up_to
    }

    /// Whether `host` lies in `super(U)`: it contains some pattern.
    pub fn in_super(&self, host: &LabeledGraph) -> bool {
        if let Some(l) = self.cycles_up_to {
            return host.girth_bounded(l).finite().is_some_and(|g| g <= l);
        }
        self.patterns.iter().any(|p| self.mode.contains(host, p))
    }

    /// Whether the pair `(bag, h)` is good by the local test of its mode.
    ///
    /// Subgraph and minor mode test `h` itself. Induced mode tests `h - bag`:
    /// every vertex outside the bag already has all its final edges, so an
    /// induced copy there stays induced in every completion.
    pub fn pair_is_good(&self, h: &LabeledGraph, bag: VertexSet) -> bool {
        match self.mode {
            Mode::Subgraph | Mode::Minor => self.in_super(h),
            Mode::Induced => {
                let rest = h.induced(h.vertex_set() - bag);
                self.patterns.iter().any(|p| contains_induced(&rest, p))
            }
        }
    }

    /// Cheaper variant of [`pair_is_good`](Self::pair_is_good) for cycle sets
    /// when `h` is known to be free of short cycles except possibly through `v`.
    pub(crate) fn cycle_through_at_most(&self, h: &LabeledGraph, v: usize) -> Option<bool> {
        let l = self.cycles_up_to?;
        Some(h.shortest_cycle_through(v).is_some_and(|c| c <= l))
    }
}

fn cycle_run_length(patterns: &[LabeledGraph]) -> Option<usize> {
    if patterns.is_empty() {
        return None;
    }
    for (i, p) in patterns.iter().enumerate() {
        let len = i + 3;
        if p.order() != len || p.size() != len || !p.is_regular(2) || !p.is_connected() {
            return None;
        }
    }
    Some(patterns.len() + 2)
}
