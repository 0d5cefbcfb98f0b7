//! Graph classes: full-graph membership plus a sound extension test for
//! search pairs.
//!
//! Built-ins are the cubic graphs, optionally with a girth floor. A girth
//! floor is safe to check on partial graphs because short cycles survive
//! every edge addition. Further predicates can be attached with
//! [`GraphClass::restricted`]; those are only consulted on complete graphs.

use std::fmt;
use std::sync::Arc;

use crate::graph::{LabeledGraph, VertexSet};

type Predicate = Arc<dyn Fn(&LabeledGraph) -> bool + Send + Sync>;

#[derive(Clone)]
pub struct GraphClass {
    name: String,
    /// Every member is `d`-regular.
    regular: Option<usize>,
    /// Every member has girth at least this value.
    min_girth: Option<usize>,
    extra: Vec<Predicate>,
}

impl fmt::Debug for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GraphClass")
            .field("name", &self.name)
            .field("regular", &self.regular)
            .field("min_girth", &self.min_girth)
            .field("extra", &self.extra.len())
            .finish()
    }
}

/// Outcome of the per-pair extension test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Feasibility {
    Feasible,
    Infeasible,
}

impl GraphClass {
    pub fn cubic() -> Self {
        GraphClass {
            name: "cubic".into(),
            regular: Some(3),
            min_girth: None,
            extra: Vec::new(),
        }
    }

    /// Cubic graphs of girth at least `g`.
    pub fn cubic_girth_at_least(g: usize) -> Self {
        GraphClass {
            name: format!("cubic-girth-ge:{g}"),
            regular: Some(3),
            min_girth: Some(g),
            extra: Vec::new(),
        }
    }

    /// Adds a membership-only predicate. Feasibility is unchanged, since a
    /// general predicate says nothing about partial graphs.
    pub fn restricted(
        mut self,
        name: &str,
        extra: impl Fn(&LabeledGraph) -> bool + Send + Sync + 'static,
    ) -> Self {
        self.name = format!("{}+{name}", self.name);
        self.extra.push(Arc::new(extra));
        self
    }

    /// Parses `cubic` or `cubic-girth-ge:<g>`.
    pub fn parse(s: &str) -> Result<Self, String> {
        if s == "cubic" {
            return Ok(Self::cubic());
        }
        if let Some(g) = s.strip_prefix("cubic-girth-ge:") {
            let g: usize = g.parse().map_err(|_| format!("bad girth bound in {s:?}"))?;
            if g < 3 {
                return Err(format!("girth bound must be at least 3 in {s:?}"));
            }
            return Ok(Self::cubic_girth_at_least(g));
        }
        Err(format!(
            "unknown class {s:?} (expected cubic or cubic-girth-ge:<g>)"
        ))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Degree of regularity, when all members share it.
    pub fn regular_degree(&self) -> Option<usize> {
        self.regular
    }

    pub fn min_girth(&self) -> Option<usize> {
        self.min_girth
    }

    /// Whether the leaving-vertex shortcut for high-degree-first
    /// decompositions applies (members are cubic).
    pub fn is_cubic(&self) -> bool {
        self.regular == Some(3)
    }

    fn girth_ok(&self, g: &LabeledGraph) -> bool {
        match self.min_girth {
            None => true,
            Some(floor) => g.girth_bounded(floor - 1).finite().is_none_or(|c| c >= floor),
        }
    }

    pub fn contains(&self, g: &LabeledGraph) -> bool {
        if g.order() == 0 {
            return false;
        }
        if let Some(d) = self.regular {
            if !g.is_regular(d) {
                return false;
            }
        }
        self.girth_ok(g) && self.extra.iter().all(|p| p(g))
    }

    /// Whether some member could contain the pair `(bag, h)`. Only ever
    /// answers `Infeasible` when no member can.
    ///
    /// With a regularity degree `d`: no vertex may exceed `d`, and every
    /// vertex outside the bag has already received all its edges, so it must
    /// have degree exactly `d`. A parity condition is not needed: any pair
    /// passing these tests extends to a `d`-regular graph by adding further
    /// vertices.
    pub fn feasibility(&self, h: &LabeledGraph, bag: VertexSet) -> Feasibility {
        if let Some(d) = self.regular {
            for v in h.vertices() {
                let deg = h.degree(v);
                if deg > d || (!bag.contains(v) && deg != d) {
                    return Feasibility::Infeasible;
                }
            }
        }
        if !self.girth_ok(h) {
            return Feasibility::Infeasible;
        }
        Feasibility::Feasible
    }

    /// [`feasibility`](Self::feasibility) for a successor pair whose parent
    /// was feasible, where `u` left the bag and gained edges to `ys`.
    pub(crate) fn feasible_step(&self, h: &LabeledGraph, u: usize, ys: VertexSet) -> bool {
        if let Some(d) = self.regular {
            if h.degree(u) != d || ys.iter().any(|y| h.degree(y) > d) {
                return false;
            }
        }
        match self.min_girth {
            None => true,
            Some(floor) => h.shortest_cycle_through(u).is_none_or(|c| c >= floor),
        }
    }
}

/// First member of `class` with at most `max_order` vertices that contains
/// none of the patterns, by increasing order.
///
/// Edge sets are searched depth-first over vertex pairs in lexicographic
/// order, leaving a pair out before putting it in. With a regularity degree
/// the search tracks degrees and closes a vertex once all its pairs are
/// decided.
pub(crate) fn small_members<F>(class: &GraphClass, max_order: usize, mut visit: F) -> Option<LabeledGraph>
where
    F: FnMut(&LabeledGraph) -> bool,
{
    for n in 1..=max_order {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let mut g = LabeledGraph::empty(n);
        if let Some(found) = sweep(class, &pairs, 0, &mut g, &mut visit) {
            return Some(found);
        }
    }
    None
}

fn sweep<F>(
    class: &GraphClass,
    pairs: &[(usize, usize)],
    t: usize,
    g: &mut LabeledGraph,
    visit: &mut F,
) -> Option<LabeledGraph>
where
    F: FnMut(&LabeledGraph) -> bool,
{
    if t == pairs.len() {
        return (class.contains(g) && visit(g)).then(|| g.clone());
    }
    let (a, b) = pairs[t];
    // vertex a has no undecided pairs after (a, n-1)
    let closes_a = b == g.order() - 1;
    let ok = |g: &LabeledGraph| match class.regular_degree() {
        None => true,
        Some(d) => g.degree(a) <= d && g.degree(b) <= d && (!closes_a || g.degree(a) == d),
    };
    if ok(g) {
        if let Some(found) = sweep(class, pairs, t + 1, g, visit) {
            return Some(found);
        }
    }
    g.add_edge(a, b);
    let res = if ok(g) {
        sweep(class, pairs, t + 1, g, visit)
    } else {
        None
    };
    g.remove_edge(a, b);
    res
}
