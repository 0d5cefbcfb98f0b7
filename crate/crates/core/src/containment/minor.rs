use std::collections::HashSet;

use super::matching::contains_subgraph;
use crate::graph::{LabeledGraph, VertexSet};
use crate::symmetry::{canonical_key, CanonicalKey};

/// `g` with edge `ab` contracted: `b` merges into `a` and later vertices shift down.
pub(crate) fn contract(g: &LabeledGraph, a: usize, b: usize) -> LabeledGraph {
    debug_assert!(g.has_edge(a, b));
    let n = g.order();
    let idx = |v: usize| if v > b { v - 1 } else { v };
    let keep = g.vertex_set().without(b);
    let mut out = g.induced(keep);
    let na = idx(a);
    for w in (g.neighbours(b) - VertexSet::singleton(a)).iter() {
        out.add_edge(na, idx(w));
    }
    debug_assert_eq!(out.order(), n - 1);
    out
}

/// Whether `pattern` is a minor of `host`.
///
/// A minor is a subgraph of some contraction of `host`, so the search
/// tries the subgraph test and otherwise contracts one edge at a time.
/// Contractions already known to fail are remembered by canonical key.
pub fn contains_minor(host: &LabeledGraph, pattern: &LabeledGraph) -> bool {
    if pattern.order() > host.order() || pattern.size() > host.size() {
        return false;
    }
    if host.is_forest() && !pattern.is_forest() {
        return false;
    }
    let mut failed = HashSet::new();
    search(host, pattern, &mut failed)
}

fn search(h: &LabeledGraph, p: &LabeledGraph, failed: &mut HashSet<CanonicalKey>) -> bool {
    if contains_subgraph(h, p) {
        return true;
    }
    if h.order() == p.order() {
        return false;
    }
    let key = canonical_key(h);
    if failed.contains(&key) {
        return false;
    }
    let edges: Vec<(usize, usize)> = h.edges().collect();
    for (a, b) in edges {
        let c = contract(h, a, b);
        if c.size() >= p.size() && search(&c, p, failed) {
            return true;
        }
    }
    failed.insert(key);
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn contraction_merges_neighbourhoods() {
        // C5 / one edge = C4
        let c = contract(&named::cycle(5), 0, 1);
        assert_eq!(c.order(), 4);
        assert!(c.is_regular(2));
        // triangle contraction loses the parallel edge
        let t = contract(&named::complete(3), 0, 2);
        assert_eq!(t.size(), 1);
    }

    #[test]
    fn minor_examples() {
        assert!(contains_minor(&named::petersen(), &named::complete(4)));
        assert!(contains_minor(&named::petersen(), &named::complete(5)));
        assert!(!contains_minor(&named::path(7), &named::cycle(3)));
        let mut sub = named::k33();
        // subdivide edge 0-3 with a new vertex 6
        sub.remove_edge(0, 3);
        let s = sub.add_vertex();
        sub.add_edge(0, s);
        sub.add_edge(s, 3);
        assert!(contains_minor(&sub, &named::k33()));
        assert!(!contains_minor(&named::cycle(6), &named::complete(4)));
        assert!(!contains_minor(&named::k33(), &named::complete(5)));
    }
}
