//! Exact path-width through the vertex separation number.
//!
//! For a layout `x1..xn` let `S_i = {x1..xi}` and `δ(S)` be the vertices of
//! `S` with a neighbour outside `S`. The vertex separation number is the
//! least achievable `max_i |δ(S_i)|`, and it equals the path-width. The
//! bags `{x_i} ∪ δ(S_{i-1})` of an optimal layout form a decomposition of
//! that width.

use std::collections::HashSet;

use super::{DecompositionError, PathDecomposition};
use crate::graph::{LabeledGraph, VertexSet};

/// Largest order accepted by [`pathwidth_exact`].
pub const PATHWIDTH_MAX_ORDER: usize = 32;

fn boundary(g: &LabeledGraph, s: VertexSet) -> VertexSet {
    let outside = g.vertex_set() - s;
    s.iter()
        .filter(|&v| !(g.neighbours(v) & outside).is_empty())
        .collect()
}

struct Layout<'a> {
    g: &'a LabeledGraph,
    width: usize,
    failed: HashSet<VertexSet>,
    order: Vec<usize>,
}

impl Layout<'_> {
    /// Extends `s` to a full layout keeping every boundary within `width`.
    fn extend(&mut self, s: VertexSet) -> bool {
        let all = self.g.vertex_set();
        if s == all {
            return true;
        }
        if self.failed.contains(&s) {
            return false;
        }
        let mark = self.order.len();
        // a vertex whose neighbours are all placed never hurts
        let mut s = s;
        loop {
            let free = (all - s).iter().find(|&v| (self.g.neighbours(v) - s).is_empty());
            match free {
                Some(v) => {
                    s.insert(v);
                    self.order.push(v);
                }
                None => break,
            }
        }
        if s == all {
            return true;
        }
        if self.failed.contains(&s) {
            self.order.truncate(mark);
            return false;
        }
        // vertices adjacent to the placed part first, then the rest
        let touched = s
            .iter()
            .fold(VertexSet::EMPTY, |acc, v| acc | self.g.neighbours(v))
            - s;
        let mut cands: Vec<usize> = touched.iter().chain((all - s - touched).iter()).collect();
        cands.sort_by_key(|&v| (boundary(self.g, s.with(v)).len(), v));
        for v in cands {
            let next = s.with(v);
            if boundary(self.g, next).len() > self.width {
                continue;
            }
            self.order.push(v);
            if self.extend(next) {
                return true;
            }
            self.order.pop();
        }
        self.failed.insert(s);
        self.order.truncate(mark);
        false
    }
}

/// Minimum vertex separation number and a layout achieving it.
pub fn vertex_separation(g: &LabeledGraph) -> Result<(usize, Vec<usize>), DecompositionError> {
    let n = g.order();
    if n > PATHWIDTH_MAX_ORDER {
        return Err(DecompositionError::TooLarge(n));
    }
    for width in 0..n.max(1) {
        let mut l = Layout {
            g,
            width,
            failed: HashSet::new(),
            order: Vec::with_capacity(n),
        };
        if l.extend(VertexSet::EMPTY) {
            return Ok((width, l.order));
        }
    }
    unreachable!("a layout of width n - 1 always exists")
}

/// Bags `{x_i} ∪ δ(S_{i-1})` of a layout.
fn layout_bags(g: &LabeledGraph, layout: &[usize]) -> Vec<VertexSet> {
    let mut s = VertexSet::EMPTY;
    layout
        .iter()
        .map(|&v| {
            let bag = boundary(g, s).with(v);
            s.insert(v);
            bag
        })
        .collect()
}

fn drop_dominated(bags: &mut Vec<VertexSet>) -> bool {
    for i in 0..bags.len() {
        let sub_prev = i > 0 && bags[i].is_subset(bags[i - 1]);
        let sub_next = i + 1 < bags.len() && bags[i].is_subset(bags[i + 1]);
        if sub_prev || sub_next {
            bags.remove(i);
            return true;
        }
    }
    false
}

/// Turns a width-`k` decomposition of a graph with at least `k + 1` vertices
/// into a smooth one of width `k`.
pub(crate) fn smooth(mut bags: Vec<VertexSet>, k: usize) -> Vec<VertexSet> {
    // pad short bags from a neighbour; a vertex borrowed from the next bag
    // is absent from all earlier ones, so intervals stay contiguous
    loop {
        while drop_dominated(&mut bags) {}
        let Some(i) = bags.iter().position(|b| b.len() < k + 1) else {
            break;
        };
        let from_next = bags.get(i + 1).map(|&b| b - bags[i]).and_then(|d| d.first());
        let from_prev = (i > 0).then(|| bags[i - 1] - bags[i]).and_then(|d| d.first());
        match from_next.or(from_prev) {
            Some(v) => bags[i].insert(v),
            None => break,
        }
    }
    // one swap at a time between consecutive bags
    let mut out: Vec<VertexSet> = Vec::with_capacity(bags.len());
    for (i, &b) in bags.iter().enumerate() {
        if i > 0 {
            let mut cur = *out.last().unwrap();
            let outgoing: Vec<usize> = (cur - b).iter().collect();
            let incoming: Vec<usize> = (b - cur).iter().collect();
            for (&o, &n) in outgoing
                .iter()
                .zip(&incoming)
                .take(outgoing.len().saturating_sub(1))
            {
                cur = cur.without(o).with(n);
                out.push(cur);
            }
        }
        out.push(b);
    }
    out
}

/// Smooth decomposition of width `k` built from a layout of separation `k`.
pub fn smooth_layout(g: &LabeledGraph, layout: &[usize], k: usize) -> PathDecomposition {
    PathDecomposition::new(smooth(layout_bags(g, layout), k))
}

/// Exact path-width and a smooth decomposition witnessing it.
pub fn pathwidth_exact(g: &LabeledGraph) -> Result<(usize, PathDecomposition), DecompositionError> {
    let (k, layout) = vertex_separation(g)?;
    Ok((k, smooth_layout(g, &layout, k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{validate, Validity};
    use crate::named;

    #[test]
    fn small_examples() {
        for (g, pw) in [
            (named::path(5), 1),
            (named::cycle(6), 2),
            (named::complete(5), 4),
            (named::k33(), 3),
            (named::petersen(), 5),
            (LabeledGraph::empty(3), 0),
            (LabeledGraph::empty(1), 0),
        ] {
            let (w, d) = pathwidth_exact(&g).unwrap();
            assert_eq!(w, pw, "{g:?}");
            assert_eq!(validate(&g, &d, w), Validity::ValidSmooth, "{g:?} {d:?}");
        }
    }

    #[test]
    fn disconnected_graph() {
        let g = named::cycle(4).disjoint_union(&named::path(3));
        let (w, d) = pathwidth_exact(&g).unwrap();
        assert_eq!(w, 2);
        assert_eq!(validate(&g, &d, w), Validity::ValidSmooth);
    }

    #[test]
    fn too_large() {
        assert_eq!(
            pathwidth_exact(&LabeledGraph::empty(33)),
            Err(DecompositionError::TooLarge(33))
        );
    }
}
