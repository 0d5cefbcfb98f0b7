use std::fmt;

use super::{LabeledGraph, VertexSet};

/// Length of a shortest cycle, or `Infinite` for forests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "infinite"),
        }
    }
}

impl LabeledGraph {
    /// Minimum cycle length, by a BFS from every vertex.
    pub fn girth(&self) -> Girth {
        self.girth_bounded(0)
    }

    /// Like [`girth`](Self::girth) but stops early once a cycle of length
    /// at most `stop_at` is seen; the returned value is then only an upper bound
    /// that is still `<= stop_at`.
    pub fn girth_bounded(&self, stop_at: usize) -> Girth {
        let n = self.order();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = Vec::with_capacity(n);
        for root in 0..n {
            if self.degree(root) < 2 {
                continue;
            }
            for d in dist.iter_mut() {
                *d = usize::MAX;
            }
            queue.clear();
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.push(root);
            let mut head = 0;
            'bfs: while head < queue.len() {
                let x = queue[head];
                head += 1;
                // cycles found deeper than this cannot improve the best
                if 2 * dist[x] + 1 >= best {
                    break;
                }
                for y in self.neighbours(x).iter() {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push(y);
                    } else if parent[x] != y {
                        let len = dist[x] + dist[y] + 1;
                        if len < best {
                            best = len;
                            if best <= stop_at {
                                break 'bfs;
                            }
                        }
                    }
                }
            }
            if best <= stop_at || best == 3 {
                break;
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// Length of a shortest cycle through `v`, if any.
    pub fn shortest_cycle_through(&self, v: usize) -> Option<usize> {
        let n = self.order();
        if self.degree(v) < 2 {
            return None;
        }
        let mut dist = vec![usize::MAX; n];
        let mut branch = vec![usize::MAX; n];
        let mut queue = Vec::with_capacity(n);
        dist[v] = 0;
        for w in self.neighbours(v).iter() {
            dist[w] = 1;
            branch[w] = w;
            queue.push(w);
        }
        let mut best = usize::MAX;
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            if 2 * dist[x] + 1 >= best {
                break;
            }
            for y in self.neighbours(x).iter() {
                if y == v {
                    continue;
                }
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    branch[y] = branch[x];
                    queue.push(y);
                } else if branch[y] != branch[x] {
                    best = best.min(dist[x] + dist[y] + 1);
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen.contains(s) {
                continue;
            }
            let comp = self.reachable_from(s, self.vertex_set());
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `s` inside `within`.
    pub fn reachable_from(&self, s: usize, within: VertexSet) -> VertexSet {
        let mut comp = VertexSet::singleton(s);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for x in frontier.iter() {
                next |= self.neighbours(x);
            }
            next = (next & within) - comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.reachable_from(0, self.vertex_set()).len() == self.order()
    }

    /// Forest test via `|E| = |V| - #components`.
    pub fn is_forest(&self) -> bool {
        self.size() + self.components().len() == self.order()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn girth_examples() {
        assert_eq!(named::k33().girth(), Girth::Finite(4));
        assert_eq!(named::cycle(5).girth(), Girth::Finite(5));
        assert_eq!(named::mcgee().girth(), Girth::Finite(7));
        assert_eq!(LabeledGraph::empty(4).girth(), Girth::Infinite);
        assert_eq!(named::path(6).girth(), Girth::Infinite);
        assert_eq!(named::complete(4).girth(), Girth::Finite(3));
    }

    #[test]
    fn components_examples() {
        let e3 = LabeledGraph::empty(3);
        let parts = e3.components();
        assert_eq!(parts.len(), 3);
        assert!(parts.iter().all(|p| p.len() == 1));

        // P3 + E1
        let g = LabeledGraph::from_edges(4, &[(0, 1), (1, 2)]);
        let sizes: Vec<usize> = g.components().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![3, 1]);

        let p = named::petersen();
        assert_eq!(p.components(), vec![p.vertex_set()]);
    }

    #[test]
    fn cycle_through_vertex() {
        // triangle 0-1-2 plus a 4-cycle 2-3-4-5
        let g = LabeledGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 2)]);
        assert_eq!(g.shortest_cycle_through(0), Some(3));
        assert_eq!(g.shortest_cycle_through(4), Some(4));
        assert_eq!(g.shortest_cycle_through(2), Some(3));
        assert_eq!(named::path(4).shortest_cycle_through(1), None);
    }
}
