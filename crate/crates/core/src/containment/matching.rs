use crate::graph::{LabeledGraph, VertexSet};

/// Pattern vertices in matching order: each connected piece in BFS order
/// from its highest-degree vertex, so most vertices have a mapped neighbour
/// when their turn comes.
fn match_order(p: &LabeledGraph) -> Vec<usize> {
    let mut order = Vec::with_capacity(p.order());
    let mut placed = VertexSet::EMPTY;
    let mut roots: Vec<usize> = p.vertices().collect();
    roots.sort_by_key(|&v| (std::cmp::Reverse(p.degree(v)), v));
    for r in roots {
        if placed.contains(r) {
            continue;
        }
        let mut head = order.len();
        order.push(r);
        placed.insert(r);
        while head < order.len() {
            let x = order[head];
            head += 1;
            let mut nb: Vec<usize> = (p.neighbours(x) - placed).iter().collect();
            nb.sort_by_key(|&v| (std::cmp::Reverse(p.degree(v)), v));
            for y in nb {
                placed.insert(y);
                order.push(y);
            }
        }
    }
    order
}

fn degrees_dominated(host: &LabeledGraph, pattern: &LabeledGraph) -> bool {
    let h = host.degree_sequence();
    pattern.degree_sequence().iter().zip(&h).all(|(p, h)| p <= h)
}

struct Matcher<'a> {
    host: &'a LabeledGraph,
    pattern: &'a LabeledGraph,
    order: Vec<usize>,
    /// Earlier pattern neighbours / non-neighbours of `order[t]`, as positions in `order`.
    earlier_adj: Vec<Vec<usize>>,
    earlier_non: Vec<Vec<usize>>,
    image: Vec<usize>,
    used: VertexSet,
    induced: bool,
}

impl Matcher<'_> {
    fn run(&mut self, t: usize) -> bool {
        if t == self.order.len() {
            return true;
        }
        let pv = self.order[t];
        let need = self.pattern.degree(pv);
        let mut cand = self.host.vertex_set() - self.used;
        for &s in &self.earlier_adj[t] {
            cand &= self.host.neighbours(self.image[s]);
        }
        if self.induced {
            for &s in &self.earlier_non[t] {
                cand = cand - self.host.neighbours(self.image[s]);
            }
        }
        for hv in cand.iter() {
            if self.host.degree(hv) < need {
                continue;
            }
            self.image[t] = hv;
            self.used.insert(hv);
            if self.run(t + 1) {
                return true;
            }
            self.used.remove(hv);
        }
        false
    }
}

fn find_embedding(host: &LabeledGraph, pattern: &LabeledGraph, induced: bool) -> bool {
    if pattern.order() > host.order() {
        return false;
    }
    if !induced && (pattern.size() > host.size() || !degrees_dominated(host, pattern)) {
        return false;
    }
    let order = match_order(pattern);
    let mut pos = vec![0; pattern.order()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let earlier_adj = order
        .iter()
        .enumerate()
        .map(|(t, &v)| {
            pattern
                .neighbours(v)
                .iter()
                .map(|w| pos[w])
                .filter(|&s| s < t)
                .collect()
        })
        .collect();
    let earlier_non = order
        .iter()
        .enumerate()
        .map(|(t, &v)| (0..t).filter(|&s| !pattern.has_edge(v, order[s])).collect())
        .collect();
    Matcher {
        host,
        pattern,
        order,
        earlier_adj,
        earlier_non,
        image: vec![usize::MAX; pattern.order()],
        used: VertexSet::EMPTY,
        induced,
    }
    .run(0)
}

/// Whether `host` has a subgraph isomorphic to `pattern`.
pub fn contains_subgraph(host: &LabeledGraph, pattern: &LabeledGraph) -> bool {
    find_embedding(host, pattern, false)
}

/// Whether `host` has an induced subgraph isomorphic to `pattern`.
pub fn contains_induced(host: &LabeledGraph, pattern: &LabeledGraph) -> bool {
    find_embedding(host, pattern, true)
}
