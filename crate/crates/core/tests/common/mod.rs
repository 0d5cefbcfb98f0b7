//! Slow, obviously-correct reference implementations shared by the
//! integration tests. None of them calls into the library's algorithms.

#![allow(dead_code)]

use rand::Rng;
use unavoidable::graph::LabeledGraph;

pub fn rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

pub fn adj(g: &LabeledGraph) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut m = vec![vec![false; n]; n];
    for (a, b) in g.edges() {
        m[a][b] = true;
        m[b][a] = true;
    }
    m
}

pub fn random_graph(r: &mut impl Rng, n: usize, p: f64) -> LabeledGraph {
    let mut g = LabeledGraph::empty(n);
    for a in 0..n {
        for b in a + 1..n {
            if r.gen_bool(p) {
                g.add_edge(a, b);
            }
        }
    }
    g
}

/// Random graph with maximum degree at most 3, built by shuffled edge insertion.
pub fn random_subcubic(r: &mut impl Rng, n: usize, connected: bool) -> LabeledGraph {
    use rand::seq::SliceRandom;
    loop {
        let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        pairs.shuffle(r);
        let mut g = LabeledGraph::empty(n);
        let mut deg = vec![0; n];
        for (a, b) in pairs {
            if deg[a] < 3 && deg[b] < 3 && r.gen_bool(0.7) {
                g.add_edge(a, b);
                deg[a] += 1;
                deg[b] += 1;
            }
        }
        if !connected || is_connected(&g) {
            return g;
        }
    }
}

pub fn is_connected(g: &LabeledGraph) -> bool {
    connected_within(&adj(g), &(0..g.order()).collect::<Vec<_>>())
}

fn connected_within(m: &[Vec<bool>], set: &[usize]) -> bool {
    if set.is_empty() {
        return true;
    }
    let mut seen = vec![set[0]];
    let mut stack = vec![set[0]];
    while let Some(v) = stack.pop() {
        for &w in set {
            if m[v][w] && !seen.contains(&w) {
                seen.push(w);
                stack.push(w);
            }
        }
    }
    seen.len() == set.len()
}

/// Colour-preserving isomorphism by plain backtracking over bijections.
pub fn iso_brute(a: &LabeledGraph, ca: &[u8], b: &LabeledGraph, cb: &[u8]) -> bool {
    let n = a.order();
    if n != b.order() || a.size() != b.size() {
        return false;
    }
    let (ma, mb) = (adj(a), adj(b));
    let da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        i: usize,
        n: usize,
        ma: &[Vec<bool>],
        mb: &[Vec<bool>],
        ok: &dyn Fn(usize, usize) -> bool,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if i == n {
            return true;
        }
        for t in 0..n {
            if used[t] || !ok(i, t) || (0..i).any(|j| ma[i][j] != mb[t][map[j]]) {
                continue;
            }
            map[i] = t;
            used[t] = true;
            if go(i + 1, n, ma, mb, ok, map, used) {
                return true;
            }
            used[t] = false;
        }
        false
    }
    let ok = |i: usize, t: usize| ca[i] == cb[t] && da[i] == db[t];
    go(0, n, &ma, &mb, &ok, &mut map, &mut used)
}

pub fn iso_plain(a: &LabeledGraph, b: &LabeledGraph) -> bool {
    iso_brute(a, &vec![0; a.order()], b, &vec![0; b.order()])
}

/// Tries every injective map from pattern vertices to host vertices.
pub fn subgraph_brute(host: &LabeledGraph, pattern: &LabeledGraph, induced: bool) -> bool {
    let (mh, mp) = (adj(host), adj(pattern));
    let (n, p) = (host.order(), pattern.order());
    let mut map = Vec::with_capacity(p);
    fn go(
        mh: &[Vec<bool>],
        mp: &[Vec<bool>],
        n: usize,
        p: usize,
        induced: bool,
        map: &mut Vec<usize>,
    ) -> bool {
        if map.len() == p {
            return (0..p).all(|i| {
                (0..i).all(|j| {
                    let (e, f) = (mp[i][j], mh[map[i]][map[j]]);
                    if induced {
                        e == f
                    } else {
                        !e || f
                    }
                })
            });
        }
        for t in 0..n {
            if map.contains(&t) {
                continue;
            }
            map.push(t);
            if go(mh, mp, n, p, induced, map) {
                return true;
            }
            map.pop();
        }
        false
    }
    go(&mh, &mp, n, p, induced, &mut map)
}

/// Tries every assignment of host vertices to branch sets (or to none).
pub fn minor_brute(host: &LabeledGraph, pattern: &LabeledGraph) -> bool {
    let (n, p) = (host.order(), pattern.order());
    if p == 0 {
        return true;
    }
    let mh = adj(host);
    let pe: Vec<(usize, usize)> = pattern.edges().collect();
    let mut assign = vec![0usize; n];
    loop {
        let sets: Vec<Vec<usize>> = (0..p)
            .map(|s| (0..n).filter(|&v| assign[v] == s).collect())
            .collect();
        let ok = sets.iter().all(|s| !s.is_empty() && connected_within(&mh, s))
            && pe
                .iter()
                .all(|&(a, b)| sets[a].iter().any(|&x| sets[b].iter().any(|&y| mh[x][y])));
        if ok {
            return true;
        }
        // odometer over {0..=p}^n, p meaning unused
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            assign[i] += 1;
            if assign[i] <= p {
                break;
            }
            assign[i] = 0;
            i += 1;
        }
    }
}

/// Path-width as the minimum vertex separation over all n! layouts,
/// abandoning a prefix once it is no better than the best layout so far.
pub fn pathwidth_brute(g: &LabeledGraph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let nb: Vec<u32> = (0..n)
        .map(|v| g.neighbours(v).iter().fold(0, |m, w| m | 1 << w))
        .collect();
    let mut best = n;
    fn go(nb: &[u32], placed: u32, width: usize, best: &mut usize) {
        let n = nb.len();
        if width >= *best {
            return;
        }
        if placed.count_ones() as usize == n {
            *best = width;
            return;
        }
        for v in 0..n {
            if placed >> v & 1 == 1 {
                continue;
            }
            let p = placed | 1 << v;
            let rest = !p & ((1u32 << n) - 1);
            let sep = (0..n).filter(|&a| p >> a & 1 == 1 && nb[a] & rest != 0).count();
            go(nb, p, width.max(sep), best);
        }
    }
    go(&nb, 0, 0, &mut best);
    best
}

/// Shortest cycle length by checking every vertex sequence, for tiny graphs.
pub fn girth_brute(g: &LabeledGraph) -> Option<usize> {
    let m = adj(g);
    let n = g.order();
    let mut best: Option<usize> = None;
    fn extend(m: &[Vec<bool>], path: &mut Vec<usize>, best: &mut Option<usize>) {
        let len = path.len();
        if best.is_some_and(|b| len >= b) {
            return;
        }
        let (first, last) = (path[0], path[len - 1]);
        if len >= 3 && m[last][first] {
            *best = Some(len);
            return;
        }
        for w in first + 1..m.len() {
            if m[last][w] && !path.contains(&w) {
                path.push(w);
                extend(m, path, best);
                path.pop();
            }
        }
    }
    for s in 0..n {
        extend(&m, &mut vec![s], &mut best);
    }
    best
}

/// Buckets graphs (with vertex colours) by an isomorphism invariant and
/// keeps one per class under [`iso_brute`].
type Invariant = Vec<(u8, usize, Vec<usize>)>;

pub struct IsoClasses {
    buckets: std::collections::HashMap<Invariant, Vec<(LabeledGraph, Vec<u8>)>>,
    count: usize,
}

impl IsoClasses {
    pub fn new() -> Self {
        IsoClasses {
            buckets: Default::default(),
            count: 0,
        }
    }

    fn invariant(g: &LabeledGraph, c: &[u8]) -> Invariant {
        let mut inv: Vec<(u8, usize, Vec<usize>)> = g
            .vertices()
            .map(|v| {
                let mut nd: Vec<usize> = g
                    .neighbours(v)
                    .iter()
                    .map(|w| g.degree(w) * 256 + c[w] as usize)
                    .collect();
                nd.sort();
                (c[v], g.degree(v), nd)
            })
            .collect();
        inv.sort();
        inv
    }

    /// Inserts and returns true if no isomorphic copy was present.
    pub fn insert(&mut self, g: LabeledGraph, c: Vec<u8>) -> bool {
        let bucket = self.buckets.entry(Self::invariant(&g, &c)).or_default();
        if bucket.iter().any(|(h, d)| iso_brute(h, d, &g, &c)) {
            return false;
        }
        bucket.push((g, c));
        self.count += 1;
        true
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn into_graphs(self) -> Vec<LabeledGraph> {
        let mut out: Vec<LabeledGraph> = self.buckets.into_values().flatten().map(|(g, _)| g).collect();
        out.sort_by_key(|g| (g.order(), g.size(), g.edges().collect::<Vec<_>>()));
        out
    }
}

/// All graphs of order `n` up to isomorphism, by vertex extension.
pub fn all_graphs(n: usize) -> Vec<LabeledGraph> {
    let mut level = vec![LabeledGraph::empty(0)];
    for m in 1..=n {
        let mut classes = IsoClasses::new();
        for g in &level {
            for mask in 0u32..(1 << (m - 1)) {
                let mut h = g.clone();
                let v = h.add_vertex();
                for w in 0..m - 1 {
                    if mask >> w & 1 == 1 {
                        h.add_edge(v, w);
                    }
                }
                classes.insert(h, vec![0; m]);
            }
        }
        level = classes.into_graphs();
    }
    level
}

/// All cubic graphs of order `n` up to isomorphism (connected or not).
///
/// Vertices are closed one at a time: the lowest open vertex of maximum
/// degree receives all its remaining neighbours at once. States are
/// deduplicated up to isomorphism preserving the closed set.
pub fn cubic_graphs(n: usize) -> Vec<LabeledGraph> {
    if n % 2 == 1 || n < 4 {
        return Vec::new();
    }
    let mut level: Vec<(LabeledGraph, Vec<u8>)> = vec![(LabeledGraph::empty(n), vec![0; n])];
    for _ in 0..n {
        let mut classes = IsoClasses::new();
        for (g, closed) in &level {
            let Some(v) = (0..n)
                .filter(|&v| closed[v] == 0)
                .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
            else {
                continue;
            };
            let need = 3 - g.degree(v);
            let cand: Vec<usize> = (0..n)
                .filter(|&w| w != v && closed[w] == 0 && !g.has_edge(v, w) && g.degree(w) < 3)
                .collect();
            for_each_subset(&cand, need, &mut |ys| {
                let mut h = g.clone();
                for &y in ys {
                    h.add_edge(v, y);
                }
                let mut c = closed.clone();
                c[v] = 1;
                classes.insert(h, c);
            });
        }
        level = classes.into_graphs_coloured();
    }
    level
        .into_iter()
        .map(|(g, _)| g)
        .filter(|g| g.is_regular(3))
        .collect()
}

impl IsoClasses {
    fn into_graphs_coloured(self) -> Vec<(LabeledGraph, Vec<u8>)> {
        self.buckets.into_values().flatten().collect()
    }
}

pub fn for_each_subset(items: &[usize], size: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(items: &[usize], size: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == size {
            f(cur);
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            go(items, size, i + 1, cur, f);
            cur.pop();
        }
    }
    go(items, size, 0, &mut Vec::new(), f);
}

/// Whether `h` with bag `bag` extends to a cubic graph on at most
/// `max_order` vertices: edges may be added inside the bag and new vertices
/// may attach to the bag and to each other.
pub fn extends_to_cubic(h: &LabeledGraph, bag: &[usize], max_order: usize) -> bool {
    let base = h.order();
    for n in base..=max_order {
        let mut g = h.clone();
        for _ in base..n {
            g.add_vertex();
        }
        let open: Vec<usize> = bag.iter().copied().chain(base..n).collect();
        let mut pairs = Vec::new();
        for (i, &a) in open.iter().enumerate() {
            for &b in &open[i + 1..] {
                if !g.has_edge(a, b) {
                    pairs.push((a, b));
                }
            }
        }
        if g.vertices().any(|v| g.degree(v) > 3) {
            return false;
        }
        if complete_cubic(&mut g, &pairs, 0) {
            return true;
        }
    }
    false
}

fn complete_cubic(g: &mut LabeledGraph, pairs: &[(usize, usize)], t: usize) -> bool {
    if t == pairs.len() {
        return g.is_regular(3);
    }
    let (a, b) = pairs[t];
    if g.degree(a) < 3 && g.degree(b) < 3 {
        g.add_edge(a, b);
        let ok = complete_cubic(g, pairs, t + 1);
        g.remove_edge(a, b);
        if ok {
            return true;
        }
    }
    // a is done with pairs once every later pair misses it
    if pairs[t + 1..].iter().all(|&(x, y)| x != a && y != a) && g.degree(a) != 3 {
        return false;
    }
    complete_cubic(g, pairs, t + 1)
}
