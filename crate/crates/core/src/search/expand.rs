//! Work done for a single pair: completions, leaving vertices, successors.

use std::ops::ControlFlow;

use super::stats::PhaseStats;
use super::{Algorithm, Pair, SearchConfig, SearchError};
use crate::graph::{encode_graph6, LabeledGraph, VertexSet};
use crate::symmetry::{aut_fixing_bag, pair_key, CanonicalKey, Perm, PermGroup, SymmetryError};

/// For equal-size sets: does `a` come before `b` in lexicographic order of
/// their sorted element lists?
#[inline]
fn lex_less(a: VertexSet, b: VertexSet) -> bool {
    let d = (a - b) | (b - a);
    d.first().is_some_and(|m| a.contains(m))
}

/// Same rule for edge masks whose bits follow the lexicographic edge order.
#[inline]
fn mask_less(a: u128, b: u128) -> bool {
    let d = a ^ b;
    d != 0 && a & (d & d.wrapping_neg()) != 0
}

/// The pairs of bag vertices, indexed in lexicographic order.
struct BagEdges {
    verts: Vec<usize>,
    /// `pos[v]` for bag vertices.
    pos: Vec<usize>,
    edges: Vec<(usize, usize)>,
    index: Vec<Vec<usize>>,
}

impl BagEdges {
    fn new(n: usize, bag: VertexSet) -> Self {
        let verts: Vec<usize> = bag.iter().collect();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let b = verts.len();
        let mut edges = Vec::with_capacity(b * (b - 1) / 2);
        let mut index = vec![vec![usize::MAX; b]; b];
        for p in 0..b {
            for q in p + 1..b {
                index[p][q] = edges.len();
                index[q][p] = edges.len();
                edges.push((p, q));
            }
        }
        BagEdges {
            verts,
            pos,
            edges,
            index,
        }
    }

    fn image(&self, g: &Perm, mask: u128) -> u128 {
        let mut out = 0u128;
        let mut m = mask;
        while m != 0 {
            let e = m.trailing_zeros() as usize;
            m &= m - 1;
            let (p, q) = self.edges[e];
            let (gp, gq) = (self.pos[g.apply(self.verts[p])], self.pos[g.apply(self.verts[q])]);
            out |= 1u128 << self.index[gp][gq];
        }
        out
    }

    fn apply(&self, h: &LabeledGraph, mask: u128) -> LabeledGraph {
        let mut g = h.clone();
        let mut m = mask;
        while m != 0 {
            let e = m.trailing_zeros() as usize;
            m &= m - 1;
            let (p, q) = self.edges[e];
            g.add_edge(self.verts[p], self.verts[q]);
        }
        g
    }
}

/// Visits edge masks with exactly `size` edges in lexicographic order.
fn combinations(m: usize, size: usize, f: &mut impl FnMut(u128) -> ControlFlow<()>) -> ControlFlow<()> {
    fn rec(
        t: usize,
        m: usize,
        left: usize,
        mask: u128,
        f: &mut impl FnMut(u128) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if left == 0 {
            return f(mask);
        }
        if m - t < left {
            return ControlFlow::Continue(());
        }
        rec(t + 1, m, left - 1, mask | 1u128 << t, f)?;
        rec(t + 1, m, left, mask, f)
    }
    rec(0, m, size, 0, f)
}

/// Visits masks giving bag position `p` exactly `deficit[p]` new edges, in
/// lexicographic order.
fn degree_fillings(
    be: &BagEdges,
    deficit: &mut [usize],
    f: &mut impl FnMut(u128) -> ControlFlow<()>,
) -> ControlFlow<()> {
    fn rec(
        be: &BagEdges,
        t: usize,
        deficit: &mut [usize],
        mask: u128,
        f: &mut impl FnMut(u128) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if t == be.edges.len() {
            return if deficit.iter().all(|&d| d == 0) {
                f(mask)
            } else {
                ControlFlow::Continue(())
            };
        }
        let (p, q) = be.edges[t];
        // (p, last) is the final pair touching p
        let closes = q == be.verts.len() - 1;
        if deficit[p] > 0 && deficit[q] > 0 {
            deficit[p] -= 1;
            deficit[q] -= 1;
            let r = if !closes || deficit[p] == 0 {
                rec(be, t + 1, deficit, mask | 1u128 << t, f)
            } else {
                ControlFlow::Continue(())
            };
            deficit[p] += 1;
            deficit[q] += 1;
            r?;
        }
        if !closes || deficit[p] == 0 {
            rec(be, t + 1, deficit, mask, f)?;
        }
        ControlFlow::Continue(())
    }
    rec(be, 0, deficit, 0, f)
}

fn uses_hints(cfg: &SearchConfig) -> bool {
    cfg.algorithm == Algorithm::Optimized
}

/// The first completion `H + E'` (edges `E'` inside the bag) that is a
/// class member containing no pattern.
///
/// Edge sets are taken by size, then lexicographically; with a non-trivial
/// group only the lexicographically least set of each orbit is tested.
pub fn check_completions(p: &Pair, cfg: &SearchConfig, grp: &PermGroup) -> Option<LabeledGraph> {
    completions(p, cfg, grp, &mut PhaseStats::default())
}

fn completions(
    p: &Pair,
    cfg: &SearchConfig,
    grp: &PermGroup,
    stats: &mut PhaseStats,
) -> Option<LabeledGraph> {
    let h = p.graph();
    let be = BagEdges::new(h.order(), p.bag());
    let odd_cubic = cfg.class.is_cubic() && h.order() % 2 == 1;
    let mut found = None;
    let mut test = |mask: u128| {
        if grp
            .non_identity()
            .iter()
            .any(|g| mask_less(be.image(g, mask), mask))
        {
            stats.completions_orbit_skipped += 1;
            return ControlFlow::Continue(());
        }
        stats.completions_tested += 1;
        if odd_cubic {
            stats.odd_order_completions += 1;
        }
        let g = be.apply(h, mask);
        if cfg.class.contains(&g) && !cfg.patterns.in_super(&g) {
            found = Some(g);
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    };
    match cfg.class.regular_degree().filter(|_| uses_hints(cfg)) {
        Some(d) => {
            let mut deficit = Vec::with_capacity(be.verts.len());
            for &v in &be.verts {
                deficit.push(d.checked_sub(h.degree(v))?);
            }
            let _ = degree_fillings(&be, &mut deficit, &mut test);
        }
        None => {
            for size in 0..=be.edges.len() {
                if combinations(be.edges.len(), size, &mut test).is_break() {
                    break;
                }
            }
        }
    }
    found
}

/// Vertices to try as the next to leave the bag.
///
/// In a cubic class with the shortcut enabled, if some bag vertex has degree
/// at least 2 the answer is the single bag vertex of highest degree (least
/// index among ties). Otherwise it is the least vertex of each orbit of the
/// group on the bag.
pub fn leaving_candidates(p: &Pair, grp: &PermGroup, cfg: &SearchConfig) -> Vec<usize> {
    let h = p.graph();
    if cfg.hdf_shortcut && cfg.class.is_cubic() {
        let best = p
            .bag()
            .iter()
            .max_by_key(|&v| (h.degree(v), std::cmp::Reverse(v)))
            .filter(|&v| h.degree(v) >= 2);
        if let Some(v) = best {
            return vec![v];
        }
    }
    grp.orbit_reps(p.bag()).iter().collect()
}

/// Neighbourhoods `Y` for the leaving vertex `u`, as a mask over the
/// candidate list `cand`, by size then lexicographically.
fn neighbourhoods(
    u_deg: usize,
    cand: &[usize],
    cfg: &SearchConfig,
    f: &mut impl FnMut(VertexSet) -> ControlFlow<()>,
) {
    let to_set = |mask: u128| -> VertexSet {
        let mut s = VertexSet::EMPTY;
        let mut m = mask;
        while m != 0 {
            s.insert(cand[m.trailing_zeros() as usize]);
            m &= m - 1;
        }
        s
    };
    let mut g = |mask: u128| f(to_set(mask));
    match cfg.class.regular_degree().filter(|_| uses_hints(cfg)) {
        Some(d) => {
            if let Some(size) = d.checked_sub(u_deg) {
                let _ = combinations(cand.len(), size, &mut g);
            }
        }
        None => {
            for size in 0..=cand.len() {
                if combinations(cand.len(), size, &mut g).is_break() {
                    return;
                }
            }
        }
    }
}

/// Successors of `p` when `u` leaves: one per admissible neighbourhood
/// `Y ⊆ U \ {u}` up to the stabiliser of `u`, kept when feasible and not good.
pub fn successors(p: &Pair, u: usize, grp: &PermGroup, cfg: &SearchConfig) -> Vec<Pair> {
    successors_counted(p, u, grp, cfg, &mut PhaseStats::default())
}

fn successors_counted(
    p: &Pair,
    u: usize,
    grp: &PermGroup,
    cfg: &SearchConfig,
    stats: &mut PhaseStats,
) -> Vec<Pair> {
    let h = p.graph();
    let hints = uses_hints(cfg);
    let cap = cfg.class.regular_degree().filter(|_| hints);
    let cand: Vec<usize> = p
        .bag()
        .without(u)
        .iter()
        .filter(|&y| cap.is_none_or(|d| h.degree(y) < d))
        .collect();
    let stab: Vec<&Perm> = grp.non_identity().iter().filter(|g| g.fixes(u)).collect();
    let mut out = Vec::new();
    neighbourhoods(h.degree(u), &cand, cfg, &mut |ys| {
        if stab.iter().any(|g| lex_less(g.apply_set(ys), ys)) {
            stats.neighbourhoods_orbit_skipped += 1;
            return ControlFlow::Continue(());
        }
        let q = p.successor(u, ys);
        let feasible = if hints {
            cfg.class.feasible_step(q.graph(), u, ys)
        } else {
            cfg.class.feasibility(q.graph(), q.bag()) == crate::class::Feasibility::Feasible
        };
        if !feasible {
            stats.pruned_infeasible += 1;
            return ControlFlow::Continue(());
        }
        // the parent is not good, so a new short cycle must pass through u
        let fast = if hints {
            cfg.patterns.cycle_through_at_most(q.graph(), u)
        } else {
            None
        };
        let good = fast.unwrap_or_else(|| cfg.patterns.pair_is_good(q.graph(), q.bag()));
        if good {
            stats.pruned_good += 1;
            return ControlFlow::Continue(());
        }
        out.push(q);
        ControlFlow::Continue(())
    });
    out
}

pub(crate) fn automorphisms(p: &Pair, cfg: &SearchConfig) -> Result<PermGroup, SearchError> {
    match cfg.algorithm {
        Algorithm::Base => Ok(PermGroup::trivial(p.graph().order())),
        Algorithm::Optimized => aut_fixing_bag(p.graph(), p.bag(), cfg.group_cap).map_err(|e| match e {
            SymmetryError::GroupTooLarge { cap } => SearchError::GroupTooLarge {
                graph6: encode_graph6(p.graph()),
                bag: p.bag_labels(),
                cap,
            },
        }),
    }
}

/// Everything produced by processing one pair.
pub(crate) struct Expansion {
    pub counterexample: Option<LabeledGraph>,
    pub children: Vec<(Option<CanonicalKey>, Pair)>,
    pub stats: PhaseStats,
}

pub(crate) fn expand(p: &Pair, cfg: &SearchConfig) -> Result<Expansion, SearchError> {
    let mut stats = PhaseStats {
        expanded: 1,
        ..PhaseStats::default()
    };
    let grp = automorphisms(p, cfg)?;
    stats.max_group_order = grp.order();
    if let Some(g) = completions(p, cfg, &grp, &mut stats) {
        return Ok(Expansion {
            counterexample: Some(g),
            children: Vec::new(),
            stats,
        });
    }
    let leaving: Vec<usize> = match cfg.algorithm {
        Algorithm::Base => p.bag().iter().collect(),
        Algorithm::Optimized => leaving_candidates(p, &grp, cfg),
    };
    let mut children = Vec::new();
    for u in leaving {
        for q in successors_counted(p, u, &grp, cfg, &mut stats) {
            let key = (cfg.algorithm == Algorithm::Optimized).then(|| pair_key(q.graph(), q.bag()));
            children.push((key, q));
        }
    }
    Ok(Expansion {
        counterexample: None,
        children,
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::GraphClass;
    use crate::containment::{Mode, PatternSet};
    use crate::named;
    use crate::symmetry::{is_isomorphic, DEFAULT_GROUP_CAP};

    fn cfg(k: usize, ps: PatternSet) -> SearchConfig {
        SearchConfig::new(k, ps, GraphClass::cubic())
    }

    fn aut(p: &Pair) -> PermGroup {
        aut_fixing_bag(p.graph(), p.bag(), DEFAULT_GROUP_CAP).unwrap()
    }

    #[test]
    fn lex_rules() {
        let s = |v: &[usize]| -> VertexSet { v.iter().copied().collect() };
        assert!(lex_less(s(&[0, 3]), s(&[1, 2])));
        assert!(lex_less(s(&[0, 1]), s(&[0, 2])));
        assert!(!lex_less(s(&[1, 2]), s(&[1, 2])));
        assert!(mask_less(0b011, 0b101));
        assert!(mask_less(0b1001, 0b0110));
    }

    #[test]
    fn combinations_in_lex_order() {
        let mut seen = Vec::new();
        let _ = combinations(4, 2, &mut |m| {
            seen.push(m);
            ControlFlow::Continue(())
        });
        assert_eq!(seen, vec![0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100]);
    }

    #[test]
    fn initial_pair_completions() {
        let p = Pair::initial(3);
        let grp = aut(&p);
        assert_eq!(grp.order(), 24);
        let k4 = check_completions(&p, &cfg(3, PatternSet::empty(Mode::Subgraph)), &grp).unwrap();
        assert!(is_isomorphic(&k4, &named::complete(4)));
        assert!(check_completions(&p, &cfg(3, PatternSet::cycles(3, 3)), &grp).is_none());
    }

    #[test]
    fn initial_pair_has_one_successor() {
        let p = Pair::initial(3);
        let grp = aut(&p);
        let c = cfg(3, PatternSet::cycles(3, 4));
        assert_eq!(leaving_candidates(&p, &grp, &c), vec![0]);
        let succ = successors(&p, 0, &grp, &c);
        assert_eq!(succ.len(), 1);
        assert_eq!(succ[0].graph().degree(0), 3);
        // the base algorithm sees all 8 subsets and keeps the same single one
        let base = c.clone().with_algorithm(Algorithm::Base);
        let trivial = PermGroup::trivial(4);
        assert_eq!(successors(&p, 0, &trivial, &base).len(), 1);
    }

    #[test]
    fn hdf_candidate_selection() {
        // u1 has degree 2 (two left neighbours), u2 degree 3
        let k = 4;
        let mut g = LabeledGraph::with_u_labels(8, k);
        for (a, b) in [(5, 0), (6, 0), (5, 1), (6, 1), (7, 1)] {
            g.add_edge(a, b);
        }
        let p = Pair::from_parts(g, [0, 1, 2, 3, 4].into_iter().collect(), vec![]);
        let grp = aut(&p);
        assert_eq!(
            leaving_candidates(&p, &grp, &cfg(k, PatternSet::cycles(3, 3))),
            vec![1]
        );
        let off = cfg(k, PatternSet::cycles(3, 3)).with_hdf_shortcut(false);
        let reps = leaving_candidates(&p, &grp, &off);
        assert!(reps.len() > 1);
    }

    #[test]
    fn orbit_pruning_keeps_the_outcome() {
        let p = Pair::initial(4);
        let grp = aut(&p);
        let c = cfg(4, PatternSet::empty(Mode::Subgraph));
        let pruned = check_completions(&p, &c, &grp);
        let full = check_completions(&p, &c, &PermGroup::trivial(5));
        // five vertices cannot be cubic
        assert_eq!(pruned.is_some(), full.is_some());
        assert!(pruned.is_none());
    }
}
