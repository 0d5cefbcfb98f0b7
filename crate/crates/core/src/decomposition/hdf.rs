//! High-degree-first decompositions of subcubic graphs.
//!
//! A smooth decomposition is high-degree-first (hdf) when, at every bag
//! except the last, the leaving vertex has degree at least 3 in the
//! associated graph if some bag vertex does, and otherwise degree at least 2
//! if some bag vertex does.

use super::{associated_full, validate, DecompositionError, PathDecomposition, Validity};
use crate::graph::{LabeledGraph, VertexSet};

/// Degree threshold the leaver of bag `i` must meet (0 means unconstrained).
fn required(gi: &LabeledGraph, bag: VertexSet) -> usize {
    let m = bag.iter().map(|v| gi.degree(v)).max().unwrap_or(0);
    if m >= 3 {
        3
    } else if m >= 2 {
        2
    } else {
        0
    }
}

fn hdf_at(g: &LabeledGraph, d: &PathDecomposition, i: usize) -> bool {
    let Some(x) = d.leaving(i) else {
        return false;
    };
    let gi = associated_full(g, d, i);
    gi.degree(x) >= required(&gi, d.bags[i])
}

/// Whether a smooth decomposition is hdf. Non-smooth inputs are rejected.
pub fn is_hdf(g: &LabeledGraph, d: &PathDecomposition) -> bool {
    let Some(k) = d.width() else {
        return true;
    };
    if validate(g, d, k) != Validity::ValidSmooth {
        return false;
    }
    (0..d.len().saturating_sub(1)).all(|i| hdf_at(g, d, i))
}

/// Makes `v` the leaver of bag `i` by swapping it with the current leaver
/// `u` in every later bag. Requires every neighbour of `v` to appear in the
/// first `i + 1` bags.
fn make_leave(bags: &mut [VertexSet], i: usize, v: usize) {
    let Some(next) = bags.get(i + 1) else {
        return;
    };
    let u = (bags[i] - *next).first().unwrap();
    if u == v {
        return;
    }
    for b in bags[i + 1..].iter_mut() {
        if b.contains(v) {
            b.remove(v);
            b.insert(u);
        }
    }
}

/// Rewrites a smooth decomposition of a subcubic graph into an hdf one of
/// the same width and length. Bags are fixed left to right; each step keeps
/// all earlier bags.
pub fn make_hdf(g: &LabeledGraph, d: &PathDecomposition) -> Result<PathDecomposition, DecompositionError> {
    let Some(k) = d.width() else {
        return Ok(d.clone());
    };
    match validate(g, d, k) {
        Validity::ValidSmooth => {}
        Validity::Valid => {
            return Err(DecompositionError::InvalidInput(
                "decomposition is not smooth".into(),
            ))
        }
        Validity::Invalid(r) => return Err(DecompositionError::InvalidInput(r.to_string())),
    }
    if g.max_degree() > 3 {
        return Err(DecompositionError::InvalidInput("graph is not subcubic".into()));
    }
    let mut bags = d.bags.clone();
    let n_bags = bags.len();
    // G_0 is edgeless, so bag 0 never needs fixing
    for i in 1..n_bags.saturating_sub(1) {
        let cur = PathDecomposition::new(bags.clone());
        let gi = associated_full(g, &cur, i);
        let need = required(&gi, bags[i]);
        let x = cur.leaving(i).unwrap();
        if gi.degree(x) >= need {
            continue;
        }
        // highest degree in G_i, ties to the smallest index
        let v = bags[i]
            .iter()
            .max_by_key(|&v| (gi.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let seen = bags[..=i].iter().fold(VertexSet::EMPTY, |acc, b| acc | *b);
        let unseen = g.neighbours(v) - seen;
        match unseen.first() {
            None => make_leave(&mut bags, i, v),
            Some(w) => {
                debug_assert_eq!(unseen.len(), 1, "subcubic with G_i-degree >= 2");
                let j = (i + 1..n_bags).find(|&j| bags[j].contains(w)).unwrap();
                make_leave(&mut bags, j, v);
                let before = bags[i - 1];
                let x_prev = (before - bags[i]).first().unwrap();
                bags.remove(j);
                for b in bags[i..j].iter_mut() {
                    debug_assert!(b.contains(v));
                    b.remove(v);
                    b.insert(w);
                }
                bags.insert(i, before.without(x_prev).with(w));
            }
        }
        debug_assert!(hdf_at(g, &PathDecomposition::new(bags.clone()), i));
    }
    let out = PathDecomposition::new(bags);
    debug_assert_eq!(validate(g, &out, k), Validity::ValidSmooth);
    Ok(out)
}
