//! Small named graphs used as patterns, fixtures and golden references.
//!
//! Cubic graphs are given as a Hamiltonian cycle `1..n` plus chords, with
//! 1-based vertex numbers as in their usual drawings.

use crate::graph::LabeledGraph;

fn cycle_with_chords(n: usize, chords: &[(usize, usize)]) -> LabeledGraph {
    let mut g = cycle(n);
    for &(a, b) in chords {
        g.add_edge(a - 1, b - 1);
    }
    g
}

fn from_one_based(n: usize, edges: &[(usize, usize)]) -> LabeledGraph {
    let mut g = LabeledGraph::empty(n);
    for &(a, b) in edges {
        g.add_edge(a - 1, b - 1);
    }
    g
}

pub fn cycle(n: usize) -> LabeledGraph {
    assert!(n >= 3);
    let mut g = LabeledGraph::empty(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    g
}

pub fn path(n: usize) -> LabeledGraph {
    let mut g = LabeledGraph::empty(n);
    for i in 1..n {
        g.add_edge(i - 1, i);
    }
    g
}

pub fn complete(n: usize) -> LabeledGraph {
    let mut g = LabeledGraph::empty(n);
    for a in 0..n {
        for b in a + 1..n {
            g.add_edge(a, b);
        }
    }
    g
}

pub fn complete_bipartite(r: usize, s: usize) -> LabeledGraph {
    let mut g = LabeledGraph::empty(r + s);
    for a in 0..r {
        for b in r..r + s {
            g.add_edge(a, b);
        }
    }
    g
}

pub fn k33() -> LabeledGraph {
    complete_bipartite(3, 3)
}

/// Triangular prism, the other cubic graph on six vertices.
pub fn prism() -> LabeledGraph {
    from_one_based(
        6,
        &[
            (1, 2),
            (2, 3),
            (3, 1),
            (4, 5),
            (5, 6),
            (6, 4),
            (1, 4),
            (2, 5),
            (3, 6),
        ],
    )
}

/// The 3-cube.
pub fn cube() -> LabeledGraph {
    cycle_with_chords(8, &[(1, 6), (2, 5), (3, 8), (4, 7)])
}

/// The twisted cube: the other smallest cubic graph of path-width 4 and girth 4.
pub fn twisted_cube() -> LabeledGraph {
    cycle_with_chords(8, &[(1, 5), (2, 6), (3, 8), (4, 7)])
}

pub fn petersen() -> LabeledGraph {
    // outer 5-cycle 0..5, spokes, inner pentagram 5..10
    let mut g = LabeledGraph::empty(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    g
}

pub fn heawood() -> LabeledGraph {
    cycle_with_chords(14, &[(14, 5), (2, 7), (4, 9), (6, 11), (8, 13), (1, 10), (3, 12)])
}

pub fn pappus() -> LabeledGraph {
    cycle_with_chords(
        18,
        &[
            (1, 6),
            (2, 9),
            (3, 14),
            (4, 11),
            (5, 16),
            (7, 12),
            (8, 15),
            (10, 17),
            (13, 18),
        ],
    )
}

pub fn mcgee() -> LabeledGraph {
    cycle_with_chords(
        24,
        &[
            (1, 13),
            (7, 19),
            (2, 9),
            (24, 17),
            (12, 5),
            (8, 15),
            (14, 21),
            (3, 20),
            (6, 23),
            (11, 18),
            (4, 16),
            (10, 22),
        ],
    )
}

pub fn tutte_coxeter() -> LabeledGraph {
    cycle_with_chords(
        30,
        &[
            (1, 10),
            (4, 25),
            (7, 16),
            (13, 22),
            (19, 28),
            (2, 15),
            (3, 20),
            (8, 21),
            (9, 26),
            (14, 27),
            (5, 12),
            (6, 29),
            (11, 18),
            (17, 24),
            (23, 30),
        ],
    )
}

// The six reduction configurations for cubic graphs of path-width 3 and
// girth 4. Common core: K_{2,3} on u=1, v=2 | x1=3, x2=4, x3=5.
const K23: [(usize, usize); 6] = [(1, 3), (3, 2), (2, 4), (4, 1), (1, 5), (5, 2)];

fn k23_plus(n: usize, extra: &[(usize, usize)]) -> LabeledGraph {
    let mut edges = K23.to_vec();
    edges.extend_from_slice(extra);
    from_one_based(n, &edges)
}

/// `G1`: K_{2,3} whose three degree-2 vertices reach a common vertex `z`
/// through one subdivision vertex each (y1=6, y2=7, y3=8, z=9).
pub fn reduction_g1() -> LabeledGraph {
    k23_plus(9, &[(3, 6), (4, 7), (5, 8), (6, 9), (9, 7), (8, 9)])
}

/// `G2`: x3-y3-y2-x2 path plus a pendant y1 at x1 (y1=6, y2=7, y3=8).
pub fn reduction_g2() -> LabeledGraph {
    k23_plus(8, &[(5, 8), (8, 7), (7, 4), (3, 6)])
}

/// `G3` (y1=6, y2=7, w1=8, w2=9, w3=10, z=11).
pub fn reduction_g3() -> LabeledGraph {
    k23_plus(
        11,
        &[
            (5, 7),
            (7, 4),
            (3, 6),
            (9, 6),
            (6, 8),
            (7, 10),
            (8, 11),
            (11, 9),
            (10, 11),
        ],
    )
}

/// `G4` (y1=6, y2=7, w1=8, w2=9, w3=10).
pub fn reduction_g4() -> LabeledGraph {
    k23_plus(10, &[(5, 7), (7, 4), (3, 6), (9, 6), (6, 8), (7, 10), (9, 10)])
}

/// `G5` (y1=6, y2=7, w1=8, z=9, z1=10): y2-w1-z and x1-y1-z1 with the
/// cross edge y1w1.
pub fn reduction_g5() -> LabeledGraph {
    k23_plus(10, &[(5, 7), (7, 4), (3, 6), (7, 8), (8, 6), (8, 9), (6, 10)])
}

/// `G6` (y1=6, y2=7, w1=8, z1=9, z2=10): y1w1 is a cut-edge.
pub fn reduction_g6() -> LabeledGraph {
    k23_plus(10, &[(3, 6), (6, 7), (7, 4), (7, 5), (6, 8), (9, 8), (8, 10)])
}

/// `{K33, G1, ..., G6}`.
pub fn pathwidth3_girth4_reductions() -> Vec<LabeledGraph> {
    vec![
        k33(),
        reduction_g1(),
        reduction_g2(),
        reduction_g3(),
        reduction_g4(),
        reduction_g5(),
        reduction_g6(),
    ]
}
