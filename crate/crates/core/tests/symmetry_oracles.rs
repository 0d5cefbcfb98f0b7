mod common;

use rand::seq::SliceRandom;
use rand::Rng;
use unavoidable::graph::{LabeledGraph, VertexSet};
use unavoidable::symmetry::{aut_fixing_bag, canonical_form, Perm, VertexColoring, DEFAULT_GROUP_CAP};

fn coloured(r: &mut impl Rng) -> (LabeledGraph, Vec<usize>) {
    let n = r.gen_range(1..=12);
    let p = r.gen_range(0.15..0.6);
    let g = common::random_graph(r, n, p);
    let k = r.gen_range(1..=3);
    let c = (0..n).map(|_| r.gen_range(0..k)).collect();
    (g, c)
}

/// Swaps the endpoints of two edges, keeping every degree.
fn perturb(r: &mut impl Rng, g: &LabeledGraph) -> LabeledGraph {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut h = g.clone();
    for _ in 0..20 {
        if edges.len() < 2 {
            break;
        }
        let (a, b) = edges[r.gen_range(0..edges.len())];
        let (c, d) = edges[r.gen_range(0..edges.len())];
        if [a, b].contains(&c) || [a, b].contains(&d) || h.has_edge(a, d) || h.has_edge(c, b) {
            continue;
        }
        if !h.has_edge(a, b) || !h.has_edge(c, d) {
            continue;
        }
        h.remove_edge(a, b);
        h.remove_edge(c, d);
        h.add_edge(a, d);
        h.add_edge(c, b);
        break;
    }
    h
}

fn as_u8(c: &[usize]) -> Vec<u8> {
    c.iter().map(|&x| x as u8).collect()
}

#[test]
fn canonical_keys_decide_isomorphism() {
    let mut r = common::rng(21);
    let (mut same, mut differ) = (0, 0);
    for _ in 0..500 {
        let (g, c) = coloured(&mut r);
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut r);
        let mut h = g.permuted(&perm);
        let mut hc = vec![0; n];
        for v in 0..n {
            hc[perm[v]] = c[v];
        }
        if r.gen_bool(0.5) {
            h = perturb(&mut r, &h);
        }
        let ka = canonical_form(&g, &VertexColoring::new(&c));
        let kb = canonical_form(&h, &VertexColoring::new(&hc));
        let brute = common::iso_brute(&g, &as_u8(&c), &h, &as_u8(&hc));
        assert_eq!(ka.key == kb.key, brute, "{g:?} {c:?} / {h:?} {hc:?}");
        if brute {
            same += 1;
        } else {
            differ += 1;
        }
        // the relabelled graphs coincide exactly
        if brute {
            assert_eq!(
                ka.apply(&g).edges().collect::<Vec<_>>(),
                kb.apply(&h).edges().collect::<Vec<_>>()
            );
        }
    }
    assert!(same > 100 && differ > 50, "{same} {differ}");
}

fn count_automorphisms(g: &LabeledGraph, bag: VertexSet) -> usize {
    let n = g.order();
    let m = common::adj(g);
    let mut count = 0;
    let mut map = Vec::new();
    fn go(m: &[Vec<bool>], n: usize, bag: VertexSet, map: &mut Vec<usize>, count: &mut usize) {
        let i = map.len();
        if i == n {
            *count += 1;
            return;
        }
        for t in 0..n {
            if map.contains(&t)
                || bag.contains(i) != bag.contains(t)
                || (0..i).any(|j| m[i][j] != m[t][map[j]])
            {
                continue;
            }
            map.push(t);
            go(m, n, bag, map, count);
            map.pop();
        }
    }
    go(&m, n, bag, &mut map, &mut count);
    count
}

#[test]
fn bag_automorphism_groups_match_brute_force() {
    let mut r = common::rng(22);
    for _ in 0..150 {
        let n = r.gen_range(1..=8);
        let g = common::random_subcubic(&mut r, n, false);
        let bag: VertexSet = (0..n).filter(|_| r.gen_bool(0.5)).collect();
        let grp = aut_fixing_bag(&g, bag, DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(grp.order(), count_automorphisms(&g, bag), "{g:?} {bag:?}");
        assert!(grp.is_closed());
        assert!(grp.contains(&Perm::identity(n)));
        for p in grp.elements() {
            assert!(p.is_automorphism_of(&g));
            assert_eq!(p.apply_set(bag), bag);
        }
        for u in 0..n {
            assert_eq!(grp.order(), grp.stabilizer(u).order() * grp.orbit(u).len());
        }
    }
}
