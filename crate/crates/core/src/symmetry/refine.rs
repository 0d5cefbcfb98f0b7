use std::collections::VecDeque;

use crate::graph::{LabeledGraph, VertexSet};

/// Refines an ordered partition until it is equitable.
///
/// Every cell is split by the number of neighbours its vertices have in a
/// splitter cell; fragments are ordered by that count and queued as new
/// splitters. The procedure depends only on the ordered partition and the
/// adjacency, so it commutes with relabelling.
pub(crate) fn refine(
    g: &LabeledGraph,
    cells: &mut Vec<VertexSet>,
    splitters: impl IntoIterator<Item = VertexSet>,
) {
    let mut queue: VecDeque<VertexSet> = splitters.into_iter().collect();
    let mut buckets: Vec<(usize, VertexSet)> = Vec::new();
    while let Some(s) = queue.pop_front() {
        if cells.len() == g.order() {
            return;
        }
        let mut i = 0;
        while i < cells.len() {
            let c = cells[i];
            if c.len() == 1 {
                i += 1;
                continue;
            }
            buckets.clear();
            for v in c.iter() {
                let cnt = (g.neighbours(v) & s).len();
                match buckets.iter_mut().find(|(k, _)| *k == cnt) {
                    Some((_, set)) => set.insert(v),
                    None => buckets.push((cnt, VertexSet::singleton(v))),
                }
            }
            if buckets.len() == 1 {
                i += 1;
                continue;
            }
            buckets.sort_unstable_by_key(|&(k, _)| k);
            cells.splice(i..=i, buckets.iter().map(|&(_, set)| set));
            for &(_, set) in &buckets {
                queue.push_back(set);
            }
            i += buckets.len();
        }
    }
}

/// Initial ordered partition: one cell per colour, in colour order.
pub(crate) fn colour_cells(colours: &[u8]) -> Vec<VertexSet> {
    let m = colours.iter().copied().max().map_or(0, |c| c as usize + 1);
    let mut cells = vec![VertexSet::EMPTY; m];
    for (v, &c) in colours.iter().enumerate() {
        cells[c as usize].insert(v);
    }
    cells.retain(|c| !c.is_empty());
    cells
}

/// Coarsest equitable partition refining the colouring.
pub(crate) fn equitable_partition(g: &LabeledGraph, colours: &[u8]) -> Vec<VertexSet> {
    let mut cells = colour_cells(colours);
    let init = cells.clone();
    refine(g, &mut cells, init);
    cells
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn path_splits_by_degree_then_distance() {
        let g = named::path(5);
        let cells = equitable_partition(&g, &[0; 5]);
        // ends, then centre, then the two neighbours of the ends
        let sets: Vec<Vec<usize>> = cells.iter().map(|c| c.iter().collect()).collect();
        assert_eq!(sets, vec![vec![0, 4], vec![2], vec![1, 3]]);
    }

    #[test]
    fn regular_graph_stays_one_cell() {
        let g = named::petersen();
        assert_eq!(equitable_partition(&g, &[0; 10]).len(), 1);
    }
}
