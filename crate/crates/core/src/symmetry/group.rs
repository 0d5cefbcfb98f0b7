//! Explicit permutation groups and the automorphism enumerator for
//! `Aut(U, H)`.

use std::fmt;

use super::refine::equitable_partition;
use super::SymmetryError;
use crate::graph::{LabeledGraph, VertexSet};

/// Default bound on the number of group elements materialised.
pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

/// A permutation of `0..n`, stored as its image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Box<[u8]>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).map(|v| v as u8).collect())
    }

    /// Panics unless `images` is a bijection on `0..images.len()`.
    pub fn from_images(images: &[usize]) -> Self {
        let n = images.len();
        let mut seen = VertexSet::EMPTY;
        for &x in images {
            assert!(x < n && !seen.contains(x), "not a permutation: {images:?}");
            seen.insert(x);
        }
        Perm(images.iter().map(|&x| x as u8).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.0[v] as usize
    }

    pub fn apply_set(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|v| self.apply(v)).collect()
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm(inv.into_boxed_slice())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn fixes(&self, v: usize) -> bool {
        self.apply(v) == v
    }

    pub fn is_automorphism_of(&self, g: &LabeledGraph) -> bool {
        self.len() == g.order()
            && g.vertices()
                .all(|v| self.apply_set(g.neighbours(v)) == g.neighbours(self.apply(v)))
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&x| x as usize)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // cycle notation, fixed points omitted
        let mut seen = VertexSet::EMPTY;
        let mut any = false;
        for s in 0..self.len() {
            if seen.contains(s) || self.fixes(s) {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut x = s;
            let mut first = true;
            while !seen.contains(x) {
                seen.insert(x);
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.apply(x);
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// A permutation group on `0..degree`, listed element by element.
/// The identity is always the first element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Perm>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            elements: vec![Perm::identity(degree)],
        }
    }

    /// Builds a group from an element list; the caller guarantees closure.
    /// The identity is moved to the front and duplicates are removed.
    pub fn from_elements(degree: usize, mut elements: Vec<Perm>) -> Self {
        elements.sort();
        elements.dedup();
        let id = Perm::identity(degree);
        elements.retain(|p| *p != id);
        elements.insert(0, id);
        PermGroup { degree, elements }
    }

    /// Symmetric group on `0..degree`. Intended for small degrees.
    pub fn symmetric(degree: usize) -> Self {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..degree).collect();
        permutations(&mut cur, 0, &mut out);
        Self::from_elements(degree, out)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    /// Elements other than the identity.
    pub fn non_identity(&self) -> &[Perm] {
        &self.elements[1..]
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn orbit(&self, v: usize) -> VertexSet {
        self.elements.iter().map(|g| g.apply(v)).collect()
    }

    /// Orbits meeting `domain`, restricted to `domain`, ordered by minimum.
    /// `domain` must be invariant under the group for the parts to be full orbits.
    pub fn orbits(&self, domain: VertexSet) -> Vec<VertexSet> {
        let mut left = domain;
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let o = self.orbit(v) & domain;
            left = left - o;
            out.push(o);
        }
        out
    }

    /// Minimum element of every orbit meeting `set`.
    pub fn orbit_reps(&self, set: VertexSet) -> VertexSet {
        let mut left = set;
        let mut reps = VertexSet::EMPTY;
        while let Some(v) = left.first() {
            reps.insert(v);
            left = left - self.orbit(v);
        }
        reps
    }

    pub fn stabilizer(&self, u: usize) -> PermGroup {
        PermGroup {
            degree: self.degree,
            elements: self.elements.iter().filter(|g| g.fixes(u)).cloned().collect(),
        }
    }

    /// Elements mapping `set` onto itself.
    pub fn set_stabilizer(&self, set: VertexSet) -> PermGroup {
        PermGroup {
            degree: self.degree,
            elements: self
                .elements
                .iter()
                .filter(|g| g.apply_set(set) == set)
                .cloned()
                .collect(),
        }
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.iter().any(|g| g == p)
    }

    /// Closure under composition and inversion. Quadratic in the order.
    pub fn is_closed(&self) -> bool {
        let mut sorted = self.elements.clone();
        sorted.sort();
        let has = |p: &Perm| sorted.binary_search(p).is_ok();
        self.elements
            .iter()
            .all(|a| has(&a.inverse()) && self.elements.iter().all(|b| has(&a.compose(b))))
    }
}

fn permutations(cur: &mut Vec<usize>, i: usize, out: &mut Vec<Perm>) {
    if i == cur.len() {
        out.push(Perm::from_images(cur));
        return;
    }
    for j in i..cur.len() {
        cur.swap(i, j);
        permutations(cur, i + 1, out);
        cur.swap(i, j);
    }
}

/// All automorphisms of `h` that map `bag` onto itself.
///
/// Backtracking over vertex images, with candidates restricted to the
/// vertex's cell in the equitable partition of the bag colouring and to the
/// exact adjacency pattern towards vertices already mapped.
pub fn aut_fixing_bag(h: &LabeledGraph, bag: VertexSet, cap: usize) -> Result<PermGroup, SymmetryError> {
    let n = h.order();
    assert!(bag.is_subset(h.vertex_set()), "bag must lie inside the graph");
    let colours: Vec<u8> = (0..n).map(|v| bag.contains(v) as u8).collect();
    let cells = equitable_partition(h, &colours);
    let mut cell_of = vec![VertexSet::EMPTY; n];
    for c in &cells {
        for v in c.iter() {
            cell_of[v] = *c;
        }
    }

    // Order vertices so that each is adjacent to an earlier one when possible:
    // BFS inside components, components taken by smallest cell first.
    let mut order = Vec::with_capacity(n);
    let mut placed = VertexSet::EMPTY;
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by_key(|&v| (cell_of[v].len(), v));
    for s in starts {
        if placed.contains(s) {
            continue;
        }
        let mut head = order.len();
        order.push(s);
        placed.insert(s);
        while head < order.len() {
            let x = order[head];
            head += 1;
            let mut nb: Vec<usize> = (h.neighbours(x) - placed).iter().collect();
            nb.sort_by_key(|&v| (cell_of[v].len(), v));
            for y in nb {
                placed.insert(y);
                order.push(y);
            }
        }
    }

    let mut enumerator = AutEnum {
        h,
        order: &order,
        cell_of: &cell_of,
        image: vec![usize::MAX; n],
        used: VertexSet::EMPTY,
        found: Vec::new(),
        cap,
    };
    enumerator.extend(0)?;
    Ok(PermGroup::from_elements(n, enumerator.found))
}

struct AutEnum<'a> {
    h: &'a LabeledGraph,
    order: &'a [usize],
    cell_of: &'a [VertexSet],
    image: Vec<usize>,
    used: VertexSet,
    found: Vec<Perm>,
    cap: usize,
}

impl AutEnum<'_> {
    fn extend(&mut self, t: usize) -> Result<(), SymmetryError> {
        if t == self.order.len() {
            if self.found.len() >= self.cap {
                return Err(SymmetryError::GroupTooLarge { cap: self.cap });
            }
            self.found.push(Perm::from_images(&self.image));
            return Ok(());
        }
        let v = self.order[t];
        let nv = self.h.neighbours(v);
        let mut cand = self.cell_of[v] - self.used;
        for &w in &self.order[..t] {
            let nw = self.h.neighbours(self.image[w]);
            if nv.contains(w) {
                cand &= nw;
            } else {
                cand = cand - nw;
            }
            if cand.is_empty() {
                return Ok(());
            }
        }
        for x in cand.iter() {
            if self.h.degree(x) != nv.len() {
                continue;
            }
            self.image[v] = x;
            self.used.insert(x);
            self.extend(t + 1)?;
            self.used.remove(x);
        }
        self.image[v] = usize::MAX;
        Ok(())
    }
}
