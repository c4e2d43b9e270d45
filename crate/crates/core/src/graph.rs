//! Finite simple undirected graphs with bitset adjacency, plus the
//! elementary operations (contraction, deletion, isolation) everything
//! else is built from.

use smallvec::{smallvec, SmallVec};

const WORD_BITS: usize = 64;

/// A subset of the vertices `0..n` of some host graph, stored as a bitset.
///
/// All sets created for the same host carry the same number of words, so
/// word-wise operations line up without bounds juggling.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: SmallVec<[u64; 1]>,
}

impl VertexSet {
    /// Empty set over a universe of `n` vertices.
    pub fn empty(n: usize) -> Self {
        VertexSet {
            words: smallvec![0; n.div_ceil(WORD_BITS)],
        }
    }

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn singleton(n: usize, v: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(v);
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, vs: I) -> Self {
        let mut s = Self::empty(n);
        for v in vs {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.words[v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if let Some(w) = self.words.get_mut(v / WORD_BITS) {
            *w &= !(1u64 << (v % WORD_BITS));
        }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / WORD_BITS)
            .is_some_and(|w| w & (1u64 << (v % WORD_BITS)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        zip_words(self, other).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        zip_words(self, other).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        !self.is_disjoint(other)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.merge(other, |a, b| a | b);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.merge(other, |a, b| a & b);
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        self.merge(other, |a, b| a & !b);
    }

    fn merge(&mut self, other: &VertexSet, f: impl Fn(u64, u64) -> u64) {
        debug_assert_eq!(self.words.len(), other.words.len());
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a = f(*a, *b);
        }
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            std::iter::successors(
                if w == 0 { None } else { Some(w) },
                |&rest| {
                    let rest = rest & (rest - 1);
                    if rest == 0 {
                        None
                    } else {
                        Some(rest)
                    }
                },
            )
            .map(move |rest| i * WORD_BITS + rest.trailing_zeros() as usize)
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

fn zip_words<'a>(
    a: &'a VertexSet,
    b: &'a VertexSet,
) -> impl Iterator<Item = (u64, u64)> + 'a {
    debug_assert_eq!(a.words.len(), b.words.len());
    a.words.iter().copied().zip(b.words.iter().copied())
}

/// A finite simple undirected graph on vertices `0..n`.
///
/// Invariants: adjacency is symmetric, irreflexive, and in range. Values
/// are treated as immutable once built; every operation returns a new
/// graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::empty(n); n],
        }
    }

    /// The complete graph K_n.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.adj[v] = VertexSet::full(n);
            g.adj[v].remove(v);
        }
        g.assert_invariants();
        g
    }

    /// Path on `n` vertices: 0-1-..-(n-1).
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// Cycle on `n` vertices (`n >= 3`).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    /// Disjoint union of the cliques K_1, K_2, .., K_m.
    pub fn disjoint_cliques(m: usize) -> Self {
        assert!(m >= 1, "disjoint_cliques needs m >= 1");
        let n = m * (m + 1) / 2;
        let mut g = Graph::empty(n);
        let mut base = 0;
        for size in 1..=m {
            for i in 0..size {
                for j in (i + 1)..size {
                    g.add_edge(base + i, base + j);
                }
            }
            base += size;
        }
        g.assert_invariants();
        g
    }

    /// The Petersen graph: outer 5-cycle, inner pentagram, five spokes.
    pub fn petersen() -> Self {
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, 5 + i);
        }
        g.assert_invariants();
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u},{v})");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, ascending lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// True iff some edge joins `s` and `t`. The sets must be disjoint.
    pub fn connected_to_each_other(&self, s: &VertexSet, t: &VertexSet) -> bool {
        assert!(s.is_disjoint(t), "connected_to_each_other: sets overlap");
        s.iter().any(|v| self.adj[v].intersects(t))
    }

    /// True iff `s` is nonempty and induces a connected subgraph.
    pub fn is_connected_subset(&self, s: &VertexSet) -> bool {
        let Some(start) = s.first() else {
            return false;
        };
        let mut seen = VertexSet::singleton(self.n, start);
        let mut frontier = seen.clone();
        loop {
            let mut next = VertexSet::empty(self.n);
            for v in frontier.iter() {
                next.union_with(&self.adj[v]);
            }
            next.intersect_with(s);
            next.subtract(&seen);
            if next.is_empty() {
                break;
            }
            seen.union_with(&next);
            frontier = next;
        }
        s.is_subset_of(&seen)
    }

    /// The whole vertex set is one component. K_0 counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.is_connected_subset(&VertexSet::full(self.n))
    }

    pub fn components(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut unseen = VertexSet::full(self.n);
        while let Some(start) = unseen.first() {
            let mut comp = VertexSet::singleton(self.n, start);
            let mut frontier = comp.clone();
            loop {
                let mut next = VertexSet::empty(self.n);
                for v in frontier.iter() {
                    next.union_with(&self.adj[v]);
                }
                next.subtract(&comp);
                if next.is_empty() {
                    break;
                }
                comp.union_with(&next);
                frontier = next;
            }
            unseen.subtract(&comp);
            out.push(comp);
        }
        out
    }

    /// Contract the edge `{u, v}`. The merged vertex takes index
    /// `min(u, v)`; vertices above `max(u, v)` shift down by one. The
    /// result is simplified (no loops or parallel edges).
    pub fn contract_edge(&self, u: usize, v: usize) -> Graph {
        assert!(
            u < self.n && v < self.n && self.has_edge(u, v),
            "contract_edge: {{{u},{v}}} is not an edge"
        );
        let (lo, hi) = (u.min(v), u.max(v));
        let relabel = |w: usize| {
            let w = if w == hi { lo } else { w };
            if w > hi {
                w - 1
            } else {
                w
            }
        };
        let mut g = Graph::empty(self.n - 1);
        for (a, b) in self.edges() {
            let (a, b) = (relabel(a), relabel(b));
            if a != b {
                g.adj[a].insert(b);
                g.adj[b].insert(a);
            }
        }
        g.assert_invariants();
        g
    }

    /// Delete vertex `v`; vertices above it shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        assert!(v < self.n, "delete_vertex: no vertex {v}");
        let relabel = |w: usize| if w > v { w - 1 } else { w };
        let mut g = Graph::empty(self.n - 1);
        for (a, b) in self.edges() {
            if a != v && b != v {
                g.add_edge(relabel(a), relabel(b));
            }
        }
        g.assert_invariants();
        g
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Graph {
        assert!(
            u < self.n && v < self.n && self.has_edge(u, v),
            "delete_edge: {{{u},{v}}} is not an edge"
        );
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        g.assert_invariants();
        g
    }

    /// Delete every vertex of degree zero, compacting indices.
    pub fn remove_isolated(&self) -> Graph {
        let keep: Vec<usize> = self.vertices().filter(|&v| self.degree(v) > 0).collect();
        let mut index = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            index[old] = new;
        }
        let mut g = Graph::empty(keep.len());
        for (a, b) in self.edges() {
            g.add_edge(index[a], index[b]);
        }
        g.assert_invariants();
        g
    }

    /// Remove every edge incident to `v0`, keeping the vertex set.
    pub fn isolate_vertex(&self, v0: usize) -> Graph {
        assert!(v0 < self.n, "isolate_vertex: no vertex {v0}");
        let mut g = self.clone();
        for u in self.adj[v0].to_vec() {
            g.adj[u].remove(v0);
        }
        g.adj[v0] = VertexSet::empty(self.n);
        g.assert_invariants();
        g
    }

    /// Relabel through a permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (a, b) in self.edges() {
            g.add_edge(perm[a], perm[b]);
        }
        g
    }

    pub fn check_invariants(&self) -> Result<(), String> {
        if self.adj.len() != self.n {
            return Err(format!("adjacency list length {} != n {}", self.adj.len(), self.n));
        }
        for v in 0..self.n {
            if self.adj[v].contains(v) {
                return Err(format!("self-loop at {v}"));
            }
            for u in self.adj[v].iter() {
                if u >= self.n {
                    return Err(format!("neighbor {u} of {v} out of range"));
                }
                if !self.adj[u].contains(v) {
                    return Err(format!("asymmetric edge ({v},{u})"));
                }
            }
        }
        Ok(())
    }

    #[inline]
    fn assert_invariants(&self) {
        debug_assert!(self.check_invariants().is_ok(), "{:?}", self.check_invariants());
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_set_basics() {
        let mut s = VertexSet::empty(70);
        s.insert(0);
        s.insert(65);
        s.insert(3);
        assert_eq!(s.to_vec(), vec![0, 3, 65]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.first(), Some(0));
        s.remove(0);
        assert_eq!(s.first(), Some(3));
        assert!(!s.contains(0));
        assert!(s.contains(65));
    }

    #[test]
    fn complete_graph_shape() {
        let g = Graph::complete(4);
        assert_eq!(g.edge_count(), 6);
        assert!(g.vertices().all(|v| g.degree(v) == 3));
        assert_eq!(Graph::complete(0).n(), 0);
        assert_eq!(Graph::complete(1).edge_count(), 0);
    }

    #[test]
    fn connected_to_each_other_cases() {
        let p = Graph::path(3);
        let s = VertexSet::singleton(3, 0);
        let t2 = VertexSet::singleton(3, 2);
        let t1 = VertexSet::singleton(3, 1);
        assert!(!p.connected_to_each_other(&s, &t2));
        assert!(p.connected_to_each_other(&s, &t1));
        let k4 = Graph::complete(4);
        let a = VertexSet::from_iter(4, [0, 1]);
        let b = VertexSet::from_iter(4, [2, 3]);
        assert!(k4.connected_to_each_other(&a, &b));
    }

    #[test]
    #[should_panic(expected = "overlap")]
    fn connected_to_each_other_rejects_overlap() {
        let g = Graph::complete(3);
        let s = VertexSet::from_iter(3, [0, 1]);
        let t = VertexSet::from_iter(3, [1, 2]);
        g.connected_to_each_other(&s, &t);
    }

    #[test]
    fn connected_subset_cases() {
        let p = Graph::path(3);
        assert!(p.is_connected_subset(&VertexSet::singleton(3, 1)));
        assert!(!p.is_connected_subset(&VertexSet::from_iter(3, [0, 2])));
        let c5 = Graph::cycle(5);
        assert!(c5.is_connected_subset(&VertexSet::from_iter(5, [0, 1, 2])));
        assert!(!p.is_connected_subset(&VertexSet::empty(3)));
    }

    #[test]
    fn contract_c4_gives_triangle() {
        let c4 = Graph::cycle(4);
        let t = c4.contract_edge(0, 1);
        // merged vertex 0 = {0,1}; old 2,3 become 1,2
        assert_eq!(t.n(), 3);
        assert_eq!(t.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn contract_complete_drops_one() {
        for n in 2..=7 {
            let g = Graph::complete(n).contract_edge(0, 1);
            assert!(g.is_complete());
            assert_eq!(g.n(), n - 1);
        }
        let k2 = Graph::complete(2).contract_edge(0, 1);
        assert_eq!(k2.n(), 1);
    }

    #[test]
    fn contract_relabeling_rule() {
        // 0-1-2-3 path, contract {1,2}: merged at 1, old 3 becomes 2.
        let p = Graph::path(4);
        let g = p.contract_edge(2, 1);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    #[should_panic(expected = "not an edge")]
    fn contract_missing_edge_panics() {
        Graph::path(3).contract_edge(0, 2);
    }

    #[test]
    fn deletions() {
        assert!(Graph::complete(3).delete_vertex(1).is_complete());
        assert_eq!(Graph::complete(3).delete_vertex(1).n(), 2);
        let p = Graph::complete(3).delete_edge(0, 2);
        assert_eq!(p.edge_count(), 2);
        let p4 = Graph::cycle(5).delete_vertex(2);
        assert_eq!(p4.n(), 4);
        assert_eq!(p4.edge_count(), 3);
        assert!(p4.is_connected());
    }

    #[test]
    fn remove_isolated_cases() {
        let mut g = Graph::empty(5);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        g.add_edge(1, 3);
        let h = g.remove_isolated();
        assert!(h.is_complete());
        assert_eq!(h.n(), 3);
        let c5 = Graph::cycle(5);
        assert_eq!(c5.remove_isolated(), c5);
        assert_eq!(Graph::empty(5).remove_isolated().n(), 0);
    }

    #[test]
    fn isolate_vertex_cases() {
        let g = Graph::complete(3).isolate_vertex(0);
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2)]);
        // star centered at 0
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert_eq!(star.isolate_vertex(0).edge_count(), 0);
        let c5 = Graph::cycle(5);
        let mut with_isolated = Graph::empty(4);
        with_isolated.add_edge(0, 1);
        assert_eq!(with_isolated.isolate_vertex(3), with_isolated);
        assert_eq!(c5.isolate_vertex(0).degree(0), 0);
    }

    #[test]
    fn disjoint_cliques_shape() {
        let g = Graph::disjoint_cliques(3);
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 4);
        let mut sizes: Vec<usize> = g.components().iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(Graph::disjoint_cliques(1).n(), 1);
    }

    #[test]
    fn petersen_shape() {
        let g = Graph::petersen();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!(g.vertices().all(|v| g.degree(v) == 3));
        assert!(g.is_connected());
    }

    #[test]
    fn components_of_disconnected() {
        let g = Graph::from_edges(5, &[(0, 1), (2, 3)]);
        assert_eq!(g.components().len(), 3);
        assert!(!g.is_connected());
        assert!(Graph::empty(0).is_connected());
    }
}
