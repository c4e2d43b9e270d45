//! Canonical labeling by iterated degree refinement followed by
//! backtracking over the orderings the partition leaves open, keeping
//! the lexicographically smallest adjacency encoding.
//!
//! Two graphs are isomorphic iff their canonical forms are identical.
//! The search skips a candidate vertex when a sibling already tried is
//! its twin (swapping the two is an automorphism), which keeps complete
//! and near-complete graphs linear instead of factorial.

use std::cmp::Ordering;

use smallvec::SmallVec;

use crate::error::Error;
use crate::graph::{Graph, VertexSet};

/// Default vertex cap for canonical labeling.
pub const DEFAULT_CANON_CAP: usize = 12;

/// A vertex bijection certifying an isomorphism; `perm[v]` is the image
/// of `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsomorphismCertificate {
    pub perm: Vec<usize>,
}

impl IsomorphismCertificate {
    pub fn identity(n: usize) -> Self {
        IsomorphismCertificate { perm: (0..n).collect() }
    }
}

/// Canonical form under the default cap.
pub fn canonical_form(g: &Graph) -> Result<(Graph, IsomorphismCertificate), Error> {
    canonical_form_with_cap(g, DEFAULT_CANON_CAP)
}

/// Canonical representative of `g`'s isomorphism class plus the
/// relabeling `perm: original -> canonical` achieving it.
pub fn canonical_form_with_cap(
    g: &Graph,
    cap: usize,
) -> Result<(Graph, IsomorphismCertificate), Error> {
    if g.n() > cap {
        return Err(Error::CapacityExceeded { operation: "canonical form", n: g.n(), cap });
    }
    let classes = refine(g);
    let mut search = Search::new(g, &classes);
    search.dfs(0);
    let placed = search.best.expect("search always reaches a leaf").1;
    let mut perm = vec![0usize; g.n()];
    for (pos, &v) in placed.iter().enumerate() {
        perm[v] = pos;
    }
    let canon = g.relabel(&perm);
    Ok((canon, IsomorphismCertificate { perm }))
}

/// True iff the canonical forms coincide.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool, Error> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let mut dg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = h.vertices().map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(canonical_form(g)?.0 == canonical_form(h)?.0)
}

/// Iterated degree refinement. Returns an ordered partition of the
/// vertices; the order is an isomorphism invariant.
fn refine(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let mut classes: Vec<Vec<usize>> = degrees
        .iter()
        .map(|&d| (0..n).filter(|&v| g.degree(v) == d).collect())
        .collect();

    loop {
        // signature of v: neighbor count per class, in class order
        let mut class_of = vec![0usize; n];
        for (c, members) in classes.iter().enumerate() {
            for &v in members {
                class_of[v] = c;
            }
        }
        let signature = |v: usize| -> Vec<usize> {
            let mut sig = vec![0usize; classes.len()];
            for u in g.neighbors(v).iter() {
                sig[class_of[u]] += 1;
            }
            sig
        };
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(classes.len());
        for members in &classes {
            let mut keyed: Vec<(Vec<usize>, usize)> =
                members.iter().map(|&v| (signature(v), v)).collect();
            keyed.sort();
            let mut run: Vec<usize> = Vec::new();
            let mut run_sig: Option<&Vec<usize>> = None;
            for (sig, v) in &keyed {
                if run_sig != Some(sig) {
                    if !run.is_empty() {
                        next.push(std::mem::take(&mut run));
                    }
                    run_sig = Some(sig);
                }
                run.push(*v);
            }
            if !run.is_empty() {
                next.push(run);
            }
        }
        if next.len() == classes.len() {
            return next;
        }
        classes = next;
    }
}

/// Column-major upper-triangle adjacency bits, most significant first,
/// so word comparison is lexicographic bit comparison.
#[derive(Clone, Default)]
struct BitString {
    words: SmallVec<[u64; 2]>,
    len: usize,
}

impl BitString {
    fn push(&mut self, bit: bool) {
        if self.len % 64 == 0 {
            self.words.push(0);
        }
        if bit {
            self.words[self.len / 64] |= 1u64 << (63 - self.len % 64);
        }
        self.len += 1;
    }

    fn truncate(&mut self, len: usize) {
        debug_assert!(len <= self.len);
        self.words.truncate(len.div_ceil(64));
        if len % 64 != 0 {
            *self.words.last_mut().unwrap() &= !0u64 << (64 - len % 64);
        }
        self.len = len;
    }

    /// Compare the first `len` bits of both strings.
    fn cmp_prefix(&self, other: &BitString, len: usize) -> Ordering {
        debug_assert!(len <= self.len && len <= other.len);
        for i in 0..len / 64 {
            match self.words[i].cmp(&other.words[i]) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        let rest = len % 64;
        if rest != 0 {
            let i = len / 64;
            let a = self.words[i] >> (64 - rest);
            let b = other.words[i] >> (64 - rest);
            return a.cmp(&b);
        }
        Ordering::Equal
    }
}

struct Search<'g> {
    g: &'g Graph,
    position_class: Vec<usize>,
    class_members: Vec<Vec<usize>>,
    placed: Vec<usize>,
    placed_set: VertexSet,
    cur: BitString,
    best: Option<(BitString, Vec<usize>)>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, classes: &[Vec<usize>]) -> Self {
        let mut position_class = Vec::with_capacity(g.n());
        for (c, members) in classes.iter().enumerate() {
            position_class.extend(std::iter::repeat_n(c, members.len()));
        }
        Search {
            g,
            position_class,
            class_members: classes.to_vec(),
            placed: Vec::with_capacity(g.n()),
            placed_set: VertexSet::empty(g.n()),
            cur: BitString::default(),
            best: None,
        }
    }

    fn dfs(&mut self, pos: usize) {
        let n = self.g.n();
        if pos == n {
            let better = match &self.best {
                None => true,
                Some((bits, _)) => self.cur.cmp_prefix(bits, self.cur.len) == Ordering::Less,
            };
            if better {
                self.best = Some((self.cur.clone(), self.placed.clone()));
            }
            return;
        }
        let class = self.position_class[pos];
        let candidates: Vec<usize> = self.class_members[class]
            .iter()
            .copied()
            .filter(|&v| !self.placed_set.contains(v))
            .collect();
        let mut tried: Vec<usize> = Vec::new();
        for v in candidates {
            if tried.iter().any(|&w| self.twins(v, w)) {
                continue;
            }
            tried.push(v);
            let saved = self.cur.len;
            for q in 0..pos {
                self.cur.push(self.g.has_edge(v, self.placed[q]));
            }
            let viable = match &self.best {
                None => true,
                Some((bits, _)) => {
                    self.cur.cmp_prefix(bits, self.cur.len) != Ordering::Greater
                }
            };
            if viable {
                self.placed.push(v);
                self.placed_set.insert(v);
                self.dfs(pos + 1);
                self.placed.pop();
                self.placed_set.remove(v);
            }
            self.cur.truncate(saved);
        }
    }

    /// Swapping twins is an automorphism, so only one of the pair needs
    /// exploring.
    fn twins(&self, u: usize, w: usize) -> bool {
        let mut a = self.g.neighbors(u).clone();
        a.remove(w);
        let mut b = self.g.neighbors(w).clone();
        b.remove(u);
        a == b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_cycles_share_canonical_form() {
        let a = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let b = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]);
        assert_eq!(canonical_form(&a).unwrap().0, canonical_form(&b).unwrap().0);
        assert!(is_isomorphic(&a, &b).unwrap());
    }

    #[test]
    fn triangle_differs_from_path() {
        let k3 = Graph::complete(3);
        let p3 = Graph::path(3);
        assert_ne!(canonical_form(&k3).unwrap().0, canonical_form(&p3).unwrap().0);
        assert!(!is_isomorphic(&k3, &p3).unwrap());
        assert!(!is_isomorphic(&Graph::complete(4), &Graph::cycle(4)).unwrap());
    }

    #[test]
    fn certificate_maps_edges_to_edges() {
        let g = Graph::petersen();
        let (canon, cert) = canonical_form(&g).unwrap();
        for (u, v) in g.edges() {
            assert!(canon.has_edge(cert.perm[u], cert.perm[v]));
        }
        assert_eq!(canon.edge_count(), g.edge_count());
    }

    #[test]
    fn idempotent_with_identity_certificate() {
        for g in [
            Graph::petersen(),
            Graph::cycle(6),
            Graph::complete(5),
            Graph::disjoint_cliques(3),
            Graph::empty(0),
            Graph::from_edges(6, &[(0, 3), (1, 3), (2, 5), (3, 5)]),
        ] {
            let (canon, _) = canonical_form(&g).unwrap();
            let (again, cert) = canonical_form(&canon).unwrap();
            assert_eq!(again, canon);
            assert_eq!(cert, IsomorphismCertificate::identity(canon.n()));
        }
    }

    #[test]
    fn symmetric_graphs_stay_fast() {
        // exercise the twin skip: factorial blowups would hang here
        for g in [Graph::complete(12), Graph::empty(12), Graph::cycle(12)] {
            let (canon, _) = canonical_form(&g).unwrap();
            assert_eq!(canon.edge_count(), g.edge_count());
        }
        let k66 = {
            let mut g = Graph::empty(12);
            for i in 0..6 {
                for j in 6..12 {
                    g.add_edge(i, j);
                }
            }
            g
        };
        assert_eq!(canonical_form(&k66).unwrap().0.edge_count(), 36);
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::empty(13);
        assert!(matches!(
            canonical_form(&g),
            Err(Error::CapacityExceeded { n: 13, cap: 12, .. })
        ));
        assert!(canonical_form_with_cap(&g, 13).is_ok());
    }
}
