//! Branch-set decompositions and their quotient graphs.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// An ordered collection of pairwise disjoint, nonempty, connected
/// vertex subsets of a host graph. The parts need not cover the host.
///
/// Validity is enforced at construction, so a `Decomposition` in hand is
/// always well formed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    host: Graph,
    parts: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("part {index} is empty")]
    EmptyPart { index: usize },
    #[error("part {index} contains vertex {vertex}, outside the host range")]
    OutOfRange { index: usize, vertex: usize },
    #[error("parts {first} and {second} overlap")]
    Overlap { first: usize, second: usize },
    #[error("part {index} does not induce a connected subgraph")]
    Disconnected { index: usize },
}

impl Decomposition {
    pub fn new(host: Graph, parts: Vec<VertexSet>) -> Result<Self, DecompositionError> {
        let mut union = VertexSet::empty(host.n());
        for (i, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(DecompositionError::EmptyPart { index: i });
            }
            if let Some(v) = part.iter().find(|&v| v >= host.n()) {
                return Err(DecompositionError::OutOfRange { index: i, vertex: v });
            }
            if part.intersects(&union) {
                let first = parts[..i]
                    .iter()
                    .position(|p| p.intersects(part))
                    .expect("overlapping part exists");
                return Err(DecompositionError::Overlap { first, second: i });
            }
            if !host.is_connected_subset(part) {
                return Err(DecompositionError::Disconnected { index: i });
            }
            union.union_with(part);
        }
        Ok(Decomposition { host, parts })
    }

    /// All-singletons decomposition of `host`.
    pub fn singletons(host: Graph) -> Self {
        let parts = host
            .vertices()
            .map(|v| VertexSet::singleton(host.n(), v))
            .collect();
        Decomposition::new(host, parts).expect("singletons are always valid")
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    /// The quotient graph: one vertex per part, adjacent iff the parts
    /// are connected to each other by some host edge.
    pub fn quotient(&self) -> Graph {
        let t = self.parts.len();
        let mut g = Graph::empty(t);
        for i in 0..t {
            for j in (i + 1)..t {
                if self
                    .host
                    .connected_to_each_other(&self.parts[i], &self.parts[j])
                {
                    g.add_edge(i, j);
                }
            }
        }
        debug_assert!(g.check_invariants().is_ok());
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_spoke_pairs_quotient_to_k5() {
        let p = Graph::petersen();
        let parts: Vec<VertexSet> = (0..5)
            .map(|i| VertexSet::from_iter(10, [i, i + 5]))
            .collect();
        let d = Decomposition::new(p.clone(), parts.clone()).unwrap();
        let q = d.quotient();
        assert!(q.is_complete());
        assert_eq!(q.n(), 5);

        // brute-force the ten cross pairs directly
        for i in 0..5 {
            for j in (i + 1)..5 {
                let found = parts[i]
                    .iter()
                    .any(|a| parts[j].iter().any(|b| p.has_edge(a, b)));
                assert!(found, "spoke pairs {i},{j} not joined");
            }
        }
    }

    #[test]
    fn path_decomposition_quotient() {
        let p = Graph::path(4);
        let parts = vec![
            VertexSet::from_iter(4, [0, 1]),
            VertexSet::singleton(4, 2),
            VertexSet::singleton(4, 3),
        ];
        let q = Decomposition::new(p, parts).unwrap().quotient();
        assert_eq!(q.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn singleton_decomposition_is_identity() {
        for g in [Graph::petersen(), Graph::cycle(5), Graph::empty(3)] {
            let d = Decomposition::singletons(g.clone());
            assert_eq!(d.quotient(), g);
            assert_eq!(d.quotient().n(), d.parts().len());
        }
    }

    #[test]
    fn invalid_decompositions_name_the_failure() {
        let g = Graph::path(3);
        let err = Decomposition::new(g.clone(), vec![VertexSet::empty(3)]).unwrap_err();
        assert_eq!(err, DecompositionError::EmptyPart { index: 0 });

        let err = Decomposition::new(
            g.clone(),
            vec![VertexSet::singleton(3, 1), VertexSet::from_iter(3, [1, 2])],
        )
        .unwrap_err();
        assert_eq!(err, DecompositionError::Overlap { first: 0, second: 1 });

        let err =
            Decomposition::new(g.clone(), vec![VertexSet::from_iter(3, [0, 2])]).unwrap_err();
        assert_eq!(err, DecompositionError::Disconnected { index: 0 });

        let err = Decomposition::new(g, vec![VertexSet::singleton(5, 4)]).unwrap_err();
        assert_eq!(err, DecompositionError::OutOfRange { index: 0, vertex: 4 });
    }
}
