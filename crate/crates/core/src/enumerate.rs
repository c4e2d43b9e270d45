//! Built-in enumeration of small graphs, one representative per
//! isomorphism class: each level extends the previous one by a new
//! vertex with every possible neighborhood, deduplicating through
//! canonical forms. Self-contained up to the cap; larger orders are
//! meant to be ingested from an external graph6 stream.

use std::collections::HashSet;

use crate::canon::canonical_form_with_cap;
use crate::error::Error;
use crate::graph::Graph;
use crate::graph6::to_graph6;

/// Largest `n` the built-in enumeration accepts.
pub const DEFAULT_ENUM_CAP: usize = 8;

/// One canonical representative per isomorphism class on exactly `n`
/// vertices, in a deterministic order (sorted by graph6 line).
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>, Error> {
    let mut levels = enumeration_levels(n)?;
    let mut level = levels.pop().expect("levels cover 0..=n");
    if connected_only {
        level.retain(Graph::is_connected);
    }
    Ok(level)
}

/// All levels `0..=n_max` at once; level `k` holds every class on `k`
/// vertices. Cheaper than repeated `enumerate_graphs` calls when a
/// whole range is wanted.
pub fn enumeration_levels(n_max: usize) -> Result<Vec<Vec<Graph>>, Error> {
    if n_max > DEFAULT_ENUM_CAP {
        return Err(Error::CapacityExceeded {
            operation: "built-in enumeration",
            n: n_max,
            cap: DEFAULT_ENUM_CAP,
        });
    }
    let mut levels: Vec<Vec<Graph>> = vec![vec![Graph::empty(0)]];
    for k in 0..n_max {
        let mut seen: HashSet<Graph> = HashSet::new();
        for g in &levels[k] {
            // add vertex k joined to every subset of the old vertices
            for mask in 0u32..(1 << k) {
                let mut child = Graph::empty(k + 1);
                for (u, v) in g.edges() {
                    child.add_edge(u, v);
                }
                for v in 0..k {
                    if mask >> v & 1 == 1 {
                        child.add_edge(v, k);
                    }
                }
                let canon = canonical_form_with_cap(&child, DEFAULT_ENUM_CAP)
                    .expect("children stay under the cap")
                    .0;
                seen.insert(canon);
            }
        }
        let mut level: Vec<Graph> = seen.into_iter().collect();
        level.sort_by_key(to_graph6);
        levels.push(level);
    }
    Ok(levels)
}
