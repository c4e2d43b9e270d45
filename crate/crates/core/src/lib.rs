//! Exact combinatorial machinery for checking minor- and coloring-based
//! statements on small graphs: quotients over connected branch sets,
//! clique minors, exact chromatic numbers, graph homomorphisms, and a
//! harness that sweeps statement checks over graph streams.

pub mod canon;
pub mod color;
pub mod decomposition;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod hom;
pub mod minor;
pub mod oracle;
pub mod validate;

pub use error::Error;
pub use graph::{Graph, VertexSet};
