use thiserror::Error;

/// Errors shared across the library: capacity guards and input parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{operation}: graph on {n} vertices exceeds cap of {cap}")]
    CapacityExceeded {
        operation: &'static str,
        n: usize,
        cap: usize,
    },
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
}

/// A graph6 parse failure, pointing at the byte that caused it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph6 parse error at byte offset {offset}: {kind}")]
pub struct Graph6Error {
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6ErrorKind {
    #[error("empty input, expected a length header")]
    Empty,
    #[error("byte {byte:#04x} outside the printable range [63, 126]")]
    ByteOutOfRange { byte: u8 },
    #[error("malformed length header: {reason}")]
    MalformedHeader { reason: &'static str },
    #[error("input ends early: expected {expected} adjacency bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing garbage after {expected} adjacency bytes")]
    TrailingGarbage { expected: usize },
    #[error("nonzero padding bits in the final adjacency byte")]
    NonzeroPadding,
}

impl Graph6Error {
    pub(crate) fn at(offset: usize, kind: Graph6ErrorKind) -> Self {
        Graph6Error { offset, kind }
    }
}
