//! The graph6 line format, bit-exact.
//!
//! Header: `n < 63` is a single byte `n+63`; `63 <= n < 258048` is byte
//! 126 followed by three bytes carrying `n` in big-endian 6-bit groups,
//! each offset by 63; larger `n` (up to 2^36 - 1) uses byte 126 twice
//! then six such groups. Adjacency is the upper triangle read column by
//! column (column `j`, rows `0..j`), packed big-endian into 6-bit
//! groups, zero padded, every group offset by 63.
//!
//! Decoding is strict: non-minimal headers, short or long payloads and
//! nonzero padding bits are all rejected with the byte offset.

use crate::error::{Graph6Error, Graph6ErrorKind as Kind};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const LONG_MARK: u8 = 126;
const SHORT_MAX: u64 = 62;
const MEDIUM_MAX: u64 = 258_047;
const FORMAT_MAX: u64 = (1 << 36) - 1;

/// Decode one graph6 line (without the trailing newline).
pub fn from_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=LONG_MARK).contains(&b) {
            return Err(Graph6Error::at(i, Kind::ByteOutOfRange { byte: b }));
        }
    }
    let (n, header_len) = decode_header(bytes)?;
    let n_usize = usize::try_from(n).expect("n fits usize");
    let bits = n_usize * n_usize.saturating_sub(1) / 2;
    let payload_len = bits.div_ceil(6);
    let found = bytes.len() - header_len;
    if found < payload_len {
        return Err(Graph6Error::at(
            bytes.len(),
            Kind::Truncated { expected: payload_len, found },
        ));
    }
    if found > payload_len {
        return Err(Graph6Error::at(
            header_len + payload_len,
            Kind::TrailingGarbage { expected: payload_len },
        ));
    }

    let mut g = Graph::empty(n_usize);
    let mut k = 0usize; // bit cursor over the upper triangle
    'cols: for j in 1..n_usize {
        for i in 0..j {
            let byte = bytes[header_len + k / 6] - OFFSET;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
            if k == bits {
                break 'cols;
            }
        }
    }
    // padding bits beyond the triangle must be zero
    for k in bits..payload_len * 6 {
        let byte = bytes[header_len + k / 6] - OFFSET;
        if byte >> (5 - k % 6) & 1 == 1 {
            return Err(Graph6Error::at(header_len + k / 6, Kind::NonzeroPadding));
        }
    }
    debug_assert!(g.check_invariants().is_ok());
    Ok(g)
}

fn decode_header(bytes: &[u8]) -> Result<(u64, usize), Graph6Error> {
    match *bytes {
        [] => Err(Graph6Error::at(0, Kind::Empty)),
        [LONG_MARK, LONG_MARK, ..] => {
            let n = decode_groups(bytes, 2, 6)?;
            if n <= MEDIUM_MAX {
                return Err(Graph6Error::at(
                    0,
                    Kind::MalformedHeader { reason: "eight-byte form used for n < 258048" },
                ));
            }
            Ok((n, 8))
        }
        [LONG_MARK, ..] => {
            let n = decode_groups(bytes, 1, 3)?;
            if n <= SHORT_MAX {
                return Err(Graph6Error::at(
                    0,
                    Kind::MalformedHeader { reason: "four-byte form used for n < 63" },
                ));
            }
            Ok((n, 4))
        }
        [b, ..] => Ok(((b - OFFSET) as u64, 1)),
    }
}

fn decode_groups(bytes: &[u8], start: usize, count: usize) -> Result<u64, Graph6Error> {
    if bytes.len() < start + count {
        return Err(Graph6Error::at(
            bytes.len(),
            Kind::MalformedHeader { reason: "length header cut short" },
        ));
    }
    let mut n = 0u64;
    for &b in &bytes[start..start + count] {
        n = n << 6 | (b - OFFSET) as u64;
    }
    Ok(n)
}

/// Encode a graph as its canonical-length graph6 line (no newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n() as u64;
    assert!(n <= FORMAT_MAX, "graph6 caps at 2^36 - 1 vertices");
    let mut out = Vec::new();
    if n <= SHORT_MAX {
        out.push(n as u8 + OFFSET);
    } else if n <= MEDIUM_MAX {
        out.push(LONG_MARK);
        encode_groups(&mut out, n, 3);
    } else {
        out.push(LONG_MARK);
        out.push(LONG_MARK);
        encode_groups(&mut out, n, 6);
    }
    let n = g.n();
    let mut group = 0u8;
    let mut filled = 0usize;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + OFFSET);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn encode_groups(out: &mut Vec<u8>, n: u64, count: usize) {
    for k in (0..count).rev() {
        out.push(((n >> (6 * k)) & 0x3f) as u8 + OFFSET);
    }
}
