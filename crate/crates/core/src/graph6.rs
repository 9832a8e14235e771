//! graph6 encoding and decoding.
//!
//! Layout: the order `n` as one byte `n + 63` when `n <= 62`, otherwise
//! byte 126 followed by three bytes holding `n` in 18 bits (big-endian 6-bit
//! groups, each + 63). Then the upper triangle of the adjacency matrix in
//! column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed big-endian six
//! bits per byte, zero padded, each byte + 63.

use alloc::string::String;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::graph::{Graph, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} outside the printable range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("adjacency section truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{0} excess bytes after the adjacency section")]
    Excess(usize),
    #[error("graph order {0} is not supported (1..={MAX_ORDER})")]
    Order(usize),
}

fn bytes_for_order(n: usize) -> usize {
    let bits = n * n.saturating_sub(1) / 2;
    bits.div_ceil(6)
}

fn push_order(out: &mut String, n: usize) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
}

pub(crate) fn encode_rows<S: VertexSet>(n: usize, rows: &[S]) -> String {
    let mut out = String::with_capacity(4 + bytes_for_order(n));
    push_order(&mut out, n);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for row in &rows[..j] {
            acc = (acc << 1) | u8::from(row.contains(j));
            k += 1;
            if k == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push(((acc << (6 - k)) + 63) as char);
    }
    out
}

/// Encodes `g` without a trailing newline.
pub fn encode(g: &Graph) -> String {
    dispatch!(g, |rows| encode_rows(g.order(), rows))
}

/// Decodes one graph6 record. Surrounding whitespace (including the line
/// terminator) and an optional `>>graph6<<` header are ignored.
pub fn decode(s: &str) -> Result<Graph, Graph6Error> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadByte { offset, byte });
        }
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        // eight-byte form, only used for n >= 258048
        return Err(Graph6Error::Order(usize::MAX));
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated { expected: 4, found: bytes.len() });
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    };
    if n == 0 || n > MAX_ORDER {
        return Err(Graph6Error::Order(n));
    }
    let expected = bytes_for_order(n);
    if body.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(Graph6Error::Excess(body.len() - expected));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - 63;
            if (byte >> (5 - bit % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Ok(Graph::from_edges(n, edges).expect("upper-triangle bits describe a simple graph"))
}
