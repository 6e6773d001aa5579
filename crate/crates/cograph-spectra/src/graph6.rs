//! graph6 interchange format.
//!
//! Layout: a size prefix (one byte `n + 63` for `n <= 62`, or `'~'` followed
//! by three bytes carrying 18 bits for larger orders), then
//! `ceil(n(n-1)/2 / 6)` data bytes. Each data byte holds six upper-triangle
//! edge bits in column-major order `(0,1), (0,2), (1,2), (0,3), ...`, most
//! significant bit first, offset by 63. An optional `>>graph6<<` header is
//! tolerated on input and never emitted.

use thiserror::Error;

use crate::graph::{Graph, MAX_ORDER};

const OFFSET: u8 = 63;
const HEADER: &[u8] = b">>graph6<<";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {offset}: character 0x{byte:02x} outside graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("truncated graph6 string: need {expected} bytes for order {n}, got {got}")]
    Truncated { n: usize, expected: usize, got: usize },
    #[error("byte {offset}: trailing data after graph of order {n}")]
    TrailingData { offset: usize, n: usize },
    #[error("graph order {n} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge { n: u64 },
}

/// Decodes a graph6 string (optionally prefixed by `>>graph6<<`).
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let base = if bytes.starts_with(HEADER) { HEADER.len() } else { 0 };
    let body = &bytes[base..];
    if body.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (i, &b) in body.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { offset: base + i, byte: b });
        }
    }

    // Size prefix: one byte below '~', otherwise the 18-bit long form.
    // ('~~' starts the 36-bit form; anything that large is out of range here.)
    let (n, size_len) = if body[0] != 126 {
        ((body[0] - OFFSET) as u64, 1)
    } else {
        if body.len() >= 2 && body[1] == 126 {
            let mut v: u64 = 0;
            for i in 0..6 {
                let b = *body.get(2 + i).ok_or(Graph6Error::Truncated {
                    n: 0,
                    expected: base + 8,
                    got: bytes.len(),
                })?;
                v = (v << 6) | (b - OFFSET) as u64;
            }
            return Err(Graph6Error::OrderTooLarge { n: v });
        }
        if body.len() < 4 {
            return Err(Graph6Error::Truncated { n: 0, expected: base + 4, got: bytes.len() });
        }
        let v = ((body[1] - OFFSET) as u64) << 12
            | ((body[2] - OFFSET) as u64) << 6
            | (body[3] - OFFSET) as u64;
        (v, 4)
    };
    if n > MAX_ORDER as u64 {
        return Err(Graph6Error::OrderTooLarge { n });
    }
    let n = n as usize;

    let bit_count = n * n.saturating_sub(1) / 2;
    let data_len = bit_count.div_ceil(6);
    let expected = base + size_len + data_len;
    if bytes.len() < expected {
        return Err(Graph6Error::Truncated { n, expected, got: bytes.len() });
    }
    if bytes.len() > expected {
        return Err(Graph6Error::TrailingData { offset: expected, n });
    }

    let data = &body[size_len..];
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            if (data[bit / 6] - OFFSET) & (1 << (5 - bit % 6)) != 0 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges))
}

/// Encodes a graph as graph6; `parse_graph6(write_graph6(g)) == g` bit for bit.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + OFFSET);
        out.push(((n >> 6) & 0x3f) as u8 + OFFSET);
        out.push((n & 0x3f) as u8 + OFFSET);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}
