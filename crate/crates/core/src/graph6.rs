//! Short-form graph6 encoding (orders 1..=62).
//!
//! The first byte is `n + 63`. The strict upper triangle follows in the
//! order `(0,1), (0,2), (1,2), (0,3), ...`, six bits per byte, most
//! significant bit first, zero padded, each byte offset by 63.

use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::subset::VertexSubset;

/// Largest order expressible in the one-byte header.
pub const MAX_SHORT_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("invalid graph6 byte {byte:#04x} at offset {offset}")]
    InvalidChar { byte: u8, offset: usize },
    #[error("graph6 order {0} not supported (short form, 1..=62)")]
    UnsupportedOrder(usize),
    #[error("graph6 body has {found} bytes, expected {expected}")]
    Length { expected: usize, found: usize },
    #[error("nonzero padding bits in final graph6 byte")]
    Padding,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidChar { byte, offset });
        }
    }
    let n = (bytes[0] - 63) as usize;
    if n == 63 {
        // 126 introduces the extended header.
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    if n == 0 {
        return Err(Graph6Error::UnsupportedOrder(0));
    }
    let body = &bytes[1..];
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::Length {
            expected,
            found: body.len(),
        });
    }

    let mut adj = alloc::vec![VertexSubset::EMPTY; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let last = body[body.len() - 1] - 63;
        if last & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err(Graph6Error::Padding);
        }
    }
    Ok(Graph::from_rows(adj))
}

pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_SHORT_ORDER {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let mut out: Vec<u8> = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k.is_multiple_of(6) {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push((acc << (6 - k % 6)) + 63);
    }
    // Every byte is in 63..=126.
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}
