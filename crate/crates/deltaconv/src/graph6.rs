//! graph6 encoding (short form, n <= 62).
//!
//! One graph per ASCII line: a size byte `n + 63`, then the upper-triangle
//! adjacency bits in column order (0,1), (0,2), (1,2), (0,3), ... packed
//! six per byte, most significant first, each byte offset by 63. The long
//! form for n > 62 is deliberately not supported.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte {byte:#04x} at position {pos} outside the graph6 range 63..=126")]
    BadCharacter { pos: usize, byte: u8 },
    #[error("graph on {0} vertices needs the long form, which is not supported")]
    UnsupportedLongForm(usize),
    #[error("expected {expected} adjacency bytes for n={n}, found {found}")]
    BadLength {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const HEADER: &str = ">>graph6<<";

fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Decodes one graph6 line. A leading `>>graph6<<` header is stripped and
/// trailing whitespace ignored.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim_end();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadCharacter { pos, byte: b });
        }
    }
    if bytes[0] == 126 {
        // decode the long-form size when present, for the error message
        let n = if bytes.len() >= 4 && bytes[1] != 126 {
            ((bytes[1] - 63) as usize) << 12
                | ((bytes[2] - 63) as usize) << 6
                | (bytes[3] - 63) as usize
        } else {
            63
        };
        return Err(Graph6Error::UnsupportedLongForm(n));
    }
    let n = (bytes[0] - 63) as usize;
    let body = &bytes[1..];
    let expected = if n == 0 { 0 } else { body_len(n) };
    if body.len() != expected {
        return Err(Graph6Error::BadLength {
            n,
            expected,
            found: body.len(),
        });
    }

    let mut edges = Vec::new();
    let mut pos = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = (body[pos / 6] - 63) as u32;
            if byte >> (5 - pos % 6) & 1 != 0 {
                edges.push((u, v));
            }
            pos += 1;
        }
    }
    Ok(Graph::from_edges(n, edges)?)
}

/// Encodes a graph as a graph6 line (no trailing newline).
pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.vertex_count();
    if n > 62 {
        return Err(Graph6Error::UnsupportedLongForm(n));
    }
    let mut out = vec![63 + n as u8];
    if n > 1 {
        out.resize(1 + body_len(n), 63);
        let mut pos = 0usize;
        for v in 1..n {
            for u in 0..v {
                if g.has_edge(u, v) {
                    out[1 + pos / 6] += 1 << (5 - pos % 6);
                }
                pos += 1;
            }
        }
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
