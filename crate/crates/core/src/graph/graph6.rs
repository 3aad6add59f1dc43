//! graph6 encoding (headerless; short form for n <= 62, long form above).

use super::{Graph, GraphError};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u32, GraphError> {
    match bytes.get(offset) {
        None => Err(err(offset, "unexpected end of input")),
        Some(&b) if (63..=126).contains(&b) => Ok(u32::from(b - 63)),
        Some(&b) => Err(err(offset, format!("byte 0x{b:02x} outside range 63..=126"))),
    }
}

/// Parses one graph6 string. A trailing line terminator and the optional
/// `>>graph6<<` header are tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let (start, body) = match text.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, text),
    };
    let bytes = body.as_bytes();
    let at = |i: usize| start + i;

    let (n, mut pos) = match bytes.first() {
        None => return Err(err(at(0), "empty input")),
        Some(b'~') => {
            if bytes.get(1) == Some(&b'~') {
                let mut n: u64 = 0;
                for i in 2..8 {
                    n = (n << 6) | u64::from(sextet(bytes, i).map_err(|e| shift(e, start))?);
                }
                (n as usize, 8)
            } else {
                let mut n: usize = 0;
                for i in 1..4 {
                    n = (n << 6) | sextet(bytes, i).map_err(|e| shift(e, start))? as usize;
                }
                (n, 4)
            }
        }
        Some(_) => (sextet(bytes, 0).map_err(|e| shift(e, start))? as usize, 1),
    };
    if n == 0 {
        return Err(err(at(0), "graph has no vertices"));
    }
    if n > MAX_VERTICES {
        return Err(err(at(0), format!("{n} vertices exceeds capacity {MAX_VERTICES}")));
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let total_bits = n * (n - 1) / 2;
    let needed = total_bits.div_ceil(6);
    let expected_len = pos + needed;
    if bytes.len() < expected_len {
        return Err(err(
            at(bytes.len()),
            format!("truncated: expected {expected_len} bytes, found {}", bytes.len()),
        ));
    }
    if bytes.len() > expected_len {
        return Err(err(at(expected_len), "trailing bytes after adjacency data"));
    }

    let mut bit = 0usize;
    let (mut i, mut j) = (0usize, 1usize);
    while bit < total_bits {
        let word = sextet(bytes, pos).map_err(|e| shift(e, start))?;
        for k in (0..6).rev() {
            if bit == total_bits {
                break;
            }
            if (word >> k) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            bit += 1;
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
        pos += 1;
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

fn shift(e: GraphError, by: usize) -> GraphError {
    match e {
        GraphError::Graph6 { offset, reason } => GraphError::Graph6 {
            offset: offset + by,
            reason,
        },
        other => other,
    }
}

/// Encodes a graph in graph6 (no header, no line terminator).
pub fn serialize_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::with_capacity(4 + n * n / 12);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
