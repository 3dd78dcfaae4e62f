//! The graph6 text format.
//!
//! `N(n)` followed by the upper triangle of the adjacency matrix read column
//! by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed big-endian into
//! 6-bit groups, each offset by 63 to land in printable ASCII.

use super::{Edge, Graph, GraphError};

const HEADER: &str = ">>graph6<<";

fn push_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + n * n / 12);
    push_size(n, &mut out);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn err(position: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Graph6 {
        position,
        reason: reason.into(),
    }
}

pub fn decode(text: &str) -> Result<Graph, GraphError> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (offset, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    let value = |pos: usize| -> Result<usize, GraphError> {
        match body.get(pos) {
            None => Err(err(offset + pos, "unexpected end of input")),
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as usize),
            Some(&b) => Err(err(offset + pos, format!("byte {b:#04x} outside 63..=126"))),
        }
    };
    let (n, mut pos) = if body.first() == Some(&126) {
        if body.get(1) == Some(&126) {
            let mut n = 0;
            for p in 2..8 {
                n = (n << 6) | value(p)?;
            }
            (n, 8)
        } else {
            let mut n = 0;
            for p in 1..4 {
                n = (n << 6) | value(p)?;
            }
            (n, 4)
        }
    } else {
        (value(0)?, 1)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if body.len() != pos + needed {
        return Err(err(
            offset + body.len().min(pos + needed),
            format!(
                "expected {needed} adjacency bytes for {n} vertices, found {}",
                body.len().saturating_sub(pos)
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    let mut chunk = 0;
    for j in 1..n {
        for i in 0..j {
            if k % 6 == 0 {
                chunk = value(pos)?;
                pos += 1;
            }
            if chunk >> (5 - k % 6) & 1 == 1 {
                edges.push(Edge::new(i, j));
            }
            k += 1;
        }
    }
    if k % 6 != 0 && chunk & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(err(offset + pos - 1, "non-zero padding bits"));
    }
    Ok(Graph::from_edge_set(n, edges))
}
