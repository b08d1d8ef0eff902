//! Graph interchange: the JSON edge list (via serde on [`Graph`]) and graph6.

use super::{Edge, Graph};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

/// Encodes `g` in graph6: the size prefix `N(n)` followed by the upper
/// triangle of the adjacency matrix, column by column, in 6-bit groups.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        push_bits(&mut out, n as u64, 18);
    } else {
        out.extend([126, 126]);
        push_bits(&mut out, n as u64, 36);
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn push_bits(out: &mut Vec<u8>, value: u64, width: u32) {
    for shift in (0..width / 6).rev() {
        out.push(((value >> (6 * shift)) & 0x3f) as u8 + 63);
    }
}

/// Decodes one graph6 line; an optional `>>graph6<<` header is accepted.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!("byte {bad:#x} is outside the graph6 range")));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::Parse("empty graph6 string".into())),
        [126, 126, rest @ ..] => (read_bits(rest, 6)?, &rest[6..]),
        [126, rest @ ..] => (read_bits(rest, 3)?, &rest[3..]),
        [b, rest @ ..] => ((b - 63) as usize, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Parse(format!(
            "graph6 body for n={n} needs {expected} bytes, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push(Edge::new(i, j));
            }
            k += 1;
        }
    }
    if let Some(&last) = body.last() {
        let pad = expected * 6 - bits;
        if pad > 0 && (last - 63) & ((1 << pad) - 1) != 0 {
            return Err(Error::Parse("nonzero padding bits in graph6 string".into()));
        }
    }
    Ok(Graph::from_edge_set(n, edges))
}

fn read_bits(bytes: &[u8], count: usize) -> Result<usize> {
    if bytes.len() < count {
        return Err(Error::Parse("truncated graph6 size field".into()));
    }
    Ok(bytes[..count].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
}
