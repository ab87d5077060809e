//! graph6 codec for orders 1..=62.
//!
//! The order is a single byte `n + 63`. Upper-triangle bits follow in the
//! order `(0,1), (0,2), (1,2), (0,3), ...`, packed big-endian into 6-bit
//! groups, zero-padded, each emitted as `group + 63`.

use crate::error::{Error, Graph6ErrorKind, Result};
use crate::graph::Graph;

pub const HEADER: &str = ">>graph6<<";
pub const MAX_ORDER: usize = 62;

fn err(offset: usize, kind: Graph6ErrorKind) -> Error {
    Error::Graph6 { offset, kind }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let (&first, rest) = bytes.split_first().ok_or(err(0, Graph6ErrorKind::Empty))?;
    if !(63..=126).contains(&first) {
        return Err(err(0, Graph6ErrorKind::InvalidByte(first)));
    }
    if first == 126 {
        return Err(err(0, Graph6ErrorKind::OrderTooLarge));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(err(0, Graph6ErrorKind::ZeroOrder));
    }

    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    for (i, &b) in rest.iter().enumerate().take(expected) {
        if !(63..=126).contains(&b) {
            return Err(err(i + 1, Graph6ErrorKind::InvalidByte(b)));
        }
    }
    if rest.len() < expected {
        return Err(err(
            bytes.len(),
            Graph6ErrorKind::Truncated {
                expected,
                found: rest.len(),
            },
        ));
    }
    if rest.len() > expected {
        return Err(err(expected + 1, Graph6ErrorKind::TrailingBytes));
    }

    let bit = |k: usize| ((rest[k / 6] - 63) >> (5 - k % 6)) & 1 == 1;
    if (nbits..expected * 6).any(bit) {
        return Err(err(expected, Graph6ErrorKind::NonZeroPadding));
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Parses one line of a graph6 file, tolerating a leading header and
/// trailing line terminators. Returns `None` for blank lines.
pub fn parse_graph6_line(line: &str) -> Option<Result<Graph>> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    if line.is_empty() {
        None
    } else {
        Some(parse_graph6(line))
    }
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::InvalidOrder {
            what: "graph6 encoding",
            n,
        });
    }
    let nbits = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | g.has_edge(i, j) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
