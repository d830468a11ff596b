//! graph6 encoding of labeled simple graphs.
//!
//! Single-byte order form only (order <= 62). The upper-triangle adjacency
//! bits are taken column-major, x(0,1), x(0,2), x(1,2), x(0,3), ..., packed
//! six per printable character offset by 63. Orders 63 and 64 are supported
//! internally by [`crate::Graph`] but have no graph6 form here.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const HEADER: &str = ">>graph6<<";

/// Largest order representable with a single order byte.
pub const MAX_GRAPH6_ORDER: usize = 62;

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::Graph6Order { order: n });
    }
    let mut out = String::with_capacity(1 + (n * n / 12 + 1));
    out.push((n as u8 + 63) as char);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk <<= 1;
            if g.has_edge(i, j) {
                chunk |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        chunk <<= 6 - filled;
        out.push((chunk + 63) as char);
    }
    Ok(out)
}

pub fn from_graph6(input: &str) -> Result<Graph> {
    let (body, base) = match input.strip_prefix(HEADER) {
        Some(rest) => (rest, HEADER.len()),
        None => (input, 0),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6Parse {
            offset: base,
            reason: "empty input".into(),
        });
    }
    let decode = |b: u8, offset: usize| -> Result<u8> {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6Parse {
                offset,
                reason: format!("byte 0x{b:02x} outside printable graph6 range"),
            });
        }
        Ok(b - 63)
    };
    let n = decode(bytes[0], base)? as usize;
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::Graph6Parse {
            offset: base,
            reason: format!("order {n} exceeds single-byte maximum {MAX_GRAPH6_ORDER}"),
        });
    }
    let nbits = n * (n.saturating_sub(1)) / 2;
    let nchars = nbits.div_ceil(6);
    if bytes.len() != 1 + nchars {
        return Err(Error::Graph6Parse {
            offset: base + bytes.len().min(1 + nchars),
            reason: format!(
                "expected {} data bytes for order {n}, found {}",
                nchars,
                bytes.len() - 1
            ),
        });
    }
    let mut g = Graph::empty(n)?;
    let mut idx = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + idx / 6];
            let value = decode(byte, base + 1 + idx / 6)?;
            if value >> (5 - idx % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            idx += 1;
            if idx == nbits {
                break 'outer;
            }
        }
    }
    // padding bits in the last character must be zero
    if !nbits.is_multiple_of(6) {
        let last = decode(bytes[nchars], base + nchars)?;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6Parse {
                offset: base + nchars,
                reason: "nonzero trailing padding bits".into(),
            });
        }
    } else if nchars > 0 {
        decode(bytes[nchars], base + nchars)?;
    }
    Ok(g)
}

/// Parses newline-delimited graph6 lines, skipping blank lines.
/// Errors carry the 1-based line number of the offending entry.
pub fn read_graph6_lines(input: &str) -> std::result::Result<Vec<Graph>, (usize, Error)> {
    let mut out = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match from_graph6(line) {
            Ok(g) => out.push(g),
            Err(e) => return Err((i + 1, e)),
        }
    }
    Ok(out)
}
