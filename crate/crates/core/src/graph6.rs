//! graph6 encoding for graphs with at most [`MAX_VERTICES`] vertices.
//!
//! Only the short form is produced: one header byte `n + 63`, followed by the
//! upper triangle of the adjacency matrix read column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed six bits per byte, most
//! significant first, zero padded, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

/// Encodes `g` in graph6.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = vec![(n as u8) + 63];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses one graph6 line. A trailing newline and the optional `>>graph6<<`
/// header are accepted; anything else after the encoded graph is an error.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let start = if text.starts_with(HEADER) { HEADER.len() } else { 0 };
    let mut end = bytes.len();
    if bytes[start..end].ends_with(b"\n") {
        end -= 1;
        if bytes[start..end].ends_with(b"\r") {
            end -= 1;
        }
    }
    let body = &bytes[start..end];
    let Some(&first) = body.first() else {
        return Err(err(start, "empty input"));
    };
    if !(63..=126).contains(&first) {
        return Err(err(start, format!("byte {first:#04x} is not a graph6 character")));
    }
    if first == 126 {
        // Long form; decode the size only to report it.
        let n = body
            .get(1..4)
            .filter(|s| s.iter().all(|b| (63..=126).contains(b)))
            .map(|s| s.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize));
        return Err(match n {
            Some(n) => Error::TooManyVertices { n, max: MAX_VERTICES },
            None => err(start + 1, "truncated long-form header"),
        });
    }
    let n = (first - 63) as usize;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let data = &body[1..];
    if data.len() < nbytes {
        return Err(err(
            start + body.len(),
            format!("expected {nbytes} data bytes for {n} vertices, found {}", data.len()),
        ));
    }
    if data.len() > nbytes {
        return Err(err(start + 1 + nbytes, "trailing bytes after graph"));
    }
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(start + 1 + i, format!("byte {b:#04x} is not a graph6 character")));
        }
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if !nbits.is_multiple_of(6) {
        let last = data[nbytes - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(start + nbytes, "nonzero padding bits"));
        }
    }
    Ok(g)
}

impl Graph {
    pub fn to_graph6(&self) -> String {
        to_graph6(self)
    }
}
