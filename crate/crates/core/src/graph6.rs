//! graph6 encoding and decoding.
//!
//! The vertex count is written as one byte `63 + n` for `n <= 62`, as `~`
//! followed by three 6-bit groups for `n <= 258047`, and as `~~` followed by
//! six groups beyond that. The upper triangle follows in column-major order
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ..`), packed six bits per byte, most
//! significant bit first, each byte offset by 63.
//!
//! Decoding is strict so that `emit(parse(s)) == s` for every accepted `s`:
//! non-minimal size headers and non-zero padding bits are rejected.

use thiserror::Error;

use crate::graph::{Graph, GraphBuilder};

const HEADER: &str = ">>graph6<<";
const SMALL_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;
const LARGE_MAX: usize = (1 << 36) - 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph6 error at byte {offset}: {kind}")]
pub struct Graph6Error {
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6ErrorKind {
    #[error("empty input")]
    Empty,
    #[error("byte {0:#04x} is outside the graph6 range 63..=126")]
    BadByte(u8),
    #[error("input ends before the {0} edge bytes are complete")]
    Truncated(usize),
    #[error("unexpected trailing data")]
    TrailingData,
    #[error("vertex count {0} uses a longer header than necessary")]
    NonMinimalSize(usize),
    #[error("padding bits are not zero")]
    NonZeroPadding,
}

fn err(offset: usize, kind: Graph6ErrorKind) -> Graph6Error {
    Graph6Error { offset, kind }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u64, Graph6Error> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok(u64::from(b - 63)),
        Some(&b) => Err(err(offset, Graph6ErrorKind::BadByte(b))),
        None => Err(err(offset, Graph6ErrorKind::Truncated(0))),
    }
}

fn read_groups(bytes: &[u8], start: usize, count: usize) -> Result<u64, Graph6Error> {
    let mut v = 0u64;
    for k in 0..count {
        v = (v << 6) | sextet(bytes, start + k)?;
    }
    Ok(v)
}

fn parse_size(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let first = *bytes.first().ok_or_else(|| err(0, Graph6ErrorKind::Empty))?;
    if first != 126 {
        return Ok((sextet(bytes, 0)? as usize, 1));
    }
    if bytes.get(1) == Some(&126) {
        let n = read_groups(bytes, 2, 6)? as usize;
        if n <= MEDIUM_MAX {
            return Err(err(0, Graph6ErrorKind::NonMinimalSize(n)));
        }
        Ok((n, 8))
    } else {
        let n = read_groups(bytes, 1, 3)? as usize;
        if n <= SMALL_MAX {
            return Err(err(0, Graph6ErrorKind::NonMinimalSize(n)));
        }
        Ok((n, 4))
    }
}

/// Decodes one graph6 string. A leading `>>graph6<<` header is accepted;
/// surrounding whitespace is not.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let (base, body) = match text.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, text.as_bytes()),
    };
    parse_bytes(body).map_err(|mut e| {
        e.offset += base;
        e
    })
}

fn parse_bytes(bytes: &[u8]) -> Result<Graph, Graph6Error> {
    let (n, mut pos) = parse_size(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let nbytes = bits.div_ceil(6);
    if bytes.len() < pos + nbytes {
        return Err(err(bytes.len(), Graph6ErrorKind::Truncated(nbytes)));
    }
    let mut b = GraphBuilder::new(n);
    let mut k = 0usize;
    let mut cur = 0u64;
    let mut left = 0u32;
    for v in 1..n {
        for u in 0..v {
            if left == 0 {
                cur = sextet(bytes, pos)?;
                pos += 1;
                left = 6;
            }
            left -= 1;
            if cur >> left & 1 == 1 {
                b.add_edge(u, v);
            }
            k += 1;
        }
    }
    debug_assert_eq!(k, bits);
    if left > 0 && cur & ((1 << left) - 1) != 0 {
        return Err(err(pos - 1, Graph6ErrorKind::NonZeroPadding));
    }
    if pos != bytes.len() {
        return Err(err(pos, Graph6ErrorKind::TrailingData));
    }
    Ok(b.build())
}

/// Encodes `g` in graph6 without relabeling and without a header.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= LARGE_MAX, "graph too large for graph6");
    let mut out: Vec<u8> = Vec::with_capacity(8 + (n * n) / 12);
    if n <= SMALL_MAX {
        out.push(63 + n as u8);
    } else {
        let groups = if n <= MEDIUM_MAX {
            out.push(126);
            3
        } else {
            out.extend([126, 126]);
            6
        };
        for k in (0..groups).rev() {
            out.push(63 + ((n >> (6 * k)) & 63) as u8);
        }
    }
    let mut cur = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            cur = (cur << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(63 + cur);
                cur = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (cur << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_and_single_vertex() {
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(emit_graph6(&Graph::empty(1)), "@");
        assert_eq!(emit_graph6(&Graph::empty(0)), "?");
    }

    #[test]
    fn petgraph_reference_string() {
        // edges a-c, a-e, b-d, d-e from petgraph's own test
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g), "DQc");
    }

    #[test]
    fn header_is_tolerated() {
        let g = parse_graph6(">>graph6<<A_").unwrap();
        assert_eq!(g, Graph::complete(2));
    }

    #[test]
    fn medium_size_header() {
        let g = Graph::path(63);
        let s = emit_graph6(&g);
        assert_eq!(&s[..4], "~??~");
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn errors_name_offsets() {
        assert_eq!(parse_graph6("").unwrap_err().kind, Graph6ErrorKind::Empty);
        let e = parse_graph6("A_x").unwrap_err();
        assert_eq!(e.offset, 2);
        let e = parse_graph6("C\x20").unwrap_err();
        assert_eq!((e.offset, e.kind), (1, Graph6ErrorKind::BadByte(0x20)));
        let e = parse_graph6("D").unwrap_err();
        assert!(matches!(e.kind, Graph6ErrorKind::Truncated(2)));
        let e = parse_graph6("A`").unwrap_err();
        assert_eq!((e.offset, e.kind), (1, Graph6ErrorKind::NonZeroPadding));
        let e = parse_graph6("~??D").unwrap_err();
        assert_eq!(e.kind, Graph6ErrorKind::NonMinimalSize(5));
        let e = parse_graph6(">>graph6<<A_x").unwrap_err();
        assert_eq!(e.offset, 12);
    }
}
