//! graph6 and digraph6 encodings plus a plain edge-list reader.
//!
//! Only the single-byte order field is supported, which limits graphs to
//! 62 vertices. Bits are packed six to a byte, most significant first, and
//! offset by 63. graph6 walks the upper triangle column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`); digraph6 is a `&` followed by the
//! full adjacency matrix in row-major order.

use thiserror::Error;

use crate::graph::{Digraph, Graph, MAX_ORDER};

pub const GRAPH6_HEADER: &str = ">>graph6<<";
pub const DIGRAPH6_HEADER: &str = ">>digraph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("empty input")]
    Empty,
    #[error("malformed order field")]
    BadLength,
    #[error("order {0} exceeds the supported maximum of 62")]
    TooLarge(usize),
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    InvalidChar { offset: usize, byte: u8 },
    #[error("expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{0} trailing bytes after the encoded graph")]
    TrailingBytes(usize),
    #[error("nonzero padding bits")]
    NonzeroPadding,
    #[error("missing '&' prefix for digraph6")]
    NotDigraph6,
    #[error("self arc in digraph6 data at vertex {0}")]
    SelfArc(usize),
    #[error("edge list: {0}")]
    EdgeList(String),
}

fn encode_bits(out: &mut String, bits: impl Iterator<Item = bool>) {
    let mut acc = 0u8;
    let mut len = 0;
    for b in bits {
        acc = (acc << 1) | b as u8;
        len += 1;
        if len == 6 {
            out.push((acc + 63) as char);
            acc = 0;
            len = 0;
        }
    }
    if len > 0 {
        out.push(((acc << (6 - len)) + 63) as char);
    }
}

/// Decodes `count` bits from `data`, checking the byte range, exact length and
/// zero padding.
fn decode_bits(data: &[u8], offset: usize, count: usize) -> Result<Vec<bool>, CodecError> {
    let expected = count.div_ceil(6);
    if data.len() < expected {
        return Err(CodecError::Truncated { expected, found: data.len() });
    }
    if data.len() > expected {
        return Err(CodecError::TrailingBytes(data.len() - expected));
    }
    let mut bits = Vec::with_capacity(expected * 6);
    for (i, &byte) in data.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(CodecError::InvalidChar { offset: offset + i, byte });
        }
        let v = byte - 63;
        for k in (0..6).rev() {
            bits.push(v >> k & 1 == 1);
        }
    }
    if bits[count..].iter().any(|&b| b) {
        return Err(CodecError::NonzeroPadding);
    }
    bits.truncate(count);
    Ok(bits)
}

fn decode_order(byte: Option<&u8>, offset: usize) -> Result<usize, CodecError> {
    match byte {
        None => Err(CodecError::Empty),
        Some(&126) => Err(CodecError::TooLarge(MAX_ORDER + 1)),
        Some(&b) if (63..126).contains(&b) => {
            let n = (b - 63) as usize;
            if n > MAX_ORDER {
                Err(CodecError::TooLarge(n))
            } else {
                Ok(n)
            }
        }
        Some(&b) => Err(CodecError::InvalidChar { offset, byte: b }),
    }
}

fn strip_line(text: &str) -> &str {
    text.trim_end_matches(['\n', '\r'])
}

/// Parses one graph6 line, with or without the `>>graph6<<` header.
pub fn parse_graph6(text: &str) -> Result<Graph, CodecError> {
    let line = strip_line(text);
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let n = decode_order(bytes.first(), 0)?;
    let bits = decode_bits(&bytes[1..], 1, n * n.saturating_sub(1) / 2)?;
    let mut g = Graph::empty(n).map_err(|_| CodecError::TooLarge(n))?;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[k] {
                g.add_edge(u, v).expect("labels in range");
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut s = String::with_capacity(1 + (n * n / 12) + 1);
    s.push((n as u8 + 63) as char);
    encode_bits(&mut s, (1..n).flat_map(|v| (0..v).map(move |u| g.has_edge(u, v))));
    s
}

pub fn to_digraph6(d: &Digraph) -> String {
    let n = d.order();
    let mut s = String::with_capacity(2 + n * n / 6 + 1);
    s.push('&');
    s.push((n as u8 + 63) as char);
    encode_bits(&mut s, (0..n).flat_map(|u| (0..n).map(move |v| d.has_arc(u, v))));
    s
}

pub fn parse_digraph6(text: &str) -> Result<Digraph, CodecError> {
    let line = strip_line(text);
    let line = line.strip_prefix(DIGRAPH6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    match bytes.first() {
        None => return Err(CodecError::Empty),
        Some(b'&') => {}
        Some(_) => return Err(CodecError::NotDigraph6),
    }
    let n = decode_order(bytes.get(1), 1)?;
    let bits = decode_bits(&bytes[2..], 2, n * n)?;
    let mut d = Digraph::empty(n).map_err(|_| CodecError::TooLarge(n))?;
    for u in 0..n {
        for v in 0..n {
            if bits[u * n + v] {
                if u == v {
                    return Err(CodecError::SelfArc(u));
                }
                d.add_arc(u, v).expect("labels in range");
            }
        }
    }
    Ok(d)
}

/// Parses `"n m"` followed by `m` lines `"u v"`. Blank lines and lines
/// starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, CodecError> {
    let err = |m: String| CodecError::EdgeList(m);
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, header) = lines.next().ok_or(CodecError::Empty)?;
    let pair = |line: &str, no: usize| -> Result<(usize, usize), CodecError> {
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(err(format!("line {}: expected two non-negative integers", no + 1))),
        }
    };
    let (n, m) = pair(header, 0)?;
    if n > MAX_ORDER {
        return Err(CodecError::TooLarge(n));
    }
    let mut g = Graph::empty(n).map_err(|_| CodecError::TooLarge(n))?;
    let mut seen = 0;
    for (no, line) in lines {
        let (u, v) = pair(line, no)?;
        if u >= n || v >= n || u == v {
            return Err(err(format!("line {}: invalid edge {u} {v}", no + 1)));
        }
        if g.has_edge(u, v) {
            return Err(err(format!("line {}: repeated edge {u} {v}", no + 1)));
        }
        g.add_edge(u, v).expect("checked");
        seen += 1;
    }
    if seen != m {
        return Err(err(format!("header announces {m} edges, found {seen}")));
    }
    Ok(g)
}

/// Reads a graph in either graph6 or edge-list form. Edge lists are recognised
/// by a first line made of two whitespace separated integers.
pub fn parse_graph(text: &str) -> Result<Graph, CodecError> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        None => Err(CodecError::Empty),
        Some(l) if l.split_whitespace().count() == 2
            && l.split_whitespace().all(|t| t.parse::<usize>().is_ok()) =>
        {
            parse_edge_list(text)
        }
        Some(l) => parse_graph6(l),
    }
}
