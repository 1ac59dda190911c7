//! graph6 and edge-list codecs.
//!
//! graph6 follows McKay's `formats.txt`: a size header N(n) followed by the
//! upper triangle of the adjacency matrix in column order
//! (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, each byte offset
//! by 63, the last byte zero-padded.

use crate::error::{Graph6Error, ParseError};
use crate::graph::{Graph, MAX_VERTICES};

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(((acc << (6 - nbits)) + 63) as char);
    }
    out
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let err = |offset: usize, reason: &str| Graph6Error { offset, reason: reason.to_string() };
    // optional ">>graph6<<" header
    let (bytes, base) = match bytes.strip_prefix(b">>graph6<<") {
        Some(rest) => (rest, 10),
        None => (bytes, 0),
    };
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(base + i, &format!("byte {b:#04x} outside 63..=126")));
        }
    }
    let first = *bytes.first().ok_or_else(|| err(base, "empty input"))?;
    let (n, header_len) = if first < 126 {
        ((first - 63) as usize, 1)
    } else {
        if bytes.get(1) == Some(&126) {
            return Err(err(base + 1, "graphs with more than 258047 vertices are not supported"));
        }
        if bytes.len() < 4 {
            return Err(err(base + bytes.len(), "truncated size header"));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(err(base, &format!("{n} vertices exceeds the limit of {MAX_VERTICES}")));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = header_len + nbits.div_ceil(6);
    if bytes.len() != expected {
        let at = base + bytes.len().min(expected);
        return Err(err(at, &format!("expected {expected} bytes for n = {n}, found {}", bytes.len())));
    }
    let data = &bytes[header_len..];
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = data[data.len() - 1] - 63;
        if last & ((1 << (6 - nbits % 6)) - 1) != 0 {
            return Err(err(base + expected - 1, "nonzero padding bits"));
        }
    }
    Ok(Graph::from_adjacency(adj).expect("decoded adjacency is symmetric"))
}

/// Parses `n m` followed by `m` lines `u v`.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let bad = |line: usize, reason: String| ParseError::EdgeList { line, reason };
    let (hline, header) = lines.next().ok_or_else(|| bad(1, "missing \"n m\" header".into()))?;
    let nums = |line: usize, s: &str| -> Result<Vec<usize>, ParseError> {
        s.split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| bad(line, format!("not a non-negative integer: {t:?}"))))
            .collect()
    };
    let head = nums(hline, header)?;
    let [n, m] = head[..] else {
        return Err(bad(hline, "header must be \"n m\"".into()));
    };
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let pair = nums(line, l)?;
        let [u, v] = pair[..] else {
            return Err(bad(line, "edge line must be \"u v\"".into()));
        };
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(bad(hline, format!("header announces {m} edges, found {}", edges.len())));
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Reads every non-blank graph6 line of a file body.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, ParseError> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_graph6(l.trim()).map_err(ParseError::from))
        .collect()
}

impl std::str::FromStr for Graph {
    type Err = Graph6Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_graph6(s)
    }
}
