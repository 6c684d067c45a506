//! Text formats: graph6, the plain `n m` edge list, and DOT export.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;
const LONG: u8 = 126;
const HEADER: &str = ">>graph6<<";

fn g6_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

/// Parses one graph6 line. Accepts an optional `>>graph6<<` header and a
/// trailing newline.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (skip, line) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, line),
    };
    let bytes = line.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(BIAS..=LONG).contains(&b) {
            return Err(g6_err(skip + i, format!("byte value {b} outside 63..=126")));
        }
    }

    let (n, body_start) = match bytes {
        [] => return Err(g6_err(skip, "missing vertex count")),
        [LONG, LONG, ..] => {
            if bytes.len() < 8 {
                return Err(g6_err(skip + bytes.len(), "truncated 8-byte vertex count"));
            }
            (decode_sextets(&bytes[2..8]), 8)
        }
        [LONG, ..] => {
            if bytes.len() < 4 {
                return Err(g6_err(skip + bytes.len(), "truncated 4-byte vertex count"));
            }
            (decode_sextets(&bytes[1..4]), 4)
        }
        [b, ..] => ((b - BIAS) as u64, 1),
    };
    let n = usize::try_from(n).map_err(|_| g6_err(skip, "vertex count does not fit in memory"))?;

    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = body_start + bit_count.div_ceil(6);
    if bytes.len() != expected {
        return Err(g6_err(
            skip + bytes.len().min(expected),
            format!("expected {expected} bytes for {n} vertices, found {}", bytes.len()),
        ));
    }

    let body = &bytes[body_start..];
    let bit = |idx: usize| (body[idx / 6] - BIAS) >> (5 - idx % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(idx) {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    for pad in bit_count..body.len() * 6 {
        if bit(pad) {
            return Err(g6_err(skip + body_start + pad / 6, "nonzero padding bit"));
        }
    }
    Graph::from_edge_list(n, &edges)
}

fn decode_sextets(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0u64, |acc, &b| (acc << 6) | (b - BIAS) as u64)
}

/// Canonical graph6 line (no header, no newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::with_capacity(8 + n * n / 12);
    if n < 63 {
        out.push(n as u8 + BIAS);
    } else if n < 258_048 {
        out.push(LONG);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 0x3f) as u8 + BIAS));
    } else {
        out.extend([LONG, LONG]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 0x3f) as u8 + BIAS));
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses the plain edge-list format: a first line `n m`, then `m` lines
/// `u v`. Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty());

    let pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let mut it = l.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(Error::EdgeList { line, reason: format!("expected two nonnegative integers, got {l:?}") }),
        }
    };

    let (first, header) = lines.next().ok_or(Error::EdgeList { line: 1, reason: "missing `n m` header".into() })?;
    let (n, m) = pair(first, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        edges.push(pair(line, l)?);
    }
    if edges.len() != m {
        return Err(Error::EdgeList {
            line: first,
            reason: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edge_list(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Reads either format: text whose first meaningful line holds two integers
/// is an edge list, anything else is graph6.
pub fn parse_graph_auto(text: &str) -> Result<Graph> {
    let first = text.lines().map(|l| l.split('#').next().unwrap().trim()).find(|l| !l.is_empty());
    match first {
        Some(l) if l.split_whitespace().count() == 2 && l.split_whitespace().all(|t| t.parse::<usize>().is_ok()) => {
            parse_edge_list(text)
        }
        Some(l) => parse_graph6(l),
        None => Err(g6_err(0, "empty input")),
    }
}

/// DOT `graph` block: one node statement per vertex, then one line per
/// edge, everything in ascending order.
pub fn to_dot(g: &Graph, labels: Option<&BTreeMap<usize, String>>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        match labels.and_then(|l| l.get(&v)) {
            Some(label) => writeln!(out, "  {v} [label=\"{}\"];", label.replace('"', "\\\"")).unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
