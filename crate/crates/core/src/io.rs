//! Text formats: a plain edge list and graph6.
//!
//! Edge list:
//!
//! ```text
//! # optional comments
//! 3 2
//! 0 1
//! 1 2
//! ```
//!
//! graph6 follows the usual ASCII encoding of the upper triangle, with an
//! optional `>>graph6<<` header.

use crate::error::{Error, Location, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
}

const GRAPH6_HEADER: &str = ">>graph6<<";

fn parse_err(location: Location, reason: impl Into<String>) -> Error {
    Error::Parse {
        location,
        reason: reason.into(),
    }
}

/// Guesses the format from the first non-blank byte: `>` or the graph6
/// alphabet means graph6, anything else is treated as an edge list.
pub fn detect_format(text: &[u8]) -> Format {
    match text.iter().find(|b| !b.is_ascii_whitespace()) {
        Some(b'>') => Format::Graph6,
        Some(&b) if (63..=126).contains(&b) => Format::Graph6,
        _ => Format::EdgeList,
    }
}

pub fn parse_graph(text: &[u8], format: Format) -> Result<Graph> {
    let text = std::str::from_utf8(text).map_err(|e| parse_err(Location::Byte(e.valid_up_to()), "input is not UTF-8"))?;
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Graph6 => parse_graph6(text.trim()),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(Location::Line(1), "missing `n m` header"))?;
    let (n, m) = parse_pair(hline, header)?;

    let mut g = Graph::new(n);
    let mut count = 0;
    for (lno, line) in lines {
        let (u, v) = parse_pair(lno, line)?;
        if count == m {
            return Err(parse_err(Location::Line(lno), format!("more than the declared {m} edges")));
        }
        if u >= n || v >= n {
            return Err(parse_err(Location::Line(lno), format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(parse_err(Location::Line(lno), format!("loop at vertex {u}")));
        }
        if g.has_edge(u, v) {
            return Err(parse_err(Location::Line(lno), format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v);
        count += 1;
    }
    if count != m {
        return Err(parse_err(
            Location::Line(text.lines().count().max(1)),
            format!("expected {m} edges, found {count}"),
        ));
    }
    Ok(g)
}

fn parse_pair(lno: usize, line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| parse_err(Location::Line(lno), "expected two integers"))?;
        tok.parse()
            .map_err(|_| parse_err(Location::Line(lno), format!("not a non-negative integer: {tok:?}")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(parse_err(Location::Line(lno), "trailing tokens"));
    }
    Ok((a, b))
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses a single graph6 string (surrounding whitespace not allowed).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let (offset, body) = match text.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest.as_bytes()),
        None => (0, text.as_bytes()),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(Location::Byte(offset + i), format!("byte {b:#04x} outside graph6 alphabet")));
        }
    }
    let data: Vec<u64> = body.iter().map(|&b| (b - 63) as u64).collect();
    let (n, header_len) = match data.as_slice() {
        [] => return Err(parse_err(Location::Byte(offset), "empty graph6 string")),
        [63, 63, rest @ ..] => {
            if rest.len() < 6 {
                return Err(parse_err(Location::Byte(offset), "truncated 8-byte size"));
            }
            (rest[..6].iter().fold(0, |acc, &x| (acc << 6) | x) as usize, 8)
        }
        [63, rest @ ..] => {
            if rest.len() < 3 {
                return Err(parse_err(Location::Byte(offset), "truncated 4-byte size"));
            }
            (rest[..3].iter().fold(0, |acc, &x| (acc << 6) | x) as usize, 4)
        }
        [x, ..] => (*x as usize, 1),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let payload = &data[header_len..];
    if payload.len() != need {
        return Err(parse_err(
            Location::Byte(offset + header_len + payload.len().min(need)),
            format!("expected {need} data bytes for n={n}, found {}", payload.len()),
        ));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (payload[k / 6] >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 && payload[need - 1] & ((1 << (6 - bits % 6)) - 1) != 0 {
        return Err(parse_err(Location::Byte(offset + header_len + need - 1), "nonzero padding bits"));
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for s in [12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for s in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// One graph6 string per non-blank line.
pub fn parse_graph6_list(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l.trim()).map_err(|e| match e {
                Error::Parse { reason, .. } => parse_err(Location::Line(i + 1), reason),
                other => other,
            })
        })
        .collect()
}
