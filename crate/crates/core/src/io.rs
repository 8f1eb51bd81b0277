//! Text formats: the native edge list and read-only graph6.
//!
//! An edge list starts with `n <count>`, followed by one `u v` pair per line
//! with 0-based ids; `#` starts a comment. graph6 input may hold one graph
//! per line, optionally after a `>>graph6<<` header.

use crate::error::{Error, Result};
use crate::graph::Graph;

const GRAPH6_HEADER: &str = ">>graph6<<";

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse { line: line_no, msg };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let Some(g) = graph.as_mut() else {
            let ["n", count] = fields[..] else {
                return Err(err(format!("expected header `n <count>`, found {line:?}")));
            };
            let n = count.parse().map_err(|e| err(format!("bad vertex count {count:?}: {e}")))?;
            graph = Some(Graph::new(n));
            continue;
        };
        let [a, b] = fields[..] else {
            return Err(err(format!("expected `u v`, found {line:?}")));
        };
        let id = |s: &str| s.parse::<usize>().map_err(|e| err(format!("bad vertex id {s:?}: {e}")));
        let (u, v) = (id(a)?, id(b)?);
        match g.add_edge(u, v) {
            Ok(true) => {}
            Ok(false) => return Err(err(format!("duplicate edge {u} {v}"))),
            Err(e) => return Err(err(e.to_string())),
        }
    }
    graph.ok_or(Error::Parse { line: 0, msg: "missing header `n <count>`".into() })
}

pub fn render_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Decodes one graph6 string.
pub fn parse_graph6(s: &str) -> Result<Graph> {
    let err = |msg: String| Error::Parse { line: 1, msg };
    let s = s.trim();
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(err(format!("byte {bad} outside the graph6 range")));
    }
    let value = |chunk: &[u8]| chunk.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    let (n, rest) = match bytes {
        [126, 126, tail @ ..] if tail.len() >= 6 => (value(&tail[..6]), &tail[6..]),
        [126, tail @ ..] if tail.len() >= 3 => (value(&tail[..3]), &tail[3..]),
        [first, tail @ ..] if *first != 126 => ((first - 63) as usize, tail),
        _ => return Err(err("truncated vertex count".into())),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    if rest.len() != needed {
        return Err(err(format!("expected {needed} data bytes for {n} vertices, found {}", rest.len())));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let bit = (rest[k / 6] - 63) >> (5 - k % 6) & 1;
            if bit == 1 {
                g.add_edge(u, v).expect("in range");
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes `g` as graph6.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    let push_value = |out: &mut Vec<u8>, x: usize, groups: usize| {
        for i in (0..groups).rev() {
            out.push(((x >> (6 * i)) & 63) as u8 + 63);
        }
    };
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        push_value(&mut out, n, 3);
    } else {
        out.extend([126, 126]);
        push_value(&mut out, n, 6);
    }
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v) as u8);
        }
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            byte |= b << (5 - i);
        }
        out.push(byte + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses edge-list or graph6 input. An edge list yields one graph; graph6
/// input yields one graph per non-empty line.
pub fn parse_any(text: &str) -> Result<Vec<Graph>> {
    let first = text.lines().map(strip_comment).find(|l| !l.is_empty());
    match first {
        None => Err(Error::Parse { line: 0, msg: "empty input".into() }),
        Some(l) if l.split_whitespace().count() > 1 => Ok(vec![parse_edge_list(text)?]),
        Some(_) => text
            .lines()
            .enumerate()
            .map(|(i, l)| (i, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .map(|(i, l)| {
                parse_graph6(l).map_err(|e| match e {
                    Error::Parse { msg, .. } => Error::Parse { line: i + 1, msg },
                    other => other,
                })
            })
            .collect(),
    }
}
