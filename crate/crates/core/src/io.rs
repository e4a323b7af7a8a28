//! graph6, DOT and edge-list serialisation, plus a plain-text format for
//! quotient pregraphs with voltages.
//!
//! Quotient format:
//!
//! ```text
//! vertices V
//! darts D modulus N
//! <beg> <inv> <voltage>      (one line per dart, D lines)
//! ```
//!
//! Lines starting with `#` are comments.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::SimpleGraph;
use crate::pregraph::Pregraph;
use crate::voltage::VoltageAssignment;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IoError {
    #[error("empty input")]
    Empty,
    #[error("malformed graph6 header")]
    BadHeader,
    #[error("graph6 byte {0:#04x} outside the printable range")]
    BadByte(u8),
    #[error("graph6 body has {got} bytes, expected {expected}")]
    BadLength { expected: usize, got: usize },
    #[error("graph6 padding bits are not zero")]
    BadPadding,
    #[error("graph6 supports at most {max} vertices")]
    TooLarge { max: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

const MAX_GRAPH6: usize = 68_719_476_735;

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Standard graph6, without a trailing newline.
pub fn encode_graph6(g: &SimpleGraph) -> String {
    let n = g.num_vertices();
    assert!(n <= MAX_GRAPH6, "graph too large for graph6");
    let mut out = Vec::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub fn decode_graph6(text: &str) -> Result<SimpleGraph, IoError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(IoError::Empty);
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(IoError::BadByte(b));
    }
    let val = |b: u8| (b - 63) as usize;
    let (n, body) = if bytes[0] != 126 {
        (val(bytes[0]), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(IoError::BadHeader);
        }
        let n = bytes[1..4].iter().fold(0, |acc, &b| acc << 6 | val(b));
        if n <= 62 {
            return Err(IoError::BadHeader);
        }
        (n, &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(IoError::BadHeader);
        }
        let n = bytes[2..8].iter().fold(0, |acc, &b| acc << 6 | val(b));
        if n <= 258_047 {
            return Err(IoError::BadHeader);
        }
        (n, &bytes[8..])
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(IoError::BadLength { expected, got: body.len() });
    }
    let bit = |k: usize| (val(body[k / 6]) >> (5 - k % 6)) & 1 == 1;
    if (nbits..expected * 6).any(bit) {
        return Err(IoError::BadPadding);
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(SimpleGraph::from_edges(n, &edges).expect("graph6 describes a simple graph"))
}

/// DOT for human inspection; cover graphs use `u_3`-style names and edge
/// tags as labels.
pub fn to_dot(g: &SimpleGraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.num_vertices() {
        let _ = writeln!(out, "  {v} [label=\"{}\"];", g.vertex_name(v));
    }
    for (a, b) in g.edges() {
        match g.edge_type(a, b) {
            Some(t) => {
                let _ = writeln!(out, "  {a} -- {b} [label=\"{t}\"];");
            }
            None => {
                let _ = writeln!(out, "  {a} -- {b};");
            }
        }
    }
    out.push_str("}\n");
    out
}

/// `n m` header followed by one `a b` line per edge.
pub fn to_edge_list(g: &SimpleGraph) -> String {
    let mut out = format!("{} {}\n", g.num_vertices(), g.num_edges());
    for (a, b) in g.edges() {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn numbers(line: usize, text: &str) -> Result<Vec<usize>, IoError> {
    text.split_whitespace()
        .map(|t| t.parse().map_err(|_| IoError::Parse { line, msg: format!("expected an integer, found {t:?}") }))
        .collect()
}

pub fn parse_edge_list(text: &str) -> Result<SimpleGraph, IoError> {
    let mut lines = data_lines(text);
    let (l0, header) = lines.next().ok_or(IoError::Empty)?;
    let h = numbers(l0, header)?;
    let [n, m] = h[..] else {
        return Err(IoError::Parse { line: l0, msg: "header must be `n m`".into() });
    };
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        match numbers(line, text)?[..] {
            [a, b] if a < n && b < n && a != b => edges.push((a, b)),
            _ => return Err(IoError::Parse { line, msg: "expected an edge `a b` between distinct vertices < n".into() }),
        }
    }
    let g = SimpleGraph::from_edges(n, &edges).expect("validated edges");
    if edges.len() != m || g.num_edges() != m {
        return Err(IoError::Parse { line: l0, msg: format!("header promises {m} distinct edges, found {}", g.num_edges()) });
    }
    Ok(g)
}

/// Reads a single graph given either as a graph6 line or an edge list.
pub fn read_graph(text: &str) -> Result<SimpleGraph, IoError> {
    let first = data_lines(text).next().ok_or(IoError::Empty)?.1;
    let looks_like_edges = first.split_whitespace().count() == 2 && first.split_whitespace().all(|t| t.parse::<usize>().is_ok());
    if looks_like_edges {
        parse_edge_list(text)
    } else {
        decode_graph6(first)
    }
}

pub fn write_quotient(z: &VoltageAssignment) -> String {
    let p = z.base();
    let mut out = format!("vertices {}\ndarts {} modulus {}\n", p.num_vertices(), p.num_darts(), z.modulus());
    for d in 0..p.num_darts() {
        let _ = writeln!(out, "{} {} {}", p.beg(d), p.inv(d), z.voltage(d));
    }
    out
}

pub fn parse_quotient(text: &str) -> Result<VoltageAssignment, IoError> {
    let mut lines = data_lines(text);
    let keyword = |line: usize, text: &str, words: &[&str]| -> Result<Vec<usize>, IoError> {
        let tokens: Vec<_> = text.split_whitespace().collect();
        if tokens.len() != 2 * words.len() || tokens.iter().step_by(2).zip(words).any(|(t, w)| t != w) {
            return Err(IoError::Parse { line, msg: format!("expected `{}`", words.join(" N ")) });
        }
        numbers(line, &tokens.iter().skip(1).step_by(2).copied().collect::<Vec<_>>().join(" "))
    };
    let (l, t) = lines.next().ok_or(IoError::Empty)?;
    let nv = keyword(l, t, &["vertices"])?[0];
    let (l, t) = lines.next().ok_or(IoError::Parse { line: l + 1, msg: "missing darts line".into() })?;
    let dm = keyword(l, t, &["darts", "modulus"])?;
    let (nd, modulus) = (dm[0], dm[1] as u64);
    let (mut beg, mut inv, mut zeta) = (Vec::new(), Vec::new(), Vec::new());
    for (line, text) in lines {
        let [b, i, z] = numbers(line, text)?[..] else {
            return Err(IoError::Parse { line, msg: "expected `beg inv voltage`".into() });
        };
        beg.push(b);
        inv.push(i);
        zeta.push(z as u64);
    }
    if beg.len() != nd {
        return Err(IoError::Parse { line: 2, msg: format!("declared {nd} darts, found {}", beg.len()) });
    }
    let base = Pregraph::from_parts(nv, beg, inv).map_err(|e| IoError::Parse { line: 2, msg: e.to_string() })?;
    VoltageAssignment::new(base, modulus, zeta).map_err(|e| IoError::Parse { line: 2, msg: e.to_string() })
}
