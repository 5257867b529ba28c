//! Plain-text edge lists: one `u v` pair per line, `#` comments, and an
//! optional `n <N>` header before the first edge.

use std::collections::BTreeMap;
use std::fmt::Write;

use super::Graph;
use crate::error::{Error, Result};

struct RawEdges {
    header_n: Option<usize>,
    edges: Vec<(u64, u64, usize)>,
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<RawEdges> {
    let mut header_n = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.first() == Some(&"n") {
            if tokens.len() != 2 {
                return Err(parse_error(lineno, "header must be `n <N>`"));
            }
            if header_n.is_some() || !edges.is_empty() {
                return Err(parse_error(lineno, "`n` header must precede all edges"));
            }
            let n = tokens[1]
                .parse::<usize>()
                .map_err(|_| parse_error(lineno, format!("bad vertex count `{}`", tokens[1])))?;
            header_n = Some(n);
            continue;
        }
        if tokens.len() != 2 {
            return Err(parse_error(
                lineno,
                format!("expected two vertex indices, found {} tokens", tokens.len()),
            ));
        }
        let parse = |t: &str| {
            t.parse::<u64>()
                .map_err(|_| parse_error(lineno, format!("bad vertex index `{t}`")))
        };
        edges.push((parse(tokens[0])?, parse(tokens[1])?, lineno));
    }
    Ok(RawEdges { header_n, edges })
}

fn build(n: usize, edges: Vec<(usize, usize, usize)>) -> Result<Graph> {
    // Report the offending line for loops and repeats before handing off.
    let mut seen = std::collections::HashSet::new();
    for &(u, v, line) in &edges {
        if u == v {
            return Err(Error::Validation(format!("self-loop at vertex {u} (line {line})")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::Validation(format!(
                "duplicate edge ({}, {}) (line {line})",
                u.min(v),
                u.max(v)
            )));
        }
    }
    Graph::from_edges(n, edges.into_iter().map(|(u, v, _)| (u, v)))
}

/// Parses an edge list. The vertex count is the `n <N>` header when present,
/// otherwise one more than the largest index mentioned; unmentioned indices
/// become isolated vertices.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let raw = tokenize(text)?;
    let max_index = raw.edges.iter().map(|&(u, v, _)| u.max(v)).max();
    let n = match (raw.header_n, max_index) {
        (Some(n), Some(mx)) if mx as u128 >= n as u128 => {
            return Err(Error::Validation(format!(
                "vertex {mx} exceeds declared vertex count {n}"
            )))
        }
        (Some(n), _) => n,
        (None, Some(mx)) => usize::try_from(mx)
            .ok()
            .and_then(|m| m.checked_add(1))
            .ok_or_else(|| Error::Validation(format!("vertex index {mx} too large")))?,
        (None, None) => 0,
    };
    let edges = raw
        .edges
        .into_iter()
        .map(|(u, v, l)| (u as usize, v as usize, l))
        .collect();
    build(n, edges)
}

/// Parses an edge list with arbitrary (sparse) labels, relabelling the
/// mentioned vertices to `0..n` in increasing label order. Returns the graph
/// and the original label of each dense index. An `n` header is ignored.
pub fn parse_edge_list_compacted(text: &str) -> Result<(Graph, Vec<u64>)> {
    let raw = tokenize(text)?;
    let mut index: BTreeMap<u64, usize> = BTreeMap::new();
    for &(u, v, _) in &raw.edges {
        index.insert(u, 0);
        index.insert(v, 0);
    }
    let labels: Vec<u64> = index.keys().copied().collect();
    for (i, slot) in index.values_mut().enumerate() {
        *slot = i;
    }
    let edges = raw
        .edges
        .into_iter()
        .map(|(u, v, l)| (index[&u], index[&v], l))
        .collect();
    Ok((build(labels.len(), edges)?, labels))
}

/// Edge-list text with an `n` header, edges in lexicographic order.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
