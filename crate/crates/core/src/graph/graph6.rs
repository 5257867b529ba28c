//! The graph6 format: vertex count, then the upper triangle of the adjacency
//! matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed six
//! bits per printable byte with bias 63.

use super::Graph;
use crate::error::{Error, Result};

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn err(message: impl Into<String>) -> Error {
    Error::Parse {
        line: 0,
        message: message.into(),
    }
}

fn encode_n(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_n(n, &mut out);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + BIAS);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Splits bias-removed values into the vertex count and the data bytes.
fn decode_n(values: &[u8]) -> Result<(usize, &[u8])> {
    Ok(match values {
        [] => return Err(err("empty graph6 string")),
        [63, 63, rest @ ..] => {
            if rest.len() < 6 {
                return Err(err("truncated vertex count"));
            }
            let n = rest[..6].iter().fold(0usize, |acc, &v| (acc << 6) | v as usize);
            (n, &rest[6..])
        }
        [63, rest @ ..] => {
            if rest.len() < 3 {
                return Err(err("truncated vertex count"));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &v| (acc << 6) | v as usize);
            (n, &rest[3..])
        }
        [first, rest @ ..] => (*first as usize, rest),
    })
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let mut values = Vec::with_capacity(bytes.len());
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(format!("invalid graph6 character at offset {pos}")));
        }
        values.push(b - BIAS);
    }

    let (n, body) = decode_n(&values)?;

    let bits = n
        .checked_mul(n.saturating_sub(1))
        .map(|x| x / 2)
        .ok_or_else(|| err("vertex count too large"))?;
    let needed = bits.div_ceil(6);
    if body.len() != needed {
        return Err(err(format!(
            "expected {needed} data bytes for n={n}, found {}",
            body.len()
        )));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if body[k / 6] >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}
