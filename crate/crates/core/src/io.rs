//! Instance formats: the JSON graph document and the plain edge-list pair.
//!
//! JSON: `{"nodes":[{"id":0,"p":"3/2"},...],"edges":[[0,1],...]}` where `p` is
//! a rational string `num/den` or an integer string. Edge list: one `u v` pair
//! per line, with weights in a separate `id value` file.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::weights::WeightAssignment;
use crate::Rational;

/// Parses `"a/b"`, `"a"`, `"-a/b"`; the denominator must be nonzero.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Canonical text: `"n"` for integers, `"num/den"` otherwise (reduced, den > 0).
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct NodeDoc {
    id: usize,
    p: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct GraphDoc {
    nodes: Vec<NodeDoc>,
    edges: Vec<[usize; 2]>,
}

pub fn read_json(text: &str) -> Result<(Graph, WeightAssignment<Rational>)> {
    let doc: GraphDoc =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid graph JSON: {e}")))?;
    let n = doc.nodes.len();
    let mut values: Vec<Option<Rational>> = vec![None; n];
    for node in &doc.nodes {
        if node.id >= n {
            return Err(Error::Parse(format!("node id {} outside 0..{}", node.id, n)));
        }
        if values[node.id].is_some() {
            return Err(Error::Parse(format!("node id {} listed twice", node.id)));
        }
        values[node.id] = Some(parse_rational(&node.p)?);
    }
    let values = values.into_iter().map(|v| v.expect("ids are a permutation")).collect();
    let g = Graph::new(n, doc.edges.iter().map(|e| (e[0], e[1]))).map_err(as_parse)?;
    Ok((g, WeightAssignment::new(values)))
}

pub fn write_json(g: &Graph, p: &WeightAssignment<Rational>) -> String {
    let doc = GraphDoc {
        nodes: (0..g.n())
            .map(|id| NodeDoc { id, p: format_rational(p.get(id)) })
            .collect(),
        edges: g.edges().into_iter().map(|(a, b)| [a, b]).collect(),
    };
    serde_json::to_string(&doc).expect("graph document serializes")
}

/// Reads an edge list plus an `id value` weight file. The node count is the
/// number of weight lines; blank lines and `#` comments are skipped.
pub fn read_edge_list(edges: &str, weights: &str) -> Result<(Graph, WeightAssignment<Rational>)> {
    let mut pairs = Vec::new();
    for (ln, fields) in data_lines(edges) {
        let [a, b] = two_fields(ln, &fields)?;
        pairs.push((parse_id(ln, a)?, parse_id(ln, b)?));
    }
    let mut entries = Vec::new();
    for (ln, fields) in data_lines(weights) {
        let [id, value] = two_fields(ln, &fields)?;
        entries.push((parse_id(ln, id)?, parse_rational(value)?));
    }
    let n = entries.len();
    let mut values: Vec<Option<Rational>> = vec![None; n];
    for (id, value) in entries {
        if id >= n || values[id].is_some() {
            return Err(Error::Parse(format!("weight ids must be exactly 0..{}", n)));
        }
        values[id] = Some(value);
    }
    let values = values.into_iter().map(|v| v.expect("ids are a permutation")).collect();
    let g = Graph::new(n, pairs).map_err(as_parse)?;
    Ok((g, WeightAssignment::new(values)))
}

pub fn write_edge_list(g: &Graph, p: &WeightAssignment<Rational>) -> (String, String) {
    let edges: String = g.edges().iter().map(|(a, b)| format!("{a} {b}\n")).collect();
    let weights: String = (0..g.n())
        .map(|v| format!("{v} {}\n", format_rational(p.get(v))))
        .collect();
    (edges, weights)
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then(|| (i + 1, line.split_whitespace().collect()))
    })
}

fn two_fields<'a>(ln: usize, fields: &[&'a str]) -> Result<[&'a str; 2]> {
    match fields {
        [a, b] => Ok([a, b]),
        _ => Err(Error::Parse(format!("line {ln}: expected two fields"))),
    }
}

fn parse_id(ln: usize, s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::Parse(format!("line {ln}: bad node id {s:?}")))
}

// Structural input errors are reported as parse failures at the I/O boundary.
fn as_parse(e: Error) -> Error {
    match e {
        Error::Parse(_) => e,
        other => Error::Parse(other.to_string()),
    }
}
