//! Text and JSON formats.
//!
//! Graph files: `#` comment lines, then a header `n m` (or `n m directed`),
//! then `m` lines `u v` with 0-based endpoints. [`write_graph`] emits edges
//! in canonical sorted order so that reading and writing round-trips
//! byte for byte.
//!
//! Labeling files are JSON: `{"age": L, "edges": [{"u": 0, "v": 1, "labels": [1, 3]}]}`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::temporal::{Label, Labeling};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize, bool, usize)> = None;
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>().map_err(|_| {
                parse_err(
                    line_no,
                    format!("expected a non-negative integer, found `{s}`"),
                )
            })
        };
        match header {
            None => {
                let directed = match fields.as_slice() {
                    [_, _] => false,
                    [_, _, "directed"] => true,
                    _ => return Err(parse_err(line_no, "header must be `n m` or `n m directed`")),
                };
                header = Some((num(fields[0])?, num(fields[1])?, directed, line_no));
            }
            Some((n, _, _, _)) => {
                let [u, v] = fields.as_slice() else {
                    return Err(parse_err(line_no, "edge lines must be `u v`"));
                };
                let (u, v) = (num(u)?, num(v)?);
                if u >= n || v >= n {
                    return Err(parse_err(
                        line_no,
                        format!("endpoint out of range for n = {n}"),
                    ));
                }
                arcs.push((u, v));
            }
        }
    }
    let Some((n, m, directed, header_line)) = header else {
        return Err(parse_err(1, "missing header line"));
    };
    if arcs.len() != m {
        return Err(parse_err(
            header_line,
            format!("header declares {m} edges but {} were listed", arcs.len()),
        ));
    }
    let built = if directed {
        Graph::new_directed(n, arcs)
    } else {
        Graph::new(n, arcs)
    };
    built.map_err(|e| parse_err(header_line, e.to_string()))
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    let suffix = if g.is_directed() { " directed" } else { "" };
    writeln!(out, "{} {}{suffix}", g.n(), g.m()).expect("writing to a string");
    for e in g.edges() {
        writeln!(out, "{} {}", e.0, e.1).expect("writing to a string");
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
struct EdgeLabels {
    u: usize,
    v: usize,
    labels: Vec<Label>,
}

#[derive(Debug, Serialize, Deserialize)]
struct LabelingFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    age: Option<Label>,
    edges: Vec<EdgeLabels>,
}

/// Parses a labeling for `g`. Undirected endpoints may be given in either
/// order. An `age` field, when present, must equal the largest label.
pub fn parse_labeling(text: &str, g: &Graph) -> Result<Labeling> {
    let file: LabelingFile =
        serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    let mut entries = Vec::with_capacity(file.edges.len());
    for el in &file.edges {
        let key = g.edge_key(el.u, el.v).ok_or_else(|| {
            Error::InvalidLabeling(format!("({}, {}) is not an edge of the graph", el.u, el.v))
        })?;
        if el.labels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidLabeling(format!(
                "labels on ({}, {}) must be strictly increasing",
                el.u, el.v
            )));
        }
        entries.push((key, el.labels.iter().copied()));
    }
    let labeling = Labeling::from_entries(entries)?;
    if let Some(age) = file.age {
        if age != labeling.lifetime() {
            return Err(Error::InvalidLabeling(format!(
                "age field {age} differs from the largest label {}",
                labeling.lifetime()
            )));
        }
    }
    Ok(labeling)
}

pub fn write_labeling(l: &Labeling) -> String {
    let file = LabelingFile {
        age: Some(l.lifetime()),
        edges: l
            .iter()
            .map(|(e, labels)| EdgeLabels {
                u: e.0,
                v: e.1,
                labels: labels.iter().copied().collect(),
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("labelings serialize");
    s.push('\n');
    s
}

/// Reads any JSON instance type (set cover, MIN-REP, covers).
pub fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))
}

pub fn write_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("value serializes");
    s.push('\n');
    s
}

/// Role sidecar: one `vertex role` pair per line.
pub fn write_roles(roles: &[String]) -> String {
    let mut out = String::new();
    for (v, r) in roles.iter().enumerate() {
        writeln!(out, "{v} {r}").expect("writing to a string");
    }
    out
}
