//! Labelings, temporal graphs and strict temporal reachability.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};
use crate::par::{self, Parallelism};

/// A time label. Labels are positive.
pub type Label = u32;

/// Arrival time of a vertex no strict temporal path reaches.
pub const NEVER: u32 = u32::MAX;

/// Map from edge to its set of time labels.
///
/// Keys are whatever the companion graph uses as canonical edge keys
/// (normalized pairs for undirected graphs, arcs for directed ones).
/// Edges with an empty label set are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Labeling {
    entries: BTreeMap<Edge, BTreeSet<Label>>,
}

impl Labeling {
    pub fn new() -> Labeling {
        Labeling::default()
    }

    /// Adds `label` to edge `e`.
    ///
    /// Panics if `label` is zero.
    pub fn add(&mut self, e: Edge, label: Label) {
        assert!(label >= 1, "labels are positive integers");
        self.entries.entry(e).or_default().insert(label);
    }

    pub fn add_all<I: IntoIterator<Item = Label>>(&mut self, e: Edge, labels: I) {
        for l in labels {
            self.add(e, l);
        }
    }

    /// Builds a labeling from raw entries. Zero labels are rejected; empty
    /// label lists are dropped.
    pub fn from_entries<I, L>(entries: I) -> Result<Labeling>
    where
        I: IntoIterator<Item = (Edge, L)>,
        L: IntoIterator<Item = Label>,
    {
        let mut out = Labeling::new();
        for (e, labels) in entries {
            for l in labels {
                if l == 0 {
                    return Err(Error::InvalidLabeling(format!(
                        "label 0 on edge {{{}, {}}}; labels must be positive",
                        e.0, e.1
                    )));
                }
                out.add(e, l);
            }
        }
        Ok(out)
    }

    /// Labels on `e`, if any.
    pub fn labels(&self, e: Edge) -> Option<&BTreeSet<Label>> {
        self.entries.get(&e)
    }

    /// Edges carrying at least one label, with their labels, in key order.
    pub fn iter(&self) -> impl Iterator<Item = (Edge, &BTreeSet<Label>)> {
        self.entries.iter().map(|(e, ls)| (*e, ls))
    }

    /// Edges carrying at least one label.
    pub fn labeled_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.entries.keys().copied()
    }

    /// `|λ|`: total number of (edge, label) pairs.
    pub fn total_labels(&self) -> usize {
        self.entries.values().map(BTreeSet::len).sum()
    }

    /// Largest label used, 0 when empty.
    pub fn lifetime(&self) -> Label {
        self.entries
            .values()
            .filter_map(|ls| ls.last().copied())
            .max()
            .unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Set union, edge by edge.
    pub fn union_with(&mut self, other: &Labeling) {
        for (e, ls) in &other.entries {
            self.entries
                .entry(*e)
                .or_default()
                .extend(ls.iter().copied());
        }
    }

    /// Edge whose label set contains the lifetime.
    fn oldest_edge(&self) -> Option<(Edge, Label)> {
        let l = self.lifetime();
        self.entries
            .iter()
            .find(|(_, ls)| ls.contains(&l))
            .map(|(e, _)| (*e, l))
    }
}

/// A graph together with a labeling of its edges.
#[derive(Debug, Clone, Copy)]
pub struct TemporalGraph<'a> {
    graph: &'a Graph,
    labeling: &'a Labeling,
}

impl<'a> TemporalGraph<'a> {
    /// Pairs a graph and a labeling, checking that every labeled edge exists.
    pub fn new(graph: &'a Graph, labeling: &'a Labeling) -> Result<TemporalGraph<'a>> {
        if let Some(e) = labeling.labeled_edges().find(|e| !graph.contains_edge(*e)) {
            return Err(Error::InvalidLabeling(format!(
                "labeled edge {{{}, {}}} is not in the graph",
                e.0, e.1
            )));
        }
        Ok(TemporalGraph { graph, labeling })
    }

    pub fn graph(&self) -> &'a Graph {
        self.graph
    }

    pub fn labeling(&self) -> &'a Labeling {
        self.labeling
    }

    pub fn count_labels(&self) -> usize {
        self.labeling.total_labels()
    }

    pub fn lifetime(&self) -> Label {
        self.labeling.lifetime()
    }

    /// (label, tail, head) moves sorted by label. Undirected edges yield a
    /// move in each direction.
    fn moves(&self) -> Vec<(Label, Vertex, Vertex)> {
        let directed = self.graph.is_directed();
        let mut out = Vec::with_capacity(self.labeling.total_labels() * 2);
        for (e, ls) in self.labeling.iter() {
            for &l in ls {
                out.push((l, e.0, e.1));
                if !directed {
                    out.push((l, e.1, e.0));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Earliest arrival time at every vertex from `source` along strict
    /// temporal paths; `arrival[source] = 0` and unreachable vertices get
    /// [`NEVER`].
    pub fn earliest_arrival(&self, source: Vertex) -> Result<Vec<u32>> {
        self.graph.check_vertex(source)?;
        Ok(arrivals(self.graph.n(), &self.moves(), source))
    }

    pub fn is_temporally_connected(&self, max_age: Option<Label>) -> Verdict {
        self.check_connectivity_with(max_age, Parallelism::default())
    }

    /// Checks temporal connectivity and, when given, the lifetime bound.
    /// The first failing ordered pair is reported in (source, target)
    /// lexicographic order.
    pub fn check_connectivity_with(&self, max_age: Option<Label>, par: Parallelism) -> Verdict {
        if let Some(a) = max_age {
            if let Some((edge, label)) = self.labeling.oldest_edge().filter(|&(_, l)| l > a) {
                return Verdict::TooOld {
                    edge,
                    label,
                    max_age: a,
                };
            }
        }
        let moves = self.moves();
        let n = self.graph.n();
        let failure = par::find_map_first(n, par, |s| {
            let arr = arrivals(n, &moves, s);
            arr.iter()
                .position(|&t| t == NEVER)
                .map(|to| Verdict::Unreachable { from: s, to })
        });
        failure.unwrap_or(Verdict::Connected)
    }
}

fn arrivals(n: usize, moves: &[(Label, Vertex, Vertex)], source: Vertex) -> Vec<u32> {
    let mut arr = vec![NEVER; n];
    arr[source] = 0;
    // A move at label t only departs from vertices reached strictly before t,
    // so arrivals recorded at t cannot feed other moves at t.
    for &(t, u, v) in moves {
        if arr[u] < t && t < arr[v] {
            arr[v] = t;
        }
    }
    arr
}

/// Outcome of a temporal connectivity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Connected,
    /// No strict temporal path from `from` to `to`.
    Unreachable {
        from: Vertex,
        to: Vertex,
    },
    /// `edge` carries `label`, which exceeds the allowed age.
    TooOld {
        edge: Edge,
        label: Label,
        max_age: Label,
    },
}

impl Verdict {
    pub fn is_connected(&self) -> bool {
        matches!(self, Verdict::Connected)
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Connected => write!(f, "temporally connected"),
            Verdict::Unreachable { from, to } => {
                write!(
                    f,
                    "vertex {to} is not temporally reachable from vertex {from}"
                )
            }
            Verdict::TooOld {
                edge,
                label,
                max_age,
            } => write!(
                f,
                "edge {{{}, {}}} carries label {label} above the age bound {max_age}",
                edge.0, edge.1
            ),
        }
    }
}

/// Convenience: builds the temporal graph and runs the check.
pub fn is_temporally_connected(
    g: &Graph,
    labeling: &Labeling,
    max_age: Option<Label>,
) -> Result<Verdict> {
    Ok(TemporalGraph::new(g, labeling)?.is_temporally_connected(max_age))
}
