//! Directed/undirected conversion and labelings that only connect a
//! terminal subset.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::folklore::label_rooted_tree;
use crate::graph::{self, Edge, Graph, Vertex, UNREACHABLE};
use crate::temporal::{Label, Labeling, TemporalGraph};

/// Replaces every edge `{u, v}` with the arcs `(u, v)` and `(v, u)`.
pub fn bidirect(g: &Graph) -> Result<Graph> {
    g.require_undirected()?;
    let arcs = g.edges().iter().flat_map(|e| [(e.0, e.1), (e.1, e.0)]);
    Graph::new_directed(g.n(), arcs)
}

/// Merges the labels of `(u, v)` and `(v, u)` onto `{u, v}`.
///
/// `dlab` must be a temporally connected labeling of `bidirect(g)` with
/// lifetime at most `age` (if given). Every directed strict path is still a
/// strict path once directions are forgotten, so the result is feasible for
/// `g` with the same age and never uses more labels.
pub fn undirect_labeling(g: &Graph, dlab: &Labeling, age: Option<Label>) -> Result<Labeling> {
    let dg = bidirect(g)?;
    let verdict = TemporalGraph::new(&dg, dlab)?.is_temporally_connected(age);
    if !verdict.is_connected() {
        return Err(Error::Infeasible(format!(
            "directed labeling is infeasible: {verdict}"
        )));
    }
    let mut out = Labeling::new();
    for (arc, labels) in dlab.iter() {
        out.add_all(Edge::undirected(arc.0, arc.1), labels.iter().copied());
    }
    Ok(out)
}

/// A tree of `g` spanning a terminal set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerTree {
    pub vertices: BTreeSet<Vertex>,
    pub edges: Vec<Edge>,
}

/// Metric-closure heuristic: minimum spanning tree over terminal distances,
/// each closure edge expanded into a shortest path, a BFS tree of the union,
/// then non-terminal leaves pruned. At most twice the optimal edge count.
pub fn steiner_tree(g: &Graph, terminals: &[Vertex]) -> Result<SteinerTree> {
    g.require_undirected()?;
    let terms: Vec<Vertex> = terminals
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if terms.is_empty() {
        return Err(Error::Precondition("terminal set is empty".into()));
    }
    for &t in &terms {
        g.check_vertex(t)?;
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let trees: Vec<graph::SptResult> = terms
        .iter()
        .map(|&t| graph::bfs_spt(g, t))
        .collect::<Result<_>>()?;

    // Prim over the closure, lowest index on ties.
    let k = terms.len();
    let mut in_tree = vec![false; k];
    let mut best: Vec<(u32, usize)> = vec![(UNREACHABLE, 0); k];
    in_tree[0] = true;
    for j in 1..k {
        best[j] = (trees[0].dist[terms[j]], 0);
    }
    let mut union: BTreeSet<Edge> = BTreeSet::new();
    for _ in 1..k {
        let j = (0..k)
            .filter(|&j| !in_tree[j])
            .min_by_key(|&j| (best[j].0, j))
            .expect("terminals left");
        in_tree[j] = true;
        let path = trees[best[j].1]
            .path_to(terms[j])
            .expect("graph is connected");
        union.extend(path.windows(2).map(|w| Edge::undirected(w[0], w[1])));
        for i in 0..k {
            if !in_tree[i] && trees[j].dist[terms[i]] < best[i].0 {
                best[i] = (trees[j].dist[terms[i]], j);
            }
        }
    }

    let sub = g.spanning_subgraph(union)?;
    let mut parent: Vec<Option<Vertex>> = vec![None; g.n()];
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::from([terms[0]]);
    seen[terms[0]] = true;
    while let Some(u) = queue.pop_front() {
        for &w in sub.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(u);
                queue.push_back(w);
            }
        }
    }
    let mut adj: Vec<BTreeSet<Vertex>> = vec![BTreeSet::new(); g.n()];
    for (v, p) in parent.iter().enumerate() {
        if let Some(p) = *p {
            adj[v].insert(p);
            adj[p].insert(v);
        }
    }
    let is_terminal: BTreeSet<Vertex> = terms.iter().copied().collect();
    let mut leaves: Vec<Vertex> = (0..g.n())
        .filter(|&v| adj[v].len() == 1 && !is_terminal.contains(&v))
        .collect();
    while let Some(v) = leaves.pop() {
        let Some(&p) = adj[v].iter().next() else {
            continue;
        };
        adj[v].clear();
        adj[p].remove(&v);
        if adj[p].len() == 1 && !is_terminal.contains(&p) {
            leaves.push(p);
        }
    }
    let mut vertices: BTreeSet<Vertex> = terms.iter().copied().collect();
    let mut edges = Vec::new();
    for (v, nb) in adj.iter().enumerate() {
        for &w in nb {
            vertices.insert(v);
            if v < w {
                edges.push(Edge(v, w));
            }
        }
    }
    Ok(SteinerTree { vertices, edges })
}

/// Labeling in which every ordered pair of terminals is temporally
/// connected. Labels the Steiner tree with the two-label scheme rooted at
/// the tree's center, where the center's lowest child edge gets one label.
pub fn label_msl(g: &Graph, terminals: &[Vertex]) -> Result<Labeling> {
    let tree = steiner_tree(g, terminals)?;
    if tree.edges.is_empty() {
        return Ok(Labeling::new());
    }
    let t = g.spanning_subgraph(tree.edges.iter().copied())?;
    let dist: Vec<Vec<u32>> = tree
        .vertices
        .iter()
        .map(|&v| graph::distances_from(&t, v))
        .collect();
    let (root, _) = tree
        .vertices
        .iter()
        .zip(&dist)
        .map(|(&v, d)| (v, tree.vertices.iter().map(|&u| d[u]).max().unwrap_or(0)))
        .min_by_key(|&(v, ecc)| (ecc, v))
        .expect("tree has vertices");
    let spt = graph::bfs_spt(&t, root)?;
    let height = tree
        .vertices
        .iter()
        .map(|&v| spt.dist[v])
        .max()
        .unwrap_or(0);
    let special = t.neighbors(root).first().copied();
    Ok(label_rooted_tree(&spt.parent, &spt.dist, height, special))
}

/// True when every ordered pair of terminals is joined by a strict path
/// with labels at most `max_age`.
pub fn terminals_connected(
    g: &Graph,
    labeling: &Labeling,
    terminals: &[Vertex],
    max_age: Option<Label>,
) -> Result<bool> {
    let tg = TemporalGraph::new(g, labeling)?;
    if max_age.is_some_and(|a| labeling.lifetime() > a) {
        return Ok(false);
    }
    for &s in terminals {
        let arr = tg.earliest_arrival(s)?;
        if terminals.iter().any(|&v| arr[v] == crate::temporal::NEVER) {
            return Ok(false);
        }
    }
    Ok(true)
}
