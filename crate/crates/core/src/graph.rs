//! Static graphs with BFS metric queries.
//!
//! Vertices are dense integers `0..n`. Undirected edges are stored with
//! `u < v`; directed graphs store arcs as given. Neighbor lists are sorted
//! ascending, so every BFS visits the lowest-numbered neighbor first.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::par::{self, Parallelism};

pub type Vertex = usize;

/// Distance marker for vertices a BFS never reached.
pub const UNREACHABLE: u32 = u32::MAX;

/// An edge key. Undirected edges are normalized so that `0 < 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(pub Vertex, pub Vertex);

impl Edge {
    /// Normalized undirected key.
    pub fn undirected(u: Vertex, v: Vertex) -> Edge {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn other(&self, x: Vertex) -> Vertex {
        if self.0 == x {
            self.1
        } else {
            self.0
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    directed: bool,
    edges: Vec<Edge>,
    out_adj: Vec<Vec<Vertex>>,
    in_adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds an undirected simple graph. Rejects self-loops, duplicate
    /// edges (in either orientation) and out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::build(n, edges, false)
    }

    /// Builds a directed simple graph; `(u, v)` and `(v, u)` are distinct arcs.
    pub fn new_directed<I>(n: usize, arcs: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::build(n, arcs, true)
    }

    fn build<I>(n: usize, edges: I, directed: bool) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            list.push(if directed {
                Edge(u, v)
            } else {
                Edge::undirected(u, v)
            });
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge {{{}, {}}}",
                w[0].0, w[0].1
            )));
        }
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for e in &list {
            out_adj[e.0].push(e.1);
            if directed {
                in_adj[e.1].push(e.0);
            } else {
                out_adj[e.1].push(e.0);
            }
        }
        for adj in out_adj.iter_mut().chain(in_adj.iter_mut()) {
            adj.sort_unstable();
        }
        if !directed {
            in_adj = Vec::new();
        }
        Ok(Graph {
            n,
            directed,
            edges: list,
            out_adj,
            in_adj,
        })
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidGraph(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Star with hub 0 and `n - 1` leaves.
    pub fn star(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (0, i))).expect("star is simple")
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph is simple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Edges in canonical sorted order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Out-neighbors (all neighbors when undirected), ascending.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.out_adj[v]
    }

    /// In-neighbors (all neighbors when undirected), ascending.
    pub fn in_neighbors(&self, v: Vertex) -> &[Vertex] {
        if self.directed {
            &self.in_adj[v]
        } else {
            &self.out_adj[v]
        }
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.out_adj[v].len()
    }

    /// Canonical key of the edge joining `u` and `v`, if present.
    pub fn edge_key(&self, u: Vertex, v: Vertex) -> Option<Edge> {
        let key = if self.directed {
            Edge(u, v)
        } else {
            Edge::undirected(u, v)
        };
        self.contains_edge(key).then_some(key)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_key(u, v).is_some()
    }

    /// True if `key` (already canonical) is an edge of the graph.
    pub fn contains_edge(&self, key: Edge) -> bool {
        self.edges.binary_search(&key).is_ok()
    }

    pub fn require_undirected(&self) -> Result<()> {
        if self.directed {
            Err(Error::Precondition(
                "operation needs an undirected graph".into(),
            ))
        } else {
            Ok(())
        }
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Spanning subgraph on the same vertex set keeping only `edges`.
    /// Every kept edge must belong to `self`.
    pub fn spanning_subgraph<I>(&self, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = Edge>,
    {
        let kept: Vec<Edge> = edges.into_iter().collect();
        for e in &kept {
            let key = if self.directed {
                *e
            } else {
                Edge::undirected(e.0, e.1)
            };
            if !self.contains_edge(key) {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{}, {}}} is not in the host graph",
                    e.0, e.1
                )));
            }
        }
        Self::build(self.n, kept.into_iter().map(|e| (e.0, e.1)), self.directed)
    }

    /// True if every edge of `self` is an edge of `host` and both share `n`.
    pub fn is_subgraph_of(&self, host: &Graph) -> bool {
        self.n == host.n
            && self.directed == host.directed
            && self.edges.iter().all(|e| host.contains_edge(*e))
    }

    /// Connected (undirected) or strongly connected (directed).
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let reach_all = |adj: &[Vec<Vertex>]| {
            let mut seen = vec![false; self.n];
            let mut stack = vec![0];
            seen[0] = true;
            let mut count = 1;
            while let Some(u) = stack.pop() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        count += 1;
                        stack.push(w);
                    }
                }
            }
            count == self.n
        };
        reach_all(&self.out_adj) && (!self.directed || reach_all(&self.in_adj))
    }

    /// Returns true when the (undirected) graph contains a 4-cycle as a
    /// subgraph. Two vertices sharing two common neighbors close a C4.
    pub fn has_c4(&self) -> bool {
        let n = self.n;
        let mut seen = vec![false; n * n];
        for v in 0..n {
            let nb = self.undirected_neighbors(v);
            for (i, &a) in nb.iter().enumerate() {
                for &b in &nb[i + 1..] {
                    let (x, y) = if a < b { (a, b) } else { (b, a) };
                    let slot = &mut seen[x * n + y];
                    if *slot {
                        return true;
                    }
                    *slot = true;
                }
            }
        }
        false
    }

    fn undirected_neighbors(&self, v: Vertex) -> Vec<Vertex> {
        if !self.directed {
            return self.out_adj[v].clone();
        }
        let mut nb: Vec<Vertex> = self.out_adj[v]
            .iter()
            .chain(&self.in_adj[v])
            .copied()
            .collect();
        nb.sort_unstable();
        nb.dedup();
        nb
    }
}

/// Single-root BFS result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SptResult {
    pub root: Vertex,
    pub parent: Vec<Option<Vertex>>,
    pub dist: Vec<u32>,
}

impl SptResult {
    /// Tree edges as `(child, parent)` pairs, in vertex order.
    pub fn tree_edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.map(|p| (v, p)))
    }

    /// Largest finite distance.
    pub fn height(&self) -> u32 {
        self.dist
            .iter()
            .copied()
            .filter(|&d| d != UNREACHABLE)
            .max()
            .unwrap_or(0)
    }

    /// Vertices on the tree path from the root to `target`, root first.
    pub fn path_to(&self, target: Vertex) -> Option<Vec<Vertex>> {
        if self.dist[target] == UNREACHABLE {
            return None;
        }
        let mut path = vec![target];
        let mut cur = target;
        while let Some(p) = self.parent[cur] {
            path.push(p);
            cur = p;
        }
        path.reverse();
        Some(path)
    }
}

/// Multi-source BFS result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpfResult {
    pub roots: Vec<Vertex>,
    pub parent: Vec<Option<Vertex>>,
    pub dist: Vec<u32>,
    pub root_of: Vec<Option<Vertex>>,
}

impl SpfResult {
    pub fn tree_edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.map(|p| (v, p)))
    }

    pub fn height(&self) -> u32 {
        self.dist
            .iter()
            .copied()
            .filter(|&d| d != UNREACHABLE)
            .max()
            .unwrap_or(0)
    }
}

fn bfs_from(g: &Graph, roots: &[Vertex]) -> (Vec<Option<Vertex>>, Vec<u32>, Vec<Option<Vertex>>) {
    let n = g.n();
    let mut parent = vec![None; n];
    let mut dist = vec![UNREACHABLE; n];
    let mut root_of = vec![None; n];
    let mut queue = VecDeque::with_capacity(n);
    for &r in roots {
        if dist[r] == UNREACHABLE {
            dist[r] = 0;
            root_of[r] = Some(r);
            queue.push_back(r);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHABLE {
                dist[w] = dist[u] + 1;
                parent[w] = Some(u);
                root_of[w] = root_of[u];
                queue.push_back(w);
            }
        }
    }
    (parent, dist, root_of)
}

/// Hop distances from `source` (out-distances on directed graphs).
pub fn distances_from(g: &Graph, source: Vertex) -> Vec<u32> {
    bfs_from(g, &[source]).1
}

/// Shortest path tree rooted at `root`.
pub fn bfs_spt(g: &Graph, root: Vertex) -> Result<SptResult> {
    g.check_vertex(root)?;
    let (parent, dist, _) = bfs_from(g, &[root]);
    Ok(SptResult { root, parent, dist })
}

/// Shortest path forest rooted at the vertex set `roots`. Roots are seeded
/// in ascending order, so ties go to the lowest-numbered root.
pub fn bfs_spf(g: &Graph, roots: &[Vertex]) -> Result<SpfResult> {
    if roots.is_empty() {
        return Err(Error::Precondition(
            "shortest path forest needs a nonempty root set".into(),
        ));
    }
    for &r in roots {
        g.check_vertex(r)?;
    }
    let mut sorted = roots.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let (parent, dist, root_of) = bfs_from(g, &sorted);
    Ok(SpfResult {
        roots: sorted,
        parent,
        dist,
        root_of,
    })
}

/// All-pairs hop distances, one BFS per source.
pub fn all_pairs(g: &Graph, par: Parallelism) -> Vec<Vec<u32>> {
    par::map_indices(g.n(), par, |s| distances_from(g, s))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metrics {
    pub diameter: u32,
    pub radius: u32,
    /// Lowest-numbered vertex whose eccentricity equals the radius.
    pub center: Vertex,
    pub eccentricities: Vec<u32>,
}

pub fn metrics(g: &Graph) -> Result<Metrics> {
    metrics_with(g, Parallelism::default())
}

/// Diameter, radius, center and eccentricities via all-pairs BFS. Directed
/// graphs use out-eccentricities and must be strongly connected.
pub fn metrics_with(g: &Graph, par: Parallelism) -> Result<Metrics> {
    if g.n() == 0 {
        return Err(Error::InvalidGraph("empty graph has no metrics".into()));
    }
    let ecc: Vec<Option<u32>> = par::map_indices(g.n(), par, |s| {
        let d = distances_from(g, s);
        if d.contains(&UNREACHABLE) {
            None
        } else {
            d.into_iter().max()
        }
    });
    let eccentricities: Vec<u32> = ecc
        .into_iter()
        .collect::<Option<_>>()
        .ok_or(Error::Disconnected)?;
    let diameter = *eccentricities.iter().max().unwrap();
    let radius = *eccentricities.iter().min().unwrap();
    let center = eccentricities.iter().position(|&e| e == radius).unwrap();
    Ok(Metrics {
        diameter,
        radius,
        center,
        eccentricities,
    })
}

/// Diameter or `None` when disconnected.
pub fn diameter(g: &Graph) -> Option<u32> {
    metrics(g).ok().map(|m| m.diameter)
}
