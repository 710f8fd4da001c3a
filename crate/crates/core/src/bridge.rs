//! Conversions between aged labelings and diameter-constrained spanning
//! subgraphs, plus pluggable subgraph solvers.
//!
//! A spanning subgraph `H` with diameter at most `b` becomes a labeling by
//! giving every edge all of `1..=b`; a labeling becomes a subgraph by
//! keeping the labeled edges. Composing a subgraph solver with the first
//! direction turns an α-approximation for the subgraph problem into an
//! (α b)-approximation for the labeling problem.

use crate::error::{Error, Result};
use crate::exact::{self, ExactBudget};
use crate::graph::{self, Edge, Graph, Vertex, UNREACHABLE};
use crate::par::{self, Parallelism};
use crate::temporal::{Label, Labeling, TemporalGraph};

/// Every edge of `h` gets the labels `1..=b`.
pub fn dcss_to_mal(h: &Graph, b: Label) -> Result<Labeling> {
    let d = graph::metrics(h)?.diameter;
    if d > b {
        return Err(Error::Precondition(format!(
            "subgraph diameter {d} exceeds b = {b}"
        )));
    }
    let mut out = Labeling::new();
    for &e in h.edges() {
        out.add_all(e, 1..=b);
    }
    Ok(out)
}

/// Keeps the edges that carry at least one label. The labeling must be
/// temporally connected.
pub fn mal_to_dcss(tg: &TemporalGraph<'_>) -> Result<Graph> {
    let verdict = tg.is_temporally_connected(None);
    if !verdict.is_connected() {
        return Err(Error::Infeasible(format!(
            "labeling is not temporally connected: {verdict}"
        )));
    }
    tg.graph().spanning_subgraph(tg.labeling().labeled_edges())
}

/// A diameter-constrained spanning subgraph solver.
pub trait DcssSolver: Sync {
    fn name(&self) -> &str;
    /// Returns a spanning subgraph of `g` whose diameter should be at most `d`.
    fn solve(&self, g: &Graph, d: u32) -> Result<Graph>;
}

/// Checks that `h` spans `g`, is connected and has diameter at most `d`.
pub fn verify_dcss(g: &Graph, h: &Graph, d: u32) -> Result<()> {
    if !h.is_subgraph_of(g) {
        return Err(Error::Infeasible(
            "solver output is not a subgraph of the input".into(),
        ));
    }
    let dh =
        graph::metrics(h).map_err(|_| Error::Infeasible("solver output is disconnected".into()))?;
    if dh.diameter > d {
        return Err(Error::Infeasible(format!(
            "solver output has diameter {} above the bound {d}",
            dh.diameter
        )));
    }
    Ok(())
}

/// Shortest path tree from a center. Its diameter is at most `2R`.
#[derive(Debug, Clone, Copy, Default)]
pub struct TreeSolver;

impl DcssSolver for TreeSolver {
    fn name(&self) -> &str {
        "tree"
    }

    fn solve(&self, g: &Graph, d: u32) -> Result<Graph> {
        let m = graph::metrics(g)?;
        let spt = graph::bfs_spt(g, m.center)?;
        let h = g.spanning_subgraph(spt.tree_edges().map(|(c, p)| Edge::undirected(c, p)))?;
        let dh = graph::metrics(&h)?.diameter;
        if dh > d {
            return Err(Error::Infeasible(format!(
                "center tree has diameter {dh} above the bound {d}"
            )));
        }
        Ok(h)
    }
}

/// Additive +2 spanner; feasible whenever `d >= D + 2`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Plus2Solver;

impl DcssSolver for Plus2Solver {
    fn name(&self) -> &str {
        "plus2"
    }

    fn solve(&self, g: &Graph, d: u32) -> Result<Graph> {
        let h = plus2_spanner(g)?;
        let dh = graph::metrics(&h)?.diameter;
        if dh > d {
            return Err(Error::Infeasible(format!(
                "+2 spanner has diameter {dh} above the bound {d}"
            )));
        }
        Ok(h)
    }
}

/// Exhaustive minimum subgraph; tiny graphs only.
#[derive(Debug, Clone, Copy, Default)]
pub struct ExactSolver {
    pub budget: ExactBudget,
}

impl DcssSolver for ExactSolver {
    fn name(&self) -> &str {
        "exact"
    }

    fn solve(&self, g: &Graph, d: u32) -> Result<Graph> {
        exact::exact_dcss(g, d, &self.budget)
    }
}

/// Looks up a built-in solver by name: `tree`, `plus2` or `exact`.
pub fn solver_by_name(name: &str) -> Option<Box<dyn DcssSolver>> {
    match name {
        "tree" => Some(Box::new(TreeSolver)),
        "plus2" => Some(Box::new(Plus2Solver)),
        "exact" => Some(Box::new(ExactSolver::default())),
        _ => None,
    }
}

/// Runs `solver` with diameter bound `age` and labels its output with
/// `1..=age` on every edge.
pub fn solve_mal_via_dcss(g: &Graph, age: Label, solver: &dyn DcssSolver) -> Result<Labeling> {
    let d = graph::metrics(g)?.diameter;
    if age < d {
        return Err(Error::Infeasible(format!(
            "age {age} is below the diameter {d}"
        )));
    }
    let h = solver.solve(g, age)?;
    verify_dcss(g, &h, age)?;
    dcss_to_mal(&h, age)
}

/// Constant `c` in the edge bound `|E(H)| <= c n^(3/2)` of [`plus2_spanner`].
pub const PLUS2_EDGE_CONSTANT: f64 = 2.0;

/// Additive +2 spanner with at most `2 n^(3/2)` edges.
///
/// With threshold `k = ceil(sqrt n)`:
/// 1. while some vertex has at least `k` unclustered neighbors, open a
///    cluster made of it and those neighbors (fewer than `sqrt n` clusters,
///    since clusters are disjoint and hold more than `k` vertices);
/// 2. keep every edge with an unclustered endpoint (each vertex now has
///    fewer than `k` unclustered neighbors, so fewer than `n k` edges);
/// 3. add a BFS tree of `G` from every cluster center.
///
/// A shortest `u`-`v` path either uses kept edges only, or passes through a
/// clustered vertex `w` adjacent to (or equal to) a center `c`, and the BFS
/// tree from `c` gives `d(u, c) + d(c, v) <= d(u, v) + 2`.
pub fn plus2_spanner(g: &Graph) -> Result<Graph> {
    g.require_undirected()?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let k = (n as f64).sqrt().ceil() as usize;
    let mut clustered = vec![false; n];
    let mut centers: Vec<Vertex> = Vec::new();
    loop {
        let next =
            (0..n).find(|&v| g.neighbors(v).iter().filter(|&&w| !clustered[w]).count() >= k.max(1));
        let Some(c) = next else { break };
        if k == 0 {
            break;
        }
        let members: Vec<Vertex> = g
            .neighbors(c)
            .iter()
            .copied()
            .filter(|&w| !clustered[w])
            .collect();
        clustered[c] = true;
        for w in members {
            clustered[w] = true;
        }
        centers.push(c);
    }
    let mut keep: Vec<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|e| !clustered[e.0] || !clustered[e.1])
        .collect();
    for &c in &centers {
        let spt = graph::bfs_spt(g, c)?;
        keep.extend(spt.tree_edges().map(|(a, b)| Edge::undirected(a, b)));
    }
    keep.sort_unstable();
    keep.dedup();
    g.spanning_subgraph(keep)
}

/// Largest `d_H(u, v) - d_G(u, v)` over all pairs, or `None` if `h` fails to
/// connect a pair `g` connects.
pub fn additive_stretch(g: &Graph, h: &Graph, par: Parallelism) -> Option<u32> {
    let per_source = par::map_indices(g.n(), par, |s| {
        let dg = graph::distances_from(g, s);
        let dh = graph::distances_from(h, s);
        let mut worst = 0;
        for v in 0..g.n() {
            if dg[v] == UNREACHABLE {
                continue;
            }
            if dh[v] == UNREACHABLE {
                return None;
            }
            worst = worst.max(dh[v] - dg[v]);
        }
        Some(worst)
    });
    per_source
        .into_iter()
        .try_fold(0, |acc, s| s.map(|s| acc.max(s)))
}

/// `floor(c n^(3/2))` for the documented constant.
pub fn plus2_edge_bound(n: usize) -> usize {
    (PLUS2_EDGE_CONSTANT * (n as f64).powf(1.5)).floor() as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::temporal::Verdict;

    #[test]
    fn star_of_k4_with_b2() {
        let k4 = Graph::complete(4);
        let h = k4
            .spanning_subgraph([Edge(0, 1), Edge(0, 2), Edge(0, 3)])
            .unwrap();
        let l = dcss_to_mal(&h, 2).unwrap();
        assert_eq!(l.total_labels(), 6);
        let tg = TemporalGraph::new(&k4, &l).unwrap();
        assert_eq!(tg.is_temporally_connected(Some(2)), Verdict::Connected);
        assert!(dcss_to_mal(&h, 1).is_err());
    }

    #[test]
    fn single_edge_round_trip() {
        let k2 = Graph::path(2);
        let l = dcss_to_mal(&k2, 1).unwrap();
        assert_eq!(l.total_labels(), 1);
        let tg = TemporalGraph::new(&k2, &l).unwrap();
        assert_eq!(mal_to_dcss(&tg).unwrap(), k2);
    }

    #[test]
    fn mal_to_dcss_rejects_disconnected_labelings() {
        let g = Graph::path(3);
        let mut l = Labeling::new();
        l.add(Edge(0, 1), 1);
        let tg = TemporalGraph::new(&g, &l).unwrap();
        assert!(matches!(mal_to_dcss(&tg), Err(Error::Infeasible(_))));
    }

    #[test]
    fn star_schedule_keeps_all_spokes() {
        let g = Graph::star(4);
        let mut l = Labeling::new();
        l.add_all(Edge(0, 1), [1, 3]);
        l.add(Edge(0, 2), 2);
        l.add_all(Edge(0, 3), [1, 3]);
        let tg = TemporalGraph::new(&g, &l).unwrap();
        let h = mal_to_dcss(&tg).unwrap();
        assert_eq!(h.m(), 3);
        assert_eq!(graph::diameter(&h), Some(2));
    }

    #[test]
    fn tree_solver_on_star() {
        let star = Graph::star(4);
        let l = solve_mal_via_dcss(&star, 2, &TreeSolver).unwrap();
        assert_eq!(l.total_labels(), 6);
        let c6 = Graph::cycle(6).unwrap();
        // Center tree of C6 has diameter 5 > 3.
        assert!(matches!(
            solve_mal_via_dcss(&c6, 3, &TreeSolver),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn exact_solver_on_k4() {
        let k4 = Graph::complete(4);
        let l = solve_mal_via_dcss(&k4, 2, &ExactSolver::default()).unwrap();
        assert_eq!(l.total_labels(), 6);
    }

    #[test]
    fn age_below_diameter_is_infeasible() {
        let p4 = Graph::path(4);
        assert!(matches!(
            solve_mal_via_dcss(&p4, 2, &TreeSolver),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn spanner_keeps_trees() {
        let p6 = Graph::path(6);
        assert_eq!(plus2_spanner(&p6).unwrap(), p6);
    }

    #[test]
    fn spanner_on_complete_graph() {
        let k = Graph::complete(40);
        let h = plus2_spanner(&k).unwrap();
        assert!(h.m() <= plus2_edge_bound(40));
        assert!(h.m() < k.m());
        assert!(additive_stretch(&k, &h, Parallelism::Sequential).unwrap() <= 2);
    }

    #[test]
    fn solver_lookup() {
        assert_eq!(solver_by_name("tree").unwrap().name(), "tree");
        assert_eq!(solver_by_name("plus2").unwrap().name(), "plus2");
        assert_eq!(solver_by_name("exact").unwrap().name(), "exact");
        assert!(solver_by_name("nope").is_none());
    }
}
