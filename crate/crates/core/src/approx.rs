//! Approximation algorithms for minimum aged labeling.
//!
//! * [`label_trivial`]: one shortest path tree per vertex, lifetime `D`.
//! * [`label_3half`]: lifetime `ceil(3D/2)`, `O(n sqrt(n log n))` labels.
//! * [`label_5thirds`]: lifetime `ceil(5D/3)`, `O(n (D n log² n)^(1/3))` labels.
//!
//! The last two are built around a dominating set-pair: every vertex first
//! travels to (all of) a small hub set `S` using labels up to some phase
//! boundary, and the hubs then fan out along a shortest path forest.

use crate::dominating::{self, Condition, Delta, DominatingSetPair};
use crate::error::Result;
use crate::graph::{self, Edge, Graph, Vertex};
use crate::par::{self, Parallelism};
use crate::temporal::{Label, Labeling};

/// A labeling together with the set-pair it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominatedLabeling {
    pub labeling: Labeling,
    /// `None` for graphs with a single vertex.
    pub pair: Option<DominatingSetPair>,
}

impl DominatedLabeling {
    fn empty() -> Self {
        DominatedLabeling {
            labeling: Labeling::new(),
            pair: None,
        }
    }
}

fn merge(parts: Vec<Labeling>) -> Labeling {
    let mut out = Labeling::new();
    for p in &parts {
        out.union_with(p);
    }
    out
}

/// For every source `s`, label each edge of its shortest path tree with the
/// depth of its lower endpoint.
pub fn label_trivial(g: &Graph) -> Result<Labeling> {
    label_trivial_with(g, Parallelism::default())
}

pub fn label_trivial_with(g: &Graph, par: Parallelism) -> Result<Labeling> {
    g.require_undirected()?;
    graph::metrics_with(g, par)?;
    let parts = par::map_indices(g.n(), par, |s| {
        let spt = graph::bfs_spt(g, s).expect("source in range");
        let mut l = Labeling::new();
        for (child, parent) in spt.tree_edges() {
            l.add(Edge::undirected(child, parent), spt.dist[child]);
        }
        l
    });
    Ok(merge(parts))
}

/// `ceil(sqrt(n ln n))`, clamped to `[1, n]`.
pub fn n2_three_half(n: usize) -> usize {
    let x = n as f64;
    ((x * x.ln()).sqrt().ceil() as usize).clamp(1, n.max(1))
}

/// `ceil((D n ln² n)^(1/3))`, clamped to `[1, n]`.
pub fn n2_five_thirds(n: usize, diameter: u32) -> usize {
    let x = n as f64;
    let ln = x.ln();
    ((f64::from(diameter) * x * ln * ln).cbrt().ceil() as usize).clamp(1, n.max(1))
}

/// Upper bound on the labels [`label_3half`] uses with hub set `hubs`.
pub fn count_bound_3half(n: usize, hubs: usize) -> usize {
    (hubs + 1) * n.saturating_sub(1)
}

/// Upper bound on the labels [`label_5thirds`] uses for the given pair.
pub fn count_bound_5thirds(n: usize, diameter: u32, pair: &DominatingSetPair) -> usize {
    match pair.satisfied {
        Condition::First => {
            let k = pair.s1.len();
            2 * n.saturating_sub(1) + diameter as usize * k * k.saturating_sub(1)
        }
        Condition::Second => count_bound_3half(n, pair.s2.len()),
    }
}

/// Every vertex reaches every hub by labels ending at `boundary`; the hubs
/// then reach everyone through a shortest path forest with labels
/// `boundary + 1, boundary + 2, ...`.
fn hub_and_forest(g: &Graph, hubs: &[Vertex], boundary: u32, par: Parallelism) -> Result<Labeling> {
    let mut parts = par::map_items(hubs, par, |&v| {
        let spt = graph::bfs_spt(g, v).expect("hub in range");
        let mut l = Labeling::new();
        for (child, parent) in spt.tree_edges() {
            l.add(
                Edge::undirected(child, parent),
                boundary - spt.dist[child] + 1,
            );
        }
        l
    });
    let forest = graph::bfs_spf(g, hubs)?;
    let mut l = Labeling::new();
    for (child, parent) in forest.tree_edges() {
        l.add(
            Edge::undirected(child, parent),
            boundary + forest.dist[child],
        );
    }
    parts.push(l);
    Ok(merge(parts))
}

pub fn label_3half(g: &Graph) -> Result<DominatedLabeling> {
    label_3half_with(g, Parallelism::default())
}

/// Lifetime at most `ceil(3D/2)`, at most `(|S| + 1)(n - 1)` labels.
pub fn label_3half_with(g: &Graph, par: Parallelism) -> Result<DominatedLabeling> {
    g.require_undirected()?;
    let m = graph::metrics_with(g, par)?;
    let n = g.n();
    if n <= 1 || m.diameter == 0 {
        return Ok(DominatedLabeling::empty());
    }
    let pair = dominating::dominating_set_pair_with(g, Delta::HALF, n2_three_half(n), par)?;
    let (hubs, _) = pair.dominating();
    let labeling = hub_and_forest(g, hubs, m.diameter, par)?;
    Ok(DominatedLabeling {
        labeling,
        pair: Some(pair),
    })
}

pub fn label_5thirds(g: &Graph) -> Result<DominatedLabeling> {
    label_5thirds_with(g, Parallelism::default())
}

/// Lifetime at most `ceil(5D/3)`.
///
/// When the far condition holds this is the hub-and-forest scheme on `S2`.
/// Otherwise, with `B = floor(D/3)`, every vertex climbs the forest rooted
/// at `S1` on labels `1..=B`, hubs exchange along pairwise shortest paths
/// on labels `B+1..=B+D`, and the forest is descended on `B+D+1..=2B+D`.
pub fn label_5thirds_with(g: &Graph, par: Parallelism) -> Result<DominatedLabeling> {
    g.require_undirected()?;
    let m = graph::metrics_with(g, par)?;
    let n = g.n();
    let d = m.diameter;
    if n <= 1 || d == 0 {
        return Ok(DominatedLabeling::empty());
    }
    let pair = dominating::dominating_set_pair_with(g, Delta::THIRD, n2_five_thirds(n, d), par)?;
    let labeling = match pair.satisfied {
        Condition::Second => hub_and_forest(g, &pair.s2, d, par)?,
        Condition::First => {
            let b = pair.h1;
            let forest = graph::bfs_spf(g, &pair.s1)?;
            let mut base = Labeling::new();
            for (child, parent) in forest.tree_edges() {
                let q = forest.dist[child];
                let e = Edge::undirected(child, parent);
                base.add(e, b - q + 1);
                base.add(e, b + d + q);
            }
            let hubs = &pair.s1;
            let mut parts = par::map_indices(hubs.len(), par, |i| {
                let spt = graph::bfs_spt(g, hubs[i]).expect("hub in range");
                let mut l = Labeling::new();
                for &other in &hubs[i + 1..] {
                    let path = spt.path_to(other).expect("graph is connected");
                    let k = (path.len() - 1) as Label;
                    for (idx, w) in path.windows(2).enumerate() {
                        let i = idx as Label + 1;
                        let e = Edge::undirected(w[0], w[1]);
                        l.add(e, b + i);
                        l.add(e, b + k - i + 1);
                    }
                }
                l
            });
            parts.push(base);
            merge(parts)
        }
    };
    Ok(DominatedLabeling {
        labeling,
        pair: Some(pair),
    })
}

/// `ceil(num * D / den)`.
pub fn ceil_fraction(num: u32, den: u32, diameter: u32) -> u32 {
    (u64::from(num) * u64::from(diameter)).div_ceil(u64::from(den)) as u32
}
