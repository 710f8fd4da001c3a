//! Exhaustive solvers for tiny instances.
//!
//! These are the ground truth the approximation suites are checked against.
//! They are exponential and guarded by an [`ExactBudget`].

use std::collections::HashMap;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{self, Edge, Graph, Vertex};
use crate::temporal::{Label, Labeling};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactBudget {
    /// Cap on `m * a`, the number of (edge, label) slots.
    pub max_edge_label_slots: usize,
    /// Cap on `m` for spanning-subgraph enumeration.
    pub max_edges: usize,
    pub time_limit: Duration,
}

impl Default for ExactBudget {
    fn default() -> Self {
        ExactBudget {
            max_edge_label_slots: 64,
            max_edges: 24,
            time_limit: Duration::from_secs(60),
        }
    }
}

impl ExactBudget {
    fn validate(&self) -> Result<()> {
        if self.max_edge_label_slots == 0 || self.max_edges == 0 || self.time_limit.is_zero() {
            return Err(Error::Precondition(
                "exact budget entries must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Lower bound every temporally connected labeling on `n` vertices meets.
pub fn label_lower_bound(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        (2 * n).saturating_sub(4).max(n - 1)
    }
}

/// Minimum labeling with lifetime at most `age`.
///
/// Iterative deepening on the total label count, from
/// [`label_lower_bound`] upwards. For a fixed count the search assigns
/// labels one time step at a time: step `t` picks the set of edges that
/// carry label `t`. Any feasible labeling can be compressed to consecutive
/// labels `1..=t` without breaking a strict path, so only non-empty steps
/// are explored. States are the per-source sets of reached vertices.
pub fn exact_mal(g: &Graph, age: Label, budget: &ExactBudget) -> Result<Labeling> {
    budget.validate()?;
    let n = g.n();
    if n > 64 {
        return Err(Error::BudgetExceeded(format!(
            "exact search supports at most 64 vertices, got {n}"
        )));
    }
    let metrics =
        graph::metrics(g).map_err(|_| Error::Infeasible("graph is disconnected".into()))?;
    if age < metrics.diameter {
        return Err(Error::Infeasible(format!(
            "age {age} is below the diameter {}",
            metrics.diameter
        )));
    }
    let slots = g.m().saturating_mul(age as usize);
    if slots > budget.max_edge_label_slots {
        return Err(Error::BudgetExceeded(format!(
            "{slots} edge-label slots exceed the cap of {}",
            budget.max_edge_label_slots
        )));
    }
    if n <= 1 {
        return Ok(Labeling::new());
    }

    let mut search = MalSearch::new(g, budget.time_limit);
    let start: Vec<u64> = (0..n).map(|s| 1u64 << s).collect();
    let max_labels = g.m() * age as usize;
    for k in label_lower_bound(n)..=max_labels {
        search.memo.clear();
        if search.run(&start, age, k)? {
            let mut out = Labeling::new();
            for (t, step) in search.steps.iter().enumerate() {
                for &ei in step {
                    out.add(g.edges()[ei], t as Label + 1);
                }
            }
            return Ok(out);
        }
    }
    Err(Error::Internal(
        "full labeling with every slot should be feasible".into(),
    ))
}

struct MalSearch<'a> {
    g: &'a Graph,
    full: u64,
    dist: Vec<Vec<u32>>,
    memo: HashMap<(Vec<u64>, Label), usize>,
    steps: Vec<Vec<usize>>,
    deadline: Instant,
    nodes: u64,
}

impl<'a> MalSearch<'a> {
    fn new(g: &'a Graph, limit: Duration) -> Self {
        let n = g.n();
        MalSearch {
            g,
            full: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
            dist: (0..n).map(|s| graph::distances_from(g, s)).collect(),
            memo: HashMap::new(),
            steps: Vec::new(),
            deadline: Instant::now() + limit,
            nodes: 0,
        }
    }

    fn run(&mut self, reach: &[u64], steps_left: Label, budget: usize) -> Result<bool> {
        if reach.iter().all(|&r| r == self.full) {
            return Ok(true);
        }
        if steps_left == 0 || budget == 0 {
            return Ok(false);
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) && Instant::now() > self.deadline {
            return Err(Error::BudgetExceeded(
                "exact search hit its time limit".into(),
            ));
        }
        let n = self.g.n();
        // Each label extends a given source's reach by at most one vertex.
        let missing = reach
            .iter()
            .map(|r| n - r.count_ones() as usize)
            .max()
            .unwrap_or(0);
        if missing > budget {
            return Ok(false);
        }
        // Each step extends a source's reach by at most one hop.
        for &r in reach {
            let far = (0..n)
                .filter(|&v| r & (1 << v) == 0)
                .map(|v| {
                    (0..n)
                        .filter(|&u| r & (1 << u) != 0)
                        .map(|u| self.dist[u][v])
                        .min()
                        .unwrap_or(u32::MAX)
                })
                .max()
                .unwrap_or(0);
            if far > steps_left {
                return Ok(false);
            }
        }
        let key = (reach.to_vec(), steps_left);
        if self.memo.get(&key).is_some_and(|&b| b >= budget) {
            return Ok(false);
        }

        let directed = self.g.is_directed();
        let useful: Vec<usize> = self
            .g
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| {
                reach.iter().any(|&r| {
                    let a = r & (1 << e.0) != 0;
                    let b = r & (1 << e.1) != 0;
                    (a && !b) || (!directed && b && !a)
                })
            })
            .map(|(i, _)| i)
            .collect();
        let cap = useful.len().min(budget);
        if useful.len() >= 63 {
            return Err(Error::BudgetExceeded(
                "too many candidate edges in one step".into(),
            ));
        }
        let edges = self.g.edges();
        for mask in 1u64..(1u64 << useful.len()) {
            let size = mask.count_ones() as usize;
            if size > cap {
                continue;
            }
            let chosen: Vec<usize> = (0..useful.len())
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| useful[i])
                .collect();
            let next: Vec<u64> = reach
                .iter()
                .map(|&r| {
                    let mut out = r;
                    for &ei in &chosen {
                        let Edge(u, v) = edges[ei];
                        if r & (1 << u) != 0 {
                            out |= 1 << v;
                        }
                        if !directed && r & (1 << v) != 0 {
                            out |= 1 << u;
                        }
                    }
                    out
                })
                .collect();
            self.steps.push(chosen);
            if self.run(&next, steps_left - 1, budget - size)? {
                return Ok(true);
            }
            self.steps.pop();
        }
        let entry = self.memo.entry(key).or_insert(0);
        *entry = (*entry).max(budget);
        Ok(false)
    }
}

/// Minimum-edge spanning subgraph with diameter at most `d`, by enumeration
/// of edge subsets in increasing size starting at `n - 1`.
pub fn exact_dcss(g: &Graph, d: u32, budget: &ExactBudget) -> Result<Graph> {
    budget.validate()?;
    let metrics =
        graph::metrics(g).map_err(|_| Error::Infeasible("graph is disconnected".into()))?;
    if d < metrics.diameter {
        return Err(Error::Infeasible(format!(
            "diameter bound {d} is below the graph diameter {}",
            metrics.diameter
        )));
    }
    let m = g.m();
    if m > budget.max_edges {
        return Err(Error::BudgetExceeded(format!(
            "{m} edges exceed the enumeration cap of {}",
            budget.max_edges
        )));
    }
    let n = g.n();
    let deadline = Instant::now() + budget.time_limit;
    let edges = g.edges();
    let mut checks = 0u64;
    for k in n.saturating_sub(1)..=m {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            checks += 1;
            if checks.is_multiple_of(4096) && Instant::now() > deadline {
                return Err(Error::BudgetExceeded(
                    "exact search hit its time limit".into(),
                ));
            }
            if subset_diameter_at_most(n, g.is_directed(), combo.iter().map(|&i| edges[i]), d) {
                return g.spanning_subgraph(combo.iter().map(|&i| edges[i]));
            }
            if !next_combination(&mut combo, m) {
                break;
            }
        }
    }
    Err(Error::Internal(
        "the full graph meets its own diameter".into(),
    ))
}

/// Advances `combo` to the next k-subset of `0..m` in lexicographic order.
fn next_combination(combo: &mut [usize], m: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < m - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn subset_diameter_at_most<I>(n: usize, directed: bool, edges: I, d: u32) -> bool
where
    I: Iterator<Item = Edge>,
{
    let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for Edge(u, v) in edges {
        adj[u].push(v);
        if !directed {
            adj[v].push(u);
        }
    }
    let mut dist = vec![u32::MAX; n];
    let mut queue = Vec::with_capacity(n);
    for s in 0..n {
        dist.iter_mut().for_each(|x| *x = u32::MAX);
        dist[s] = 0;
        queue.clear();
        queue.push(s);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            if dist[u] == d {
                continue;
            }
            for &w in &adj[u] {
                if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push(w);
                }
            }
        }
        if queue.len() < n {
            return false;
        }
    }
    true
}
