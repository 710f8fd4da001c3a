//! Greedy hitting sets and dominating set-pairs.
//!
//! A dominating set-pair `(S1, S2)` with radii `h1 = floor(δD)` and
//! `h2 = ceil((1-δ)D)` has one of two properties: every vertex lies within
//! `h1` of `S1`, or every vertex lies within `h2` of `S2`. `S1` is small
//! because it hits the `n2`-vertex balls around every vertex; `S2` is one
//! such ball.

use crate::error::{Error, Result};
use crate::graph::{self, Graph, Vertex};
use crate::par::{self, Parallelism};

/// Picks elements greedily, each time the one contained in the most sets
/// not yet hit (lowest index on ties), until every set is hit.
///
/// All sets must have the same size `ℓ >= 1` and distinct elements below
/// `universe`. The result has at most [`hitting_set_bound`] elements.
pub fn greedy_hitting_set(universe: usize, sets: &[Vec<Vertex>]) -> Result<Vec<Vertex>> {
    let Some(first) = sets.first() else {
        return Ok(Vec::new());
    };
    let ell = first.len();
    if ell == 0 {
        return Err(Error::Precondition(
            "hitting-set members must be nonempty".into(),
        ));
    }
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); universe];
    for (i, set) in sets.iter().enumerate() {
        if set.len() != ell {
            return Err(Error::Precondition(format!(
                "set {i} has {} elements, expected {ell}",
                set.len()
            )));
        }
        let mut sorted = set.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Precondition(format!("set {i} repeats an element")));
        }
        for &x in set {
            if x >= universe {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    n: universe,
                });
            }
            containing[x].push(i);
        }
    }

    let mut count: Vec<usize> = containing.iter().map(Vec::len).collect();
    let mut hit = vec![false; sets.len()];
    let mut remaining = sets.len();
    let mut chosen = Vec::new();
    while remaining > 0 {
        let (best, _) = count
            .iter()
            .enumerate()
            .fold((0, 0), |acc, (x, &c)| if c > acc.1 { (x, c) } else { acc });
        chosen.push(best);
        for &i in &containing[best] {
            if !hit[i] {
                hit[i] = true;
                remaining -= 1;
                for &x in &sets[i] {
                    count[x] -= 1;
                }
            }
        }
    }
    chosen.sort_unstable();
    Ok(chosen)
}

/// `ceil((universe / ell) * (ln(count) + 1))`, the size guarantee of
/// [`greedy_hitting_set`] on `count` sets of `ell` elements each.
pub fn hitting_set_bound(universe: usize, ell: usize, count: usize) -> usize {
    if count == 0 {
        return 0;
    }
    ((universe as f64 / ell as f64) * ((count as f64).ln() + 1.0)).ceil() as usize
}

/// A rational `num / den` strictly between 0 and 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Delta {
    num: u32,
    den: u32,
}

impl Delta {
    pub fn new(num: u32, den: u32) -> Result<Delta> {
        if num == 0 || den == 0 || num >= den {
            return Err(Error::Precondition(format!(
                "delta {num}/{den} is not in (0, 1)"
            )));
        }
        Ok(Delta { num, den })
    }

    pub const HALF: Delta = Delta { num: 1, den: 2 };
    pub const THIRD: Delta = Delta { num: 1, den: 3 };

    /// `floor(δ x)`.
    pub fn floor_of(self, x: u32) -> u32 {
        (u64::from(self.num) * u64::from(x) / u64::from(self.den)) as u32
    }

    /// `ceil((1 - δ) x)`.
    pub fn ceil_complement_of(self, x: u32) -> u32 {
        let rest = u64::from(self.den - self.num) * u64::from(x);
        rest.div_ceil(u64::from(self.den)) as u32
    }

    pub fn as_f64(self) -> f64 {
        f64::from(self.num) / f64::from(self.den)
    }
}

/// Which of the two domination conditions the pair satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    /// Every vertex is within `h1` of `s1`.
    First,
    /// Every vertex is within `h2` of `s2`.
    Second,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominatingSetPair {
    pub s1: Vec<Vertex>,
    pub s2: Vec<Vertex>,
    pub h1: u32,
    pub h2: u32,
    pub satisfied: Condition,
    pub delta: Delta,
    pub n2: usize,
}

impl DominatingSetPair {
    /// The set whose condition holds, with its radius.
    pub fn dominating(&self) -> (&[Vertex], u32) {
        match self.satisfied {
            Condition::First => (&self.s1, self.h1),
            Condition::Second => (&self.s2, self.h2),
        }
    }
}

/// Size bound on `s1`: `ceil(n (ln n + 1) / n2)`.
pub fn s1_size_bound(n: usize, n2: usize) -> usize {
    hitting_set_bound(n, n2, n)
}

/// The `n2` vertices nearest to `v`, ties broken by ascending index.
pub fn nearest_ball(g: &Graph, v: Vertex, n2: usize) -> Vec<Vertex> {
    let dist = graph::distances_from(g, v);
    let mut order: Vec<Vertex> = (0..g.n()).collect();
    order.sort_by_key(|&u| (dist[u], u));
    order.truncate(n2);
    order
}

pub fn dominating_set_pair(g: &Graph, delta: Delta, n2: usize) -> Result<DominatingSetPair> {
    dominating_set_pair_with(g, delta, n2, Parallelism::default())
}

/// Computes a `<floor(δD), ceil((1-δ)D)>`-dominating set-pair.
pub fn dominating_set_pair_with(
    g: &Graph,
    delta: Delta,
    n2: usize,
    par: Parallelism,
) -> Result<DominatingSetPair> {
    let n = g.n();
    if n2 == 0 || n2 > n {
        return Err(Error::Precondition(format!("n2 = {n2} is not in [1, {n}]")));
    }
    let diameter = graph::metrics_with(g, par)?.diameter;
    let h1 = delta.floor_of(diameter);
    let h2 = delta.ceil_complement_of(diameter);

    let balls: Vec<Vec<Vertex>> = par::map_indices(n, par, |v| nearest_ball(g, v, n2));
    let s1 = greedy_hitting_set(n, &balls)?;
    let from_s1 = graph::bfs_spf(g, &s1)?;
    let far = *from_s1.dist.iter().max().unwrap();
    let w = from_s1.dist.iter().position(|&d| d == far).unwrap();
    let mut s2 = balls[w].clone();
    s2.sort_unstable();

    let satisfied = if far <= h1 {
        Condition::First
    } else {
        // Vertices within h1 of w cannot be in s1, since w is farther than h1
        // from every member of s1.
        let from_w = graph::distances_from(g, w);
        if s1.iter().any(|&s| from_w[s] <= h1) {
            return Err(Error::Internal(
                "ball around the farthest vertex meets S1".into(),
            ));
        }
        let from_s2 = graph::bfs_spf(g, &s2)?;
        if from_s2.height() > h2 {
            return Err(Error::Internal(
                "neither domination condition holds for the computed set-pair".into(),
            ));
        }
        Condition::Second
    };
    Ok(DominatingSetPair {
        s1,
        s2,
        h1,
        h2,
        satisfied,
        delta,
        n2,
    })
}
