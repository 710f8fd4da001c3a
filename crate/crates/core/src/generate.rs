//! Seeded instance generators.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::reductions::{MinRepInstance, RepCover, SetCoverInstance};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Connected graph with `n` vertices and `m` edges: a random recursive tree
/// over a shuffled vertex order plus uniformly chosen extra edges.
pub fn random_connected(n: usize, m: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Precondition("need at least one vertex".into()));
    }
    let max = n * (n - 1) / 2;
    if m + 1 < n || m > max {
        return Err(Error::Precondition(format!(
            "m = {m} is outside [{}, {max}] for n = {n}",
            n - 1
        )));
    }
    let mut rng = rng(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut edges: BTreeSet<Edge> = BTreeSet::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.insert(Edge::undirected(order[i], order[j]));
    }
    if m - edges.len() > max / 2 {
        let mut missing: Vec<Edge> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| Edge(u, v)))
            .filter(|e| !edges.contains(e))
            .collect();
        missing.shuffle(&mut rng);
        edges.extend(missing.into_iter().take(m - edges.len()));
    } else {
        while edges.len() < m {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v {
                edges.insert(Edge::undirected(u, v));
            }
        }
    }
    Graph::new(n, edges.into_iter().map(|e| (e.0, e.1)))
}

/// Set cover instance with `sets` random subsets of sizes in `1..=max_size`,
/// patched so every element is covered.
pub fn random_set_cover(
    universe: usize,
    sets: usize,
    max_size: usize,
    seed: u64,
) -> Result<SetCoverInstance> {
    if universe == 0 || sets == 0 || max_size == 0 {
        return Err(Error::Precondition(
            "universe, set count and set size must be positive".into(),
        ));
    }
    let mut rng = rng(seed);
    let elements: Vec<usize> = (0..universe).collect();
    let mut family: Vec<BTreeSet<usize>> = (0..sets)
        .map(|_| {
            let size = rng.gen_range(1..=max_size.min(universe));
            elements.choose_multiple(&mut rng, size).copied().collect()
        })
        .collect();
    for u in 0..universe {
        if !family.iter().any(|s| s.contains(&u)) {
            let j = rng.gen_range(0..sets);
            family[j].insert(u);
        }
    }
    SetCoverInstance::new(
        universe,
        family
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect(),
    )
}

/// MIN-REP instance with `r` groups of `sigma` vertices per side and a
/// planted cover of one representative per group. Each group pair becomes
/// a superedge with probability `density`; superedges get the planted edge
/// plus random extra edges between the two groups.
pub fn random_minrep(
    r: usize,
    sigma: usize,
    density: f64,
    seed: u64,
) -> Result<(MinRepInstance, RepCover)> {
    if r == 0 || sigma == 0 {
        return Err(Error::Precondition("r and sigma must be positive".into()));
    }
    let mut rng = rng(seed);
    let shuffled = |rng: &mut ChaCha8Rng| {
        let mut v: Vec<usize> = (0..r * sigma).collect();
        v.shuffle(rng);
        v.chunks(sigma).map(|c| c.to_vec()).collect::<Vec<_>>()
    };
    let groups_a = shuffled(&mut rng);
    let groups_b = shuffled(&mut rng);
    let cover = RepCover {
        a: groups_a
            .iter()
            .map(|g| *g.choose(&mut rng).expect("nonempty"))
            .collect(),
        b: groups_b
            .iter()
            .map(|g| *g.choose(&mut rng).expect("nonempty"))
            .collect(),
    };
    let mut edges = BTreeSet::new();
    for (ga, members_a) in groups_a.iter().enumerate() {
        for (gb, members_b) in groups_b.iter().enumerate() {
            if !rng.gen_bool(density.clamp(0.0, 1.0)) {
                continue;
            }
            edges.insert((cover.a[ga], cover.b[gb]));
            for &a in members_a {
                for &b in members_b {
                    if rng.gen_bool(0.3) {
                        edges.insert((a, b));
                    }
                }
            }
        }
    }
    let mr = MinRepInstance {
        groups_a,
        groups_b,
        edges: edges.into_iter().collect(),
    };
    mr.validate()?;
    Ok((mr, cover))
}
