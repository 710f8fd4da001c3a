//! Gadget graphs built from set cover and MIN-REP instances, together with
//! the feasible solutions obtained from a known cover.
//!
//! The generated families have a known diameter and a witness whose size is
//! tied to the cover size, which makes them useful adversarial inputs for
//! the solvers in this crate.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{self, Edge, Graph, Vertex};
use crate::temporal::{Label, Labeling};

/// Universe `0..universe_size` and a list of nonempty subsets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SetCoverInstance {
    pub universe_size: usize,
    pub sets: Vec<Vec<usize>>,
}

impl SetCoverInstance {
    pub fn new(universe_size: usize, sets: Vec<Vec<usize>>) -> Result<SetCoverInstance> {
        let sc = SetCoverInstance {
            universe_size,
            sets,
        };
        sc.validate()?;
        Ok(sc)
    }

    /// Nonempty in-range sets without repeats whose union is the universe.
    pub fn validate(&self) -> Result<()> {
        if self.universe_size == 0 || self.sets.is_empty() {
            return Err(Error::InvalidInstance("empty universe or no sets".into()));
        }
        let mut covered = vec![false; self.universe_size];
        for (j, set) in self.sets.iter().enumerate() {
            if set.is_empty() {
                return Err(Error::InvalidInstance(format!("set {j} is empty")));
            }
            let distinct: BTreeSet<usize> = set.iter().copied().collect();
            if distinct.len() != set.len() {
                return Err(Error::InvalidInstance(format!(
                    "set {j} repeats an element"
                )));
            }
            for &u in set {
                if u >= self.universe_size {
                    return Err(Error::InvalidInstance(format!(
                        "set {j} contains {u}, outside the universe of size {}",
                        self.universe_size
                    )));
                }
                covered[u] = true;
            }
        }
        if let Some(u) = covered.iter().position(|&c| !c) {
            return Err(Error::InvalidInstance(format!("element {u} is in no set")));
        }
        Ok(())
    }

    pub fn eta(&self) -> usize {
        self.universe_size
    }

    pub fn mu(&self) -> usize {
        self.sets.len()
    }

    /// Distinct cover indices, sorted. Fails unless they cover the universe.
    pub fn check_cover(&self, cover: &[usize]) -> Result<Vec<usize>> {
        let chosen: BTreeSet<usize> = cover.iter().copied().collect();
        let mut covered = vec![false; self.universe_size];
        for &j in &chosen {
            let set = self
                .sets
                .get(j)
                .ok_or_else(|| Error::InvalidCover(format!("set index {j} out of range")))?;
            for &u in set {
                covered[u] = true;
            }
        }
        if let Some(u) = covered.iter().position(|&c| !c) {
            return Err(Error::InvalidCover(format!("element {u} is not covered")));
        }
        Ok(chosen.into_iter().collect())
    }

    /// Greedy cover: repeatedly the set covering most uncovered elements.
    pub fn greedy_cover(&self) -> Vec<usize> {
        let mut covered = vec![false; self.universe_size];
        let mut left = self.universe_size;
        let mut cover = Vec::new();
        while left > 0 {
            let (best, gain) = self
                .sets
                .iter()
                .enumerate()
                .map(|(j, s)| (j, s.iter().filter(|&&u| !covered[u]).count()))
                .fold((0, 0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
            if gain == 0 {
                break;
            }
            for &u in &self.sets[best] {
                if !covered[u] {
                    covered[u] = true;
                    left -= 1;
                }
            }
            cover.push(best);
        }
        cover.sort_unstable();
        cover
    }
}

/// Bipartite graph on `A` and `B` whose sides are split into `r` groups of
/// `σ` vertices. `A` and `B` vertices are numbered separately from 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MinRepInstance {
    pub groups_a: Vec<Vec<usize>>,
    pub groups_b: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

/// One chosen vertex per group: `a[g]` in `groups_a[g]`, `b[g]` in `groups_b[g]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepCover {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl MinRepInstance {
    pub fn validate(&self) -> Result<()> {
        let r = self.groups_a.len();
        if r == 0 || self.groups_b.len() != r {
            return Err(Error::InvalidInstance(
                "both sides need the same positive number of groups".into(),
            ));
        }
        let sigma = self.groups_a[0].len();
        if sigma == 0 {
            return Err(Error::InvalidInstance("groups must be nonempty".into()));
        }
        for (side, groups) in [("A", &self.groups_a), ("B", &self.groups_b)] {
            let mut seen = vec![false; r * sigma];
            for (g, members) in groups.iter().enumerate() {
                if members.len() != sigma {
                    return Err(Error::InvalidInstance(format!(
                        "group {side}{g} has {} vertices, expected {sigma}",
                        members.len()
                    )));
                }
                for &v in members {
                    if v >= r * sigma || seen[v] {
                        return Err(Error::InvalidInstance(format!(
                            "vertex {v} on side {side} is out of range or in two groups"
                        )));
                    }
                    seen[v] = true;
                }
            }
        }
        for &(a, b) in &self.edges {
            if a >= r * sigma || b >= r * sigma {
                return Err(Error::InvalidInstance(format!(
                    "edge ({a}, {b}) is out of range"
                )));
            }
        }
        Ok(())
    }

    pub fn r(&self) -> usize {
        self.groups_a.len()
    }

    pub fn sigma(&self) -> usize {
        self.groups_a.first().map_or(0, Vec::len)
    }

    fn group_of(groups: &[Vec<usize>]) -> Vec<usize> {
        let mut out = vec![0; groups.iter().map(Vec::len).sum()];
        for (g, members) in groups.iter().enumerate() {
            for &v in members {
                out[v] = g;
            }
        }
        out
    }

    /// Group pairs `(gA, gB)` joined by at least one edge.
    pub fn superedges(&self) -> BTreeSet<(usize, usize)> {
        let ga = Self::group_of(&self.groups_a);
        let gb = Self::group_of(&self.groups_b);
        self.edges.iter().map(|&(a, b)| (ga[a], gb[b])).collect()
    }

    /// Fails unless `cover` picks one member per group and realizes every
    /// superedge with an edge between chosen vertices.
    pub fn check_cover(&self, cover: &RepCover) -> Result<()> {
        let r = self.r();
        if cover.a.len() != r || cover.b.len() != r {
            return Err(Error::InvalidCover(format!(
                "expected one representative for each of the {r} groups per side"
            )));
        }
        for g in 0..r {
            if !self.groups_a[g].contains(&cover.a[g]) || !self.groups_b[g].contains(&cover.b[g]) {
                return Err(Error::InvalidCover(format!(
                    "representative of group {g} is not a member"
                )));
            }
        }
        let edges: BTreeSet<(usize, usize)> = self.edges.iter().copied().collect();
        for (ga, gb) in self.superedges() {
            if !edges.contains(&(cover.a[ga], cover.b[gb])) {
                return Err(Error::InvalidCover(format!(
                    "superedge ({ga}, {gb}) is not covered"
                )));
            }
        }
        Ok(())
    }
}

/// Which construction produced an artifact, with its source instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// Labeling gadget with age 2.
    SetCoverMal2(SetCoverInstance),
    /// Subgraph gadget with diameter `d`.
    SetCoverDcss(SetCoverInstance),
    /// Subgraph gadget with diameter 3.
    MinRepDcss3(MinRepInstance),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionArtifacts {
    pub graph: Graph,
    /// One tag per vertex, such as `u3`, `s0`, `t1`, `z2` or `copyA(1,4)`.
    pub roles: Vec<String>,
    /// Number of copies in the replicated block.
    pub x: usize,
    /// Age bound (labeling gadget) or diameter bound (subgraph gadgets).
    pub target: u32,
    pub family: Family,
}

fn ensure_diameter(g: &Graph, expected: u32) -> Result<()> {
    let d = graph::metrics(g)?.diameter;
    if d != expected {
        return Err(Error::Internal(format!(
            "gadget has diameter {d}, expected {expected}"
        )));
    }
    Ok(())
}

struct Mal2Layout {
    eta: usize,
    mu: usize,
    x: usize,
}

impl Mal2Layout {
    fn u(&self, i: usize) -> Vertex {
        i
    }
    fn s(&self, j: usize) -> Vertex {
        self.eta + j
    }
    fn t(&self, l: usize) -> Vertex {
        self.eta + self.mu + l
    }
    fn w(&self, l: usize) -> Vertex {
        self.eta + self.mu + 3 + l
    }
    fn n(&self) -> usize {
        self.eta + self.mu + 3 + self.x
    }
}

fn mal2_layout(sc: &SetCoverInstance) -> Mal2Layout {
    Mal2Layout {
        eta: sc.eta(),
        mu: sc.mu(),
        x: sc.eta() + sc.mu() + 1,
    }
}

/// Labeling gadget. Vertices are numbered in blocks: elements `U`, sets
/// `C`, the three hubs `t0, t1, t2`, then `W` with `x = η + μ + 1`.
/// The graph has diameter 2.
pub fn sc_to_mal2(sc: &SetCoverInstance) -> Result<ReductionArtifacts> {
    sc.validate()?;
    let lay = mal2_layout(sc);
    let mut edges = Vec::new();
    for (j, set) in sc.sets.iter().enumerate() {
        for &u in set {
            edges.push((lay.u(u), lay.s(j)));
        }
    }
    for i in 0..lay.eta {
        edges.push((lay.t(0), lay.u(i)));
    }
    for j in 0..lay.mu {
        edges.push((lay.t(0), lay.s(j)));
        edges.push((lay.t(2), lay.s(j)));
        for l in 0..lay.x {
            edges.push((lay.w(l), lay.s(j)));
        }
    }
    edges.push((lay.t(0), lay.t(1)));
    edges.push((lay.t(2), lay.t(1)));
    for l in 0..lay.x {
        edges.push((lay.t(2), lay.w(l)));
    }
    let graph = Graph::new(lay.n(), edges)?;
    ensure_diameter(&graph, 2)?;

    let mut roles = Vec::with_capacity(lay.n());
    roles.extend((0..lay.eta).map(|i| format!("u{i}")));
    roles.extend((0..lay.mu).map(|j| format!("s{j}")));
    roles.extend((0..3).map(|l| format!("t{l}")));
    roles.extend((0..lay.x).map(|l| format!("w{l}")));
    Ok(ReductionArtifacts {
        graph,
        roles,
        x: lay.x,
        target: 2,
        family: Family::SetCoverMal2(sc.clone()),
    })
}

/// Labels `{1, 2}` on: every hub edge, one covering edge per element (the
/// lowest-index covering set in the cover), and every `W`-to-cover edge.
/// Uses exactly `4(η + μ + 1) + 2x + 2x|cover|` labels.
pub fn witness_mal2(art: &ReductionArtifacts, cover: &[usize]) -> Result<Labeling> {
    let Family::SetCoverMal2(sc) = &art.family else {
        return Err(Error::InvalidInstance(
            "artifact is not a labeling gadget".into(),
        ));
    };
    let cover = sc.check_cover(cover)?;
    let lay = mal2_layout(sc);
    let mut keep: Vec<(Vertex, Vertex)> = Vec::new();
    for hub in [lay.t(0), lay.t(2)] {
        keep.extend(art.graph.neighbors(hub).iter().map(|&v| (hub, v)));
    }
    for i in 0..lay.eta {
        let j = *cover
            .iter()
            .find(|&&j| sc.sets[j].contains(&i))
            .expect("cover checked");
        keep.push((lay.u(i), lay.s(j)));
    }
    for &j in &cover {
        for l in 0..lay.x {
            keep.push((lay.w(l), lay.s(j)));
        }
    }
    let mut out = Labeling::new();
    for (u, v) in keep {
        out.add_all(Edge::undirected(u, v), [1 as Label, 2]);
    }
    Ok(out)
}

/// `η(d+1) + x|cover| + μ + d - 2`.
pub fn dcss_witness_bound(eta: usize, mu: usize, x: usize, d: u32, cover: usize) -> usize {
    let d = d as usize;
    eta * (d + 1) + x * cover + mu + d - 2
}

/// `4(η + μ + 1) + 2x + 2x|cover|`.
pub fn mal2_witness_count(eta: usize, mu: usize, x: usize, cover: usize) -> usize {
    4 * (eta + mu + 1) + 2 * x + 2 * x * cover
}

/// `4rx + 5r²σ`.
pub fn minrep_witness_bound(r: usize, sigma: usize, x: usize) -> usize {
    4 * r * x + 5 * r * r * sigma
}

struct DcssLayout {
    eta: usize,
    mu: usize,
    x: usize,
    d: usize,
}

impl DcssLayout {
    fn u(&self, i: usize, q: usize) -> Vertex {
        q * self.eta + i
    }
    fn s(&self, j: usize) -> Vertex {
        (self.d - 1) * self.eta + j
    }
    fn t(&self, l: usize) -> Vertex {
        (self.d - 1) * self.eta + self.mu + l
    }
    fn z(&self, q: usize) -> Vertex {
        (self.d - 1) * self.eta + self.mu + self.x + q
    }
    fn w(&self) -> Vertex {
        self.z(self.d - 1)
    }
    fn n(&self) -> usize {
        self.w() + 1
    }
    fn mid(&self) -> usize {
        (self.d - 2) / 2
    }
}

fn dcss_layout(art: &ReductionArtifacts, sc: &SetCoverInstance) -> DcssLayout {
    DcssLayout {
        eta: sc.eta(),
        mu: sc.mu(),
        x: art.x,
        d: art.target as usize,
    }
}

/// Subgraph gadget for odd `d >= 3`. Vertices are numbered in blocks: the
/// element copies `U_0, ..., U_{d-2}`, sets `C`, `T` with `x` vertices
/// (default `ηd + μ`), the path `z_0, ..., z_{d-2}` and finally `w`.
/// The graph has diameter `d`.
pub fn sc_to_dcss(sc: &SetCoverInstance, d: u32, x: Option<usize>) -> Result<ReductionArtifacts> {
    sc.validate()?;
    if d < 3 {
        return Err(Error::Precondition(format!(
            "diameter bound {d} is below 3"
        )));
    }
    if d.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "diameter bound {d} is even; only odd bounds are supported"
        )));
    }
    let x = x.unwrap_or(sc.eta() * d as usize + sc.mu());
    if x == 0 {
        return Err(Error::Precondition("x must be positive".into()));
    }
    let lay = DcssLayout {
        eta: sc.eta(),
        mu: sc.mu(),
        x,
        d: d as usize,
    };
    let mut edges = Vec::new();
    for (j, set) in sc.sets.iter().enumerate() {
        for &i in set {
            edges.push((lay.s(j), lay.u(i, 0)));
        }
        for l in 0..x {
            edges.push((lay.t(l), lay.s(j)));
        }
        edges.push((lay.z(0), lay.s(j)));
    }
    for i in 0..lay.eta {
        for q in 0..lay.d - 2 {
            edges.push((lay.u(i, q), lay.u(i, q + 1)));
        }
        edges.push((lay.z(lay.d - 2), lay.u(i, lay.d - 2)));
        edges.push((lay.w(), lay.u(i, lay.mid())));
    }
    for q in 0..lay.d - 2 {
        edges.push((lay.z(q), lay.z(q + 1)));
    }
    edges.push((lay.w(), lay.z(lay.mid())));
    let graph = Graph::new(lay.n(), edges)?;
    ensure_diameter(&graph, d)?;

    let mut roles = Vec::with_capacity(lay.n());
    for q in 0..=lay.d - 2 {
        roles.extend((0..lay.eta).map(|i| format!("u{i}_{q}")));
    }
    roles.extend((0..lay.mu).map(|j| format!("s{j}")));
    roles.extend((0..x).map(|l| format!("t{l}")));
    roles.extend((0..=lay.d - 2).map(|q| format!("z{q}")));
    roles.push("w".into());
    Ok(ReductionArtifacts {
        graph,
        roles,
        x,
        target: d,
        family: Family::SetCoverDcss(sc.clone()),
    })
}

/// Keeps the element paths, the `Z` path with its attachments, the edges
/// from `w` to the middle element copies, every `T`-to-cover edge and one
/// covering edge per element. The edge from `w` to the middle of `Z` is
/// added only when the diameter would otherwise exceed `d`.
///
/// For `d >= 5` the result has at most [`dcss_witness_bound`] edges. For
/// `d = 3` it can have one more, and on some instances the optimum does too.
pub fn witness_dcss(art: &ReductionArtifacts, cover: &[usize]) -> Result<Graph> {
    let Family::SetCoverDcss(sc) = &art.family else {
        return Err(Error::InvalidInstance(
            "artifact is not a set cover subgraph gadget".into(),
        ));
    };
    let cover = sc.check_cover(cover)?;
    let lay = dcss_layout(art, sc);
    let mut keep = Vec::new();
    for i in 0..lay.eta {
        for q in 0..lay.d - 2 {
            keep.push(Edge::undirected(lay.u(i, q), lay.u(i, q + 1)));
        }
        keep.push(Edge::undirected(lay.z(lay.d - 2), lay.u(i, lay.d - 2)));
        keep.push(Edge::undirected(lay.w(), lay.u(i, lay.mid())));
        let j = *cover
            .iter()
            .find(|&&j| sc.sets[j].contains(&i))
            .expect("cover checked");
        keep.push(Edge::undirected(lay.s(j), lay.u(i, 0)));
    }
    for q in 0..lay.d - 2 {
        keep.push(Edge::undirected(lay.z(q), lay.z(q + 1)));
    }
    for j in 0..lay.mu {
        keep.push(Edge::undirected(lay.z(0), lay.s(j)));
    }
    for &j in &cover {
        for l in 0..lay.x {
            keep.push(Edge::undirected(lay.t(l), lay.s(j)));
        }
    }
    let without_hub_link = art.graph.spanning_subgraph(keep.iter().copied())?;
    if graph::diameter(&without_hub_link).is_some_and(|dh| dh <= art.target) {
        return Ok(without_hub_link);
    }
    keep.push(Edge::undirected(lay.w(), lay.z(lay.mid())));
    art.graph.spanning_subgraph(keep)
}

struct MinRepLayout {
    r: usize,
    sigma: usize,
    x: usize,
}

impl MinRepLayout {
    fn a(&self, v: usize) -> Vertex {
        v
    }
    fn b(&self, v: usize) -> Vertex {
        self.r * self.sigma + v
    }
    fn copy_a(&self, g: usize, i: usize) -> Vertex {
        2 * self.r * self.sigma + g * self.x + i
    }
    fn copy_b(&self, g: usize, i: usize) -> Vertex {
        2 * self.r * self.sigma + (self.r + g) * self.x + i
    }
    fn s_a(&self, g: usize) -> Vertex {
        2 * self.r * self.sigma + 2 * self.r * self.x + g
    }
    fn s_b(&self, g: usize) -> Vertex {
        self.s_a(self.r + g)
    }
    fn t(&self) -> Vertex {
        self.s_a(2 * self.r)
    }
    fn n(&self) -> usize {
        self.t() + 1
    }
}

fn minrep_layout(mr: &MinRepInstance) -> MinRepLayout {
    MinRepLayout {
        r: mr.r(),
        sigma: mr.sigma(),
        x: mr.r() * mr.sigma(),
    }
}

/// Subgraph gadget with diameter 3 and `x = rσ`. Vertices are numbered in
/// blocks: `A`, `B`, the copies of every `A` group, the copies of every
/// `B` group, the group vertices `S` (A groups first) and the hub `t`.
pub fn minrep_to_dcss3(mr: &MinRepInstance) -> Result<ReductionArtifacts> {
    mr.validate()?;
    let lay = minrep_layout(mr);
    let supers = mr.superedges();
    let mut edges = Vec::new();
    for &(a, b) in &mr.edges {
        edges.push((lay.a(a), lay.b(b)));
    }
    for g in 0..lay.r {
        for i in 0..lay.x {
            for &a in &mr.groups_a[g] {
                edges.push((lay.copy_a(g, i), lay.a(a)));
            }
            for &b in &mr.groups_b[g] {
                edges.push((lay.copy_b(g, i), lay.b(b)));
            }
            edges.push((lay.copy_a(g, i), lay.s_a(g)));
            edges.push((lay.copy_b(g, i), lay.s_b(g)));
        }
    }
    let s_count = 2 * lay.r;
    for p in 0..s_count {
        for q in p + 1..s_count {
            let cross = p < lay.r && q >= lay.r;
            if !(cross && supers.contains(&(p, q - lay.r))) {
                edges.push((lay.s_a(p), lay.s_a(q)));
            }
        }
        edges.push((lay.t(), lay.s_a(p)));
    }
    for v in 0..lay.r * lay.sigma {
        edges.push((lay.t(), lay.a(v)));
        edges.push((lay.t(), lay.b(v)));
    }
    let graph = Graph::new(lay.n(), edges)?;
    ensure_diameter(&graph, 3)?;

    let mut roles = Vec::with_capacity(lay.n());
    roles.extend((0..lay.r * lay.sigma).map(|v| format!("a{v}")));
    roles.extend((0..lay.r * lay.sigma).map(|v| format!("b{v}")));
    for g in 0..lay.r {
        roles.extend((0..lay.x).map(|i| format!("copyA({g},{i})")));
    }
    for g in 0..lay.r {
        roles.extend((0..lay.x).map(|i| format!("copyB({g},{i})")));
    }
    roles.extend((0..lay.r).map(|g| format!("sA{g}")));
    roles.extend((0..lay.r).map(|g| format!("sB{g}")));
    roles.push("t".into());
    Ok(ReductionArtifacts {
        graph,
        roles,
        x: lay.x,
        target: 3,
        family: Family::MinRepDcss3(mr.clone()),
    })
}

/// Keeps the hub star, the group-vertex edges, each copy's edges to its
/// group vertex and to its group's representative, and the instance edges
/// between representatives. Uses at most [`minrep_witness_bound`] edges.
pub fn witness_minrep(art: &ReductionArtifacts, cover: &RepCover) -> Result<Graph> {
    let Family::MinRepDcss3(mr) = &art.family else {
        return Err(Error::InvalidInstance(
            "artifact is not a MIN-REP gadget".into(),
        ));
    };
    mr.check_cover(cover)?;
    let lay = minrep_layout(mr);
    let g = &art.graph;
    let t = lay.t();
    let s_vertices: Vec<Vertex> = (0..2 * lay.r).map(|p| lay.s_a(p)).collect();
    let mut keep: Vec<Edge> = g
        .neighbors(t)
        .iter()
        .map(|&v| Edge::undirected(t, v))
        .collect();
    for &s in &s_vertices {
        keep.extend(
            g.neighbors(s)
                .iter()
                .filter(|&&v| v != t)
                .map(|&v| Edge::undirected(s, v)),
        );
    }
    for grp in 0..lay.r {
        for i in 0..lay.x {
            keep.push(Edge::undirected(lay.copy_a(grp, i), lay.a(cover.a[grp])));
            keep.push(Edge::undirected(lay.copy_b(grp, i), lay.b(cover.b[grp])));
        }
    }
    let chosen_a: BTreeSet<usize> = cover.a.iter().copied().collect();
    let chosen_b: BTreeSet<usize> = cover.b.iter().copied().collect();
    for &(a, b) in &mr.edges {
        if chosen_a.contains(&a) && chosen_b.contains(&b) {
            keep.push(Edge::undirected(lay.a(a), lay.b(b)));
        }
    }
    keep.sort_unstable();
    keep.dedup();
    g.spanning_subgraph(keep)
}
