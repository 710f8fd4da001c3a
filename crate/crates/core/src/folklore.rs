//! Near-optimal labelings once the age budget reaches twice the radius.
//!
//! All constructions label a shortest path tree rooted at a center `r`.
//! An edge whose lower endpoint `u` sits at depth `h` carries an "upward"
//! label `R - h + 1` and a "downward" label `R + h`, so any pair of vertices
//! meets through their lowest common ancestor on increasing labels.

use crate::error::{Error, Result};
use crate::graph::{self, Edge, Graph, Vertex};
use crate::temporal::{Label, Labeling};

/// Labels a rooted tree given by parent pointers and depths.
///
/// With `special = Some(c)`, the edge from child `c` to the root gets the
/// single label `radius + 1` and every downward label is shifted by one.
pub(crate) fn label_rooted_tree(
    parent: &[Option<Vertex>],
    depth: &[u32],
    radius: u32,
    special: Option<Vertex>,
) -> Labeling {
    let shift = u32::from(special.is_some());
    let mut out = Labeling::new();
    for (u, p) in parent.iter().enumerate() {
        let Some(p) = *p else { continue };
        let e = Edge::undirected(u, p);
        if Some(u) == special {
            out.add(e, radius + 1);
        } else {
            let h = depth[u];
            out.add(e, radius - h + 1);
            out.add(e, radius + h + shift);
        }
    }
    out
}

fn center_tree(g: &Graph) -> Result<(Vertex, u32, graph::SptResult)> {
    g.require_undirected()?;
    let m = graph::metrics(g)?;
    let spt = graph::bfs_spt(g, m.center)?;
    Ok((m.center, m.radius, spt))
}

/// Two labels on every edge of a center-rooted shortest path tree:
/// `2n - 2` labels, lifetime at most `2R`.
pub fn label_2r(g: &Graph) -> Result<Labeling> {
    let (_, radius, spt) = center_tree(g)?;
    Ok(label_rooted_tree(&spt.parent, &spt.dist, radius, None))
}

/// As [`label_2r`] but the edge from the center to its lowest-numbered
/// neighbor carries the single label `R + 1`: `2n - 3` labels, lifetime at
/// most `2R + 1`.
pub fn label_2r_plus_1(g: &Graph) -> Result<Labeling> {
    let (center, radius, spt) = center_tree(g)?;
    let special = g.neighbors(center).first().copied();
    Ok(label_rooted_tree(&spt.parent, &spt.dist, radius, special))
}

/// Result of the large-age dispatch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LargeAgeLabeling {
    pub labeling: Labeling,
    /// The graph contains a 4-cycle, so the optimum is `2n - 4` and this
    /// labeling is one label above it.
    pub plus_one_gap: bool,
}

/// Labeling for `age >= 2D + 2`. Optimal on C4-free graphs; on graphs with
/// a 4-cycle it is the `2n - 3` construction, flagged one above optimum.
pub fn label_optimal_large_age(g: &Graph, age: Label) -> Result<LargeAgeLabeling> {
    let m = graph::metrics(g)?;
    if age < 2 * m.diameter + 2 {
        return Err(Error::Precondition(format!(
            "age {age} is below 2D + 2 = {}",
            2 * m.diameter + 2
        )));
    }
    let labeling = label_2r_plus_1(g)?;
    Ok(LargeAgeLabeling {
        labeling,
        plus_one_gap: g.has_c4(),
    })
}
