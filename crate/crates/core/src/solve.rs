//! Uniform entry point over every labeling algorithm, with mandatory
//! re-verification of the output.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::approx;
use crate::bridge::{self, ExactSolver, Plus2Solver, TreeSolver};
use crate::error::{Error, Result};
use crate::exact::{self, ExactBudget};
use crate::folklore;
use crate::graph::{self, Graph};
use crate::par::Parallelism;
use crate::temporal::{Label, Labeling, TemporalGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Trivial,
    Folklore2R,
    Folklore2R1,
    LargeAge,
    ThreeHalf,
    FiveThirds,
    ViaDcssTree,
    ViaDcssPlus2,
    ViaDcssExact,
    Exact,
}

impl Algorithm {
    pub const ALL: [Algorithm; 10] = [
        Algorithm::Trivial,
        Algorithm::Folklore2R,
        Algorithm::Folklore2R1,
        Algorithm::LargeAge,
        Algorithm::ThreeHalf,
        Algorithm::FiveThirds,
        Algorithm::ViaDcssTree,
        Algorithm::ViaDcssPlus2,
        Algorithm::ViaDcssExact,
        Algorithm::Exact,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Trivial => "trivial",
            Algorithm::Folklore2R => "folklore-2r",
            Algorithm::Folklore2R1 => "folklore-2r1",
            Algorithm::LargeAge => "large-age",
            Algorithm::ThreeHalf => "three-half",
            Algorithm::FiveThirds => "five-thirds",
            Algorithm::ViaDcssTree => "via-dcss:tree",
            Algorithm::ViaDcssPlus2 => "via-dcss:plus2",
            Algorithm::ViaDcssExact => "via-dcss:exact",
            Algorithm::Exact => "exact",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Algorithm> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown algorithm `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Optimality {
    /// The label count is optimal.
    Exact,
    /// The label count is exactly one above a known optimum.
    ExactMinusKnownGap,
    Heuristic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SolveReport {
    pub algorithm: String,
    pub label_count: usize,
    pub lifetime: Label,
    pub age_budget: Label,
    pub feasible: bool,
    pub optimality_flag: Optimality,
    pub wall_time_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SolveOptions {
    pub parallelism: Parallelism,
    pub budget: ExactBudget,
    pub seed: Option<u64>,
}

/// Runs `algo` for age budget `age` and verifies the result.
///
/// Fails with [`Error::Infeasible`] when no labeling can exist (disconnected
/// graph or `age < D`). Otherwise the report's `feasible` flag is the
/// verifier's verdict on the returned labeling.
pub fn solve(
    g: &Graph,
    age: Label,
    algo: Algorithm,
    opts: &SolveOptions,
) -> Result<(Labeling, SolveReport)> {
    let start = Instant::now();
    let m = match graph::metrics_with(g, opts.parallelism) {
        Ok(m) => m,
        Err(Error::Disconnected) => {
            return Err(Error::Infeasible("graph is disconnected".into()));
        }
        Err(e) => return Err(e),
    };
    if age < m.diameter {
        return Err(Error::Infeasible(format!(
            "age {age} is below the diameter {}",
            m.diameter
        )));
    }
    let par = opts.parallelism;
    let mut optimality = Optimality::Heuristic;
    let labeling = match algo {
        Algorithm::Trivial => approx::label_trivial_with(g, par)?,
        Algorithm::Folklore2R => folklore::label_2r(g)?,
        Algorithm::Folklore2R1 => folklore::label_2r_plus_1(g)?,
        Algorithm::LargeAge => {
            let r = folklore::label_optimal_large_age(g, age)?;
            optimality = if r.plus_one_gap {
                Optimality::ExactMinusKnownGap
            } else {
                Optimality::Exact
            };
            r.labeling
        }
        Algorithm::ThreeHalf => approx::label_3half_with(g, par)?.labeling,
        Algorithm::FiveThirds => approx::label_5thirds_with(g, par)?.labeling,
        Algorithm::ViaDcssTree => bridge::solve_mal_via_dcss(g, age, &TreeSolver)?,
        Algorithm::ViaDcssPlus2 => bridge::solve_mal_via_dcss(g, age, &Plus2Solver)?,
        Algorithm::ViaDcssExact => bridge::solve_mal_via_dcss(
            g,
            age,
            &ExactSolver {
                budget: opts.budget,
            },
        )?,
        Algorithm::Exact => {
            optimality = Optimality::Exact;
            exact::exact_mal(g, age, &opts.budget)?
        }
    };
    let verdict = TemporalGraph::new(g, &labeling)?.check_connectivity_with(Some(age), par);
    let report = SolveReport {
        algorithm: algo.name().to_string(),
        label_count: labeling.total_labels(),
        lifetime: labeling.lifetime(),
        age_budget: age,
        feasible: verdict.is_connected(),
        optimality_flag: optimality,
        wall_time_ms: start.elapsed().as_millis() as u64,
        seed: opts.seed,
    };
    Ok((labeling, report))
}
