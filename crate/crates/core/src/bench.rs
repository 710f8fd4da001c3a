//! Batch runner producing one CSV row per (instance, algorithm).

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::approx::ceil_fraction;
use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::io;
use crate::par::{self, Parallelism};
use crate::solve::{self, Algorithm, SolveOptions};
use crate::temporal::Label;

/// How the age budget is derived from each instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AgeRule {
    D,
    ThreeHalfD,
    FiveThirdsD,
    TwoR,
    TwoR1,
}

impl AgeRule {
    pub fn age(self, diameter: u32, radius: u32) -> Label {
        match self {
            AgeRule::D => diameter,
            AgeRule::ThreeHalfD => ceil_fraction(3, 2, diameter),
            AgeRule::FiveThirdsD => ceil_fraction(5, 3, diameter),
            AgeRule::TwoR => 2 * radius,
            AgeRule::TwoR1 => 2 * radius + 1,
        }
    }
}

impl FromStr for AgeRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<AgeRule> {
        match s {
            "D" => Ok(AgeRule::D),
            "3halfD" => Ok(AgeRule::ThreeHalfD),
            "5thirdsD" => Ok(AgeRule::FiveThirdsD),
            "2R" => Ok(AgeRule::TwoR),
            "2R1" => Ok(AgeRule::TwoR1),
            _ => Err(Error::Precondition(format!("unknown age rule `{s}`"))),
        }
    }
}

impl fmt::Display for AgeRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AgeRule::D => "D",
            AgeRule::ThreeHalfD => "3halfD",
            AgeRule::FiveThirdsD => "5thirdsD",
            AgeRule::TwoR => "2R",
            AgeRule::TwoR1 => "2R1",
        })
    }
}

/// Algorithms the batch runner tries on every instance.
pub const BENCH_ALGORITHMS: [Algorithm; 7] = [
    Algorithm::Trivial,
    Algorithm::Folklore2R,
    Algorithm::Folklore2R1,
    Algorithm::ThreeHalf,
    Algorithm::FiveThirds,
    Algorithm::ViaDcssTree,
    Algorithm::ViaDcssPlus2,
];

pub const CSV_HEADER: [&str; 10] = [
    "instance",
    "n",
    "m",
    "D",
    "R",
    "algorithm",
    "labels",
    "lifetime",
    "feasible",
    "ms",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRow {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    #[serde(rename = "D")]
    pub diameter: u32,
    #[serde(rename = "R")]
    pub radius: u32,
    pub algorithm: String,
    pub labels: usize,
    pub lifetime: Label,
    pub feasible: bool,
    pub ms: u64,
}

/// Runs every algorithm on one instance. Instances that are disconnected
/// produce no rows; an algorithm that errors yields an infeasible row with
/// zero labels.
pub fn bench_instance(name: &str, g: &Graph, rule: AgeRule) -> Vec<BenchRow> {
    let Ok(m) = graph::metrics_with(g, Parallelism::Sequential) else {
        return Vec::new();
    };
    let age = rule.age(m.diameter, m.radius);
    let opts = SolveOptions {
        parallelism: Parallelism::Sequential,
        ..SolveOptions::default()
    };
    BENCH_ALGORITHMS
        .iter()
        .map(|&algo| {
            let start = Instant::now();
            let (labels, lifetime, feasible) = match solve::solve(g, age, algo, &opts) {
                Ok((_, r)) => (r.label_count, r.lifetime, r.feasible),
                Err(_) => (0, 0, false),
            };
            BenchRow {
                instance: name.to_string(),
                n: g.n(),
                m: g.m(),
                diameter: m.diameter,
                radius: m.radius,
                algorithm: algo.name().to_string(),
                labels,
                lifetime,
                feasible,
                ms: start.elapsed().as_millis() as u64,
            }
        })
        .collect()
}

/// Benchmarks all instances, in parallel across instances when enabled.
/// Rows follow the input order.
pub fn run(instances: &[(String, Graph)], rule: AgeRule, par: Parallelism) -> Vec<BenchRow> {
    par::map_items(instances, par, |(name, g)| bench_instance(name, g, rule))
        .into_iter()
        .flatten()
        .collect()
}

/// Loads every `*.graph` file in `dir`, sorted by file name.
pub fn load_corpus(dir: &Path) -> Result<Vec<(String, Graph)>> {
    let read_err = |e: std::io::Error| Error::InvalidInstance(format!("{}: {e}", dir.display()));
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(read_err)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "graph"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).map_err(read_err)?;
            let name = p
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            Ok((name, io::parse_graph(&text)?))
        })
        .collect()
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    if rows.is_empty() {
        w.write_record(CSV_HEADER).expect("in-memory write");
    }
    for row in rows {
        w.serialize(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}
