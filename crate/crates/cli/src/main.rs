//! `mal`: command-line front end for minimum aged labeling.
//!
//! Exit codes: 0 success, 1 `verify` found the labeling infeasible,
//! 2 unreadable or malformed input, 3 infeasible instance or solution,
//! 4 exact search budget exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mal_core::bench::{self, AgeRule};
use mal_core::bridge;
use mal_core::error::Error;
use mal_core::generate;
use mal_core::graph;
use mal_core::io;
use mal_core::reductions::{self, MinRepInstance, ReductionArtifacts, SetCoverInstance};
use mal_core::solve::{self, Algorithm, SolveOptions};
use mal_core::variants;
use mal_core::{Graph, Label, Parallelism, TemporalGraph};

#[derive(Parser)]
#[command(name = "mal", version, about = "Minimum aged labeling toolkit")]
struct Cli {
    /// Run single-threaded.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print n, m, diameter, radius and whether the graph contains a 4-cycle.
    Stats { graph: PathBuf },
    /// Build a labeling and print its report.
    Solve {
        graph: PathBuf,
        #[arg(long)]
        age: Label,
        /// trivial, folklore-2r, folklore-2r1, large-age, three-half,
        /// five-thirds, via-dcss:tree, via-dcss:plus2, via-dcss:exact or exact.
        #[arg(long)]
        algo: String,
        /// Labeling output path; defaults to `<graph>.labeling.json`.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Recorded in the report.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check that a labeling is temporally connected within an age.
    Verify {
        graph: PathBuf,
        labeling: PathBuf,
        #[arg(long)]
        age: Option<Label>,
    },
    /// Generate an instance.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        /// Graph output path; stdout when omitted.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
        /// Role sidecar output path for gadget graphs.
        #[arg(long, global = true)]
        roles: Option<PathBuf>,
    },
    /// Convert between labelings, subgraphs and directed graphs.
    Convert {
        #[command(subcommand)]
        kind: ConvertKind,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Run the algorithm suite over every `*.graph` file in a directory.
    Bench {
        dir: PathBuf,
        /// D, 3halfD, 5thirdsD, 2R or 2R1.
        #[arg(long)]
        age_rule: String,
        /// CSV output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenKind {
    RandomConnected {
        n: usize,
        m: usize,
        seed: u64,
    },
    /// Star on `k` vertices.
    Star {
        k: usize,
    },
    /// Cycle on `k` vertices.
    Cycle {
        k: usize,
    },
    ScMal {
        sc_file: PathBuf,
    },
    ScDcss {
        sc_file: PathBuf,
        d: u32,
        /// Size of the replicated block; defaults to ηd + μ.
        #[arg(long)]
        x: Option<usize>,
    },
    MinrepDcss {
        mr_file: PathBuf,
    },
}

#[derive(Subcommand)]
enum ConvertKind {
    DcssToMal {
        graph: PathBuf,
        subgraph: PathBuf,
        b: Label,
    },
    MalToDcss {
        graph: PathBuf,
        labeling: PathBuf,
    },
    Bidirect {
        graph: PathBuf,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Infeasible(String),
    Budget(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Infeasible(_) => 3,
            Failure::Budget(_) => 4,
            Failure::Internal(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m)
            | Failure::Infeasible(m)
            | Failure::Budget(m)
            | Failure::Internal(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let msg = e.to_string();
        match e {
            Error::Parse { .. }
            | Error::InvalidGraph(_)
            | Error::InvalidLabeling(_)
            | Error::InvalidInstance(_)
            | Error::VertexOutOfRange { .. } => Failure::Input(msg),
            Error::Infeasible(_)
            | Error::Disconnected
            | Error::Precondition(_)
            | Error::InvalidCover(_) => Failure::Infeasible(msg),
            Error::BudgetExceeded(_) => Failure::Budget(msg),
            Error::Internal(_) => Failure::Internal(msg),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_graph(path: &Path) -> CliResult<Graph> {
    Ok(io::parse_graph(&read(path)?)?)
}

fn default_labeling_path(graph: &Path) -> PathBuf {
    let stem = graph
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    graph.with_file_name(format!("{stem}.labeling.json"))
}

fn stats(path: &Path, par: Parallelism) -> CliResult<u8> {
    let g = load_graph(path)?;
    let m = graph::metrics_with(&g, par)?;
    let out = serde_json::json!({
        "n": g.n(),
        "m": g.m(),
        "D": m.diameter,
        "R": m.radius,
        "center": m.center,
        "c4": g.has_c4(),
    });
    println!("{out}");
    Ok(0)
}

fn solve_cmd(
    path: &Path,
    age: Label,
    algo: &str,
    out: Option<PathBuf>,
    seed: Option<u64>,
    par: Parallelism,
) -> CliResult<u8> {
    let g = load_graph(path)?;
    let algo: Algorithm = algo
        .parse()
        .map_err(|e: Error| Failure::Input(e.to_string()))?;
    let opts = SolveOptions {
        parallelism: par,
        seed,
        ..SolveOptions::default()
    };
    let (labeling, report) = solve::solve(&g, age, algo, &opts)?;
    let out = out.unwrap_or_else(|| default_labeling_path(path));
    write(Some(&out), &io::write_labeling(&labeling))?;
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serializes")
    );
    Ok(if report.feasible { 0 } else { 3 })
}

fn verify_cmd(
    graph: &Path,
    labeling: &Path,
    age: Option<Label>,
    par: Parallelism,
) -> CliResult<u8> {
    let g = load_graph(graph)?;
    let l = io::parse_labeling(&read(labeling)?, &g)?;
    let verdict = TemporalGraph::new(&g, &l)?.check_connectivity_with(age, par);
    let out = serde_json::json!({
        "feasible": verdict.is_connected(),
        "verdict": verdict.to_string(),
        "labelCount": l.total_labels(),
        "lifetime": l.lifetime(),
    });
    println!("{out}");
    Ok(if verdict.is_connected() { 0 } else { 1 })
}

fn emit_artifacts(
    art: &ReductionArtifacts,
    out: Option<&Path>,
    roles: Option<&Path>,
) -> CliResult<()> {
    write(out, &io::write_graph(&art.graph))?;
    if let Some(p) = roles {
        write(Some(p), &io::write_roles(&art.roles))?;
    }
    Ok(())
}

fn gen_cmd(kind: GenKind, out: Option<&Path>, roles: Option<&Path>) -> CliResult<u8> {
    let g = match kind {
        GenKind::RandomConnected { n, m, seed } => generate::random_connected(n, m, seed)?,
        GenKind::Star { k } => Graph::star(k),
        GenKind::Cycle { k } => Graph::cycle(k)?,
        GenKind::ScMal { sc_file } => {
            let sc: SetCoverInstance = io::parse_json(&read(&sc_file)?)?;
            emit_artifacts(&reductions::sc_to_mal2(&sc)?, out, roles)?;
            return Ok(0);
        }
        GenKind::ScDcss { sc_file, d, x } => {
            let sc: SetCoverInstance = io::parse_json(&read(&sc_file)?)?;
            emit_artifacts(&reductions::sc_to_dcss(&sc, d, x)?, out, roles)?;
            return Ok(0);
        }
        GenKind::MinrepDcss { mr_file } => {
            let mr: MinRepInstance = io::parse_json(&read(&mr_file)?)?;
            emit_artifacts(&reductions::minrep_to_dcss3(&mr)?, out, roles)?;
            return Ok(0);
        }
    };
    write(out, &io::write_graph(&g))?;
    Ok(0)
}

fn convert_cmd(kind: ConvertKind, out: Option<&Path>) -> CliResult<u8> {
    let text = match kind {
        ConvertKind::DcssToMal { graph, subgraph, b } => {
            let g = load_graph(&graph)?;
            let h = load_graph(&subgraph)?;
            if !h.is_subgraph_of(&g) {
                return Err(Failure::Input(
                    "subgraph is not a spanning subgraph of the graph".into(),
                ));
            }
            io::write_labeling(&bridge::dcss_to_mal(&h, b)?)
        }
        ConvertKind::MalToDcss { graph, labeling } => {
            let g = load_graph(&graph)?;
            let l = io::parse_labeling(&read(&labeling)?, &g)?;
            io::write_graph(&bridge::mal_to_dcss(&TemporalGraph::new(&g, &l)?)?)
        }
        ConvertKind::Bidirect { graph } => {
            io::write_graph(&variants::bidirect(&load_graph(&graph)?)?)
        }
    };
    write(out, &text)?;
    Ok(0)
}

fn bench_cmd(dir: &Path, rule: &str, out: Option<&Path>, par: Parallelism) -> CliResult<u8> {
    let rule: AgeRule = rule
        .parse()
        .map_err(|e: Error| Failure::Input(e.to_string()))?;
    let corpus = bench::load_corpus(dir)?;
    let rows = bench::run(&corpus, rule, par);
    write(out, &bench::to_csv(&rows))?;
    Ok(0)
}

fn run(cli: Cli) -> CliResult<u8> {
    let par = if cli.sequential {
        Parallelism::Sequential
    } else {
        Parallelism::Parallel
    };
    match cli.command {
        Command::Stats { graph } => stats(&graph, par),
        Command::Solve {
            graph,
            age,
            algo,
            out,
            seed,
        } => solve_cmd(&graph, age, &algo, out, seed, par),
        Command::Verify {
            graph,
            labeling,
            age,
        } => verify_cmd(&graph, &labeling, age, par),
        Command::Gen { kind, out, roles } => gen_cmd(kind, out.as_deref(), roles.as_deref()),
        Command::Convert { kind, out } => convert_cmd(kind, out.as_deref()),
        Command::Bench { dir, age_rule, out } => bench_cmd(&dir, &age_rule, out.as_deref(), par),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
