// SPDX-License-Identifier: Apache-2.0

//! Command-line front end: static clique runs, graph statistics, core
//! numbers, upper-bound sweeps, and temporal strong components.
//!
//! Exit codes: 0 for a complete run, 1 for invalid flags or unwritable
//! output, 2 when the input cannot be read or parsed, 3 when the result was
//! cut short by `--ub` or `--time-limit` (the partial result is still
//! printed).

mod report;
mod sweep;

use std::ffi::OsString;
use std::fmt;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use maxclique::generators::gnp;
use maxclique::metrics::{core_decomposition, stats_with, STATS_CSV_HEADER};
use maxclique::temporal::parse_temporal_edge_list_with;
use maxclique::{
    build_graph, max_clique_exact, max_clique_heuristic_with, max_tscc, parse_edge_list, CliqueResult, Dialect, Graph,
    SearchBounds, TemporalColumns, TemporalGraph,
};

pub use report::Table;
pub use sweep::{fraction_ladder, sweep_table, ub_sweep, SweepRow};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_TRUNCATED: i32 = 3;

/// Where a graph comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum Input {
    File(PathBuf),
    /// Seeded `G(n, p)`, written `gnp:N:P`.
    Gnp {
        n: usize,
        p: f64,
    },
}

impl FromStr for Input {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let Some(spec) = s.strip_prefix("gnp:") else {
            return Ok(Input::File(PathBuf::from(s)));
        };
        let (n, p) = spec.split_once(':').ok_or("expected gnp:N:P")?;
        let n = n.parse().map_err(|e| format!("gnp vertex count: {e}"))?;
        let p: f64 = p.parse().map_err(|e| format!("gnp probability: {e}"))?;
        if !(0.0..=1.0).contains(&p) {
            return Err(format!("gnp probability {p} outside [0, 1]"));
        }
        Ok(Input::Gnp { n, p })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    /// `u v` per line; extra columns ignored.
    #[default]
    Edges,
    /// `u v t` per line; time and direction dropped for static commands.
    Temporal,
}

#[derive(Debug, Parser)]
#[command(
    name = "maxclique",
    version,
    about = "Maximum cliques, graph statistics and temporal strong components"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Maximum clique of a graph.
    Clique {
        input: Input,
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        solver: SolverArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Greedy heuristic only.
        #[arg(long)]
        heuristic: bool,
    },
    /// Largest temporal strongly connected component of a contact list.
    Tscc {
        input: PathBuf,
        /// Contacts are one-way. Without it each contact runs both ways.
        #[arg(long)]
        directed: bool,
        /// Zero-based `SOURCE,TARGET,TIME` token positions.
        #[arg(long, default_value = "0,1,2", value_parser = parse_columns)]
        columns: TemporalColumns,
        #[command(flatten)]
        solver: SolverArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Write the strong reachability graph as an edge list.
        #[arg(long, value_name = "FILE")]
        emit_reach: Option<PathBuf>,
        /// Warn when the reachability sets need more than this many MiB.
        #[arg(long, value_name = "MIB", default_value_t = 4096)]
        reach_memory_cap: u64,
    },
    /// One statistics row per input graph.
    Stats {
        #[arg(required = true)]
        inputs: Vec<Input>,
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        solver: SolverArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Skip the clique number and core recall columns.
        #[arg(long)]
        no_clique: bool,
    },
    /// Core number of every vertex.
    Kcore {
        input: Input,
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        pretty: bool,
    },
    /// Exact solver once per upper bound.
    #[command(alias = "reach-sweep")]
    UbSweep {
        input: Input,
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        run: RunArgs,
        /// Upper bounds to try. Defaults to 10%, 20%, ..., 100% of the
        /// clique number.
        #[arg(long, value_delimiter = ',')]
        ub_values: Vec<usize>,
        #[arg(long)]
        pretty: bool,
    },
}

#[derive(Debug, Clone, Args)]
pub struct GraphArgs {
    /// Read each line as a directed arc.
    #[arg(long)]
    pub directed: bool,
    /// Keep only arcs present in both directions (directed input).
    #[arg(long)]
    pub reciprocal: bool,
    /// Skip the reduction to the largest connected component.
    #[arg(long)]
    pub keep_all_components: bool,
    #[arg(long, value_enum, default_value_t = Format::Edges)]
    pub format: Format,
    /// Seed for generated inputs.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    #[arg(long, env = "MAXCLIQUE_THREADS", value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,
    /// Seconds, or `none`.
    #[arg(long, env = "MAXCLIQUE_TIME_LIMIT", default_value = "3600", value_parser = parse_time_limit)]
    pub time_limit: TimeLimit,
}

#[derive(Debug, Clone, Args)]
pub struct SolverArgs {
    /// Only look for cliques larger than this.
    #[arg(long, default_value_t = 0)]
    pub lb: usize,
    /// Stop as soon as a clique of this size is found.
    #[arg(long)]
    pub ub: Option<usize>,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Write the witness labels here instead of after the report.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Aligned text instead of CSV.
    #[arg(long)]
    pub pretty: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeLimit(pub Option<Duration>);

fn parse_columns(s: &str) -> Result<TemporalColumns, String> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<_, _>>()?;
    match parts[..] {
        [source, target, time] if source != target && source != time && target != time => {
            Ok(TemporalColumns { source, target, time })
        }
        _ => Err("expected three distinct positions SOURCE,TARGET,TIME".to_owned()),
    }
}

fn parse_time_limit(s: &str) -> Result<TimeLimit, String> {
    if s.eq_ignore_ascii_case("none") {
        return Ok(TimeLimit(None));
    }
    let secs: f64 = s.parse().map_err(|e| format!("{e}"))?;
    Duration::try_from_secs_f64(secs)
        .map(|d| TimeLimit(Some(d)))
        .map_err(|e| format!("{e}"))
}

/// How a static graph is loaded.
#[derive(Debug, Clone, Default)]
pub struct GraphOptions {
    pub format: Format,
    pub directed: bool,
    pub reciprocal: bool,
    pub keep_all_components: bool,
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub enum Task {
    Clique {
        input: Input,
        heuristic: bool,
    },
    Tscc {
        input: PathBuf,
        directed: bool,
        columns: TemporalColumns,
        emit_reach: Option<PathBuf>,
        reach_memory_cap_mib: u64,
    },
    Stats {
        inputs: Vec<Input>,
        clique: bool,
    },
    Kcore {
        input: Input,
    },
    UbSweep {
        input: Input,
        ub_values: Vec<usize>,
    },
}

/// A validated invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub task: Task,
    pub graph: GraphOptions,
    pub bounds: SearchBounds,
    pub threads: usize,
    pub out: Option<PathBuf>,
    pub pretty: bool,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Input(String),
    Output(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Output(_) => EXIT_USAGE,
            CliError::Input(_) => EXIT_INPUT,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "invalid arguments: {m}"),
            CliError::Input(m) => write!(f, "cannot read input: {m}"),
            CliError::Output(m) => write!(f, "cannot write output: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

fn output_err(e: std::io::Error) -> CliError {
    CliError::Output(e.to_string())
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let default_threads = || std::thread::available_parallelism().map_or(1, |n| n.get());
        let graph_opts = |g: GraphArgs| GraphOptions {
            format: g.format,
            directed: g.directed,
            reciprocal: g.reciprocal,
            keep_all_components: g.keep_all_components,
            seed: g.seed,
        };
        let bounds = |s: &SolverArgs| {
            SearchBounds::new(s.lb, s.ub)
                .map(|b| b.with_time_limit(s.run.time_limit.0))
                .map_err(|e| CliError::Usage(e.to_string()))
        };
        let threads = |r: &RunArgs| r.threads.map_or_else(default_threads, |t| t as usize);

        Ok(match cli.command {
            Command::Clique {
                input,
                graph,
                solver,
                output,
                heuristic,
            } => RunConfig {
                task: Task::Clique { input, heuristic },
                graph: graph_opts(graph),
                bounds: bounds(&solver)?,
                threads: threads(&solver.run),
                out: output.out,
                pretty: output.pretty,
            },
            Command::Tscc {
                input,
                directed,
                columns,
                solver,
                output,
                emit_reach,
                reach_memory_cap,
            } => RunConfig {
                task: Task::Tscc {
                    input,
                    directed,
                    columns,
                    emit_reach,
                    reach_memory_cap_mib: reach_memory_cap,
                },
                graph: GraphOptions {
                    format: Format::Temporal,
                    directed,
                    ..GraphOptions::default()
                },
                bounds: bounds(&solver)?,
                threads: threads(&solver.run),
                out: output.out,
                pretty: output.pretty,
            },
            Command::Stats {
                inputs,
                graph,
                solver,
                output,
                no_clique,
            } => RunConfig {
                task: Task::Stats {
                    inputs,
                    clique: !no_clique,
                },
                graph: graph_opts(graph),
                bounds: bounds(&solver)?,
                threads: threads(&solver.run),
                out: output.out,
                pretty: output.pretty,
            },
            Command::Kcore { input, graph, pretty } => RunConfig {
                task: Task::Kcore { input },
                graph: graph_opts(graph),
                bounds: SearchBounds::default(),
                threads: 1,
                out: None,
                pretty,
            },
            Command::UbSweep {
                input,
                graph,
                run,
                ub_values,
                pretty,
            } => RunConfig {
                task: Task::UbSweep { input, ub_values },
                graph: graph_opts(graph),
                bounds: SearchBounds::default().with_time_limit(run.time_limit.0),
                threads: threads(&run),
                out: None,
                pretty,
            },
        })
    }
}

/// Report name for an input: the file stem, or a description of the
/// generator.
pub fn input_name(input: &Input, seed: u64) -> String {
    match input {
        Input::File(p) => report::cell(&p.file_stem().unwrap_or(p.as_os_str()).to_string_lossy()),
        Input::Gnp { n, p } => format!("gnp-{n}-{p}-s{seed}"),
    }
}

fn open(path: &Path) -> Result<BufReader<File>, CliError> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_temporal(path: &Path, directed: bool, columns: TemporalColumns) -> Result<TemporalGraph, CliError> {
    parse_temporal_edge_list_with(open(path)?, directed, columns)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Reads or generates a static graph, then reduces it to its largest
/// connected component unless told not to.
pub fn load_graph(input: &Input, opts: &GraphOptions) -> Result<Graph, CliError> {
    let g = match input {
        Input::Gnp { n, p } => gnp(*n, *p, opts.seed),
        Input::File(path) => match opts.format {
            Format::Edges => {
                let list = parse_edge_list(open(path)?, Dialect::Auto, opts.directed)
                    .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
                build_graph(&list, opts.reciprocal)
            }
            Format::Temporal => read_temporal(path, opts.directed, TemporalColumns::default())?.static_graph(),
        },
    };
    Ok(if opts.keep_all_components {
        g
    } else {
        g.largest_component()
    })
}

fn write_witness(
    g: &Graph,
    vertices: &[maxclique::VertexId],
    dest: Option<&Path>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match dest {
        Some(path) => {
            let file = File::create(path).map_err(|e| CliError::Output(format!("{}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            for &v in vertices {
                writeln!(w, "{}", g.label(v)).map_err(output_err)?;
            }
            w.flush().map_err(output_err)
        }
        None => {
            writeln!(out, "# witness").map_err(output_err)?;
            for &v in vertices {
                writeln!(out, "{}", g.label(v)).map_err(output_err)?;
            }
            Ok(())
        }
    }
}

fn exit_for(r: &CliqueResult) -> i32 {
    if r.truncated() {
        EXIT_TRUNCATED
    } else {
        EXIT_OK
    }
}

const CLIQUE_HEADER: [&str; 15] = [
    "graph",
    "|V|",
    "|E|",
    "size",
    "status",
    "exact",
    "truncated",
    "lb",
    "ub",
    "threads",
    "steps",
    "heuristic_size",
    "heuristic_time",
    "exact_time",
    "wall_time",
];

/// Report columns whose values depend on the clock.
pub const TIMING_COLUMNS: [&str; 5] = ["heuristic_time", "exact_time", "wall_time", "reach_time", "time"];

fn solver_cells(r: &CliqueResult, cfg: &RunConfig) -> Vec<String> {
    vec![
        r.size.to_string(),
        r.status.as_str().to_owned(),
        r.exact().to_string(),
        r.truncated().to_string(),
        cfg.bounds.lb().to_string(),
        cfg.bounds.ub().map_or(String::new(), |u| u.to_string()),
        cfg.threads.to_string(),
        r.steps.to_string(),
        r.heuristic_size.to_string(),
        report::secs(r.heuristic_time),
        report::secs(r.wall_time.saturating_sub(r.heuristic_time)),
        report::secs(r.wall_time),
    ]
}

/// Executes one invocation, writing the report to `out` and warnings to
/// `diag`. Returns the exit code.
pub fn run(cfg: &RunConfig, out: &mut dyn Write, diag: &mut dyn Write) -> Result<i32, CliError> {
    match &cfg.task {
        Task::Clique { input, heuristic } => {
            let g = load_graph(input, &cfg.graph)?;
            let r = if *heuristic {
                max_clique_heuristic_with(&g, cfg.threads)
            } else {
                max_clique_exact(&g, &cfg.bounds, cfg.threads)
            };
            let mut t = Table::new(CLIQUE_HEADER);
            let mut row = vec![input_name(input, cfg.graph.seed), g.n().to_string(), g.m().to_string()];
            row.extend(solver_cells(&r, cfg));
            t.push(row);
            t.write(out, cfg.pretty).map_err(output_err)?;
            write_witness(&g, &r.vertices, cfg.out.as_deref(), out)?;
            Ok(exit_for(&r))
        }
        Task::Stats { inputs, clique } => {
            let mut t = Table::new(STATS_CSV_HEADER.split(','));
            let mut code = EXIT_OK;
            let mut witnesses = Vec::new();
            for input in inputs {
                let g = load_graph(input, &cfg.graph)?;
                let (s, r) = stats_with(&g, clique.then_some((&cfg.bounds, cfg.threads)));
                let name = input_name(input, cfg.graph.seed);
                t.push(s.csv_row(&name).split(',').map(str::to_owned).collect());
                if let Some(r) = r {
                    if r.truncated() {
                        let _ = writeln!(
                            diag,
                            "warning: {name}: clique search stopped early ({})",
                            r.status.as_str()
                        );
                        code = EXIT_TRUNCATED;
                    }
                    witnesses.push((g, r.vertices));
                }
            }
            t.write(out, cfg.pretty).map_err(output_err)?;
            if let Some(path) = cfg.out.as_deref() {
                let file = File::create(path).map_err(|e| CliError::Output(format!("{}: {e}", path.display())))?;
                let mut w = BufWriter::new(file);
                for ((g, vs), input) in witnesses.iter().zip(inputs) {
                    writeln!(w, "# {}", input_name(input, cfg.graph.seed)).map_err(output_err)?;
                    for &v in vs {
                        writeln!(w, "{}", g.label(v)).map_err(output_err)?;
                    }
                }
                w.flush().map_err(output_err)?;
            }
            Ok(code)
        }
        Task::Kcore { input } => {
            let g = load_graph(input, &cfg.graph)?;
            let cores = core_decomposition(&g);
            writeln!(out, "# degeneracy {}", cores.degeneracy).map_err(output_err)?;
            let mut t = Table::new(["vertex", "core"]);
            for v in g.vertices() {
                t.push(vec![g.label(v).to_owned(), cores.core_number[v as usize].to_string()]);
            }
            t.write(out, cfg.pretty).map_err(output_err)?;
            Ok(EXIT_OK)
        }
        Task::UbSweep { input, ub_values } => {
            let g = load_graph(input, &cfg.graph)?;
            let time_limit = cfg.bounds.time_limit();
            let (ubs, omega) = if ub_values.is_empty() {
                let full = max_clique_exact(&g, &cfg.bounds, cfg.threads);
                if full.truncated() {
                    let _ = writeln!(diag, "warning: clique number not settled within the time limit");
                }
                (fraction_ladder(full.size), Some(full.size))
            } else {
                (ub_values.clone(), None)
            };
            let rows = ub_sweep(&g, &ubs, cfg.threads, time_limit);
            sweep_table(&rows, omega).write(out, cfg.pretty).map_err(output_err)?;
            let timed_out = rows
                .iter()
                .any(|r| matches!(&r.outcome, Ok(c) if c.status == maxclique::Status::TimeLimit));
            Ok(if timed_out { EXIT_TRUNCATED } else { EXIT_OK })
        }
        Task::Tscc {
            input,
            directed,
            columns,
            emit_reach,
            reach_memory_cap_mib,
        } => {
            if !directed {
                let _ = writeln!(
                    diag,
                    "warning: contacts treated as undirected; pass --directed for one-way data"
                );
            }
            let tg = read_temporal(input, *directed, *columns)?;
            let need = (tg.n() as u64).pow(2) / 8;
            if need > reach_memory_cap_mib.saturating_mul(1 << 20) {
                let _ = writeln!(
                    diag,
                    "warning: reachability sets need {} MiB, above the {} MiB cap",
                    need >> 20,
                    reach_memory_cap_mib
                );
            }
            let t = max_tscc(&tg, &cfg.bounds, cfg.threads);
            if let Some(path) = emit_reach {
                let file = File::create(path).map_err(|e| CliError::Output(format!("{}: {e}", path.display())))?;
                let mut w = BufWriter::new(file);
                for (u, v) in t.strong.edges() {
                    writeln!(w, "{} {}", t.strong.label(u), t.strong.label(v)).map_err(output_err)?;
                }
                w.flush().map_err(output_err)?;
            }
            let mut header = vec![
                "graph",
                "contacts",
                "|V|",
                "reach_pairs",
                "rs_edges",
                "rs_d_avg",
                "rs_d_max",
                "rs_K",
            ];
            header.extend(&CLIQUE_HEADER[3..]);
            header.push("reach_time");
            let mut table = Table::new(header);
            let s = &t.strong_stats;
            let mut row = vec![
                input_name(&Input::File(input.clone()), 0),
                tg.edges().len().to_string(),
                tg.n().to_string(),
                t.reach_pairs.to_string(),
                s.m.to_string(),
                format!("{:.4}", s.d_avg),
                s.d_max.to_string(),
                s.degeneracy.to_string(),
            ];
            row.extend(solver_cells(&t.clique, cfg));
            row.push(report::secs(t.reach_time));
            table.push(row);
            table.write(out, cfg.pretty).map_err(output_err)?;
            write_witness(&t.strong, &t.vertices, cfg.out.as_deref(), out)?;
            Ok(exit_for(&t.clique))
        }
    }
}

/// Parses `args`, runs, and reports errors to `diag`. Returns the exit code.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, diag: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                diag.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = RunConfig::from_cli(cli).and_then(|cfg| run(&cfg, out, diag));
    let _ = out.flush();
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(diag, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut diag = Vec::new();
        let mut full = vec!["maxclique"];
        full.extend(args);
        let code = main_with(full, &mut out, &mut diag);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(diag).unwrap())
    }

    fn file(text: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(text.as_bytes()).unwrap();
        f
    }

    const K5: &str = "1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n3 4\n3 5\n4 5\n";

    #[test]
    fn clique_on_k5() {
        let f = file(K5);
        let (code, out, _) = call(&["clique", f.path().to_str().unwrap(), "--threads", "2"]);
        assert_eq!(code, EXIT_OK);
        let mut lines = out.lines();
        assert_eq!(lines.next().unwrap(), CLIQUE_HEADER.join(","));
        let row: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(&row[1..7], ["5", "10", "5", "optimal", "true", "false"]);
        assert_eq!(lines.next(), Some("# witness"));
        assert_eq!(lines.collect::<Vec<_>>(), ["1", "2", "3", "4", "5"]);
    }

    #[test]
    fn upper_bound_sets_truncated() {
        let f = file(K5);
        let (code, out, _) = call(&["clique", f.path().to_str().unwrap(), "--ub", "3"]);
        assert_eq!(code, EXIT_TRUNCATED);
        let row: Vec<&str> = out.lines().nth(1).unwrap().split(',').collect();
        assert_eq!(&row[3..7], ["3", "ub-reached", "true", "true"]);
    }

    #[test]
    fn witness_to_file() {
        let f = file("a b\nb c\n");
        let dir = tempfile::tempdir().unwrap();
        let dest = dir.path().join("w.txt");
        let (code, out, _) = call(&["clique", f.path().to_str().unwrap(), "--out", dest.to_str().unwrap()]);
        assert_eq!(code, EXIT_OK);
        assert!(!out.contains("# witness"));
        assert_eq!(std::fs::read_to_string(dest).unwrap(), "a\nb\n");
    }

    #[test]
    fn exit_codes() {
        let bad = file("1 2\n3\n");
        assert_eq!(call(&["clique", bad.path().to_str().unwrap()]).0, EXIT_INPUT);
        assert_eq!(call(&["clique", "/no/such/file"]).0, EXIT_INPUT);
        assert_eq!(call(&["clique", "x", "--bogus"]).0, EXIT_USAGE);
        assert_eq!(call(&["clique", "x", "--lb", "5", "--ub", "2"]).0, EXIT_USAGE);
        assert_eq!(call(&["clique", "x", "--threads", "0"]).0, EXIT_USAGE);
        assert_eq!(call(&["clique", "gnp:10:2"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn stats_row_for_single_vertex_graph() {
        let f = file("# one vertex with a loop\nx x\n");
        let (code, out, _) = call(&["stats", f.path().to_str().unwrap()]);
        assert_eq!(code, EXIT_OK);
        let name = f.path().file_stem().unwrap().to_str().unwrap();
        assert_eq!(
            out,
            format!("{STATS_CSV_HEADER}\n{name},1,0,0,0.0000,0.0000,0,0.0000,0.0000,0,1,1.0000\n")
        );
    }

    #[test]
    fn stats_without_clique() {
        let f = file(K5);
        let (_, out, _) = call(&["stats", f.path().to_str().unwrap(), "--no-clique"]);
        assert!(out.lines().nth(1).unwrap().ends_with(",4,,"));
    }

    #[test]
    fn reciprocal_directed_input() {
        // only 1-2 is mutual
        let f = file("1 2\n2 1\n2 3\n3 4\n");
        let (_, out, _) = call(&["clique", f.path().to_str().unwrap(), "--directed", "--reciprocal"]);
        let row: Vec<&str> = out.lines().nth(1).unwrap().split(',').collect();
        assert_eq!(&row[1..4], ["2", "1", "2"]);
    }

    #[test]
    fn kcore_lists_every_vertex() {
        let f = file("a b\nb c\nc a\nc d\n");
        let (_, out, _) = call(&["kcore", f.path().to_str().unwrap()]);
        assert_eq!(out, "# degeneracy 2\nvertex,core\na,2\nb,2\nc,2\nd,1\n");
    }

    #[test]
    fn sweep_on_generated_graph() {
        let (code, out, _) = call(&["reach-sweep", "gnp:30:0.5", "--seed", "3", "--ub-values", "1,2,0"]);
        assert_eq!(code, EXIT_OK);
        let rows: Vec<Vec<&str>> = out.lines().skip(1).map(|l| l.split(',').collect()).collect();
        assert_eq!(rows[0][2], "1");
        assert_eq!(rows[1][2], "2");
        assert_eq!(rows[2][3], "error");
    }

    #[test]
    fn sweep_default_ladder_ends_at_clique_number() {
        let f = file(K5);
        let (_, out, _) = call(&["ub-sweep", f.path().to_str().unwrap()]);
        let last: Vec<&str> = out.lines().last().unwrap().split(',').collect();
        assert_eq!(&last[..4], ["5", "1.0000", "5", "optimal"]);
    }

    #[test]
    fn tscc_small() {
        let f = file("a b 1\nb a 2\nb c 3\nc b 4\n");
        let dir = tempfile::tempdir().unwrap();
        let reach = dir.path().join("rs.txt");
        let (code, out, diag) = call(&[
            "tscc",
            f.path().to_str().unwrap(),
            "--directed",
            "--emit-reach",
            reach.to_str().unwrap(),
        ]);
        assert_eq!(code, EXIT_OK, "{diag}");
        assert!(diag.is_empty());
        let row: Vec<&str> = out.lines().nth(1).unwrap().split(',').collect();
        assert_eq!(&row[1..9], ["4", "3", "5", "2", "1.3333", "2", "1", "2"]);
        let edges = std::fs::read_to_string(reach).unwrap();
        assert_eq!(edges, "a b\nb c\n");
    }

    #[test]
    fn tscc_warns_about_direction_and_memory() {
        let f = file("a b 1\nb c 2\n");
        let (_, _, diag) = call(&["tscc", f.path().to_str().unwrap(), "--reach-memory-cap", "0"]);
        assert!(diag.contains("undirected"));
        assert!(diag.contains("MiB cap"));
        let (code, _, diag) = call(&["tscc", f.path().to_str().unwrap(), "--columns", "0,1,3"]);
        assert_eq!(code, EXIT_INPUT, "{diag}");
    }

    #[test]
    fn column_layouts() {
        assert_eq!(parse_columns("1,2,0").unwrap(), TemporalColumns::time_first());
        assert!(parse_columns("0,0,1").is_err());
        assert!(parse_columns("0,1").is_err());
    }

    #[test]
    fn time_limit_values() {
        assert_eq!(parse_time_limit("none").unwrap(), TimeLimit(None));
        assert_eq!(
            parse_time_limit("1.5").unwrap(),
            TimeLimit(Some(Duration::from_millis(1500)))
        );
        assert!(parse_time_limit("-1").is_err());
    }

    #[test]
    fn single_thread_reports_are_stable() {
        let strip = |s: String| -> Vec<String> {
            let mut lines = s.lines();
            let header: Vec<&str> = lines.next().unwrap().split(',').collect();
            let keep: Vec<bool> = header.iter().map(|h| !TIMING_COLUMNS.contains(h)).collect();
            lines
                .map(|l| {
                    l.split(',')
                        .zip(&keep)
                        .filter(|(_, &k)| k)
                        .map(|(c, _)| c)
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .collect()
        };
        let args = ["clique", "gnp:60:0.4", "--seed", "9", "--threads", "1"];
        let a = strip(call(&args).1);
        let b = strip(call(&args).1);
        assert_eq!(a, b);
    }
}
