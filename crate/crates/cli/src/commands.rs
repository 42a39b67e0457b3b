use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use hashlist_core::bench::{
    differential, run_workload, scaling_sweep, BenchError, Generator, OpClass, OpMix, Selection,
    StructureKind, Subject, WorkloadSpec,
};
use hashlist_core::{
    EdgeHash, GraphError, HashList, HashMode, MultiList, OracleGraph, StoreConfig,
    ORACLE_MAX_VERTICES,
};

use crate::edgelist::{EdgeList, EdgeListError};
use crate::query::{parse_queries, Query};
use crate::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "hashlist",
    version,
    about = "Graph edge stores: ingest, query and benchmark"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Load an edge list into one store and answer a query file.
    Query(QueryArgs),
    /// Run a seeded workload against several stores and write a CSV report.
    Bench(BenchArgs),
    /// Differential check of every store against the dense oracle.
    Selftest(SelftestArgs),
}

#[derive(Debug, Args)]
pub struct QueryArgs {
    /// Edge list: `n m` header, then `x y [weight]` lines.
    #[arg(long)]
    pub graph: PathBuf,
    /// Query file: `C x y` or `N x` per line.
    #[arg(long)]
    pub queries: PathBuf,
    #[arg(long, default_value = "hashlist")]
    pub structure: StructureKind,
    #[arg(long, default_value = "mixer")]
    pub hash_mode: HashMode,
    /// Insert every edge in both directions.
    #[arg(long)]
    pub undirected: bool,
    /// Result file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long = "gen", default_value = "uniform")]
    pub generator: Generator,
    #[arg(long)]
    pub n: u32,
    /// Number of add operations.
    #[arg(long)]
    pub m: usize,
    /// Fractions `add,contains_hit,contains_miss,enumerate`.
    #[arg(long, default_value = "0.6,0.2,0.15,0.05")]
    pub mix: OpMix,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "hashlist,multilist,edgehash"
    )]
    pub structures: Vec<StructureKind>,
    #[arg(long, default_value = "mixer")]
    pub hash_mode: HashMode,
    #[arg(long, default_value_t = 0.5)]
    pub max_load: f64,
    /// Run every add before any query.
    #[arg(long)]
    pub phased: bool,
    /// Comma-separated multipliers of `m`; one block of rows per factor.
    #[arg(long, value_delimiter = ',')]
    pub sweep: Option<Vec<usize>>,
    /// CSV output; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    #[arg(long, default_value_t = 100_000)]
    pub ops: usize,
    #[arg(long, default_value_t = 0x5EED)]
    pub seed: u64,
}

pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Query(args) => cmd_query(&args, stdout),
        Command::Bench(args) => cmd_bench(&args, stdout),
        Command::Selftest(args) => cmd_selftest(&args, stdout),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn emit(out: Option<&Path>, stdout: &mut dyn Write, text: &str) -> Result<(), CliError> {
    let result = match out {
        Some(path) => fs::write(path, text),
        None => stdout.write_all(text.as_bytes()),
    };
    result.map_err(|source| CliError::Io {
        path: out.map_or_else(|| "<stdout>".into(), |p| p.display().to_string()),
        source,
    })
}

fn store_error(e: GraphError) -> CliError {
    match e {
        GraphError::VertexOutOfRange { .. } => CliError::Range(e.to_string()),
        GraphError::OracleTooLarge { .. } => CliError::Unsupported(e.to_string()),
        other => CliError::Usage(other.to_string()),
    }
}

/// Builds `kind` and loads every edge of `graph` into it.
pub fn load_store(
    graph: &EdgeList,
    kind: StructureKind,
    hash_mode: HashMode,
    undirected: bool,
) -> Result<Box<dyn Subject>, GraphError> {
    let edges: Vec<_> = graph
        .edges
        .iter()
        .flat_map(|&(x, y, w)| {
            let reverse = (undirected && x != y).then_some((y, x, w));
            std::iter::once((x, y, w)).chain(reverse)
        })
        .collect();
    let budget = edges.len();
    let cfg = StoreConfig::new(graph.n, budget.max(1)).hash_mode(hash_mode);
    let mut store: Box<dyn Subject> = match kind {
        StructureKind::HashList if graph.has_weights() => {
            let mut g = HashList::new(cfg.weights(true))?;
            for &(x, y, w) in &edges {
                // Duplicate lines keep the first weight.
                if hashlist_core::EdgeStore::add_edge(&mut g, x, y)? {
                    if let Some(w) = w {
                        g.set_weight(x, y, w)?;
                    }
                }
            }
            return Ok(Box::new(g));
        }
        StructureKind::HashList => Box::new(HashList::new(cfg)?),
        StructureKind::EdgeHash => Box::new(EdgeHash::new(cfg)?),
        StructureKind::MultiList => Box::new(MultiList::new(graph.n, budget)?),
        StructureKind::Oracle => Box::new(OracleGraph::new(graph.n)?),
    };
    for &(x, y, _) in &edges {
        store.add(x, y)?;
    }
    Ok(store)
}

pub fn cmd_query(args: &QueryArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let graph_path = args.graph.display().to_string();
    let graph = EdgeList::parse(&read(&args.graph)?).map_err(|e| match e {
        EdgeListError::Syntax { line, msg } => CliError::Parse {
            path: graph_path.clone(),
            line,
            msg,
        },
        EdgeListError::Range { line, vertex, n } => CliError::Range(format!(
            "{graph_path}:{line}: vertex {vertex} out of range for n = {n}"
        )),
    })?;
    let query_path = args.queries.display().to_string();
    let queries = parse_queries(&read(&args.queries)?).map_err(|(line, msg)| CliError::Parse {
        path: query_path.clone(),
        line,
        msg,
    })?;

    if !args.structure.enumerates() {
        if let Some(q) = queries
            .iter()
            .find(|q| matches!(q.query, Query::Neighbors(_)))
        {
            return Err(CliError::Unsupported(format!(
                "{query_path}:{}: {} cannot answer neighbor queries",
                q.line, args.structure
            )));
        }
    }

    let store =
        load_store(&graph, args.structure, args.hash_mode, args.undirected).map_err(store_error)?;
    let mut results = String::new();
    for q in &queries {
        let located = |e: GraphError| CliError::Range(format!("{query_path}:{}: {e}", q.line));
        match q.query {
            Query::Contains(x, y) => {
                let hit = store.contains(x, y).map_err(located)?.value;
                results.push_str(if hit { "1" } else { "0" });
            }
            Query::Neighbors(x) => {
                let list = store.neighbors(x).map_err(located)?.value;
                let text: Vec<String> = list.iter().map(u32::to_string).collect();
                results.push_str(&text.join(" "));
            }
        }
        results.push('\n');
    }
    emit(args.out.as_deref(), stdout, &results)
}

fn bench_error(e: BenchError) -> CliError {
    match e {
        BenchError::Workload(msg) => CliError::Usage(msg),
        BenchError::Store(e) => CliError::Usage(e.to_string()),
        BenchError::Disagreement(d) => CliError::Selftest(d.to_string()),
    }
}

pub fn cmd_bench(args: &BenchArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    if args.structures.is_empty() {
        return Err(CliError::Usage(
            "--structures must name at least one store".into(),
        ));
    }
    if args.structures.contains(&StructureKind::Oracle) && args.n > ORACLE_MAX_VERTICES {
        return Err(CliError::Usage(format!(
            "oracle refuses n = {} (limit {ORACLE_MAX_VERTICES})",
            args.n
        )));
    }
    if !(args.max_load > 0.0 && args.max_load < 0.7) {
        return Err(CliError::Usage(format!(
            "--max-load {} must lie in (0, 0.7)",
            args.max_load
        )));
    }
    if args
        .sweep
        .as_ref()
        .is_some_and(|f| f.is_empty() || f.contains(&0))
    {
        return Err(CliError::Usage("--sweep factors must be positive".into()));
    }
    let spec = WorkloadSpec::new(args.generator, args.n, args.m)
        .mix(args.mix)
        .seed(args.seed)
        .phased(args.phased);
    spec.validate().map_err(CliError::Usage)?;
    let mut selection = Selection::new(args.structures.iter().copied()).hash_mode(args.hash_mode);
    selection.max_load_factor = args.max_load;

    let report = match &args.sweep {
        Some(factors) => scaling_sweep(&spec, factors, &selection),
        None => run_workload(&spec, &selection),
    }
    .map_err(bench_error)?;
    emit(args.out.as_deref(), stdout, &report.to_csv())
}

/// Uniform workload used by `selftest`: `ops` operations on 1000 vertices
/// with the default 60/20/15/5 mix.
pub fn selftest_spec(ops: usize, seed: u64) -> WorkloadSpec {
    let mix = OpMix::default();
    let m = ((ops as f64 * mix.add).round() as usize).max(1);
    WorkloadSpec::new(Generator::Uniform, 1000, m)
        .mix(mix)
        .seed(seed)
}

/// Runs the differential suite against stores from `factory`, printing one
/// line per store and a final PASS/FAIL.
pub fn selftest_with<F>(
    spec: &WorkloadSpec,
    factory: F,
    out: &mut dyn Write,
) -> Result<(), CliError>
where
    F: Fn() -> Result<Vec<Box<dyn Subject>>, GraphError>,
{
    let ops = spec.generate().map_err(CliError::Usage)?;
    let io = |source| CliError::Io {
        path: "<stdout>".into(),
        source,
    };
    writeln!(
        out,
        "selftest: {} ops, n = {}, seed = {}",
        ops.len(),
        spec.n,
        spec.seed
    )
    .map_err(io)?;
    match differential(&ops, spec.m, factory) {
        Ok(report) => {
            let mut names: Vec<&str> = Vec::new();
            for row in &report.rows {
                if !names.contains(&row.structure.as_str()) {
                    names.push(&row.structure);
                }
            }
            for name in names {
                let count = |c: OpClass| report.row(name, c).map_or(0, |r| r.count_ops);
                let total: u64 = OpClass::ALL.iter().map(|&c| count(c)).sum();
                writeln!(
                    out,
                    "  {name:<10} {total:>7} ops  add {}  contains {}  enumerate {}",
                    count(OpClass::Add),
                    count(OpClass::ContainsHit) + count(OpClass::ContainsMiss),
                    count(OpClass::Enumerate)
                )
                .map_err(io)?;
            }
            writeln!(out, "selftest: PASS").map_err(io)?;
            Ok(())
        }
        Err(BenchError::Disagreement(d)) => {
            writeln!(out, "  {d}").map_err(io)?;
            writeln!(out, "selftest: FAIL").map_err(io)?;
            Err(CliError::Selftest(d.to_string()))
        }
        Err(e) => Err(bench_error(e)),
    }
}

pub fn cmd_selftest(args: &SelftestArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    if args.ops == 0 {
        return Err(CliError::Usage("--ops must be positive".into()));
    }
    let spec = selftest_spec(args.ops, args.seed);
    let selection = Selection::all();
    selftest_with(&spec, || selection.build(spec.n, spec.m), stdout)
}
