use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use dlab_core::{
    bellman_ford, build_tree_matrix, compare, enumerate_distances, extract_path,
    harness::StrategyOutcome, parse_edge_list, parse_matrix_text, run, run_suite, ComparisonRecord,
    EndpointPolicy, Graph, GraphSpec, RunTrace, SelectionStrategy, VertexId,
};

use crate::{
    Algo, BenchArgs, Command, CompareArgs, GraphInput, InputFormat, OracleArgs, OracleMethodArg,
    OutputFormat, PathArgs, ReportFormat, TraceArgs,
};

const STABLE_NOTICE: &str =
    "note: stablebatch is experimental and oracle-checked; its distances can be wrong";

pub fn dispatch(command: Command) -> Result<String> {
    match command {
        Command::Trace(args) => trace(args),
        Command::Path(args) => path(args),
        Command::Compare(args) => compare_cmd(args),
        Command::Bench(args) => bench(args),
        Command::Oracle(args) => oracle(args),
    }
}

impl From<Algo> for SelectionStrategy {
    fn from(a: Algo) -> SelectionStrategy {
        match a {
            Algo::Classic => SelectionStrategy::SingleMin,
            Algo::Tiebatch => SelectionStrategy::TieBatch,
            Algo::Stablebatch => SelectionStrategy::StableBatch,
        }
    }
}

fn load_graph(input: &GraphInput) -> Result<Graph> {
    let path = &input.file;
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let edges = match input.input_format {
        InputFormat::Auto => path.extension().is_some_and(|e| e == "edges"),
        InputFormat::Matrix => false,
        InputFormat::Edges => true,
    };
    let parsed = if edges {
        parse_edge_list(&text)
    } else {
        parse_matrix_text(&text)
    };
    parsed.with_context(|| format!("invalid graph in {}", path.display()))
}

fn vertex(g: &Graph, id: usize, flag: &str) -> Result<VertexId> {
    g.vertex(id).with_context(|| format!("--{flag} {id}"))
}

/// Runs `strategy`; stable batching announces itself and is checked against
/// the oracle on stderr.
fn traced_run(
    g: &Graph,
    source: VertexId,
    target: Option<VertexId>,
    stop_at_target: bool,
    strategy: SelectionStrategy,
) -> Result<RunTrace> {
    let trace = run(g, source, target, stop_at_target, strategy)?;
    if strategy.is_experimental() {
        eprintln!("{STABLE_NOTICE}");
        let oracle = bellman_ford(g, source)?;
        for v in g.vertices() {
            let (got, want) = (trace.distance(v), oracle.distances[v.index()]);
            if trace.is_settled(v) && got != want {
                eprintln!("warning: stablebatch distance to {v} is {got}, oracle gives {want}");
            }
        }
    }
    Ok(trace)
}

fn trace(args: TraceArgs) -> Result<String> {
    let g = load_graph(&args.input)?;
    let source = vertex(&g, args.source, "source")?;
    let target = args.target.map(|t| vertex(&g, t, "target")).transpose()?;
    let trace = traced_run(&g, source, target, args.stop_at_target, args.algo.into())?;
    match args.format {
        OutputFormat::Text => Ok(trace.render_text()),
        OutputFormat::Structured => Ok(serde_json::to_string_pretty(&trace)? + "\n"),
    }
}

fn path(args: PathArgs) -> Result<String> {
    let g = load_graph(&args.input)?;
    let source = vertex(&g, args.source, "source")?;
    let target = vertex(&g, args.target, "target")?;
    let trace = traced_run(&g, source, Some(target), false, args.algo.into())?;
    let tree = build_tree_matrix(&g, &trace)?;
    let route = extract_path(&tree, target)?;
    let mut out = String::new();
    if route.is_empty() {
        writeln!(out, "route: unreachable")?;
    } else {
        let ids: Vec<String> = route.vertices.iter().map(|v| v.to_string()).collect();
        writeln!(out, "route: {}", ids.join("-"))?;
    }
    writeln!(out, "total: {}", route.total)?;
    writeln!(out, "tree matrix:")?;
    out.push_str(&tree.render());
    Ok(out)
}

fn outcome_row(out: &mut String, o: &StrategyOutcome, timings: bool) -> std::fmt::Result {
    write!(
        out,
        "{:<13}{:<8}{:<13}{:<7}",
        o.strategy.name(),
        o.rounds_count,
        o.rounds_count_incl_source,
        o.agrees_oracle
    )?;
    match (timings, o.elapsed_ns) {
        (true, Some(ns)) => writeln!(out, "{ns}"),
        _ => writeln!(out),
    }
}

fn render_comparison(r: &ComparisonRecord, timings: bool) -> Result<String> {
    let mut out = String::new();
    write!(out, "n {} source {}", r.n, r.source)?;
    if let Some(t) = r.target {
        write!(out, " target {t}")?;
    }
    writeln!(out)?;
    let oracle: Vec<String> = r.oracle_distances.iter().map(|d| d.to_string()).collect();
    writeln!(out, "oracle distances: {}", oracle.join(" "))?;
    let header = format!("{:<13}{:<8}{:<13}{:<7}", "strategy", "rounds", "incl_source", "oracle");
    if timings {
        writeln!(out, "{header}elapsed_ns")?;
    } else {
        writeln!(out, "{}", header.trim_end())?;
    }
    for o in &r.outcomes {
        let mut row = String::new();
        outcome_row(&mut row, o, timings)?;
        writeln!(out, "{}", row.trim_end())?;
    }
    writeln!(out, "stable_batch_unsound: {}", r.stable_batch_unsound)?;
    Ok(out)
}

fn compare_cmd(args: CompareArgs) -> Result<String> {
    let g = load_graph(&args.input)?;
    let source = vertex(&g, args.source, "source")?;
    let target = args.target.map(|t| vertex(&g, t, "target")).transpose()?;
    eprintln!("{STABLE_NOTICE}");
    let mut record = compare(&g, source, target)?;
    if !args.timings {
        record.clear_timings();
    }
    match args.format {
        OutputFormat::Text => render_comparison(&record, args.timings),
        OutputFormat::Structured => Ok(serde_json::to_string_pretty(&record)? + "\n"),
    }
}

fn bench(args: BenchArgs) -> Result<String> {
    let spec = GraphSpec::new(args.nodes, args.density, args.weights, args.tie_bias, args.seed);
    let endpoints = if args.to_last {
        EndpointPolicy::FirstToLast
    } else {
        EndpointPolicy::FirstVertex
    };
    let mut report = run_suite(&[spec], args.graphs, endpoints)?;
    if !args.timings {
        report = report.without_timings();
    }
    let csv = match args.format {
        ReportFormat::Auto => args.out.extension().is_some_and(|e| e == "csv"),
        ReportFormat::Json => false,
        ReportFormat::Csv => true,
    };
    let body = if csv { report.to_csv()? } else { report.to_json()? };
    write_file(&args.out, &body)?;

    let mut out = String::new();
    writeln!(out, "graphs: {}", report.records.len())?;
    for a in &report.aggregates.strategies {
        writeln!(
            out,
            "{:<13}mean {:.3}  min {}  max {}  oracle agreement {}/{}",
            a.strategy.name(),
            a.mean_rounds,
            a.min_rounds,
            a.max_rounds,
            a.agreeing,
            a.runs
        )?;
    }
    writeln!(out, "unsound stablebatch runs: {}", report.aggregates.unsound_stable_batch)?;
    writeln!(out, "report: {}", args.out.display())?;
    Ok(out)
}

fn write_file(path: &Path, body: &str) -> Result<()> {
    fs::write(path, body).with_context(|| format!("cannot write {}", path.display()))
}

fn oracle(args: OracleArgs) -> Result<String> {
    let g = load_graph(&args.input)?;
    let source = vertex(&g, args.source, "source")?;
    let result = match args.method {
        OracleMethodArg::BellmanFord => bellman_ford(&g, source)?,
        OracleMethodArg::Enumeration => enumerate_distances(&g, source)?,
    };
    let mut out = String::new();
    for (v, d) in g.vertices().zip(&result.distances) {
        writeln!(out, "{v} {d}")?;
    }
    Ok(out)
}
