//! `dlab`: traces, routes, strategy comparisons and benchmarks over graph files.
//!
//! Exit status: 0 on success, 1 on input or validation errors, 2 on usage
//! errors.

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "dlab", version, about = "Label-setting shortest paths laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the round-by-round labeling trace.
    Trace(TraceArgs),
    /// Print the route to a target and the shortest-path-tree matrix.
    Path(PathArgs),
    /// Run every strategy and the oracle on one graph.
    Compare(CompareArgs),
    /// Compare strategies on seeded random graphs and write a report.
    Bench(BenchArgs),
    /// Print oracle distances.
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Classic,
    Tiebatch,
    Stablebatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    /// `.edges` files are edge lists, everything else is a matrix.
    Auto,
    Matrix,
    Edges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    #[value(alias = "json")]
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    /// By `--out` extension: `.csv` is CSV, anything else JSON.
    Auto,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleMethodArg {
    BellmanFord,
    Enumeration,
}

#[derive(Debug, Args)]
struct GraphInput {
    /// Graph file in matrix or edge-list format.
    file: PathBuf,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    input_format: InputFormat,
}

#[derive(Debug, Args)]
struct TraceArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long)]
    source: usize,
    #[arg(long)]
    target: Option<usize>,
    #[arg(long, value_enum)]
    algo: Algo,
    /// Stop once the target is permanent instead of settling everything.
    #[arg(long, requires = "target")]
    stop_at_target: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct PathArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long)]
    source: usize,
    #[arg(long)]
    target: usize,
    #[arg(long, value_enum, default_value_t = Algo::Classic)]
    algo: Algo,
}

#[derive(Debug, Args)]
struct CompareArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long)]
    source: usize,
    #[arg(long)]
    target: Option<usize>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Include wall-clock timings (output is then not reproducible).
    #[arg(long)]
    timings: bool,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long)]
    nodes: usize,
    #[arg(long)]
    density: f64,
    #[arg(long)]
    graphs: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    tie_bias: f64,
    /// Inclusive integer weight range `LO:HI`.
    #[arg(long, value_parser = parse_weight_range)]
    weights: (u64, u64),
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum, default_value_t = ReportFormat::Auto)]
    format: ReportFormat,
    /// Target vertex n in every record instead of none.
    #[arg(long)]
    to_last: bool,
    #[arg(long)]
    timings: bool,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long)]
    source: usize,
    #[arg(long, value_enum, default_value_t = OracleMethodArg::BellmanFord)]
    method: OracleMethodArg,
}

fn parse_weight_range(s: &str) -> Result<(u64, u64), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("expected LO:HI, found `{s}`"))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<u64>()
            .map_err(|_| format!("`{t}` is not a non-negative integer"))
    };
    Ok((parse(lo)?, parse(hi)?))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::dispatch(cli.command) {
        Ok(output) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(output.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
