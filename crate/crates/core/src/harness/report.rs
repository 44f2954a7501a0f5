//! Suite execution and report serialization.
//!
//! JSON report layout (`RunReport::to_json`):
//!
//! - `config.specs`: the generator parameters, echoed.
//! - `config.graphs_per_spec`, `config.endpoints`.
//! - `records[]`: one per generated graph, sorted by `(spec_index, graph_index)`,
//!   each with the oracle distances and one outcome per strategy
//!   (`rounds_count`, `rounds_count_incl_source`, `agrees_oracle`, ...).
//! - `aggregates.strategies[]`: per-strategy round statistics and oracle
//!   agreement; `aggregates.unsound_stable_batch` counts flagged records.
//!
//! Weights are strings (`"8"`, `"2.5"`, `"INF"`) so values stay exact.
//!
//! CSV layout (`RunReport::to_csv`): one row per (record, strategy) with header
//! `spec_index,graph_index,strategy,rounds,rounds_incl_source,agrees_oracle,unsound`.
//! `unsound` repeats the record's stable-batch flag on every row.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::compare::{compare, ComparisonRecord, GraphIdentity};
use super::generate::{generate_graph, GraphSpec};
use crate::error::{Error, Result};
use crate::graph::VertexId;
use crate::labels::SelectionStrategy;

pub const CSV_HEADER: [&str; 7] = [
    "spec_index",
    "graph_index",
    "strategy",
    "rounds",
    "rounds_incl_source",
    "agrees_oracle",
    "unsound",
];

/// Source and target chosen for every generated graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EndpointPolicy {
    /// Source 1, no target.
    FirstVertex,
    /// Source 1, target n.
    FirstToLast,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub specs: Vec<GraphSpec>,
    pub graphs_per_spec: usize,
    pub endpoints: EndpointPolicy,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StrategyAggregate {
    pub strategy: SelectionStrategy,
    pub runs: usize,
    pub mean_rounds: f64,
    pub min_rounds: usize,
    pub max_rounds: usize,
    pub agreeing: usize,
    pub agreement_rate: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Aggregates {
    /// Empty when there are no records.
    pub strategies: Vec<StrategyAggregate>,
    pub unsound_stable_batch: usize,
}

impl Aggregates {
    pub fn from_records(records: &[ComparisonRecord]) -> Aggregates {
        let strategies = if records.is_empty() {
            Vec::new()
        } else {
            SelectionStrategy::ALL
                .iter()
                .map(|&strategy| {
                    let outcomes: Vec<_> = records.iter().map(|r| r.outcome(strategy)).collect();
                    let rounds: Vec<usize> = outcomes.iter().map(|o| o.rounds_count).collect();
                    let agreeing = outcomes.iter().filter(|o| o.agrees_oracle).count();
                    let runs = outcomes.len();
                    StrategyAggregate {
                        strategy,
                        runs,
                        mean_rounds: rounds.iter().sum::<usize>() as f64 / runs as f64,
                        min_rounds: rounds.iter().copied().min().unwrap_or(0),
                        max_rounds: rounds.iter().copied().max().unwrap_or(0),
                        agreeing,
                        agreement_rate: agreeing as f64 / runs as f64,
                    }
                })
                .collect()
        };
        Aggregates {
            strategies,
            unsound_stable_batch: records.iter().filter(|r| r.stable_batch_unsound).count(),
        }
    }

    pub fn strategy(&self, strategy: SelectionStrategy) -> Option<&StrategyAggregate> {
        self.strategies.iter().find(|a| a.strategy == strategy)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub config: SuiteConfig,
    pub records: Vec<ComparisonRecord>,
    pub aggregates: Aggregates,
}

impl RunReport {
    /// Stored aggregates equal those recomputed from the records.
    pub fn is_consistent(&self) -> bool {
        self.aggregates == Aggregates::from_records(&self.records)
    }

    /// Drops wall-clock timings so the report is reproducible byte for byte.
    pub fn without_timings(mut self) -> RunReport {
        for r in &mut self.records {
            r.clear_timings();
        }
        self
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self)
            .map(|mut s| {
                s.push('\n');
                s
            })
            .map_err(|e| Error::Report(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<RunReport> {
        serde_json::from_str(text).map_err(|e| Error::Report(e.to_string()))
    }

    pub fn to_csv(&self) -> Result<String> {
        let report = |e: csv::Error| Error::Report(e.to_string());
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_HEADER).map_err(report)?;
        for r in &self.records {
            let (spec, graph) = r
                .graph
                .map_or((String::new(), String::new()), |g| {
                    (g.spec_index.to_string(), g.graph_index.to_string())
                });
            for o in &r.outcomes {
                w.write_record([
                    spec.clone(),
                    graph.clone(),
                    o.strategy.to_string(),
                    o.rounds_count.to_string(),
                    o.rounds_count_incl_source.to_string(),
                    o.agrees_oracle.to_string(),
                    r.stable_batch_unsound.to_string(),
                ])
                .map_err(report)?;
            }
        }
        let bytes = w.into_inner().map_err(|e| Error::Report(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Report(e.to_string()))
    }
}

/// Generates `graphs_per_spec` graphs per spec, compares every strategy on
/// each, and aggregates. Graphs run in parallel; records are sorted by
/// `(spec_index, graph_index)` so the output does not depend on scheduling.
pub fn run_suite(
    specs: &[GraphSpec],
    graphs_per_spec: usize,
    endpoints: EndpointPolicy,
) -> Result<RunReport> {
    for spec in specs {
        spec.validate()?;
    }
    let jobs: Vec<GraphIdentity> = (0..specs.len())
        .flat_map(|spec_index| {
            (0..graphs_per_spec).map(move |graph_index| GraphIdentity {
                spec_index,
                graph_index,
            })
        })
        .collect();
    let mut records = jobs
        .into_par_iter()
        .map(|id| {
            let g = generate_graph(&specs[id.spec_index], id.graph_index as u64)?;
            let source = VertexId::new(1);
            let target = match endpoints {
                EndpointPolicy::FirstVertex => None,
                EndpointPolicy::FirstToLast => Some(VertexId::new(g.n())),
            };
            let mut record = compare(&g, source, target)?;
            record.graph = Some(id);
            Ok(record)
        })
        .collect::<Result<Vec<_>>>()?;
    records.sort_by_key(|r| r.graph);
    let aggregates = Aggregates::from_records(&records);
    Ok(RunReport {
        config: SuiteConfig {
            specs: specs.to_vec(),
            graphs_per_spec,
            endpoints,
        },
        records,
        aggregates,
    })
}
