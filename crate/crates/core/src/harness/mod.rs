//! Seeded random graphs, head-to-head strategy comparison, and reports.

mod compare;
mod generate;
mod report;

pub use compare::{compare, ComparisonRecord, GraphIdentity, StrategyOutcome};
pub use generate::{generate_graph, GraphSpec};
pub use report::{
    run_suite, Aggregates, EndpointPolicy, RunReport, StrategyAggregate, SuiteConfig, CSV_HEADER,
};
