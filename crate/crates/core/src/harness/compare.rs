use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::engine::run;
use crate::error::Result;
use crate::graph::{Graph, VertexId};
use crate::labels::SelectionStrategy;
use crate::oracle::bellman_ford;
use crate::weight::Weight;

/// Which generated graph a record came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GraphIdentity {
    pub spec_index: usize,
    pub graph_index: usize,
}

/// One strategy's full-settlement run on one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrategyOutcome {
    pub strategy: SelectionStrategy,
    pub final_distances: Vec<Weight>,
    pub rounds_count: usize,
    pub rounds_count_incl_source: usize,
    /// Sum of per-round batch sizes.
    pub settled_non_source: usize,
    pub agrees_oracle: bool,
    /// Wall-clock nanoseconds; dropped from reproducible reports.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ns: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphIdentity>,
    pub n: usize,
    pub source: VertexId,
    pub target: Option<VertexId>,
    pub oracle_distances: Vec<Weight>,
    /// One entry per strategy, in [`SelectionStrategy::ALL`] order.
    pub outcomes: Vec<StrategyOutcome>,
    /// Stable batching disagreed with the oracle on some vertex.
    pub stable_batch_unsound: bool,
}

impl ComparisonRecord {
    pub fn outcome(&self, strategy: SelectionStrategy) -> &StrategyOutcome {
        self.outcomes
            .iter()
            .find(|o| o.strategy == strategy)
            .expect("every strategy is compared")
    }

    pub fn clear_timings(&mut self) {
        for o in &mut self.outcomes {
            o.elapsed_ns = None;
        }
    }
}

/// Runs every selection strategy to full settlement from `source` and checks
/// each against Bellman-Ford. `target` is recorded, not used to stop early.
pub fn compare(g: &Graph, source: VertexId, target: Option<VertexId>) -> Result<ComparisonRecord> {
    let oracle = bellman_ford(g, source)?;
    let mut outcomes = Vec::with_capacity(SelectionStrategy::ALL.len());
    for strategy in SelectionStrategy::ALL {
        let started = Instant::now();
        let trace = run(g, source, target, false, strategy)?;
        let elapsed = started.elapsed().as_nanos();
        outcomes.push(StrategyOutcome {
            strategy,
            agrees_oracle: trace.final_distances == oracle.distances,
            settled_non_source: trace.batch_sizes().iter().sum(),
            final_distances: trace.final_distances,
            rounds_count: trace.rounds_count,
            rounds_count_incl_source: trace.rounds_count_incl_source,
            elapsed_ns: Some(u64::try_from(elapsed).unwrap_or(u64::MAX)),
        });
    }
    let stable_batch_unsound = outcomes
        .iter()
        .any(|o| o.strategy == SelectionStrategy::StableBatch && !o.agrees_oracle);
    Ok(ComparisonRecord {
        graph: None,
        n: g.n(),
        source,
        target,
        oracle_distances: oracle.distances,
        outcomes,
        stable_batch_unsound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn v(i: usize) -> VertexId {
        VertexId::new(i)
    }

    #[test]
    fn paper_graph_counts() {
        let r = compare(&fixtures::paper8(), v(1), Some(v(8))).unwrap();
        assert_eq!(r.outcome(SelectionStrategy::SingleMin).rounds_count_incl_source, 8);
        assert_eq!(r.outcome(SelectionStrategy::StableBatch).rounds_count, 5);
        assert!(r.outcome(SelectionStrategy::SingleMin).agrees_oracle);
        assert!(r.outcome(SelectionStrategy::TieBatch).agrees_oracle);
        assert!(!r.stable_batch_unsound);
    }

    #[test]
    fn counterexample_flags_unsound() {
        let r = compare(&fixtures::counterexample4(), v(1), None).unwrap();
        assert!(r.stable_batch_unsound);
        let stable = r.outcome(SelectionStrategy::StableBatch);
        assert_eq!(stable.final_distances[2], Weight::from_units(5));
        assert_eq!(r.oracle_distances[2], Weight::from_units(3));
    }

    #[test]
    fn single_vertex() {
        let r = compare(&Graph::edgeless(1).unwrap(), v(1), None).unwrap();
        for o in &r.outcomes {
            assert_eq!(o.rounds_count, 0);
            assert!(o.agrees_oracle);
        }
        assert_eq!(r.outcomes.len(), 3);
    }
}
