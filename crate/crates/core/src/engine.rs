//! Full labeling runs with per-round traces.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{Graph, VertexId};
use crate::labels::{init_labels, relax_step, select_permanent, LabelState, SelectionStrategy, VertexSet};
use crate::weight::Weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Classic,
    Modified,
}

/// Strategies that settle whole batches per round.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BatchStrategy {
    TieBatch,
    StableBatch,
}

impl From<BatchStrategy> for SelectionStrategy {
    fn from(b: BatchStrategy) -> SelectionStrategy {
        match b {
            BatchStrategy::TieBatch => SelectionStrategy::TieBatch,
            BatchStrategy::StableBatch => SelectionStrategy::StableBatch,
        }
    }
}

/// One relax-then-select repetition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundRecord {
    pub round_index: usize,
    /// Vertices relaxed from: the previous round's settled set.
    pub frontier: VertexSet,
    /// Temporary vertices whose value strictly decreased during relaxation.
    pub improved: VertexSet,
    /// Labels after relaxation and selection.
    pub label_snapshot: LabelState,
    pub newly_permanent: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunTrace {
    pub algorithm: Algorithm,
    pub strategy: SelectionStrategy,
    pub source: VertexId,
    pub target: Option<VertexId>,
    pub stop_at_target: bool,
    pub rounds: Vec<RoundRecord>,
    pub final_labels: LabelState,
    /// Final label values; infinite for vertices never reached.
    pub final_distances: Vec<Weight>,
    /// Relax/select repetitions after initializing the source.
    pub rounds_count: usize,
    /// `rounds_count + 1`, counting the source initialization as a round.
    pub rounds_count_incl_source: usize,
    /// Stopped at the target while other vertices were still temporary.
    pub terminated_early: bool,
}

impl RunTrace {
    pub fn distance(&self, v: VertexId) -> Weight {
        self.final_distances[v.index()]
    }

    pub fn is_settled(&self, v: VertexId) -> bool {
        self.final_labels.get(v).is_permanent()
    }

    pub fn settled_count(&self) -> usize {
        self.final_labels.permanent().len()
    }

    /// Settled-set sizes, one per round.
    pub fn batch_sizes(&self) -> Vec<usize> {
        self.rounds.iter().map(|r| r.newly_permanent.len()).collect()
    }
}

/// Runs relaxation and selection with `strategy` until every vertex is
/// permanent, no finite temporary label remains, or (with `stop_at_target`)
/// the target is permanent.
pub fn run(
    g: &Graph,
    source: VertexId,
    target: Option<VertexId>,
    stop_at_target: bool,
    strategy: SelectionStrategy,
) -> Result<RunTrace> {
    let mut labels = init_labels(g, source)?;
    if let Some(t) = target {
        g.vertex(t.get())?;
    }

    let mut rounds = Vec::new();
    let mut frontier = VertexSet::from([source]);
    let mut terminated_early = false;
    loop {
        if stop_at_target {
            if let Some(t) = target {
                if labels.get(t).is_permanent() {
                    terminated_early = !labels.all_permanent();
                    break;
                }
            }
        }
        if labels.all_permanent() {
            break;
        }
        let round_index = rounds.len() + 1;
        let improved = relax_step(g, &mut labels, &frontier)?;
        let newly_permanent = select_permanent(&mut labels, strategy, &improved, round_index);
        if newly_permanent.is_empty() {
            break;
        }
        rounds.push(RoundRecord {
            round_index,
            frontier: std::mem::take(&mut frontier),
            improved,
            label_snapshot: labels.clone(),
            newly_permanent: newly_permanent.clone(),
        });
        frontier = newly_permanent;
    }

    let algorithm = match strategy {
        SelectionStrategy::SingleMin => Algorithm::Classic,
        _ => Algorithm::Modified,
    };
    Ok(RunTrace {
        algorithm,
        strategy,
        source,
        target,
        stop_at_target,
        rounds_count: rounds.len(),
        rounds_count_incl_source: rounds.len() + 1,
        rounds,
        final_distances: labels.values(),
        final_labels: labels,
        terminated_early,
    })
}

/// Classic labeling: one vertex settled per round.
pub fn run_classic(
    g: &Graph,
    source: VertexId,
    target: Option<VertexId>,
    stop_at_target: bool,
) -> Result<RunTrace> {
    run(g, source, target, stop_at_target, SelectionStrategy::SingleMin)
}

/// Batched labeling: each round relaxes from the whole previous batch.
pub fn run_modified(
    g: &Graph,
    source: VertexId,
    target: Option<VertexId>,
    stop_at_target: bool,
    strategy: BatchStrategy,
) -> Result<RunTrace> {
    run(g, source, target, stop_at_target, strategy.into())
}

fn fmt_set(set: &VertexSet) -> String {
    let ids: Vec<String> = set.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", ids.join(","))
}

fn write_label_table(out: &mut String, labels: &LabelState) {
    let _ = writeln!(out, "{:<6}{:<14}Status", "Node", "Label");
    for (v, label) in labels.iter() {
        if label.value.is_infinite() {
            let _ = writeln!(out, "{v}");
            continue;
        }
        let pred = label
            .predecessor()
            .map_or_else(|| "-".to_string(), |p| p.to_string());
        let cell = format!("[{}, {}]", label.value.to_fixed2(), pred);
        let _ = writeln!(out, "{:<6}{:<14}{}", v.to_string(), cell, label.status);
    }
}

impl RunTrace {
    /// Plain-text trace: one label table per round (node, `[value, predecessor]`,
    /// status), followed by a summary. Deterministic.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "algorithm: {} ({}), source {}{}",
            match self.algorithm {
                Algorithm::Classic => "classic",
                Algorithm::Modified => "modified",
            },
            self.strategy,
            self.source,
            self.target.map_or(String::new(), |t| format!(", target {t}")),
        );
        for round in &self.rounds {
            let _ = writeln!(
                out,
                "\nRound {}  frontier {}  settled {}",
                round.round_index,
                fmt_set(&round.frontier),
                fmt_set(&round.newly_permanent)
            );
            write_label_table(&mut out, &round.label_snapshot);
        }
        let distances: Vec<String> = self.final_distances.iter().map(|d| d.to_string()).collect();
        let _ = writeln!(out);
        let _ = writeln!(
            out,
            "rounds: {} ({} counting source initialization)",
            self.rounds_count, self.rounds_count_incl_source
        );
        let _ = writeln!(out, "distances: {}", distances.join(" "));
        if self.terminated_early {
            let _ = writeln!(out, "stopped at target");
        }
        out
    }
}

impl fmt::Display for RunTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}
