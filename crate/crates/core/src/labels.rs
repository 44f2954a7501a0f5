//! Vertex labels and the two labeling rules: relaxation from the most
//! recently settled vertices, and selection of the next permanent set.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::weight::Weight;

pub type VertexSet = BTreeSet<VertexId>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Temporary,
    Permanent,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Temporary => "temporary",
            Status::Permanent => "permanent",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Label {
    pub value: Weight,
    /// Every frontier vertex that attained `value`.
    pub predecessors: VertexSet,
    pub status: Status,
    /// Round in which the vertex became permanent; 0 for the source.
    pub settled_round: Option<usize>,
}

impl Label {
    pub fn is_permanent(&self) -> bool {
        self.status == Status::Permanent
    }

    /// Lowest-id predecessor, the one shown in trace tables and used as the
    /// tree parent.
    pub fn predecessor(&self) -> Option<VertexId> {
        self.predecessors.first().copied()
    }
}

/// Per-vertex labels for one run, indexed by [`VertexId`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LabelState {
    labels: Vec<Label>,
}

impl LabelState {
    pub fn get(&self, v: VertexId) -> &Label {
        &self.labels[v.index()]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, &Label)> {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, l)| (VertexId::from_index(i), l))
    }

    pub fn values(&self) -> Vec<Weight> {
        self.labels.iter().map(|l| l.value).collect()
    }

    pub fn permanent(&self) -> VertexSet {
        self.iter()
            .filter(|(_, l)| l.is_permanent())
            .map(|(v, _)| v)
            .collect()
    }

    pub fn all_permanent(&self) -> bool {
        self.labels.iter().all(Label::is_permanent)
    }

    fn temporary_finite(&self) -> impl Iterator<Item = (VertexId, &Label)> {
        self.iter()
            .filter(|(_, l)| !l.is_permanent() && l.value.is_finite())
    }
}

/// How many temporary vertices become permanent per round.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SelectionStrategy {
    /// One vertex at the minimum, lowest id on ties.
    SingleMin,
    /// Every vertex at the minimum.
    TieBatch,
    /// Experimental and unsound: every vertex at the minimum plus every
    /// finite temporary vertex the last relaxation did not improve.
    StableBatch,
}

impl SelectionStrategy {
    pub const ALL: [SelectionStrategy; 3] = [
        SelectionStrategy::SingleMin,
        SelectionStrategy::TieBatch,
        SelectionStrategy::StableBatch,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SelectionStrategy::SingleMin => "singlemin",
            SelectionStrategy::TieBatch => "tiebatch",
            SelectionStrategy::StableBatch => "stablebatch",
        }
    }

    pub fn is_experimental(self) -> bool {
        self == SelectionStrategy::StableBatch
    }
}

impl fmt::Display for SelectionStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Source permanent at 0, every other vertex temporary at infinity.
pub fn init_labels(g: &Graph, source: VertexId) -> Result<LabelState> {
    g.vertex(source.get())?;
    let labels = g
        .vertices()
        .map(|v| {
            if v == source {
                Label {
                    value: Weight::ZERO,
                    predecessors: VertexSet::new(),
                    status: Status::Permanent,
                    settled_round: Some(0),
                }
            } else {
                Label {
                    value: Weight::INFINITY,
                    predecessors: VertexSet::new(),
                    status: Status::Temporary,
                    settled_round: None,
                }
            }
        })
        .collect();
    Ok(LabelState { labels })
}

/// Lowers every temporary label to `min(old, label(i) + d(i, j))` over all
/// frontier vertices `i`, and returns the vertices whose value strictly
/// decreased. An equal-valued alternative adds its predecessor but does not
/// count as a change. Reads only pre-relaxation values, so the frontier's
/// iteration order is irrelevant.
pub fn relax_step(g: &Graph, labels: &mut LabelState, frontier: &VertexSet) -> Result<VertexSet> {
    for &i in frontier {
        g.vertex(i.get())?;
        if !labels.get(i).is_permanent() {
            return Err(Error::FrontierNotPermanent(i));
        }
    }
    let mut changed = VertexSet::new();
    for j in g.vertices() {
        if labels.get(j).is_permanent() {
            continue;
        }
        let mut best = Weight::INFINITY;
        let mut minimizers = VertexSet::new();
        for &i in frontier {
            let candidate = labels.get(i).value.saturating_add(g.weight(i, j));
            if candidate.is_infinite() {
                continue;
            }
            if candidate < best {
                best = candidate;
                minimizers.clear();
            }
            if candidate == best {
                minimizers.insert(i);
            }
        }
        let label = &mut labels.labels[j.index()];
        if best < label.value {
            label.value = best;
            label.predecessors = minimizers;
            changed.insert(j);
        } else if best == label.value && best.is_finite() {
            label.predecessors.extend(minimizers);
        }
    }
    Ok(changed)
}

/// Picks the next permanent vertices according to `strategy`, marks them
/// permanent in `round`, and returns them. Empty when no temporary vertex has
/// a finite label.
pub fn select_permanent(
    labels: &mut LabelState,
    strategy: SelectionStrategy,
    changed: &VertexSet,
    round: usize,
) -> VertexSet {
    let Some(min) = labels.temporary_finite().map(|(_, l)| l.value).min() else {
        return VertexSet::new();
    };
    let at_min = labels
        .temporary_finite()
        .filter(|(_, l)| l.value == min)
        .map(|(v, _)| v);
    let chosen: VertexSet = match strategy {
        SelectionStrategy::SingleMin => at_min.take(1).collect(),
        SelectionStrategy::TieBatch => at_min.collect(),
        SelectionStrategy::StableBatch => {
            let stable = labels
                .temporary_finite()
                .filter(|(v, _)| !changed.contains(v))
                .map(|(v, _)| v);
            at_min.chain(stable).collect()
        }
    };
    for &v in &chosen {
        let label = &mut labels.labels[v.index()];
        label.status = Status::Permanent;
        label.settled_round = Some(round);
    }
    chosen
}
