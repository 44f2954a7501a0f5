//! Shortest-path-tree matrix built from a finished run, and route extraction.
//!
//! Entry `(i, j)` of the tree matrix holds `d(i, j)` when `i` is the chosen
//! parent of `j` and 0 otherwise, so each settled non-source column has
//! exactly one nonzero entry.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::engine::RunTrace;
use crate::error::{Error, Result};
use crate::format::write_matrix;
use crate::graph::{DistanceMatrix, Graph, VertexId};
use crate::weight::{Entry, Weight};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeMatrix {
    source: VertexId,
    /// `parents[j]` = (parent of j, d(parent, j)).
    parents: Vec<Option<(VertexId, Weight)>>,
}

impl TreeMatrix {
    pub fn n(&self) -> usize {
        self.parents.len()
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    /// `t(i, j)`: the arc weight when `i` is `j`'s parent, else zero.
    pub fn entry(&self, i: VertexId, j: VertexId) -> Weight {
        match self.parents[j.index()] {
            Some((p, w)) if p == i => w,
            _ => Weight::ZERO,
        }
    }

    pub fn parent(&self, j: VertexId) -> Option<VertexId> {
        self.parents[j.index()].map(|(p, _)| p)
    }

    /// Nonzero entries as `(i, j, t_ij)`, ordered by row then column.
    pub fn nonzeros(&self) -> Vec<(VertexId, VertexId, Weight)> {
        let mut out: Vec<_> = self
            .parents
            .iter()
            .enumerate()
            .filter_map(|(j, p)| p.map(|(i, w)| (i, VertexId::from_index(j), w)))
            .collect();
        out.sort();
        out
    }

    pub fn to_matrix(&self) -> DistanceMatrix {
        let n = self.n();
        let mut m = DistanceMatrix::from_row_major(n, vec![Entry::Finite(0); n * n]);
        for (i, j, w) in self.nonzeros() {
            m.set(i.get(), j.get(), w.into());
        }
        m
    }

    /// The matrix in the graph matrix file format.
    pub fn render(&self) -> String {
        write_matrix(&self.to_matrix())
    }
}

/// Builds the tree from `trace`: every settled non-source vertex gets its
/// lowest-id recorded predecessor as parent. Unsettled vertices have none.
pub fn build_tree_matrix(g: &Graph, trace: &RunTrace) -> Result<TreeMatrix> {
    if trace.final_labels.len() != g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: trace.final_labels.len(),
            n: g.n(),
        });
    }
    let parents = trace
        .final_labels
        .iter()
        .map(|(j, label)| {
            if j == trace.source || !label.is_permanent() {
                return None;
            }
            label.predecessor().map(|i| (i, g.weight(i, j)))
        })
        .collect();
    Ok(TreeMatrix {
        source: trace.source,
        parents,
    })
}

/// As [`build_tree_matrix`], but fails when the trace's target was never
/// settled.
pub fn build_tree_matrix_strict(g: &Graph, trace: &RunTrace) -> Result<TreeMatrix> {
    if let Some(t) = trace.target {
        if !trace.is_settled(t) {
            return Err(Error::UnsettledVertex(t));
        }
    }
    build_tree_matrix(g, trace)
}

/// A route from the tree's source, with its summed length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Path {
    pub vertices: Vec<VertexId>,
    pub total: Weight,
}

impl Path {
    pub fn unreachable() -> Path {
        Path {
            vertices: Vec::new(),
            total: Weight::INFINITY,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

impl fmt::Display for Path {
    /// `1-2-3-6-8 (8)`, or `unreachable (INF)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vertices.is_empty() {
            return write!(f, "unreachable ({})", self.total);
        }
        let ids: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "{} ({})", ids.join("-"), self.total)
    }
}

/// Follows parent links from `target` back to the source.
pub fn extract_path(t: &TreeMatrix, target: VertexId) -> Result<Path> {
    VertexId::checked(target.get(), t.n())?;
    let mut reversed = vec![target];
    let mut total = Weight::ZERO;
    let mut at = target;
    while at != t.source {
        let Some((parent, w)) = t.parents[at.index()] else {
            return Ok(Path::unreachable());
        };
        // Parent links are acyclic by construction; the bound guards
        // against a hand-built matrix.
        if reversed.len() > t.n() {
            return Ok(Path::unreachable());
        }
        total = total.saturating_add(w);
        reversed.push(parent);
        at = parent;
    }
    reversed.reverse();
    Ok(Path {
        vertices: reversed,
        total,
    })
}
