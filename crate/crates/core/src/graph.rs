//! Dense weighted digraphs over 1-based vertex ids.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::{Entry, Weight};

/// 1-based vertex identifier, matching the numbering used in input files.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(usize);

impl VertexId {
    /// Panics on 0; use [`VertexId::checked`] for untrusted input.
    pub fn new(id: usize) -> VertexId {
        assert!(id >= 1, "vertex ids are 1-based");
        VertexId(id)
    }

    /// Validates `id` against a graph of `n` vertices.
    pub fn checked(id: usize, n: usize) -> Result<VertexId> {
        if (1..=n).contains(&id) {
            Ok(VertexId(id))
        } else {
            Err(Error::VertexOutOfRange { vertex: id, n })
        }
    }

    pub fn from_index(index: usize) -> VertexId {
        VertexId(index + 1)
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// 0-based position in matrices and label vectors.
    pub fn index(self) -> usize {
        self.0 - 1
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An n×n matrix of raw entries as read from input, not yet validated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<Entry>,
}

impl DistanceMatrix {
    /// All off-diagonal entries infinite, diagonal zero.
    pub fn new(n: usize) -> DistanceMatrix {
        let mut entries = vec![Entry::Infinite; n * n];
        for i in 0..n {
            entries[i * n + i] = Entry::Finite(0);
        }
        DistanceMatrix { n, entries }
    }

    /// Row-major entries; `entries.len()` must be `n * n`.
    pub fn from_row_major(n: usize, entries: Vec<Entry>) -> DistanceMatrix {
        assert_eq!(entries.len(), n * n, "expected {n}x{n} entries");
        DistanceMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry (row, col), both 1-based.
    pub fn get(&self, row: usize, col: usize) -> Entry {
        self.entries[(row - 1) * self.n + (col - 1)]
    }

    pub fn set(&mut self, row: usize, col: usize, entry: Entry) {
        self.entries[(row - 1) * self.n + (col - 1)] = entry;
    }
}

/// A single broken graph invariant, with 1-based coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    EmptyGraph,
    DiagonalNonZero { vertex: usize },
    NegativeOrZeroWeight { row: usize, col: usize },
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Error {
        match v {
            Violation::EmptyGraph => Error::EmptyGraph,
            Violation::DiagonalNonZero { vertex } => Error::DiagonalNonZero { vertex },
            Violation::NegativeOrZeroWeight { row, col } => {
                Error::NegativeOrZeroWeight { row, col }
            }
        }
    }
}

/// Every invariant violation in `m`, in row-major order. Empty means valid.
pub fn validate(m: &DistanceMatrix) -> Vec<Violation> {
    let mut violations = Vec::new();
    if m.n == 0 {
        violations.push(Violation::EmptyGraph);
    }
    for row in 1..=m.n {
        for col in 1..=m.n {
            match (row == col, m.get(row, col)) {
                (true, Entry::Finite(0)) => {}
                (true, _) => violations.push(Violation::DiagonalNonZero { vertex: row }),
                (false, Entry::Finite(v)) if v <= 0 => {
                    violations.push(Violation::NegativeOrZeroWeight { row, col })
                }
                (false, _) => {}
            }
        }
    }
    violations
}

/// A validated weighted digraph: zero diagonal, every off-diagonal entry
/// either [`Weight::INFINITY`] or strictly positive. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    weights: Vec<Weight>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Result<Graph> {
        Graph::try_from(DistanceMatrix::new(n))
    }

    /// Builds from `(from, to, weight)` arcs in whole units.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize, u64)]) -> Result<Graph> {
        let mut m = DistanceMatrix::new(n);
        for &(u, v, w) in arcs {
            VertexId::checked(u, n)?;
            VertexId::checked(v, n)?;
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            m.set(u, v, Weight::from_units(w).into());
        }
        Graph::try_from(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Weight of arc `from -> to`; zero on the diagonal.
    pub fn weight(&self, from: VertexId, to: VertexId) -> Weight {
        self.weights[from.index() * self.n + to.index()]
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.n).map(VertexId::from_index)
    }

    /// Finite out-arcs of `from`, excluding the diagonal.
    pub fn out_arcs(&self, from: VertexId) -> impl Iterator<Item = (VertexId, Weight)> + '_ {
        let row = &self.weights[from.index() * self.n..(from.index() + 1) * self.n];
        row.iter()
            .enumerate()
            .filter(move |&(j, w)| j != from.index() && w.is_finite())
            .map(|(j, &w)| (VertexId::from_index(j), w))
    }

    pub fn arc_count(&self) -> usize {
        self.vertices().map(|v| self.out_arcs(v).count()).sum()
    }

    pub fn vertex(&self, id: usize) -> Result<VertexId> {
        VertexId::checked(id, self.n)
    }

    pub fn to_matrix(&self) -> DistanceMatrix {
        DistanceMatrix::from_row_major(self.n, self.weights.iter().map(|&w| w.into()).collect())
    }

    /// Re-checks the graph invariants; always empty for a constructed graph.
    pub fn validate(&self) -> Vec<Violation> {
        validate(&self.to_matrix())
    }
}

impl TryFrom<DistanceMatrix> for Graph {
    type Error = Error;

    /// Fails with the first violation reported by [`validate`].
    fn try_from(m: DistanceMatrix) -> Result<Graph> {
        if let Some(&v) = validate(&m).first() {
            return Err(v.into());
        }
        let weights = m
            .entries
            .iter()
            .map(|e| e.to_weight().expect("validated entries are non-negative"))
            .collect();
        Ok(Graph { n: m.n, weights })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Graph(n={})", self.n)?;
        for row in self.weights.chunks(self.n) {
            let cells: Vec<String> = row.iter().map(|w| w.to_string()).collect();
            writeln!(f, "  {}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_bounds() {
        assert!(VertexId::checked(1, 1).is_ok());
        assert_eq!(
            VertexId::checked(9, 8),
            Err(Error::VertexOutOfRange { vertex: 9, n: 8 })
        );
        assert!(VertexId::checked(0, 8).is_err());
        assert_eq!(VertexId::new(3).index(), 2);
    }

    #[test]
    fn validate_reports_every_violation() {
        let mut m = DistanceMatrix::new(3);
        m.set(2, 3, Entry::units(-1));
        m.set(3, 3, Entry::units(2));
        m.set(1, 2, Entry::Finite(0));
        assert_eq!(
            validate(&m),
            vec![
                Violation::NegativeOrZeroWeight { row: 1, col: 2 },
                Violation::NegativeOrZeroWeight { row: 2, col: 3 },
                Violation::DiagonalNonZero { vertex: 3 },
            ]
        );
    }

    #[test]
    fn diagonal_infinity_is_a_violation() {
        let mut m = DistanceMatrix::new(2);
        m.set(1, 1, Entry::Infinite);
        assert_eq!(validate(&m), vec![Violation::DiagonalNonZero { vertex: 1 }]);
    }

    #[test]
    fn empty_matrix_is_invalid() {
        assert_eq!(validate(&DistanceMatrix::new(0)), vec![Violation::EmptyGraph]);
        assert_eq!(Graph::edgeless(0), Err(Error::EmptyGraph));
    }

    #[test]
    fn arcs_and_lookup() {
        let g = Graph::from_arcs(3, &[(1, 2, 4), (2, 3, 1)]).unwrap();
        let v = |i| VertexId::new(i);
        assert_eq!(g.weight(v(1), v(2)), Weight::from_units(4));
        assert_eq!(g.weight(v(2), v(1)), Weight::INFINITY);
        assert_eq!(g.weight(v(3), v(3)), Weight::ZERO);
        assert_eq!(g.out_arcs(v(1)).collect::<Vec<_>>(), vec![(v(2), Weight::from_units(4))]);
        assert_eq!(g.arc_count(), 2);
        assert!(g.validate().is_empty());
        assert_eq!(
            Graph::from_arcs(2, &[(1, 1, 1)]),
            Err(Error::SelfLoop { vertex: 1 })
        );
        assert_eq!(
            Graph::from_arcs(2, &[(1, 2, 0)]),
            Err(Error::NegativeOrZeroWeight { row: 1, col: 2 })
        );
    }
}
