//! Small reference graphs shipped in the repository's `fixtures/` directory.

use crate::format::{parse_edge_list, parse_matrix_text};
use crate::graph::Graph;

pub const PAPER8_MAT: &str = include_str!("../../../fixtures/paper8.mat");
pub const PAPER8_TORA_MAT: &str = include_str!("../../../fixtures/paper8_tora.mat");
pub const TIE4_EDGES: &str = include_str!("../../../fixtures/tie4.edges");
pub const COUNTEREXAMPLE4_EDGES: &str = include_str!("../../../fixtures/counterexample4.edges");

/// The eight-city road network.
pub fn paper8() -> Graph {
    parse_matrix_text(PAPER8_MAT).expect("paper8.mat is valid")
}

/// `paper8` with the 1<->3 road lengthened from 2 to 3.
pub fn paper8_tora() -> Graph {
    parse_matrix_text(PAPER8_TORA_MAT).expect("paper8_tora.mat is valid")
}

/// 1->2 (1), 1->3 (1), 2->4 (1), 3->4 (2).
pub fn tie4() -> Graph {
    parse_edge_list(TIE4_EDGES).expect("tie4.edges is valid")
}

/// 1->2 (1), 1->3 (5), 2->4 (1), 4->3 (1). Defeats stable batching.
pub fn counterexample4() -> Graph {
    parse_edge_list(COUNTEREXAMPLE4_EDGES).expect("counterexample4.edges is valid")
}
