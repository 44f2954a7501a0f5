//! Label-setting single-source shortest paths over dense weighted digraphs.
//!
//! Three settlement strategies share one relaxation rule:
//!
//! - [`SelectionStrategy::SingleMin`] settles one minimum-label vertex per
//!   round (classic Dijkstra).
//! - [`SelectionStrategy::TieBatch`] settles every vertex tied at the minimum.
//! - [`SelectionStrategy::StableBatch`] additionally settles finite labels the
//!   last relaxation left unchanged. It is experimental and can return wrong
//!   distances; the harness always checks it against an oracle.
//!
//! Runs record every round, so traces, tree matrices and routes can be
//! rebuilt from a [`RunTrace`].

pub mod engine;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod graph;
pub mod harness;
pub mod labels;
pub mod oracle;
pub mod tree;
pub mod weight;

pub use engine::{run, run_classic, run_modified, Algorithm, BatchStrategy, RoundRecord, RunTrace};
pub use error::{Error, Result};
pub use format::{parse_distance_matrix, parse_edge_list, parse_matrix_text, write_graph, write_matrix};
pub use graph::{validate, DistanceMatrix, Graph, VertexId, Violation};
pub use harness::{compare, generate_graph, run_suite, ComparisonRecord, EndpointPolicy, GraphSpec, RunReport};
pub use labels::{init_labels, relax_step, select_permanent, Label, LabelState, SelectionStrategy, Status, VertexSet};
pub use oracle::{bellman_ford, enumerate_distances, enumerate_min_path, OracleMethod, OracleResult};
pub use tree::{build_tree_matrix, build_tree_matrix_strict, extract_path, Path, TreeMatrix};
pub use weight::{saturating_add, Entry, Weight};
