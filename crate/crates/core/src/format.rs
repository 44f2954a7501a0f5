//! Text formats for graphs.
//!
//! Matrix format: optional `#` comment lines, then the vertex count `n`,
//! then `n * n` whitespace-separated entries in row-major order. Each entry
//! is a decimal literal or `INF` (any case).
//!
//! Edge-list format: optional `#` comment lines, a header line `n m`, then
//! `m` lines `u v w` with 1-based endpoints and a decimal weight.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph, VertexId};
use crate::weight::Entry;

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_count(line: usize, token: &str, what: &str) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| Error::malformed(line, format!("expected {what}, found `{token}`")))
}

fn parse_entry(line: usize, token: &str) -> Result<Entry> {
    token
        .parse::<Entry>()
        .map_err(|_| Error::malformed(line, format!("expected weight or INF, found `{token}`")))
}

/// Parses the matrix format into the unvalidated matrix.
pub fn parse_distance_matrix(text: &str) -> Result<DistanceMatrix> {
    let mut tokens = content_lines(text)
        .flat_map(|(line, l)| l.split_whitespace().map(move |t| (line, t)));
    let (line, first) = tokens
        .next()
        .ok_or_else(|| Error::malformed(1, "missing vertex count"))?;
    let n = parse_count(line, first, "vertex count")?;
    let mut entries = Vec::with_capacity(n * n);
    let mut last_line = line;
    for (line, token) in tokens {
        if entries.len() == n * n {
            return Err(Error::malformed(
                line,
                format!("unexpected token `{token}` after {} entries", n * n),
            ));
        }
        entries.push(parse_entry(line, token)?);
        last_line = line;
    }
    if entries.len() != n * n {
        return Err(Error::malformed(
            last_line,
            format!("expected {} entries, found {}", n * n, entries.len()),
        ));
    }
    Ok(DistanceMatrix::from_row_major(n, entries))
}

/// Parses and validates the matrix format.
pub fn parse_matrix_text(text: &str) -> Result<Graph> {
    Graph::try_from(parse_distance_matrix(text)?)
}

/// Parses and validates the edge-list format. Unlisted arcs are infinite.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (line, header) = lines
        .next()
        .ok_or_else(|| Error::malformed(1, "missing `n m` header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = fields[..] else {
        return Err(Error::malformed(line, format!("expected `n m`, found `{header}`")));
    };
    let n = parse_count(line, n, "vertex count")?;
    let m = parse_count(line, m, "edge count")?;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }

    let mut matrix = DistanceMatrix::new(n);
    let mut seen = BTreeSet::new();
    let mut read = 0;
    let mut last_line = line;
    for (line, l) in lines {
        if read == m {
            return Err(Error::malformed(line, format!("unexpected line `{l}` after {m} edges")));
        }
        let fields: Vec<&str> = l.split_whitespace().collect();
        let [u, v, w] = fields[..] else {
            return Err(Error::malformed(line, format!("expected `u v w`, found `{l}`")));
        };
        let u = parse_count(line, u, "source vertex")?;
        let v = parse_count(line, v, "target vertex")?;
        let w = parse_entry(line, w)?;
        VertexId::checked(u, n)?;
        VertexId::checked(v, n)?;
        if u == v {
            return Err(Error::SelfLoop { vertex: u });
        }
        if !seen.insert((u, v)) {
            return Err(Error::DuplicateEdge { from: u, to: v });
        }
        match w {
            Entry::Finite(micros) if micros <= 0 => {
                return Err(Error::NegativeOrZeroWeight { row: u, col: v })
            }
            Entry::Infinite => {
                return Err(Error::malformed(line, "edge weight must be finite"))
            }
            Entry::Finite(_) => matrix.set(u, v, w),
        }
        read += 1;
        last_line = line;
    }
    if read != m {
        return Err(Error::malformed(last_line, format!("expected {m} edges, found {read}")));
    }
    Graph::try_from(matrix)
}

/// Renders a matrix in the matrix format, one row per line.
pub fn write_matrix(m: &DistanceMatrix) -> String {
    let mut out = format!("{}\n", m.n());
    for row in 1..=m.n() {
        let cells: Vec<String> = (1..=m.n()).map(|col| m.get(row, col).to_string()).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}

/// Renders a graph in the matrix format.
pub fn write_graph(g: &Graph) -> String {
    write_matrix(&g.to_matrix())
}
