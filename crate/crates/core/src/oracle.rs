//! Ground-truth distances computed without labels: iterative edge sweeps and
//! brute-force enumeration of simple paths.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::tree::Path;
use crate::weight::Weight;

/// Largest graph [`enumerate_min_path`] accepts.
pub const ENUMERATION_LIMIT: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleMethod {
    BellmanFord,
    Enumeration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    pub distances: Vec<Weight>,
    pub method: OracleMethod,
}

/// Single-source distances by at most `n - 1` sweeps over every arc.
pub fn bellman_ford(g: &Graph, source: VertexId) -> Result<OracleResult> {
    g.vertex(source.get())?;
    let n = g.n();
    let mut dist = vec![Weight::INFINITY; n];
    dist[source.index()] = Weight::ZERO;
    for _ in 1..n {
        let mut updated = false;
        for u in g.vertices() {
            let du = dist[u.index()];
            if du.is_infinite() {
                continue;
            }
            for (v, w) in g.out_arcs(u) {
                let candidate = du.saturating_add(w);
                if candidate < dist[v.index()] {
                    dist[v.index()] = candidate;
                    updated = true;
                }
            }
        }
        if !updated {
            break;
        }
    }
    Ok(OracleResult {
        distances: dist,
        method: OracleMethod::BellmanFord,
    })
}

/// Depth-first walk over every simple path starting at `source`, calling
/// `visit` with each path (as a vertex stack) and its length. Neighbours are
/// explored in increasing id order.
fn for_each_simple_path(g: &Graph, source: VertexId, visit: &mut dyn FnMut(&[VertexId], Weight)) {
    fn walk(
        g: &Graph,
        stack: &mut Vec<VertexId>,
        on_path: &mut [bool],
        length: Weight,
        visit: &mut dyn FnMut(&[VertexId], Weight),
    ) {
        visit(stack, length);
        let at = *stack.last().expect("stack starts with the source");
        for (next, w) in g.out_arcs(at) {
            if on_path[next.index()] {
                continue;
            }
            on_path[next.index()] = true;
            stack.push(next);
            walk(g, stack, on_path, length.saturating_add(w), visit);
            stack.pop();
            on_path[next.index()] = false;
        }
    }

    let mut on_path = vec![false; g.n()];
    on_path[source.index()] = true;
    walk(g, &mut vec![source], &mut on_path, Weight::ZERO, visit);
}

fn check_enumerable(g: &Graph, source: VertexId) -> Result<()> {
    if g.n() > ENUMERATION_LIMIT {
        return Err(Error::GraphTooLarge {
            n: g.n(),
            max: ENUMERATION_LIMIT,
        });
    }
    g.vertex(source.get())?;
    Ok(())
}

/// Minimum length over every simple path `source -> target`, with the first
/// minimal path found in depth-first, lowest-id-first order as witness.
/// Returns `(INFINITY, None)` when no path exists.
pub fn enumerate_min_path(
    g: &Graph,
    source: VertexId,
    target: VertexId,
) -> Result<(Weight, Option<Path>)> {
    check_enumerable(g, source)?;
    g.vertex(target.get())?;
    let mut best: Option<Path> = None;
    for_each_simple_path(g, source, &mut |stack, length| {
        if stack.last() == Some(&target) && best.as_ref().is_none_or(|b| length < b.total) {
            best = Some(Path {
                vertices: stack.to_vec(),
                total: length,
            });
        }
    });
    Ok(match best {
        Some(path) => (path.total, Some(path)),
        None => (Weight::INFINITY, None),
    })
}

/// Minimum simple-path length to every vertex, from a single exhaustive walk.
pub fn enumerate_distances(g: &Graph, source: VertexId) -> Result<OracleResult> {
    check_enumerable(g, source)?;
    let mut distances = vec![Weight::INFINITY; g.n()];
    for_each_simple_path(g, source, &mut |stack, length| {
        let end = stack.last().expect("non-empty path").index();
        distances[end] = distances[end].min(length);
    });
    Ok(OracleResult {
        distances,
        method: OracleMethod::Enumeration,
    })
}
