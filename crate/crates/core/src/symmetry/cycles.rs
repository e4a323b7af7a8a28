//! Girth and bounded cycle counting.
//!
//! `cycles_through_edge` counts simple paths between the endpoints, so each
//! `c`-cycle through the edge is seen exactly once. `count_cycles` is an
//! independent enumeration anchored at each cycle's minimum vertex.

use std::collections::VecDeque;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::SymmetryError;
use crate::graph::SimpleGraph;

/// Sorted triple of `c`-cycle counts through the three edges at a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CycleSignature {
    pub c: usize,
    pub triple: [u64; 3],
}

impl fmt::Display for CycleSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.triple;
        write!(f, "({a},{b},{c})")
    }
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &SimpleGraph) -> Option<usize> {
    let n = g.num_vertices();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            if 2 * dist[x] + 1 >= best {
                break;
            }
            for &y in g.neighbours(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    best = best.min(dist[x] + dist[y] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

fn bfs_within(g: &SimpleGraph, from: usize, limit: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.num_vertices()];
    dist[from] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if dist[x] >= limit {
            continue;
        }
        for &y in g.neighbours(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

/// Number of `c`-cycles through the edge `{a, b}` (`c >= 3`).
pub fn cycles_through_edge(g: &SimpleGraph, (a, b): (usize, usize), c: usize) -> u64 {
    if c < 3 || !g.has_edge(a, b) {
        return 0;
    }
    let dist = bfs_within(g, a, c);
    let mut on_path = vec![false; g.num_vertices()];
    on_path[a] = true;
    on_path[b] = true;
    // paths b -> a of length c - 1 avoiding the edge itself
    fn extend(g: &SimpleGraph, x: usize, left: usize, target: usize, dist: &[usize], on_path: &mut [bool]) -> u64 {
        if left == 1 {
            return u64::from(g.has_edge(x, target));
        }
        let mut total = 0;
        for &y in g.neighbours(x) {
            if on_path[y] || dist[y] > left - 1 {
                continue;
            }
            on_path[y] = true;
            total += extend(g, y, left - 1, target, dist, on_path);
            on_path[y] = false;
        }
        total
    }
    extend(g, b, c - 1, a, &dist, &mut on_path)
}

/// `cycles_through_edge` for every edge of `g.edges()`, in that order.
pub fn edge_cycle_counts(g: &SimpleGraph, c: usize) -> Vec<u64> {
    g.edges().par_iter().map(|&e| cycles_through_edge(g, e, c)).collect()
}

/// Total number of `c`-cycles, each counted once: anchored at its minimum
/// vertex and traversed in the direction whose second vertex is smaller.
pub fn count_cycles(g: &SimpleGraph, c: usize) -> u64 {
    if c < 3 {
        return 0;
    }
    (0..g.num_vertices())
        .into_par_iter()
        .map(|s| {
            let mut path = vec![s];
            let mut on_path = vec![false; g.num_vertices()];
            on_path[s] = true;
            fn grow(g: &SimpleGraph, c: usize, path: &mut Vec<usize>, on_path: &mut [bool]) -> u64 {
                let s = path[0];
                let x = *path.last().unwrap();
                if path.len() == c {
                    return u64::from(g.has_edge(x, s) && path[1] < path[c - 1]);
                }
                let mut total = 0;
                for &y in g.neighbours(x) {
                    if y > s && !on_path[y] {
                        on_path[y] = true;
                        path.push(y);
                        total += grow(g, c, path, on_path);
                        path.pop();
                        on_path[y] = false;
                    }
                }
                total
            }
            grow(g, c, &mut path, &mut on_path)
        })
        .sum()
}

/// Number of `c`-cycles through a vertex.
pub fn cycles_through_vertex(g: &SimpleGraph, v: usize, c: usize) -> u64 {
    g.neighbours(v).iter().map(|&w| cycles_through_edge(g, (v, w), c)).sum::<u64>() / 2
}

/// The `c`-signature of a vertex of valence 3.
pub fn c_signature(g: &SimpleGraph, v: usize, c: usize) -> Result<CycleSignature, SymmetryError> {
    let nb = g.neighbours(v);
    if nb.len() != 3 {
        return Err(SymmetryError::NotCubic(v));
    }
    let mut triple = [0; 3];
    for (slot, &w) in triple.iter_mut().zip(nb) {
        *slot = cycles_through_edge(g, (v, w), c);
    }
    triple.sort_unstable();
    Ok(CycleSignature { c, triple })
}

/// Signatures of all vertices, computed from one pass over the edges.
pub fn signatures(g: &SimpleGraph, c: usize) -> Result<Vec<CycleSignature>, SymmetryError> {
    if let Some(v) = (0..g.num_vertices()).find(|&v| g.degree(v) != 3) {
        return Err(SymmetryError::NotCubic(v));
    }
    let edges = g.edges();
    let counts = edge_cycle_counts(g, c);
    let mut at: Vec<Vec<u64>> = vec![Vec::with_capacity(3); g.num_vertices()];
    for (&(a, b), &k) in edges.iter().zip(&counts) {
        at[a].push(k);
        at[b].push(k);
    }
    Ok(at
        .into_iter()
        .map(|mut t| {
            t.sort_unstable();
            CycleSignature { c, triple: [t[0], t[1], t[2]] }
        })
        .collect())
}

/// All vertices share one `c`-signature.
pub fn is_c_cycle_regular(g: &SimpleGraph, c: usize) -> Result<bool, SymmetryError> {
    let sigs = signatures(g, c)?;
    Ok(sigs.windows(2).all(|w| w[0] == w[1]))
}

/// Every vertex lies on the same number of `c`-cycles.
pub fn is_c_vertex_regular(g: &SimpleGraph, c: usize) -> bool {
    let counts = vertex_cycle_counts(g, c);
    counts.windows(2).all(|w| w[0] == w[1])
}

/// Number of `c`-cycles through each vertex.
pub fn vertex_cycle_counts(g: &SimpleGraph, c: usize) -> Vec<u64> {
    let mut per_vertex = vec![0u64; g.num_vertices()];
    for (&(a, b), &k) in g.edges().iter().zip(&edge_cycle_counts(g, c)) {
        per_vertex[a] += k;
        per_vertex[b] += k;
    }
    per_vertex.into_iter().map(|x| x / 2).collect()
}
