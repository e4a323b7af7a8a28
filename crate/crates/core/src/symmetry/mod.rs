//! Automorphism groups, canonical forms, transitivity, cycle invariants and
//! k-circulant detection.

mod cycles;
mod perm;
mod refine;
mod search;

use serde::Serialize;
use thiserror::Error;

pub use cycles::{
    c_signature, count_cycles, cycles_through_edge, cycles_through_vertex, edge_cycle_counts, girth, is_c_cycle_regular,
    is_c_vertex_regular, signatures, vertex_cycle_counts, CycleSignature,
};
pub use perm::{OrbitSet, Permutation};
pub use search::{automorphism_group, canonical, AutGroup, Canonical};

use crate::graph::{EdgeType, SimpleGraph};

/// Largest graph the search engine accepts.
pub const MAX_VERTICES: usize = 600;

/// Default cap on group elements enumerated by [`find_k_circulant`].
pub const DEFAULT_ELEMENT_CAP: u128 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymmetryError {
    #[error("graph has {n} vertices, above the limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("vertex {0} does not have valence 3")]
    NotCubic(usize),
    #[error("graph carries no edge-type tags")]
    MissingTags,
    #[error("automorphism group has {} elements, above the enumeration cap {cap}", order.map_or("more than 2^128".to_string(), |o| o.to_string()))]
    GroupTooLarge { order: Option<u128>, cap: u128 },
}

pub fn is_vertex_transitive(g: &SimpleGraph) -> Result<bool, SymmetryError> {
    Ok(automorphism_group(g)?.is_vertex_transitive())
}

pub fn is_arc_transitive(g: &SimpleGraph) -> Result<bool, SymmetryError> {
    Ok(automorphism_group(g)?.is_arc_transitive(g))
}

/// Orbits on `g.edges()` (indices into that list).
pub fn edge_orbits(g: &SimpleGraph) -> Result<OrbitSet, SymmetryError> {
    Ok(automorphism_group(g)?.edge_orbits(g))
}

/// graph6 encoding of the canonically relabelled graph.
pub fn canonical_form(g: &SimpleGraph) -> Result<Vec<u8>, SymmetryError> {
    Ok(crate::io::encode_graph6(&canonical(g)?.graph).into_bytes())
}

pub fn are_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> Result<bool, SymmetryError> {
    Ok(isomorphism(g, h)?.is_some())
}

/// An explicit isomorphism `g -> h` as a vertex map, if one exists.
pub fn isomorphism(g: &SimpleGraph, h: &SimpleGraph) -> Result<Option<Permutation>, SymmetryError> {
    if g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges() {
        return Ok(None);
    }
    let (cg, ch) = (canonical(g)?, canonical(h)?);
    if cg.graph != ch.graph {
        return Ok(None);
    }
    let mut from_canon = vec![0; h.num_vertices()];
    for (v, &l) in ch.labelling.iter().enumerate() {
        from_canon[l] = v;
    }
    let map = cg.labelling.iter().map(|&l| from_canon[l]).collect();
    Ok(Permutation::from_images(map))
}

/// A semiregular automorphism with exactly `m` vertex orbits, i.e. of order
/// `|V|/m` with all cycles of that length, using the default element cap.
pub fn find_k_circulant(g: &SimpleGraph, m: usize) -> Result<Option<Permutation>, SymmetryError> {
    find_k_circulant_with_cap(g, m, DEFAULT_ELEMENT_CAP)
}

pub fn find_k_circulant_with_cap(g: &SimpleGraph, m: usize, cap: u128) -> Result<Option<Permutation>, SymmetryError> {
    let n = g.num_vertices();
    if m == 0 || n % m != 0 {
        return Ok(None);
    }
    let len = n / m;
    let group = automorphism_group(g)?;
    let mut found = None;
    group.for_each_element(cap, |p| {
        if has_uniform_cycles(p, len) {
            found = Some(p.clone());
            false
        } else {
            true
        }
    })?;
    Ok(found)
}

fn has_uniform_cycles(p: &Permutation, len: usize) -> bool {
    // cheap rejection on the cycle of 0 before the full check
    let mut x = p.apply(0);
    let mut l = 1;
    while x != 0 {
        x = p.apply(x);
        l += 1;
        if l > len {
            return false;
        }
    }
    l == len && p.cycles().iter().all(|c| c.len() == len)
}

/// Shape of a spanning subgraph: its non-trivial components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgraphSummary {
    /// `(vertex count, is a cycle)` for every component with an edge,
    /// ordered by smallest vertex.
    pub components: Vec<(usize, bool)>,
    pub isolated: usize,
}

impl SubgraphSummary {
    /// Lengths of the components that are cycles, or `None` if some
    /// non-trivial component is not a cycle.
    pub fn cycle_lengths(&self) -> Option<Vec<usize>> {
        self.components.iter().map(|&(len, cyc)| cyc.then_some(len)).collect()
    }
}

/// The spanning subgraph keeping edges of the given types, with a summary of
/// its components.
pub fn edge_type_subgraph(g: &SimpleGraph, types: &[EdgeType]) -> Result<(SimpleGraph, SubgraphSummary), SymmetryError> {
    let sub = g.filter_edges(types).ok_or(SymmetryError::MissingTags)?;
    let mut components = Vec::new();
    let mut isolated = 0;
    for comp in sub.components() {
        if comp.len() == 1 {
            isolated += 1;
            continue;
        }
        let is_cycle = comp.iter().all(|&v| sub.degree(v) == 2);
        components.push((comp.len(), is_cycle));
    }
    Ok((sub, SubgraphSummary { components, isolated }))
}
