//! Simple undirected graphs with optional cover-vertex labels and edge-type
//! tags.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

/// Role of an edge in a tricirculant family: the `K` semi-edge lifts, the
/// spanning-tree (`0`) links, and the `R` and `S` edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum EdgeType {
    K,
    Zero,
    R,
    S,
}

impl fmt::Display for EdgeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeType::K => "K",
            EdgeType::Zero => "0",
            EdgeType::R => "R",
            EdgeType::S => "S",
        })
    }
}

/// Vertex `(x, i)` of a derived cover: base vertex `x`, group element `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoverVertex {
    pub fibre: usize,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
    tags: Option<Vec<Vec<EdgeType>>>,
    labels: Option<Vec<CoverVertex>>,
    fibre_names: Vec<String>,
}

impl SimpleGraph {
    /// Builds a graph from an edge list. Duplicate edges are merged; loops
    /// are rejected by returning `None`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Option<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a == b || a >= n || b >= n {
                return None;
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Some(SimpleGraph { adj, tags: None, labels: None, fibre_names: Vec::new() })
    }

    /// Builds a tagged graph. Neighbour lists must already be free of
    /// duplicates and self-references; `tags[v][j]` tags the edge to
    /// `adj[v][j]`.
    pub(crate) fn from_tagged_parts(
        adj: Vec<Vec<(usize, Option<EdgeType>)>>,
        labels: Option<Vec<CoverVertex>>,
        fibre_names: Vec<String>,
    ) -> Self {
        let tagged = adj.iter().all(|l| l.iter().all(|(_, t)| t.is_some()));
        let mut plain = Vec::with_capacity(adj.len());
        let mut tags = Vec::with_capacity(adj.len());
        for mut list in adj {
            list.sort_unstable_by_key(|&(w, _)| w);
            plain.push(list.iter().map(|&(w, _)| w).collect());
            tags.push(list.iter().map(|&(_, t)| t.unwrap_or(EdgeType::Zero)).collect());
        }
        SimpleGraph { adj: plain, tags: tagged.then_some(tags), labels, fibre_names }
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.num_edges());
        for (a, list) in self.adj.iter().enumerate() {
            for &b in list {
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn is_regular(&self, valence: usize) -> bool {
        self.adj.iter().all(|l| l.len() == valence)
    }

    pub fn is_cubic(&self) -> bool {
        self.is_regular(3)
    }

    pub fn has_tags(&self) -> bool {
        self.tags.is_some()
    }

    pub fn edge_type(&self, a: usize, b: usize) -> Option<EdgeType> {
        let tags = self.tags.as_ref()?;
        let j = self.adj[a].binary_search(&b).ok()?;
        Some(tags[a][j])
    }

    pub fn labels(&self) -> Option<&[CoverVertex]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<CoverVertex> {
        self.labels.as_ref().map(|l| l[v])
    }

    /// Vertex id of the cover vertex `(fibre, index)`, if this graph carries
    /// cover labels.
    pub fn cover_vertex(&self, fibre: usize, index: usize) -> Option<usize> {
        let labels = self.labels.as_ref()?;
        let modulus = labels.len() / self.fibre_names.len().max(1);
        let v = fibre * modulus + index % modulus;
        (labels.get(v) == Some(&CoverVertex { fibre, index: index % modulus })).then_some(v)
    }

    /// Fibre size of a cover graph (the voltage modulus).
    pub fn fibre_size(&self) -> Option<usize> {
        self.labels.as_ref().map(|l| l.len() / self.fibre_names.len().max(1))
    }

    pub fn fibre_names(&self) -> &[String] {
        &self.fibre_names
    }

    /// Human-readable vertex name, `u_3` for cover vertices and the id
    /// otherwise.
    pub fn vertex_name(&self, v: usize) -> String {
        match (self.label(v), self.fibre_names.is_empty()) {
            (Some(cv), false) => format!("{}_{}", self.fibre_names[cv.fibre], cv.index),
            _ => v.to_string(),
        }
    }

    /// Same vertex set, keeping only edges whose tag is in `types`. Labels
    /// and tags carry over.
    pub fn filter_edges(&self, types: &[EdgeType]) -> Option<SimpleGraph> {
        let tags = self.tags.as_ref()?;
        let adj = self
            .adj
            .iter()
            .zip(tags)
            .map(|(list, tl)| {
                list.iter().zip(tl).filter(|(_, t)| types.contains(t)).map(|(&w, &t)| (w, Some(t))).collect()
            })
            .collect();
        Some(SimpleGraph::from_tagged_parts(adj, self.labels.clone(), self.fibre_names.clone()))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.num_vertices();
        let mut side = vec![u8::MAX; n];
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Relabels vertex `v` as `perm[v]`. Tags and cover labels are dropped.
    pub fn relabel(&self, perm: &[usize]) -> SimpleGraph {
        let edges: Vec<_> = self.edges().into_iter().map(|(a, b)| (perm[a], perm[b])).collect();
        SimpleGraph::from_edges(self.num_vertices(), &edges).expect("relabelling keeps the graph simple")
    }

    /// Drops tags and labels, keeping only the adjacency.
    pub fn plain(&self) -> SimpleGraph {
        SimpleGraph { adj: self.adj.clone(), tags: None, labels: None, fibre_names: Vec::new() }
    }
}
