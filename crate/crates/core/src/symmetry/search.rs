//! Individualisation-refinement search for automorphism groups and
//! canonical labellings.
//!
//! The first path of the search tree (always individualising the smallest
//! vertex of the first non-singleton cell) fixes a base `b_1..b_d`. Levels are
//! processed bottom-up: at level `j` every vertex of the target cell that is
//! not yet known to be in the orbit of `b_{j+1}` is tried, and the subtree is
//! searched for a leaf equivalent to the first leaf. Generators found at level
//! `j` fix `b_1..b_j`, so the generators of level `>= j` generate the
//! pointwise stabiliser `G_j` and `|G| = prod |b_{j+1}^{G_j}|`.

use std::cmp::Ordering;
use std::collections::HashMap;

use super::refine::{Partition, Refiner};
use super::{OrbitSet, Permutation, SymmetryError, MAX_VERTICES};
use crate::graph::SimpleGraph;

/// Automorphism group of a graph, as a generating set with a base and the
/// matching stabiliser chain.
#[derive(Debug, Clone)]
pub struct AutGroup {
    n: usize,
    generators: Vec<Permutation>,
    levels: Vec<usize>,
    base: Vec<usize>,
    orbit_sizes: Vec<usize>,
}

impl AutGroup {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    /// `|b_{j+1}^{G_j}|` for every level `j`.
    pub fn basic_orbit_sizes(&self) -> &[usize] {
        &self.orbit_sizes
    }

    /// Generators of the pointwise stabiliser of `base[..level]`.
    pub fn stabilizer_generators(&self, level: usize) -> Vec<Permutation> {
        self.generators.iter().zip(&self.levels).filter(|(_, &l)| l >= level).map(|(g, _)| g.clone()).collect()
    }

    /// Group order, or `None` if it overflows `u128`.
    pub fn order(&self) -> Option<u128> {
        self.orbit_sizes.iter().try_fold(1u128, |acc, &s| acc.checked_mul(s as u128))
    }

    pub fn vertex_orbits(&self) -> OrbitSet {
        OrbitSet::from_generators(self.n, &self.generators)
    }

    pub fn is_vertex_transitive(&self) -> bool {
        self.vertex_orbits().len() <= 1
    }

    /// Orbits on arcs; arc `i` is the `i`-th entry of `arcs(g)`.
    pub fn arc_orbits(&self, g: &SimpleGraph) -> OrbitSet {
        let arcs = arcs(g);
        let index: HashMap<(usize, usize), usize> = arcs.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        OrbitSet::from_action(arcs.len(), self.generators.len(), |k, i| {
            let (a, b) = arcs[i];
            index[&(self.generators[k].apply(a), self.generators[k].apply(b))]
        })
    }

    /// Orbits on edges; edge `i` is the `i`-th entry of `g.edges()`.
    pub fn edge_orbits(&self, g: &SimpleGraph) -> OrbitSet {
        let edges = g.edges();
        let index: HashMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        OrbitSet::from_action(edges.len(), self.generators.len(), |k, i| {
            let (a, b) = edges[i];
            let (x, y) = (self.generators[k].apply(a), self.generators[k].apply(b));
            index[&(x.min(y), x.max(y))]
        })
    }

    pub fn is_arc_transitive(&self, g: &SimpleGraph) -> bool {
        g.num_edges() > 0 && (0..g.num_vertices()).all(|v| g.degree(v) > 0) && self.arc_orbits(g).len() == 1
    }

    /// Schreier transversals: for each level, `(point, u)` with
    /// `u(base[level]) = point`, in BFS order from the base point.
    pub fn transversals(&self) -> Vec<Vec<(usize, Permutation)>> {
        (0..self.base.len())
            .map(|level| {
                let gens = self.stabilizer_generators(level);
                let b = self.base[level];
                let mut reps = vec![(b, Permutation::identity(self.n))];
                let mut seen = vec![false; self.n];
                seen[b] = true;
                let mut i = 0;
                while i < reps.len() {
                    for g in &gens {
                        let y = g.apply(reps[i].0);
                        if !seen[y] {
                            seen[y] = true;
                            let u = g.compose(&reps[i].1);
                            reps.push((y, u));
                        }
                    }
                    i += 1;
                }
                reps
            })
            .collect()
    }

    /// Calls `f` on every group element, each exactly once, in a fixed order.
    /// Stops early when `f` returns `false`. Fails without enumerating when
    /// the group has more than `cap` elements.
    pub fn for_each_element(&self, cap: u128, mut f: impl FnMut(&Permutation) -> bool) -> Result<(), SymmetryError> {
        match self.order() {
            Some(order) if order <= cap => {}
            order => return Err(SymmetryError::GroupTooLarge { order, cap }),
        }
        let transversals = self.transversals();
        fn walk(ts: &[Vec<(usize, Permutation)>], acc: &Permutation, f: &mut dyn FnMut(&Permutation) -> bool) -> bool {
            match ts.split_first() {
                None => f(acc),
                Some((level, rest)) => level.iter().all(|(_, u)| walk(rest, &acc.compose(u), f)),
            }
        }
        walk(&transversals, &Permutation::identity(self.n), &mut f);
        Ok(())
    }
}

fn arcs(g: &SimpleGraph) -> Vec<(usize, usize)> {
    (0..g.num_vertices()).flat_map(|a| g.neighbours(a).iter().map(move |&b| (a, b))).collect()
}

/// Result of a full search: the group plus a canonical labelling.
#[derive(Debug, Clone)]
pub struct Canonical {
    pub group: AutGroup,
    /// `labelling[v]` is the canonical label of vertex `v`.
    pub labelling: Vec<usize>,
    /// The canonically relabelled graph.
    pub graph: SimpleGraph,
}

struct Search<'a> {
    g: &'a SimpleGraph,
    refiner: Refiner<'a>,
    path: Vec<Partition>,
    traces: Vec<u64>,
    base: Vec<usize>,
    first_leaf: Vec<usize>,
    generators: Vec<Permutation>,
    levels: Vec<usize>,
}

pub(crate) fn check_size(g: &SimpleGraph) -> Result<(), SymmetryError> {
    if g.num_vertices() > MAX_VERTICES {
        return Err(SymmetryError::TooLarge { n: g.num_vertices(), limit: MAX_VERTICES });
    }
    Ok(())
}

impl<'a> Search<'a> {
    fn new(g: &'a SimpleGraph) -> Self {
        let mut refiner = Refiner::new(g.adjacency());
        let (mut p, t0) = refiner.root();
        let mut path = vec![p.clone()];
        let mut traces = vec![t0];
        let mut base = Vec::new();
        while let Some(cell) = p.target_cell() {
            let v = p.cell_vertices(cell)[0];
            base.push(v);
            traces.push(refiner.individualize(&mut p, v));
            path.push(p.clone());
        }
        Search { g, refiner, path, traces, base, first_leaf: p.lab, generators: Vec::new(), levels: Vec::new() }
    }

    fn orbits_from(&self, level: usize) -> OrbitSet {
        let gens: Vec<_> = self.generators.iter().zip(&self.levels).filter(|(_, &l)| l >= level).map(|(g, _)| g.clone()).collect();
        OrbitSet::from_generators(self.g.num_vertices(), &gens)
    }

    fn group(mut self) -> (AutGroup, Self) {
        let d = self.base.len();
        let mut orbit_sizes = vec![1; d];
        for j in (0..d).rev() {
            let cell = self.path[j].target_cell().expect("non-leaf on first path");
            let v = self.base[j];
            let mut orbits = self.orbits_from(j);
            let mut failed: Vec<usize> = Vec::new();
            for x in self.path[j].cell_vertices(cell) {
                if orbits.same_orbit(v, x) || failed.iter().any(|&y| orbits.same_orbit(x, y)) {
                    continue;
                }
                let p = self.path[j].clone();
                match self.find_equivalent(p, x, j) {
                    Some(perm) => {
                        self.generators.push(perm);
                        self.levels.push(j);
                        orbits = self.orbits_from(j);
                    }
                    None => failed.push(x),
                }
            }
            orbit_sizes[j] = orbits.blocks()[orbits.block_of(v)].len();
        }
        let group = AutGroup {
            n: self.g.num_vertices(),
            generators: self.generators.clone(),
            levels: self.levels.clone(),
            base: self.base.clone(),
            orbit_sizes,
        };
        (group, self)
    }

    /// Searches below `p` with `x` individualised at `level` for a leaf whose
    /// traces match the first path and whose labelling is an automorphism.
    fn find_equivalent(&mut self, mut p: Partition, x: usize, level: usize) -> Option<Permutation> {
        if self.refiner.individualize(&mut p, x) != self.traces[level + 1] {
            return None;
        }
        match p.target_cell() {
            None => {
                let mut image = vec![0; p.lab.len()];
                for (i, &a) in self.first_leaf.iter().enumerate() {
                    image[a] = p.lab[i];
                }
                let perm = Permutation::from_images(image).expect("leaves are bijections");
                perm.is_automorphism(self.g).then_some(perm)
            }
            Some(_) if level + 1 >= self.base.len() => None,
            Some(cell) => {
                for y in p.cell_vertices(cell) {
                    if let Some(found) = self.find_equivalent(p.clone(), y, level + 1) {
                        return Some(found);
                    }
                }
                None
            }
        }
    }
}

struct Best {
    traces: Vec<u64>,
    edges: Vec<(usize, usize)>,
    lab: Vec<usize>,
}

struct CanonSearch<'s, 'a> {
    search: &'s mut Search<'a>,
    group: &'s AutGroup,
    best: Best,
}

fn relabelled_edges(g: &SimpleGraph, p: &Partition) -> Vec<(usize, usize)> {
    let mut edges: Vec<_> = g
        .edges()
        .into_iter()
        .map(|(a, b)| {
            let (x, y) = (p.position(a), p.position(b));
            (x.min(y), x.max(y))
        })
        .collect();
    edges.sort_unstable();
    edges
}

impl CanonSearch<'_, '_> {
    fn visit(&mut self, p: Partition, traces: &mut Vec<u64>, on_first_path: bool) {
        let depth = traces.len();
        let prefix = &self.best.traces[..depth.min(self.best.traces.len())];
        if traces[..prefix.len()].cmp(prefix) == Ordering::Less {
            return;
        }
        let Some(cell) = p.target_cell() else {
            let edges = relabelled_edges(self.search.g, &p);
            if (traces.as_slice(), &edges).cmp(&(self.best.traces.as_slice(), &self.best.edges)) == Ordering::Greater {
                self.best = Best { traces: traces.clone(), edges, lab: p.lab.clone() };
            }
            return;
        };
        let level = depth - 1;
        let mut children = p.cell_vertices(cell);
        if on_first_path {
            // one child per orbit of the stabiliser of the path so far, the
            // first-path child first
            let orbits = OrbitSet::from_generators(p.lab.len(), &self.group.stabilizer_generators(level));
            let b = self.search.base[level];
            children.retain(|&x| x != b);
            children.insert(0, b);
            let mut seen = Vec::new();
            children.retain(|&x| {
                let o = orbits.block_of(x);
                if seen.contains(&o) {
                    false
                } else {
                    seen.push(o);
                    true
                }
            });
        }
        for x in children {
            let mut q = p.clone();
            let t = self.search.refiner.individualize(&mut q, x);
            traces.push(t);
            let first = on_first_path && x == self.search.base[level];
            self.visit(q, traces, first);
            traces.pop();
        }
    }
}

/// Automorphism group of `g`.
pub fn automorphism_group(g: &SimpleGraph) -> Result<AutGroup, SymmetryError> {
    check_size(g)?;
    Ok(Search::new(g).group().0)
}

/// Automorphism group together with a canonical labelling.
pub fn canonical(g: &SimpleGraph) -> Result<Canonical, SymmetryError> {
    check_size(g)?;
    let (group, mut search) = Search::new(g).group();
    let first = search.path.last().unwrap().clone();
    let best = Best { traces: search.traces.clone(), edges: relabelled_edges(g, &first), lab: search.first_leaf.clone() };
    let root = search.path[0].clone();
    let mut traces = vec![search.traces[0]];
    let mut cs = CanonSearch { search: &mut search, group: &group, best };
    cs.visit(root, &mut traces, true);
    let Best { edges, lab, .. } = cs.best;
    let mut labelling = vec![0; g.num_vertices()];
    for (i, &v) in lab.iter().enumerate() {
        labelling[v] = i;
    }
    let graph = SimpleGraph::from_edges(g.num_vertices(), &edges).expect("relabelling keeps the graph simple");
    Ok(Canonical { group, labelling, graph })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    fn petersen() -> SimpleGraph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        SimpleGraph::from_edges(10, &e).unwrap()
    }

    #[test]
    fn cycle_groups_are_dihedral() {
        for n in 3..12 {
            let a = automorphism_group(&cycle(n)).unwrap();
            assert_eq!(a.order(), Some(2 * n as u128), "C_{n}");
            assert!(a.generators().iter().all(|p| p.is_automorphism(&cycle(n))));
        }
    }

    #[test]
    fn petersen_group() {
        let g = petersen();
        let a = automorphism_group(&g).unwrap();
        assert_eq!(a.order(), Some(120));
        assert!(a.is_vertex_transitive());
        assert!(a.is_arc_transitive(&g));
    }

    #[test]
    fn complete_graph_order() {
        let mut e = Vec::new();
        for i in 0..6 {
            for j in i + 1..6 {
                e.push((i, j));
            }
        }
        let g = SimpleGraph::from_edges(6, &e).unwrap();
        assert_eq!(automorphism_group(&g).unwrap().order(), Some(720));
    }

    #[test]
    fn element_enumeration_matches_order() {
        let g = petersen();
        let a = automorphism_group(&g).unwrap();
        let mut seen = std::collections::HashSet::new();
        a.for_each_element(1000, |p| {
            assert!(p.is_automorphism(&g));
            seen.insert(p.clone());
            true
        })
        .unwrap();
        assert_eq!(seen.len(), 120);
        assert!(matches!(a.for_each_element(100, |_| true), Err(SymmetryError::GroupTooLarge { .. })));
    }

    #[test]
    fn canonical_graph_is_relabelling_invariant() {
        let g = petersen();
        let c = canonical(&g).unwrap();
        let perm = [7, 2, 9, 0, 4, 1, 8, 3, 6, 5];
        let h = g.relabel(&perm);
        assert_eq!(canonical(&h).unwrap().graph, c.graph);
        assert_eq!(g.relabel(&c.labelling), c.graph);
    }

    #[test]
    fn empty_and_tiny_graphs() {
        let e = SimpleGraph::from_edges(0, &[]).unwrap();
        assert_eq!(automorphism_group(&e).unwrap().order(), Some(1));
        let one = SimpleGraph::from_edges(1, &[]).unwrap();
        assert_eq!(canonical(&one).unwrap().labelling, vec![0]);
        let three = SimpleGraph::from_edges(3, &[]).unwrap();
        assert_eq!(automorphism_group(&three).unwrap().order(), Some(6));
    }
}
