//! The tricirculant families T1..T4, the graphs X(k) and Y(k), ladders,
//! generalised Petersen graphs, and explicit automorphisms.
//!
//! Vertex `x_i` of a family graph (fibre `x` in `u, v, w`, `i` in `Z_2k`) has
//! id `fibre * 2k + i`, with `u = 0`, `v = 1`, `w = 2`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{EdgeType, SimpleGraph};
use crate::pregraph::delta;
use crate::symmetry::{edge_type_subgraph, Permutation};
use crate::voltage::{gcd, VoltageAssignment, VoltageError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("k must be positive")]
    ZeroK,
    #[error("k = {0} must be odd and at least 3")]
    NeedOddK(u64),
    #[error("graph is not simple: {0}")]
    NonSimple(#[from] VoltageError),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("unknown automorphism {0:?}")]
    UnknownAutomorphism(String),
    #[error("transcribed map is not a permutation")]
    NotBijective,
    #[error("cycle decomposition not found: {0}")]
    NoDecomposition(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TricirculantType {
    T1,
    T2,
    T3,
    T4,
}

impl TricirculantType {
    pub const ALL: [TricirculantType; 4] = [Self::T1, Self::T2, Self::T3, Self::T4];

    pub fn index(self) -> usize {
        self as usize + 1
    }

    pub fn from_index(i: usize) -> Option<Self> {
        Self::ALL.get(i.checked_sub(1)?).copied()
    }

    pub fn has_s(self) -> bool {
        self != Self::T3
    }
}

impl fmt::Display for TricirculantType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

impl Serialize for TricirculantType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u8(self.index() as u8)
    }
}

/// Parameters of `T_i(k, r, s)`; `r` and `s` are reduced mod `2k` and `s`
/// is zero for type 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FamilyParams {
    #[serde(rename = "type")]
    pub ty: TricirculantType,
    pub k: u64,
    pub r: u64,
    pub s: u64,
}

impl FamilyParams {
    pub fn new(ty: TricirculantType, k: u64, r: u64, s: u64) -> Result<Self, FamilyError> {
        if k == 0 {
            return Err(FamilyError::ZeroK);
        }
        let n = 2 * k;
        Ok(FamilyParams { ty, k, r: r % n, s: if ty.has_s() { s % n } else { 0 } })
    }

    pub fn modulus(&self) -> u64 {
        2 * self.k
    }

    pub fn voltages(&self) -> VoltageAssignment {
        let base = delta(self.ty.index()).expect("catalogue index");
        VoltageAssignment::from_parameters(base, self.k, self.r, self.s).expect("catalogue voltages are valid")
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ty.has_s() {
            write!(f, "T{}({},{},{})", self.ty, self.k, self.r, self.s)
        } else {
            write!(f, "T{}({},{})", self.ty, self.k, self.r)
        }
    }
}

/// A constructed family graph with its flags.
#[derive(Debug, Clone)]
pub struct FamilyInstance {
    pub params: FamilyParams,
    pub graph: SimpleGraph,
    pub connected: bool,
    /// `k >= 9`, i.e. order at least 54 where the classification theorems
    /// apply.
    pub within_theorem_range: bool,
}

pub fn build(params: FamilyParams) -> Result<FamilyInstance, FamilyError> {
    let z = params.voltages();
    let graph = z.derived_cover()?;
    Ok(FamilyInstance { params, graph, connected: z.cover_connected(), within_theorem_range: params.k >= 9 })
}

pub fn t1(k: u64, r: u64, s: u64) -> Result<FamilyInstance, FamilyError> {
    build(FamilyParams::new(TricirculantType::T1, k, r, s)?)
}

pub fn t2(k: u64, r: u64, s: u64) -> Result<FamilyInstance, FamilyError> {
    build(FamilyParams::new(TricirculantType::T2, k, r, s)?)
}

pub fn t3(k: u64, r: u64) -> Result<FamilyInstance, FamilyError> {
    build(FamilyParams::new(TricirculantType::T3, k, r, 0)?)
}

pub fn t4(k: u64, r: u64, s: u64) -> Result<FamilyInstance, FamilyError> {
    build(FamilyParams::new(TricirculantType::T4, k, r, s)?)
}

/// Connectivity of `T1(k, r, s)` by the closed-form criterion
/// `gcd(k, r, s) = 1`.
pub fn t1_connected_by_gcd(k: u64, r: u64, s: u64) -> bool {
    gcd(gcd(k, r), s) == 1
}

fn require_odd(k: u64) -> Result<(), FamilyError> {
    if k < 3 || k % 2 == 0 {
        return Err(FamilyError::NeedOddK(k));
    }
    Ok(())
}

/// The value `r*` with `X(k) = T1(k, r*, 1)`.
pub fn r_star(k: u64) -> Result<u64, FamilyError> {
    require_odd(k)?;
    let half = (k + 3) / 2;
    Ok(if k % 4 == 1 { half } else { half + k })
}

pub fn x_graph(k: u64) -> Result<SimpleGraph, FamilyError> {
    Ok(t1(k, r_star(k)?, 1)?.graph)
}

pub fn y_graph(k: u64) -> Result<SimpleGraph, FamilyError> {
    require_odd(k)?;
    Ok(t2(k, 2, 1)?.graph)
}

/// Generalised Petersen graph: outer cycle `u_i u_{i+1}` on `0..n`, spokes
/// `u_i v_i`, inner edges `v_i v_{i+m}` on `n..2n`. `m > n/2` is replaced by
/// `n - m`.
pub fn gp(n: u64, m: u64) -> Result<SimpleGraph, FamilyError> {
    if n < 3 || m == 0 || m >= n || (2 * m) % n == 0 {
        return Err(FamilyError::InvalidParameters(format!("GP({n},{m})")));
    }
    let m = m.min(n - m) as usize;
    let n = n as usize;
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, n + i));
        edges.push((n + i, n + (i + m) % n));
    }
    Ok(SimpleGraph::from_edges(2 * n, &edges).expect("valid GP parameters give a simple graph"))
}

/// Two `m`-cycles joined by a perfect matching `i <-> m + i`.
pub fn prism(m: u64) -> Result<SimpleGraph, FamilyError> {
    if m < 3 {
        return Err(FamilyError::InvalidParameters(format!("prism({m})")));
    }
    let m = m as usize;
    let mut edges = Vec::with_capacity(3 * m);
    for i in 0..m {
        edges.push((i, (i + 1) % m));
        edges.push((m + i, m + (i + 1) % m));
        edges.push((i, m + i));
    }
    Ok(SimpleGraph::from_edges(2 * m, &edges).unwrap())
}

/// A `2m`-cycle with its `m` long diagonals.
pub fn moebius(m: u64) -> Result<SimpleGraph, FamilyError> {
    if m < 3 {
        return Err(FamilyError::InvalidParameters(format!("moebius({m})")));
    }
    let m = m as usize;
    let n = 2 * m;
    let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..m).map(|i| (i, i + m)));
    Ok(SimpleGraph::from_edges(n, &edges).unwrap())
}

/// The explicit automorphisms available for the families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyAutomorphism {
    /// `x_i -> x_{i+1}` on any family graph.
    Rho,
    /// Vertex-transitivity witness on `X(k)`, permuting the fibres.
    PhiX,
    /// Bicirculant automorphism of `X(k)`: two cycles of length `3k` when
    /// `3` does not divide `k`.
    PhiT1Bic,
    /// Fibre-mixing automorphism of `Y(k)`.
    PhiY,
    /// `x_i -> x_{-i}` on every fibre; an automorphism of every type-4 graph.
    Reflection,
}

impl FromStr for FamilyAutomorphism {
    type Err = FamilyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "rho" => Self::Rho,
            "phi_x" => Self::PhiX,
            "phi_t1_bic" => Self::PhiT1Bic,
            "phi_y" => Self::PhiY,
            "reflection" => Self::Reflection,
            other => return Err(FamilyError::UnknownAutomorphism(other.to_string())),
        })
    }
}

const U: usize = 0;
const V: usize = 1;
const W: usize = 2;

/// Builds a permutation of the `6k` family vertices from a rule
/// `(fibre, i) -> (fibre', i')` with `i'` taken mod `2k`.
fn fibre_map(k: u64, rule: impl Fn(usize, i64) -> (usize, i64)) -> Result<Permutation, FamilyError> {
    let n = 2 * k as i64;
    let image = (0..3)
        .flat_map(|x| (0..n).map(move |i| (x, i)))
        .map(|(x, i)| {
            let (y, j) = rule(x, i);
            y * n as usize + j.rem_euclid(n) as usize
        })
        .collect();
    Permutation::from_images(image).ok_or(FamilyError::NotBijective)
}

/// The permutation `which` on the `6k` vertices of the matching family
/// graph: `X(k)` for `PhiX`/`PhiT1Bic`, `Y(k)` for `PhiY`.
pub fn family_automorphism(which: FamilyAutomorphism, k: u64) -> Result<Permutation, FamilyError> {
    if k == 0 {
        return Err(FamilyError::ZeroK);
    }
    let ki = k as i64;
    match which {
        FamilyAutomorphism::Rho => fibre_map(k, |x, i| (x, i + 1)),
        FamilyAutomorphism::Reflection => fibre_map(k, |x, i| (x, -i)),
        FamilyAutomorphism::PhiX => {
            let r = r_star(k)? as i64;
            fibre_map(k, |x, i| match (x, i % 2 == 0) {
                (U, true) => (W, i - r + 2),
                (W, true) => (V, i - 2 * r + 2),
                (V, true) => (U, i - r + 2),
                (U, false) => (V, i + r - 2),
                (V, false) => (W, i + 2 * r - 2),
                (_, false) => (U, i + r - 2),
                _ => unreachable!(),
            })
        }
        FamilyAutomorphism::PhiT1Bic => {
            let (r, s) = (r_star(k)? as i64, 1);
            fibre_map(k, |x, i| match (x, i % 2 == 0) {
                (U, true) => (V, i),
                (V, true) => (W, i + r),
                (W, true) => (U, i),
                (U, false) => (W, i + ki + s),
                (V, false) => (U, i + ki + s),
                (_, false) => (V, i + ki + s - r),
                _ => unreachable!(),
            })
        }
        FamilyAutomorphism::PhiY => {
            require_odd(k)?;
            fibre_map(k, |x, i| match (x, i % 2 == 0) {
                (U, true) => (V, i + 1),
                (V, true) => (U, i + 1),
                (W, true) => (V, i),
                (U, false) => (W, i + 2 + ki),
                (V, false) => (W, i + 2),
                (_, false) => (U, i + ki),
                _ => unreachable!(),
            })
        }
    }
}

/// Walks a 2-regular connected vertex set into cyclic order from its
/// smallest vertex.
fn cyclic_order(g: &SimpleGraph, comp: &[usize]) -> Vec<usize> {
    let start = comp[0];
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = g.neighbours(start)[0];
    while cur != start {
        order.push(cur);
        let next = g.neighbours(cur).iter().copied().find(|&x| x != prev).unwrap();
        prev = cur;
        cur = next;
    }
    order
}

/// Splits `Y(k)` into three vertex-disjoint `2k`-cycles: `C1` through `u_0`
/// and `C2` (the components of the non-`K` edges on `U` and `W`) and `C3`
/// (the `S`-edges on `V`). Checks that the remaining edges match alternate
/// vertices of each `C_i` into `C_{i-1}` and `C_{i+1}`.
pub fn torus_cycle_decomposition(g: &SimpleGraph, k: u64) -> Result<[Vec<usize>; 3], FamilyError> {
    let fail = |msg: &str| FamilyError::NoDecomposition(msg.to_string());
    let n = 2 * k as usize;
    if g.num_vertices() != 3 * n || !g.has_tags() {
        return Err(fail("expected a tagged family graph on 6k vertices"));
    }
    let uw_edges: Vec<_> = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| a / n != V && b / n != V && g.edge_type(a, b) != Some(EdgeType::K))
        .collect();
    let uw = SimpleGraph::from_edges(g.num_vertices(), &uw_edges).unwrap();
    let (s_sub, _) = edge_type_subgraph(g, &[EdgeType::S]).map_err(|e| fail(&e.to_string()))?;
    let mut cycles = Vec::new();
    for (sub, want) in [(&uw, 2), (&s_sub, 1)] {
        let comps: Vec<_> = sub.components().into_iter().filter(|c| c.len() > 1).collect();
        if comps.len() != want {
            return Err(fail(&format!("expected {want} non-trivial components, found {}", comps.len())));
        }
        for comp in comps {
            if comp.len() != n || comp.iter().any(|&v| sub.degree(v) != 2) {
                return Err(fail("component is not a 2k-cycle"));
            }
            cycles.push(cyclic_order(sub, &comp));
        }
    }
    let mut which = vec![usize::MAX; g.num_vertices()];
    for (c, cycle) in cycles.iter().enumerate() {
        for &v in cycle {
            if which[v] != usize::MAX {
                return Err(fail("cycles overlap"));
            }
            which[v] = c;
        }
    }
    if which.contains(&usize::MAX) {
        return Err(fail("cycles do not cover the vertex set"));
    }
    for (c, cycle) in cycles.iter().enumerate() {
        let targets: Vec<usize> = (0..n)
            .map(|j| {
                let (prev, v, next) = (cycle[(j + n - 1) % n], cycle[j], cycle[(j + 1) % n]);
                let other = g.neighbours(v).iter().copied().find(|&x| x != prev && x != next).unwrap();
                which[other]
            })
            .collect();
        let (lo, hi) = ((c + 2) % 3, (c + 1) % 3);
        let alternates = targets.iter().enumerate().all(|(j, &t)| t == if j % 2 == 0 { targets[0] } else { targets[1] });
        let mut ends = [targets[0], targets[1]];
        ends.sort_unstable();
        let mut want = [lo, hi];
        want.sort_unstable();
        if !alternates || ends != want {
            return Err(fail(&format!("cycle C{} does not alternate between its neighbours", c + 1)));
        }
    }
    let [c1, c2, c3]: [Vec<usize>; 3] = cycles.try_into().unwrap();
    Ok(if which[0] == 0 { [c1, c2, c3] } else { [c2, c1, c3] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::OrbitSet;

    /// Direct transcription of the E-sets, independent of the voltage
    /// machinery.
    fn from_e_sets(ty: usize, k: usize, r: usize, s: usize) -> SimpleGraph {
        let n = 2 * k;
        let id = |x: usize, i: usize| x * n + i % n;
        let mut e = Vec::new();
        for i in 0..n {
            e.push((id(U, i), id(V, i)));
            e.push((id(U, i), id(W, i)));
            match ty {
                1 => e.extend([(id(U, i), id(U, i + k)), (id(V, i), id(W, i + r)), (id(V, i), id(W, i + s))]),
                2 => e.extend([(id(W, i), id(W, i + k)), (id(U, i), id(W, i + r)), (id(V, i), id(V, i + s))]),
                3 => e.extend([(id(U, i), id(U, i + k)), (id(V, i), id(V, i + k)), (id(W, i), id(W, i + k)), (id(V, i), id(W, i + r))]),
                _ => e.extend([(id(U, i), id(U, i + k)), (id(W, i), id(W, i + r)), (id(V, i), id(V, i + s))]),
            }
        }
        SimpleGraph::from_edges(3 * n, &e).unwrap()
    }

    #[test]
    fn covers_match_edge_sets() {
        for (ty, k, r, s) in [(1, 9, 6, 1), (1, 5, 2, 7), (2, 9, 2, 1), (3, 9, 4, 0), (3, 10, 3, 0), (4, 9, 1, 2), (4, 6, 4, 2)] {
            let g = build(FamilyParams::new(TricirculantType::from_index(ty).unwrap(), k, r, s).unwrap()).unwrap();
            assert_eq!(g.graph.edges(), from_e_sets(ty, k as usize, r as usize, s as usize).edges(), "T{ty}({k},{r},{s})");
            assert!(g.graph.is_cubic());
        }
    }

    #[test]
    fn r_star_values() {
        assert_eq!(r_star(9), Ok(6));
        assert_eq!(r_star(11), Ok(18));
        assert_eq!(r_star(13), Ok(8));
        assert_eq!(r_star(10), Err(FamilyError::NeedOddK(10)));
        for k in (3..60).step_by(2) {
            let r = r_star(k).unwrap();
            assert_eq!(r % 2, 0);
            assert_eq!((3 + k + 2 * (2 * k) - 2 * r) % (2 * k), 0, "k={k}");
        }
    }

    #[test]
    fn non_simple_parameters_are_errors() {
        assert!(matches!(t1(9, 4, 4), Err(FamilyError::NonSimple(_))));
        assert!(matches!(t2(9, 2, 9), Err(FamilyError::NonSimple(_))));
        assert!(matches!(t4(9, 9, 2), Err(FamilyError::NonSimple(_))));
        assert!(!t3(9, 0).unwrap().connected);
        assert!(matches!(t1(0, 1, 2), Err(FamilyError::ZeroK)));
    }

    #[test]
    fn connectivity_flags() {
        assert!(t1(9, 6, 1).unwrap().connected);
        assert!(!t1(9, 6, 3).unwrap().connected);
        assert!(t1(9, 6, 1).unwrap().within_theorem_range);
        assert!(!t1(5, 2, 1).unwrap().within_theorem_range);
        for k in 1..8 {
            for r in 0..2 * k {
                for s in 0..2 * k {
                    if let Ok(inst) = t1(k, r, s) {
                        assert_eq!(inst.connected, t1_connected_by_gcd(k, r, s));
                        assert_eq!(inst.connected, inst.graph.is_connected());
                    }
                }
            }
        }
    }

    #[test]
    fn ladders_and_petersen_graphs() {
        assert_eq!(gp(5, 2).unwrap().num_edges(), 15);
        assert_eq!(gp(33, 21).unwrap(), gp(33, 12).unwrap());
        assert!(gp(10, 5).is_err());
        assert!(moebius(3).unwrap().is_bipartite());
        assert!(!prism(3).unwrap().is_bipartite());
        assert!(prism(2).is_err());
    }

    #[test]
    fn known_automorphisms_preserve_adjacency() {
        for k in [3u64, 5, 7, 9, 11, 13, 15] {
            let x = x_graph(k).unwrap();
            let y = y_graph(k).unwrap();
            for which in [FamilyAutomorphism::Rho, FamilyAutomorphism::PhiX, FamilyAutomorphism::PhiT1Bic] {
                assert!(family_automorphism(which, k).unwrap().is_automorphism(&x), "{which:?} on X({k})");
            }
            assert!(family_automorphism(FamilyAutomorphism::PhiY, k).unwrap().is_automorphism(&y), "phi_y on Y({k})");
            assert!(family_automorphism(FamilyAutomorphism::Rho, k).unwrap().is_automorphism(&y));
        }
    }

    #[test]
    fn phi_x_permutes_the_fibres() {
        let phi = family_automorphism(FamilyAutomorphism::PhiX, 9).unwrap();
        let rho = family_automorphism(FamilyAutomorphism::Rho, 9).unwrap();
        assert_eq!(rho.order(), 18);
        assert_eq!(OrbitSet::from_generators(54, &[rho, phi]).len(), 1);
    }

    #[test]
    fn reflection_on_type_four() {
        let refl = family_automorphism(FamilyAutomorphism::Reflection, 7).unwrap();
        for (r, s) in [(1, 2), (3, 5), (2, 6)] {
            assert!(refl.is_automorphism(&t4(7, r, s).unwrap().graph));
        }
    }

    #[test]
    fn torus_decomposition_of_y() {
        for k in [3, 9, 11] {
            let y = y_graph(k).unwrap();
            let [c1, c2, c3] = torus_cycle_decomposition(&y, k).unwrap();
            assert_eq!([c1.len(), c2.len(), c3.len()], [2 * k as usize; 3]);
            assert_eq!(c1[0], 0);
            assert!(c3.iter().all(|&v| v / (2 * k as usize) == V));
        }
        let x = x_graph(9).unwrap();
        assert!(torus_cycle_decomposition(&x, 9).is_err());
    }

    #[test]
    fn unknown_automorphism_name() {
        assert!("phi_z".parse::<FamilyAutomorphism>().is_err());
        assert_eq!("phi_y".parse::<FamilyAutomorphism>(), Ok(FamilyAutomorphism::PhiY));
    }
}
