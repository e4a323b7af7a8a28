//! Voltage assignments over cyclic groups, derived covering graphs, and
//! quotients by semiregular cyclic automorphism groups.
//!
//! A voltage assignment `zeta` on a pregraph assigns an element of `Z_n` to
//! every dart with `zeta(inv d) = -zeta(d)`. The derived cover has vertex set
//! `V x Z_n`; the dart `d` at `(x, i)` leads to `(end d, i + zeta(d))`.
//!
//! Voltages on the catalogue pregraphs are symbolic (`0`, `k`, `r`, `s`);
//! [`SymbolicVoltage`] tracks a walk's net voltage as a formal combination
//! `eps*k + a*r + b*s` with `eps` taken mod 2, since `2k = 0` in `Z_2k`.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{CoverVertex, EdgeType, SimpleGraph};
use crate::pregraph::{DartId, EdgeKind, Pregraph, PregraphError, VoltageSymbol, Walk};
use crate::symmetry::Permutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VoltageError {
    #[error("voltage modulus must be positive")]
    ZeroModulus,
    #[error("expected {expected} voltages, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("voltage {value} on dart {dart} is not reduced mod {modulus}")]
    OutOfRange { dart: DartId, value: u64, modulus: u64 },
    #[error("voltages of dart {0} and its inverse do not cancel")]
    NotAntisymmetric(DartId),
    #[error("semi-edge dart {0} carries a voltage of order greater than 2")]
    SemiEdgeOrder(DartId),
    #[error("base pregraph has darts without voltage symbols")]
    MissingSymbols,
    #[error("cover is not simple: dart {dart} with voltage {voltage} lifts to a loop or a parallel edge")]
    NonSimpleCover { dart: String, voltage: u64 },
    #[error("walk does not live in the base pregraph: {0}")]
    WalkMismatch(#[from] PregraphError),
    #[error("permutation is not an automorphism of the graph")]
    NotAutomorphism,
    #[error("automorphism does not act semiregularly on vertices")]
    NotSemiregular,
}

/// Formal voltage `eps*k + r_coeff*r + s_coeff*s`, with `eps` in `{0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SymbolicVoltage {
    pub eps: u8,
    pub r: i64,
    pub s: i64,
}

impl SymbolicVoltage {
    pub const ZERO: SymbolicVoltage = SymbolicVoltage { eps: 0, r: 0, s: 0 };

    pub fn new(eps: u8, r: i64, s: i64) -> Self {
        SymbolicVoltage { eps: eps % 2, r, s }
    }

    pub fn of_symbol(symbol: VoltageSymbol, negated: bool) -> Self {
        let sign = if negated { -1 } else { 1 };
        match symbol {
            VoltageSymbol::Zero => Self::ZERO,
            VoltageSymbol::K => SymbolicVoltage::new(1, 0, 0),
            VoltageSymbol::R => SymbolicVoltage::new(0, sign, 0),
            VoltageSymbol::S => SymbolicVoltage::new(0, 0, sign),
        }
    }

    pub fn negate(self) -> Self {
        // -k = k in Z_2k
        SymbolicVoltage { eps: self.eps, r: -self.r, s: -self.s }
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    fn key(self) -> (i64, i64, u8) {
        (self.r, self.s, self.eps)
    }

    /// Representative of the class `{v, -v}`: whichever of the two has the
    /// lexicographically larger `(r, s, eps)`.
    pub fn normalized(self) -> Self {
        let neg = self.negate();
        if self.key() >= neg.key() {
            self
        } else {
            neg
        }
    }

    /// Evaluates in `Z_2k` for concrete `k, r, s`.
    pub fn evaluate(self, k: u64, r: u64, s: u64) -> u64 {
        let n = 2 * k as i128;
        let value = self.eps as i128 * k as i128 + self.r as i128 * r as i128 + self.s as i128 * s as i128;
        value.rem_euclid(n) as u64
    }
}

impl std::ops::Add for SymbolicVoltage {
    type Output = SymbolicVoltage;
    fn add(self, rhs: Self) -> Self {
        SymbolicVoltage::new(self.eps + rhs.eps, self.r + rhs.r, self.s + rhs.s)
    }
}

impl PartialOrd for SymbolicVoltage {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SymbolicVoltage {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for SymbolicVoltage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        if self.eps == 1 {
            out.push('k');
        }
        for (coeff, name) in [(self.r, 'r'), (self.s, 's')] {
            if coeff == 0 {
                continue;
            }
            if coeff < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if coeff.abs() != 1 {
                out.push_str(&coeff.abs().to_string());
            }
            out.push(name);
        }
        f.write_str(&out)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse symbolic voltage {0:?}")]
pub struct ParseVoltageError(String);

impl FromStr for SymbolicVoltage {
    type Err = ParseVoltageError;

    /// Parses expressions such as `0`, `k+2r-s`, `3s-2r+k` or `-(r-s)`'s
    /// expanded form `s-r`. Unicode minus signs are accepted.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = || ParseVoltageError(text.to_string());
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).map(|c| if c == '−' { '-' } else { c }).collect();
        if cleaned.is_empty() {
            return Err(err());
        }
        if cleaned == "0" {
            return Ok(Self::ZERO);
        }
        let mut total = Self::ZERO;
        let mut rest = cleaned.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ => (1, rest),
            };
            let end = body[1..].find(['+', '-']).map_or(body.len(), |i| i + 1);
            let term = &body[..end];
            rest = &body[end..];
            let (digits, name) = term.split_at(term.len().checked_sub(1).ok_or_else(err)?);
            let coeff: i64 = if digits.is_empty() { 1 } else { digits.parse().map_err(|_| err())? };
            let c = sign * coeff;
            total = total
                + match name {
                    "k" => SymbolicVoltage::new(c.rem_euclid(2) as u8, 0, 0),
                    "r" => SymbolicVoltage::new(0, c, 0),
                    "s" => SymbolicVoltage::new(0, 0, c),
                    _ => return Err(err()),
                };
        }
        Ok(total)
    }
}

/// Voltage assignment `zeta: D -> Z_n` on a pregraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VoltageAssignment {
    base: Pregraph,
    modulus: u64,
    zeta: Vec<u64>,
}

impl VoltageAssignment {
    pub fn new(base: Pregraph, modulus: u64, zeta: Vec<u64>) -> Result<Self, VoltageError> {
        if modulus == 0 {
            return Err(VoltageError::ZeroModulus);
        }
        if zeta.len() != base.num_darts() {
            return Err(VoltageError::LengthMismatch { expected: base.num_darts(), got: zeta.len() });
        }
        for (d, &z) in zeta.iter().enumerate() {
            if z >= modulus {
                return Err(VoltageError::OutOfRange { dart: d, value: z, modulus });
            }
            if (z + zeta[base.inv(d)]) % modulus != 0 {
                return Err(if base.inv(d) == d { VoltageError::SemiEdgeOrder(d) } else { VoltageError::NotAntisymmetric(d) });
            }
        }
        Ok(VoltageAssignment { base, modulus, zeta })
    }

    /// Evaluates the voltage symbols of a catalogue pregraph in `Z_2k`.
    pub fn from_parameters(base: Pregraph, k: u64, r: u64, s: u64) -> Result<Self, VoltageError> {
        if k == 0 {
            return Err(VoltageError::ZeroModulus);
        }
        let zeta = (0..base.num_darts())
            .map(|d| {
                let sym = base.symbol(d).ok_or(VoltageError::MissingSymbols)?;
                Ok(SymbolicVoltage::of_symbol(sym.symbol, sym.negated).evaluate(k, r, s))
            })
            .collect::<Result<Vec<_>, VoltageError>>()?;
        VoltageAssignment::new(base, 2 * k, zeta)
    }

    pub fn base(&self) -> &Pregraph {
        &self.base
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn voltage(&self, d: DartId) -> u64 {
        self.zeta[d]
    }

    pub fn voltages(&self) -> &[u64] {
        &self.zeta
    }

    /// The derived covering graph. Vertex `(x, i)` gets id `x * n + i`.
    pub fn derived_cover(&self) -> Result<SimpleGraph, VoltageError> {
        let n = self.modulus as usize;
        let nv = self.base.num_vertices();
        let darts_at: Vec<Vec<DartId>> = (0..nv).map(|x| self.base.neighbourhood(x)).collect();
        let mut adj = Vec::with_capacity(nv * n);
        let mut labels = Vec::with_capacity(nv * n);
        for (x, darts) in darts_at.iter().enumerate() {
            for i in 0..n {
                let me = x * n + i;
                let mut list: Vec<(usize, Option<EdgeType>, DartId)> = Vec::with_capacity(darts.len());
                for &d in darts {
                    let j = (i + self.zeta[d] as usize) % n;
                    let other = self.base.end(d) * n + j;
                    let tag = self.base.symbol(d).map(|s| edge_type_of(s.symbol));
                    list.push((other, tag, d));
                }
                list.sort_unstable_by_key(|e| e.0);
                let bad = list.iter().find(|e| e.0 == me).or_else(|| list.windows(2).find(|w| w[0].0 == w[1].0).map(|w| &w[1]));
                if let Some(&(_, _, d)) = bad {
                    return Err(VoltageError::NonSimpleCover { dart: self.base.dart_name(d), voltage: self.zeta[d] });
                }
                adj.push(list.into_iter().map(|(w, t, _)| (w, t)).collect());
                labels.push(CoverVertex { fibre: x, index: i });
            }
        }
        let names = (0..nv).map(|x| self.base.vertex_name(x).to_string()).collect();
        Ok(SimpleGraph::from_tagged_parts(adj, Some(labels), names))
    }

    /// Sum of voltages along a walk, mod n.
    pub fn net_voltage(&self, walk: &Walk) -> Result<u64, VoltageError> {
        Walk::new(&self.base, walk.darts().to_vec())?;
        Ok(walk.darts().iter().fold(0, |acc, &d| (acc + self.zeta[d]) % self.modulus))
    }

    /// True iff the derived cover is connected: the base is connected and
    /// the net voltages of its closed walks generate `Z_n`.
    pub fn cover_connected(&self) -> bool {
        if !self.base.is_connected() {
            return false;
        }
        let n = self.modulus;
        // potentials along a BFS tree; every dart then contributes its
        // fundamental-cycle voltage
        let nv = self.base.num_vertices();
        let mut potential = vec![None; nv];
        potential[0] = Some(0u64);
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for d in self.base.neighbourhood(x) {
                let y = self.base.end(d);
                if potential[y].is_none() {
                    potential[y] = Some((potential[x].unwrap() + self.zeta[d]) % n);
                    queue.push_back(y);
                }
            }
        }
        let mut g = n;
        for d in 0..self.base.num_darts() {
            let (a, b) = (potential[self.base.beg(d)].unwrap(), potential[self.base.end(d)].unwrap());
            let cycle = (a + self.zeta[d] + n - b) % n;
            g = gcd(g, cycle);
        }
        g == 1
    }
}

fn edge_type_of(symbol: VoltageSymbol) -> EdgeType {
    match symbol {
        VoltageSymbol::Zero => EdgeType::Zero,
        VoltageSymbol::K => EdgeType::K,
        VoltageSymbol::R => EdgeType::R,
        VoltageSymbol::S => EdgeType::S,
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Formal sum of the dart symbols along a walk, not sign-normalised.
pub fn symbolic_walk_sum(base: &Pregraph, walk: &Walk) -> Result<SymbolicVoltage, VoltageError> {
    Walk::new(base, walk.darts().to_vec())?;
    walk.darts().iter().try_fold(SymbolicVoltage::ZERO, |acc, &d| {
        let sym = base.symbol(d).ok_or(VoltageError::MissingSymbols)?;
        Ok(acc + SymbolicVoltage::of_symbol(sym.symbol, sym.negated))
    })
}

/// Net voltage of a walk in a catalogue pregraph, normalised up to sign.
pub fn symbolic_net_voltage(base: &Pregraph, walk: &Walk) -> Result<SymbolicVoltage, VoltageError> {
    symbolic_walk_sum(base, walk).map(SymbolicVoltage::normalized)
}

/// Quotient of `g` by the cyclic group generated by a semiregular
/// automorphism `rho`, returned together with the voltages that recover `g`
/// as a derived cover.
///
/// Orbits are numbered by their smallest vertex `x0`, and the vertex
/// `rho^i(x0)` becomes `(orbit, i)`. Dart ids follow the orbit order and,
/// within an orbit, the sorted neighbours of `x0`.
pub fn quotient(g: &SimpleGraph, rho: &Permutation) -> Result<VoltageAssignment, VoltageError> {
    if !rho.is_automorphism(g) {
        return Err(VoltageError::NotAutomorphism);
    }
    let n = g.num_vertices();
    let cycles = rho.cycles();
    let len = cycles.first().map_or(1, Vec::len);
    if !rho.is_semiregular() {
        return Err(VoltageError::NotSemiregular);
    }
    let mut orbit = vec![0; n];
    let mut position = vec![0; n];
    for (o, cycle) in cycles.iter().enumerate() {
        for (i, &x) in cycle.iter().enumerate() {
            orbit[x] = o;
            position[x] = i;
        }
    }
    // dart (o, j): from representative cycles[o][0] to its j-th neighbour
    let mut first_dart = Vec::with_capacity(cycles.len());
    let mut beg = Vec::new();
    for (o, cycle) in cycles.iter().enumerate() {
        first_dart.push(beg.len());
        beg.extend(std::iter::repeat(o).take(g.degree(cycle[0])));
    }
    let mut inv = vec![0; beg.len()];
    let mut zeta = vec![0u64; beg.len()];
    let rho_inv = rho.inverse();
    for (o, cycle) in cycles.iter().enumerate() {
        let x0 = cycle[0];
        for (j, &y) in g.neighbours(x0).iter().enumerate() {
            let d = first_dart[o] + j;
            let shift = position[y];
            zeta[d] = shift as u64;
            // the inverse dart starts at the representative of y's orbit and
            // points at rho^{-shift}(x0)
            let y0 = cycles[orbit[y]][0];
            let mut target = x0;
            for _ in 0..shift {
                target = rho_inv.apply(target);
            }
            let jj = g.neighbours(y0).binary_search(&target).expect("rho preserves adjacency");
            inv[d] = first_dart[orbit[y]] + jj;
        }
    }
    let base = Pregraph::from_parts(cycles.len(), beg, inv).expect("arc orbits form a pregraph");
    VoltageAssignment::new(base, len as u64, zeta)
}

/// Edge kinds of a pregraph as a sorted multiset, handy for comparisons.
pub fn edge_kind_profile(p: &Pregraph) -> Vec<EdgeKind> {
    let mut kinds: Vec<_> = (0..p.num_darts()).filter(|&d| p.inv(d) >= d).map(|d| p.edge_kind(d).unwrap()).collect();
    kinds.sort();
    kinds
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pregraph::delta;

    fn zeta(i: usize, k: u64, r: u64, s: u64) -> VoltageAssignment {
        VoltageAssignment::from_parameters(delta(i).unwrap(), k, r, s).unwrap()
    }

    #[test]
    fn symbolic_display_and_parse() {
        let v: SymbolicVoltage = "k+3s-2r".parse().unwrap();
        assert_eq!(v, SymbolicVoltage::new(1, -2, 3));
        assert_eq!(v.normalized().to_string(), "k+2r-3s");
        assert_eq!("3r − s".parse::<SymbolicVoltage>().unwrap(), SymbolicVoltage::new(0, 3, -1));
        assert_eq!("0".parse::<SymbolicVoltage>().unwrap(), SymbolicVoltage::ZERO);
        assert_eq!("2k".parse::<SymbolicVoltage>().unwrap(), SymbolicVoltage::ZERO);
        assert!("3x".parse::<SymbolicVoltage>().is_err());
        assert_eq!(SymbolicVoltage::new(1, 0, 0).negate(), SymbolicVoltage::new(1, 0, 0));
    }

    #[test]
    fn normalization_picks_one_representative() {
        for eps in 0..2 {
            for r in -4..=4 {
                for s in -4..=4 {
                    let v = SymbolicVoltage::new(eps, r, s);
                    assert_eq!(v.normalized(), v.negate().normalized());
                }
            }
        }
    }

    #[test]
    fn cover_of_delta1() {
        let g = zeta(1, 9, 6, 1).derived_cover().unwrap();
        assert_eq!(g.num_vertices(), 54);
        assert!(g.is_cubic());
        assert_eq!(g.vertex_name(g.cover_vertex(2, 7).unwrap()), "w_7");
    }

    #[test]
    fn k33_from_delta3() {
        let g = zeta(3, 1, 1, 0).derived_cover().unwrap();
        assert_eq!(g.num_vertices(), 6);
        assert!(g.is_cubic() && g.is_bipartite());
        let prism = zeta(3, 1, 0, 0).derived_cover().unwrap();
        assert!(!prism.is_bipartite());
    }

    #[test]
    fn trivial_group_cannot_lift_semi_edges() {
        for i in 1..=4 {
            let base = delta(i).unwrap();
            let z = VoltageAssignment::new(base.clone(), 1, vec![0; base.num_darts()]).unwrap();
            assert!(matches!(z.derived_cover(), Err(VoltageError::NonSimpleCover { .. })));
        }
    }

    #[test]
    fn parallel_and_loop_lifts_are_rejected() {
        assert!(matches!(zeta(1, 9, 4, 4).derived_cover(), Err(VoltageError::NonSimpleCover { .. })));
        assert!(matches!(zeta(2, 9, 2, 9).derived_cover(), Err(VoltageError::NonSimpleCover { .. })));
        assert!(matches!(zeta(2, 9, 2, 0).derived_cover(), Err(VoltageError::NonSimpleCover { .. })));
    }

    #[test]
    fn invalid_assignments() {
        let base = delta(1).unwrap();
        let mut z = vec![0; base.num_darts()];
        z[0] = 1;
        assert_eq!(VoltageAssignment::new(base.clone(), 4, z), Err(VoltageError::SemiEdgeOrder(0)));
        assert!(matches!(VoltageAssignment::new(base, 4, vec![0; 3]), Err(VoltageError::LengthMismatch { .. })));
    }

    #[test]
    fn net_voltages() {
        let z1 = zeta(1, 9, 6, 1);
        let p = z1.base();
        let w = Walk::from_names(p, &["(uv)_0", "(vw)_r", "(wu)_0", "(uu)_k"]).unwrap();
        assert_eq!(z1.net_voltage(&w), Ok(15));
        assert_eq!(z1.net_voltage(&w.inverse(p)), Ok(3));
        let z2 = zeta(2, 9, 2, 1);
        let p2 = z2.base();
        let w2 = Walk::from_names(p2, &["(wu)_0", "(uw)_r", "(ww)_k", "(wu)_{-r}", "(uw)_0", "(ww)_k"]).unwrap();
        assert_eq!(z2.net_voltage(&w2), Ok(0));
        assert_eq!(symbolic_net_voltage(p2, &w2), Ok(SymbolicVoltage::ZERO));
    }

    #[test]
    fn symbolic_walk_voltages() {
        let p = delta(1).unwrap();
        let w = Walk::from_names(
            &p,
            &["(uv)_0", "(vw)_r", "(wv)_{-s}", "(vw)_r", "(wu)_0", "(uv)_0", "(vw)_r", "(wu)_0"],
        )
        .unwrap();
        assert_eq!(symbolic_net_voltage(&p, &w).unwrap().to_string(), "3r-s");
        let twice_k = Walk::from_names(&p, &["(uu)_k", "(uv)_0", "(vu)_0", "(uu)_k", "(uw)_0", "(wu)_0"]).unwrap();
        assert_eq!(symbolic_net_voltage(&p, &twice_k), Ok(SymbolicVoltage::ZERO));
        let raw = symbolic_walk_sum(&p, &w).unwrap();
        assert_eq!(symbolic_walk_sum(&p, &w.inverse(&p)).unwrap(), raw.negate());
    }

    #[test]
    fn connectivity_by_voltage_subgroup() {
        assert!(zeta(1, 9, 6, 1).cover_connected());
        assert!(!zeta(1, 9, 6, 3).cover_connected());
        assert!(zeta(2, 9, 2, 1).cover_connected());
        for (i, k, r, s) in [(1, 9, 6, 1), (1, 9, 6, 3), (3, 4, 2, 0), (4, 6, 2, 4)] {
            let z = zeta(i, k, r, s);
            let g = z.derived_cover().unwrap();
            assert_eq!(z.cover_connected(), g.is_connected(), "Delta_{i} ({k},{r},{s})");
        }
    }

    #[test]
    fn quotient_by_identity_is_the_graph() {
        let g = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let q = quotient(&g, &Permutation::identity(4)).unwrap();
        assert_eq!(q.modulus(), 1);
        assert_eq!(q.base().num_vertices(), 4);
        assert_eq!(q.base().num_darts(), 8);
        assert!(edge_kind_profile(q.base()).iter().all(|&k| k == EdgeKind::Link));
        assert_eq!(q.derived_cover().unwrap().edges(), g.edges());
    }

    #[test]
    fn quotient_rejects_bad_permutations() {
        let g = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let not_auto = Permutation::from_images(vec![1, 0, 2, 3]).unwrap();
        assert_eq!(quotient(&g, &not_auto), Err(VoltageError::NotAutomorphism));
        let reflection = Permutation::from_images(vec![0, 3, 2, 1]).unwrap();
        assert_eq!(quotient(&g, &reflection), Err(VoltageError::NotSemiregular));
    }
}
