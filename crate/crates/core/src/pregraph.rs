//! Dart-based pregraphs: graphs that may carry loops, parallel links and
//! semi-edges.
//!
//! A pregraph is a set of vertices and a set of darts, together with the
//! initial-vertex map `beg` and an involution `inv` on the darts. Edges are
//! the orbits of `inv`. The four connected cubic pregraphs on three vertices
//! (with at most one semi-edge per vertex) are available through [`delta`];
//! their darts carry a [`Symbol`] naming the voltage that the tricirculant
//! families place on them.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use thiserror::Error;

pub type VertexId = usize;
pub type DartId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PregraphError {
    #[error("unknown dart id {0}")]
    UnknownDart(DartId),
    #[error("unknown vertex id {0}")]
    UnknownVertex(VertexId),
    #[error("no cubic pregraph Delta_{0}; expected an index in 1..=4")]
    InvalidDelta(usize),
    #[error("dart inversion is not an involution at dart {0}")]
    NotInvolution(DartId),
    #[error("darts {0} and {1} do not compose into a walk")]
    BrokenWalk(DartId, DartId),
    #[error("a walk needs at least one dart")]
    EmptyWalk,
    #[error("no dart named {0}")]
    UnknownDartName(String),
}

/// The three kinds of edges of a pregraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    SemiEdge,
    Loop,
    Link,
}

/// Voltage symbol attached to a dart of a catalogue pregraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VoltageSymbol {
    Zero,
    K,
    R,
    S,
}

impl VoltageSymbol {
    fn as_str(self) -> &'static str {
        match self {
            VoltageSymbol::Zero => "0",
            VoltageSymbol::K => "k",
            VoltageSymbol::R => "r",
            VoltageSymbol::S => "s",
        }
    }
}

/// A voltage symbol with a sign; the inverse of a dart labelled `r` is
/// labelled `-r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Symbol {
    pub symbol: VoltageSymbol,
    pub negated: bool,
}

impl Symbol {
    pub fn positive(symbol: VoltageSymbol) -> Self {
        Symbol { symbol, negated: false }
    }

    pub fn inverse(self) -> Self {
        // 0 and k are their own negatives in Z_2k
        match self.symbol {
            VoltageSymbol::Zero | VoltageSymbol::K => self,
            _ => Symbol { symbol: self.symbol, negated: !self.negated },
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "{{-{}}}", self.symbol.as_str())
        } else {
            f.write_str(self.symbol.as_str())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pregraph {
    vertex_names: Vec<String>,
    beg: Vec<VertexId>,
    inv: Vec<DartId>,
    symbols: Vec<Option<Symbol>>,
}

impl Pregraph {
    /// An edgeless pregraph on `num_vertices` vertices named `x0, x1, ...`.
    pub fn new(num_vertices: usize) -> Self {
        let names = (0..num_vertices).map(|i| format!("x{i}")).collect();
        Self::with_names(names)
    }

    pub fn with_names(vertex_names: Vec<String>) -> Self {
        Pregraph { vertex_names, beg: Vec::new(), inv: Vec::new(), symbols: Vec::new() }
    }

    /// Builds a pregraph from raw `beg` and `inv` arrays.
    pub fn from_parts(num_vertices: usize, beg: Vec<VertexId>, inv: Vec<DartId>) -> Result<Self, PregraphError> {
        if beg.len() != inv.len() {
            return Err(PregraphError::UnknownDart(beg.len().min(inv.len())));
        }
        if let Some(&v) = beg.iter().find(|&&v| v >= num_vertices) {
            return Err(PregraphError::UnknownVertex(v));
        }
        for (d, &e) in inv.iter().enumerate() {
            if e >= inv.len() {
                return Err(PregraphError::UnknownDart(e));
            }
            if inv[e] != d {
                return Err(PregraphError::NotInvolution(d));
            }
        }
        let mut p = Pregraph::new(num_vertices);
        p.symbols = vec![None; beg.len()];
        p.beg = beg;
        p.inv = inv;
        Ok(p)
    }

    fn push_dart(&mut self, v: VertexId, symbol: Option<Symbol>) -> DartId {
        assert!(v < self.vertex_names.len(), "vertex {v} out of range");
        self.beg.push(v);
        self.inv.push(usize::MAX);
        self.symbols.push(symbol);
        self.beg.len() - 1
    }

    pub fn add_semi_edge(&mut self, v: VertexId, symbol: Option<VoltageSymbol>) -> DartId {
        let d = self.push_dart(v, symbol.map(Symbol::positive));
        self.inv[d] = d;
        d
    }

    /// Adds a link (or a loop when `a == b`) and returns its two darts, the
    /// first one starting at `a`.
    pub fn add_edge(&mut self, a: VertexId, b: VertexId, symbol: Option<VoltageSymbol>) -> (DartId, DartId) {
        let sym = symbol.map(Symbol::positive);
        let d = self.push_dart(a, sym);
        let e = self.push_dart(b, sym.map(Symbol::inverse));
        self.inv[d] = e;
        self.inv[e] = d;
        (d, e)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn num_darts(&self) -> usize {
        self.beg.len()
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v]
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.vertex_names.iter().position(|n| n == name)
    }

    pub fn beg(&self, d: DartId) -> VertexId {
        self.beg[d]
    }

    pub fn inv(&self, d: DartId) -> DartId {
        self.inv[d]
    }

    /// Terminal vertex of a dart, `beg(inv(d))`.
    pub fn end(&self, d: DartId) -> VertexId {
        self.beg[self.inv[d]]
    }

    pub fn symbol(&self, d: DartId) -> Option<Symbol> {
        self.symbols[d]
    }

    pub fn has_symbols(&self) -> bool {
        !self.symbols.is_empty() && self.symbols.iter().all(Option::is_some)
    }

    fn check_dart(&self, d: DartId) -> Result<(), PregraphError> {
        if d < self.num_darts() {
            Ok(())
        } else {
            Err(PregraphError::UnknownDart(d))
        }
    }

    pub fn edge_kind(&self, d: DartId) -> Result<EdgeKind, PregraphError> {
        self.check_dart(d)?;
        let e = self.inv[d];
        Ok(if e == d {
            EdgeKind::SemiEdge
        } else if self.beg[e] == self.beg[d] {
            EdgeKind::Loop
        } else {
            EdgeKind::Link
        })
    }

    /// Darts whose initial vertex is `v`, in id order.
    pub fn neighbourhood(&self, v: VertexId) -> Vec<DartId> {
        (0..self.num_darts()).filter(|&d| self.beg[d] == v).collect()
    }

    pub fn valence(&self, v: VertexId) -> usize {
        self.beg.iter().filter(|&&b| b == v).count()
    }

    pub fn is_regular(&self, valence: usize) -> bool {
        (0..self.num_vertices()).all(|v| self.valence(v) == valence)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.num_vertices();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let adjacency = self.dart_lists();
        while let Some(v) = queue.pop_front() {
            for &d in &adjacency[v] {
                let w = self.end(d);
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn dart_lists(&self) -> Vec<Vec<DartId>> {
        let mut lists = vec![Vec::new(); self.num_vertices()];
        for (d, &v) in self.beg.iter().enumerate() {
            lists[v].push(d);
        }
        lists
    }

    /// Name of a dart in `(ab)_x` notation, e.g. `(vw)_r` or `(wv)_{-s}`.
    pub fn dart_name(&self, d: DartId) -> String {
        let body = format!("({}{})", self.vertex_names[self.beg[d]], self.vertex_names[self.end(d)]);
        match self.symbols[d] {
            Some(sym) => format!("{body}_{sym}"),
            None => format!("{body}#{d}"),
        }
    }

    /// Looks a dart up by its `(ab)_x` name. Braces around a negated symbol
    /// are optional.
    pub fn dart_by_name(&self, name: &str) -> Option<DartId> {
        let wanted = normalize_dart_name(name);
        (0..self.num_darts()).find(|&d| normalize_dart_name(&self.dart_name(d)) == wanted)
    }

    /// Multiset of edges as `(kind, endpoints)` under a vertex relabelling.
    fn edge_multiset(&self, relabel: &[VertexId]) -> BTreeMap<(EdgeKind, VertexId, VertexId), usize> {
        let mut counts = BTreeMap::new();
        for d in 0..self.num_darts() {
            let e = self.inv[d];
            if e < d {
                continue;
            }
            let kind = self.edge_kind(d).expect("dart in range");
            let (a, b) = (relabel[self.beg[d]], relabel[self.beg[e]]);
            *counts.entry((kind, a.min(b), a.max(b))).or_insert(0) += 1;
        }
        counts
    }

    /// Pregraph isomorphism. Edges with the same kind and endpoints are
    /// interchangeable, so two pregraphs are isomorphic exactly when some
    /// vertex bijection carries one edge multiset onto the other.
    pub fn is_isomorphic(&self, other: &Pregraph) -> bool {
        self.isomorphism(other).is_some()
    }

    /// A vertex bijection witnessing [`Pregraph::is_isomorphic`].
    pub fn isomorphism(&self, other: &Pregraph) -> Option<Vec<VertexId>> {
        let n = self.num_vertices();
        if n != other.num_vertices() || self.num_darts() != other.num_darts() {
            return None;
        }
        let identity: Vec<_> = (0..n).collect();
        let target = other.edge_multiset(&identity);
        let profile = |p: &Pregraph, v: VertexId| {
            let mut kinds = [0usize; 3];
            for d in p.neighbourhood(v) {
                kinds[p.edge_kind(d).unwrap() as usize] += 1;
            }
            kinds
        };
        let mine: Vec<_> = (0..n).map(|v| profile(self, v)).collect();
        let theirs: Vec<_> = (0..n).map(|v| profile(other, v)).collect();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend_isomorphism(0, &mut map, &mut used, &mine, &theirs, &target)
            .then_some(map)
    }

    fn extend_isomorphism(
        &self,
        v: VertexId,
        map: &mut Vec<VertexId>,
        used: &mut Vec<bool>,
        mine: &[[usize; 3]],
        theirs: &[[usize; 3]],
        target: &BTreeMap<(EdgeKind, VertexId, VertexId), usize>,
    ) -> bool {
        let n = self.num_vertices();
        if v == n {
            return self.edge_multiset(map) == *target;
        }
        for w in 0..n {
            if used[w] || mine[v] != theirs[w] {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if self.extend_isomorphism(v + 1, map, used, mine, theirs, target) {
                return true;
            }
            used[w] = false;
        }
        map[v] = usize::MAX;
        false
    }
}

fn normalize_dart_name(name: &str) -> String {
    name.chars().filter(|c| !matches!(c, '{' | '}' | ' ')).collect()
}

/// A directed walk: a sequence of darts where each dart starts where the
/// previous one ends.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Walk {
    darts: Vec<DartId>,
}

impl Walk {
    pub fn new(p: &Pregraph, darts: Vec<DartId>) -> Result<Self, PregraphError> {
        if darts.is_empty() {
            return Err(PregraphError::EmptyWalk);
        }
        for &d in &darts {
            p.check_dart(d)?;
        }
        for pair in darts.windows(2) {
            if p.beg(pair[1]) != p.end(pair[0]) {
                return Err(PregraphError::BrokenWalk(pair[0], pair[1]));
            }
        }
        Ok(Walk { darts })
    }

    /// Parses a walk from dart names such as `["(uv)_0", "(vw)_r"]`.
    pub fn from_names(p: &Pregraph, names: &[&str]) -> Result<Self, PregraphError> {
        let darts = names
            .iter()
            .map(|n| p.dart_by_name(n).ok_or_else(|| PregraphError::UnknownDartName(n.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Walk::new(p, darts)
    }

    pub fn darts(&self) -> &[DartId] {
        &self.darts
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn start(&self, p: &Pregraph) -> VertexId {
        p.beg(self.darts[0])
    }

    pub fn end(&self, p: &Pregraph) -> VertexId {
        p.end(*self.darts.last().expect("walks are non-empty"))
    }

    pub fn is_closed(&self, p: &Pregraph) -> bool {
        self.start(p) == self.end(p)
    }

    /// No dart is followed by its own inverse. For closed walks the last and
    /// first darts also count as consecutive; a one-dart walk has no pair of
    /// consecutive darts.
    pub fn is_reduced(&self, p: &Pregraph) -> bool {
        let inner = self.darts.windows(2).all(|w| w[1] != p.inv(w[0]));
        let wrap = self.darts.len() < 2
            || !self.is_closed(p)
            || self.darts[0] != p.inv(*self.darts.last().unwrap());
        inner && wrap
    }

    pub fn inverse(&self, p: &Pregraph) -> Walk {
        Walk { darts: self.darts.iter().rev().map(|&d| p.inv(d)).collect() }
    }

    pub fn display(&self, p: &Pregraph) -> String {
        let names: Vec<_> = self.darts.iter().map(|&d| p.dart_name(d)).collect();
        format!("({})", names.join(","))
    }
}

/// All rooted, directed, reduced closed walks of `length` darts starting at
/// `start`. Rotations and inverses are distinct members.
pub fn reduced_closed_walks(p: &Pregraph, start: VertexId, length: usize) -> Result<Vec<Walk>, PregraphError> {
    if start >= p.num_vertices() {
        return Err(PregraphError::UnknownVertex(start));
    }
    let lists = p.dart_lists();
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(length);
    walk_dfs(p, &lists, start, length, &mut stack, &mut out);
    Ok(out)
}

fn walk_dfs(p: &Pregraph, lists: &[Vec<DartId>], start: VertexId, length: usize, stack: &mut Vec<DartId>, out: &mut Vec<Walk>) {
    if stack.len() == length {
        let walk = Walk { darts: stack.clone() };
        if walk.is_closed(p) && walk.is_reduced(p) {
            out.push(walk);
        }
        return;
    }
    let here = stack.last().map_or(start, |&d| p.end(d));
    for &d in &lists[here] {
        if let Some(&prev) = stack.last() {
            if d == p.inv(prev) {
                continue;
            }
        }
        stack.push(d);
        walk_dfs(p, lists, start, length, stack, out);
        stack.pop();
    }
}

/// The catalogue pregraph `Delta_i` on vertices `u, v, w`, with voltage
/// symbols on its darts.
///
/// * `Delta_1`: semi-edge `k` at u; links u-v, u-w; two parallel links v-w (`r`, `s`).
/// * `Delta_2`: semi-edge `k` at w; loop `s` at v; link u-v; two links u-w (`0`, `r`).
/// * `Delta_3`: semi-edge `k` at each vertex; links u-v, u-w, and v-w (`r`).
/// * `Delta_4`: semi-edge `k` at u; links u-v, u-w; loop `r` at w; loop `s` at v.
pub fn delta(i: usize) -> Result<Pregraph, PregraphError> {
    use VoltageSymbol::*;
    let (u, v, w) = (0, 1, 2);
    let mut p = Pregraph::with_names(vec!["u".into(), "v".into(), "w".into()]);
    match i {
        1 => {
            p.add_semi_edge(u, Some(K));
            p.add_edge(u, v, Some(Zero));
            p.add_edge(u, w, Some(Zero));
            p.add_edge(v, w, Some(R));
            p.add_edge(v, w, Some(S));
        }
        2 => {
            p.add_semi_edge(w, Some(K));
            p.add_edge(v, v, Some(S));
            p.add_edge(u, v, Some(Zero));
            p.add_edge(u, w, Some(Zero));
            p.add_edge(u, w, Some(R));
        }
        3 => {
            p.add_semi_edge(u, Some(K));
            p.add_semi_edge(v, Some(K));
            p.add_semi_edge(w, Some(K));
            p.add_edge(u, v, Some(Zero));
            p.add_edge(u, w, Some(Zero));
            p.add_edge(v, w, Some(R));
        }
        4 => {
            p.add_semi_edge(u, Some(K));
            p.add_edge(u, v, Some(Zero));
            p.add_edge(u, w, Some(Zero));
            p.add_edge(w, w, Some(R));
            p.add_edge(v, v, Some(S));
        }
        other => return Err(PregraphError::InvalidDelta(other)),
    }
    Ok(p)
}

/// Exhaustively generates every connected cubic pregraph on three vertices
/// with at most one semi-edge per vertex, deduplicated up to isomorphism and
/// returned in catalogue order (the i-th entry is isomorphic to `delta(i+1)`).
pub fn enumerate_cubic_pregraphs_3v() -> Vec<Pregraph> {
    let mut found: Vec<Pregraph> = Vec::new();
    // semi-edges, loops per vertex, then links on the pairs uv, uw, vw
    for semis in 0..8u32 {
        let semi = [semis & 1, (semis >> 1) & 1, (semis >> 2) & 1].map(|b| b as usize);
        for loops in product3(0..=1) {
            for links in product3(0..=3) {
                let [luv, luw, lvw] = links;
                let valence = [
                    semi[0] + 2 * loops[0] + luv + luw,
                    semi[1] + 2 * loops[1] + luv + lvw,
                    semi[2] + 2 * loops[2] + luw + lvw,
                ];
                if valence != [3, 3, 3] {
                    continue;
                }
                let mut p = Pregraph::with_names(vec!["u".into(), "v".into(), "w".into()]);
                for x in 0..3 {
                    if semi[x] == 1 {
                        p.add_semi_edge(x, None);
                    }
                    if loops[x] == 1 {
                        p.add_edge(x, x, None);
                    }
                }
                for (count, (a, b)) in [(luv, (0, 1)), (luw, (0, 2)), (lvw, (1, 2))] {
                    for _ in 0..count {
                        p.add_edge(a, b, None);
                    }
                }
                if p.is_connected() && !found.iter().any(|q| q.is_isomorphic(&p)) {
                    found.push(p);
                }
            }
        }
    }
    let catalogue: Vec<_> = (1..=4).map(|i| delta(i).expect("valid index")).collect();
    found.sort_by_key(|p| catalogue.iter().position(|d| d.is_isomorphic(p)).unwrap_or(usize::MAX));
    found
}

fn product3(range: std::ops::RangeInclusive<usize>) -> Vec<[usize; 3]> {
    let values: Vec<usize> = range.collect();
    let mut out = Vec::new();
    for &a in &values {
        for &b in &values {
            for &c in &values {
                out.push([a, b, c]);
            }
        }
    }
    out
}
