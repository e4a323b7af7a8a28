//! Reproduction harness: walk-voltage tables, the type-1 congruence
//! conditions, the small-order census, the classification sweep and a set of
//! lemma spot checks, with deterministic JSON reports.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::families::{self, build, FamilyError, FamilyParams, FamilyAutomorphism, TricirculantType};
use crate::graph::{EdgeType, SimpleGraph};
use crate::pregraph::{delta, reduced_closed_walks, PregraphError};
use crate::symmetry::{self, canonical, count_cycles, cycles_through_vertex, girth, SymmetryError};
use crate::voltage::{gcd, symbolic_net_voltage, SymbolicVoltage, VoltageError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error(transparent)]
    Pregraph(#[from] PregraphError),
    #[error(transparent)]
    Voltage(#[from] VoltageError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
    #[error("order 6k = {order} exceeds the sweep guard {limit}")]
    GuardExceeded { order: u64, limit: u64 },
    #[error("invalid range: {0}")]
    InvalidRange(String),
}

/// Largest order `6k` the sweeps accept by default.
pub const DEFAULT_ORDER_GUARD: u64 = 300;

// ---------------------------------------------------------------------------
// walk tables

/// Tally of net voltages (up to sign) over the reduced closed walks of a
/// given length rooted at one vertex of a catalogue pregraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkTable {
    pub delta: usize,
    pub length: usize,
    pub start: String,
    pub total: usize,
    counts: BTreeMap<SymbolicVoltage, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WalkRow {
    pub voltage: String,
    pub count: usize,
}

impl WalkTable {
    /// Walks whose net voltage is `±v`.
    pub fn count(&self, v: SymbolicVoltage) -> usize {
        self.counts.get(&v.normalized()).copied().unwrap_or(0)
    }

    pub fn classes(&self) -> impl Iterator<Item = (SymbolicVoltage, usize)> + '_ {
        self.counts.iter().map(|(&v, &c)| (v, c))
    }

    /// Rows with the zero class first, then by descending count and voltage.
    pub fn rows(&self) -> Vec<WalkRow> {
        let mut rows: Vec<_> = self.counts.iter().collect();
        rows.sort_by_key(|(v, c)| (!v.is_zero(), std::cmp::Reverse(**c), std::cmp::Reverse(**v)));
        rows.into_iter()
            .map(|(v, &count)| WalkRow { voltage: if v.is_zero() { "0".into() } else { format!("±({v})") }, count })
            .collect()
    }
}

pub fn walk_table(delta_index: usize, length: usize, start: usize) -> Result<WalkTable, VerifyError> {
    let p = delta(delta_index)?;
    let walks = reduced_closed_walks(&p, start, length)?;
    let mut counts = BTreeMap::new();
    for w in &walks {
        *counts.entry(symbolic_net_voltage(&p, w)?).or_insert(0) += 1;
    }
    Ok(WalkTable { delta: delta_index, length, start: p.vertex_name(start).to_string(), total: walks.len(), counts })
}

// ---------------------------------------------------------------------------
// type-1 conditions

/// The five congruences that can hold for a vertex-transitive `T1(k,r,s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum T1Congruence {
    ThreeSMinusTwoRPlusK,
    ThreeRMinusTwoSPlusK,
    ThreeRMinusS,
    ThreeSMinusR,
    FourRMinusFourS,
}

/// 8-cycle counts through each edge type predicted for one congruence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EdgeCyclePrediction {
    pub zero: u64,
    pub r: u64,
    pub s: u64,
    pub k: u64,
    pub signature: [u64; 3],
}

impl T1Congruence {
    pub const ALL: [T1Congruence; 5] = [
        Self::ThreeSMinusTwoRPlusK,
        Self::ThreeRMinusTwoSPlusK,
        Self::ThreeRMinusS,
        Self::ThreeSMinusR,
        Self::FourRMinusFourS,
    ];

    pub fn expression(self) -> SymbolicVoltage {
        match self {
            Self::ThreeSMinusTwoRPlusK => SymbolicVoltage::new(1, -2, 3),
            Self::ThreeRMinusTwoSPlusK => SymbolicVoltage::new(1, 3, -2),
            Self::ThreeRMinusS => SymbolicVoltage::new(0, 3, -1),
            Self::ThreeSMinusR => SymbolicVoltage::new(0, -1, 3),
            Self::FourRMinusFourS => SymbolicVoltage::new(0, 4, -4),
        }
    }

    pub fn holds(self, k: u64, r: u64, s: u64) -> bool {
        self.expression().evaluate(k, r, s) == 0
    }

    pub fn prediction(self) -> EdgeCyclePrediction {
        let (zero, r, s, k, signature) = match self {
            Self::ThreeSMinusTwoRPlusK => (5, 5, 6, 6, [5, 5, 6]),
            Self::ThreeRMinusTwoSPlusK => (5, 6, 5, 6, [5, 5, 6]),
            Self::ThreeRMinusS => (6, 6, 4, 4, [4, 6, 6]),
            Self::ThreeSMinusR => (6, 4, 6, 4, [4, 6, 6]),
            Self::FourRMinusFourS => (4, 4, 4, 4, [4, 4, 4]),
        };
        EdgeCyclePrediction { zero, r, s, k, signature }
    }
}

impl fmt::Display for T1Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = match self {
            Self::ThreeSMinusTwoRPlusK => "3s-2r+k",
            Self::ThreeRMinusTwoSPlusK => "3r-2s+k",
            Self::ThreeRMinusS => "3r-s",
            Self::ThreeSMinusR => "3s-r",
            Self::FourRMinusFourS => "4r-4s",
        };
        write!(f, "{e} = 0")
    }
}

/// The three necessary conditions for vertex-transitivity of `T1(k,r,s)`:
/// `3s-2r+k = 0`; `k`, `s` odd with `gcd(k,s) = 1`; `r` even with
/// `gcd(k,r)` in `{1,3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NecessaryConditions {
    pub congruence: bool,
    pub k_s_odd_coprime: bool,
    pub r_even_gcd_1_or_3: bool,
}

impl NecessaryConditions {
    fn of(k: u64, r: u64, s: u64) -> Self {
        NecessaryConditions {
            congruence: T1Congruence::ThreeSMinusTwoRPlusK.holds(k, r, s),
            k_s_odd_coprime: k % 2 == 1 && s % 2 == 1 && gcd(k, s) == 1,
            r_even_gcd_1_or_3: r % 2 == 0 && matches!(gcd(k, r), 1 | 3),
        }
    }

    pub fn all(&self) -> bool {
        self.congruence && self.k_s_odd_coprime && self.r_even_gcd_1_or_3
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct T1Conditions {
    pub k: u64,
    pub r: u64,
    pub s: u64,
    pub holds: Vec<T1Congruence>,
    pub necessary: NecessaryConditions,
    /// The same conditions with `r` and `s` interchanged.
    pub necessary_swapped: NecessaryConditions,
    /// Table prediction when exactly one congruence holds.
    pub predicted: Option<EdgeCyclePrediction>,
}

impl T1Conditions {
    pub fn characterises_vt(&self) -> bool {
        self.necessary.all() || self.necessary_swapped.all()
    }
}

pub fn check_t1_conditions(k: u64, r: u64, s: u64) -> T1Conditions {
    let n = 2 * k;
    let (r, s) = (r % n, s % n);
    let holds: Vec<_> = T1Congruence::ALL.into_iter().filter(|c| c.holds(k, r, s)).collect();
    let predicted = match holds[..] {
        [only] => Some(only.prediction()),
        _ => None,
    };
    T1Conditions {
        k,
        r,
        s,
        necessary: NecessaryConditions::of(k, r, s),
        necessary_swapped: NecessaryConditions::of(k, s, r),
        holds,
        predicted,
    }
}

/// `c`-cycle counts through edges of each type, `Some` when constant on
/// the type, in the order `0, R, S, K`.
pub fn edge_type_cycle_counts(g: &SimpleGraph, c: usize) -> Result<[Option<u64>; 4], VerifyError> {
    if !g.has_tags() {
        return Err(SymmetryError::MissingTags.into());
    }
    let edges = g.edges();
    let counts = symmetry::edge_cycle_counts(g, c);
    let mut per: BTreeMap<EdgeType, BTreeSet<u64>> = BTreeMap::new();
    for (&(a, b), &x) in edges.iter().zip(&counts) {
        per.entry(g.edge_type(a, b).unwrap()).or_default().insert(x);
    }
    let one = |t| per.get(&t).filter(|s| s.len() == 1).and_then(|s| s.first().copied());
    Ok([one(EdgeType::Zero), one(EdgeType::R), one(EdgeType::S), one(EdgeType::K)])
}

// ---------------------------------------------------------------------------
// parameter reduction

fn units(n: u64) -> Vec<u64> {
    (1..n).filter(|&a| gcd(a, n) == 1).collect()
}

/// The parameter images under the isomorphisms used to reduce the grids:
/// multiplication by units of `Z_2k` (all types), `r <-> s` (types 1, 4),
/// `s -> -s` (type 2) and independent sign changes (type 4).
pub fn parameter_images(p: FamilyParams) -> Vec<FamilyParams> {
    let n = p.modulus();
    let neg = |x: u64| (n - x) % n;
    let mut base = vec![(p.r, p.s)];
    match p.ty {
        TricirculantType::T1 => base.push((p.s, p.r)),
        TricirculantType::T2 => base.push((p.r, neg(p.s))),
        TricirculantType::T3 => {}
        TricirculantType::T4 => {
            for (r, s) in [(p.r, p.s), (p.s, p.r)] {
                base.extend([(neg(r), s), (r, neg(s)), (neg(r), neg(s))]);
                base.push((r, s));
            }
        }
    }
    let mut out: Vec<_> = units(n)
        .into_iter()
        .flat_map(|a| base.iter().map(move |&(r, s)| (a * r % n, a * s % n)))
        .map(|(r, s)| FamilyParams { r, s, ..p })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// One representative (the smallest image) per parameter class.
pub fn parameter_representatives(ty: TricirculantType, k: u64) -> Vec<FamilyParams> {
    let n = 2 * k;
    let s_range = if ty.has_s() { n } else { 1 };
    let mut reps = Vec::new();
    for r in 0..n {
        for s in 0..s_range {
            let p = FamilyParams { ty, k, r, s };
            if parameter_images(p)[0] == p {
                reps.push(p);
            }
        }
    }
    reps
}

// ---------------------------------------------------------------------------
// sweeps

/// Names for the graphs the sweeps can recognise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identified {
    X(u64),
    Y(u64),
    Prism(u64),
    Moebius(u64),
}

impl fmt::Display for Identified {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Identified::X(k) => write!(f, "X({k})"),
            Identified::Y(k) => write!(f, "Y({k})"),
            Identified::Prism(m) => write!(f, "prism({m})"),
            Identified::Moebius(m) => write!(f, "moebius({m})"),
        }
    }
}

impl Serialize for Identified {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Per-type bookkeeping of one order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TypeStats {
    #[serde(rename = "type")]
    pub ty: usize,
    pub grid: usize,
    pub representatives: usize,
    pub simple: usize,
    pub connected: usize,
    pub vertex_transitive: usize,
}

/// One isomorphism class of vertex-transitive graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VtClass {
    pub canonical: String,
    pub identified: Option<Identified>,
    /// Common name of a small arc-transitive member, if any.
    pub alias: Option<&'static str>,
    pub types: Vec<TricirculantType>,
    pub example: FamilyParams,
    pub parameter_classes: usize,
    pub arc_transitive: bool,
    pub girth: Option<usize>,
    pub aut_order: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub k: u64,
    pub order: u64,
    pub types: Vec<TypeStats>,
    pub classes: Vec<VtClass>,
    pub anomalies: Vec<String>,
    /// Remarks that are not anomalies (e.g. prisms at even k).
    pub notes: Vec<String>,
}

impl SweepReport {
    pub fn class_names(&self) -> BTreeSet<String> {
        self.classes.iter().map(|c| c.identified.as_ref().map_or_else(|| "?".into(), |i| i.to_string())).collect()
    }

    pub fn vt_count(&self, ty: TricirculantType) -> usize {
        self.types.iter().find(|t| t.ty == ty.index()).map_or(0, |t| t.vertex_transitive)
    }
}

struct Candidate {
    params: FamilyParams,
    canonical: String,
    arc_transitive: bool,
    girth: Option<usize>,
    aut_order: Option<u128>,
}

enum Outcome {
    NonSimple,
    Disconnected,
    NotVt,
    Vt(Candidate),
}

/// Cheap necessary conditions for vertex-transitivity of a family graph:
/// the fibre representatives `u_0, v_0, w_0` lie on equally many `c`-cycles
/// for `c` from the girth to girth + 3.
fn fibres_look_alike(g: &SimpleGraph) -> bool {
    let Some(gi) = girth(g) else { return false };
    let n = g.num_vertices() / 3;
    (gi..gi + 4).all(|c| {
        let a = cycles_through_vertex(g, 0, c);
        a == cycles_through_vertex(g, n, c) && a == cycles_through_vertex(g, 2 * n, c)
    })
}

fn examine(params: FamilyParams, prefilter: bool) -> Result<Outcome, VerifyError> {
    let inst = match build(params) {
        Ok(i) => i,
        Err(FamilyError::NonSimple(_)) => return Ok(Outcome::NonSimple),
        Err(e) => return Err(e.into()),
    };
    if !inst.connected {
        return Ok(Outcome::Disconnected);
    }
    let g = inst.graph.plain();
    if prefilter && !fibres_look_alike(&g) {
        return Ok(Outcome::NotVt);
    }
    let c = canonical(&g)?;
    if !c.group.is_vertex_transitive() {
        return Ok(Outcome::NotVt);
    }
    Ok(Outcome::Vt(Candidate {
        params,
        canonical: crate::io::encode_graph6(&c.graph),
        arc_transitive: c.group.is_arc_transitive(&g),
        girth: girth(&g),
        aut_order: c.group.order(),
    }))
}

fn form(g: &SimpleGraph) -> Result<String, VerifyError> {
    Ok(crate::io::encode_graph6(&canonical(g)?.graph))
}

/// Canonical forms of the named graphs of order `6k`.
fn references(k: u64) -> Result<Vec<(String, Identified)>, VerifyError> {
    let mut refs = vec![(form(&families::prism(3 * k)?)?, Identified::Prism(3 * k)), (form(&families::moebius(3 * k)?)?, Identified::Moebius(3 * k))];
    if k % 2 == 1 && k >= 3 {
        refs.push((form(&families::x_graph(k)?)?, Identified::X(k)));
        refs.push((form(&families::y_graph(k)?)?, Identified::Y(k)));
    }
    Ok(refs)
}

fn sweep_order(k: u64, prefilter: bool) -> Result<(Vec<TypeStats>, Vec<VtClass>), VerifyError> {
    let refs = references(k)?;
    let mut stats = Vec::new();
    let mut found: Vec<Candidate> = Vec::new();
    for ty in TricirculantType::ALL {
        let reps = parameter_representatives(ty, k);
        let n = (2 * k) as usize;
        let mut st = TypeStats {
            ty: ty.index(),
            grid: if ty.has_s() { n * n } else { n },
            representatives: reps.len(),
            ..Default::default()
        };
        let outcomes = reps.into_par_iter().map(|p| examine(p, prefilter)).collect::<Result<Vec<_>, _>>()?;
        for o in outcomes {
            match o {
                Outcome::NonSimple => continue,
                Outcome::Disconnected => st.simple += 1,
                Outcome::NotVt => {
                    st.simple += 1;
                    st.connected += 1;
                }
                Outcome::Vt(c) => {
                    st.simple += 1;
                    st.connected += 1;
                    st.vertex_transitive += 1;
                    found.push(c);
                }
            }
        }
        stats.push(st);
    }
    let mut by_form: BTreeMap<String, Vec<Candidate>> = BTreeMap::new();
    for c in found {
        by_form.entry(c.canonical.clone()).or_default().push(c);
    }
    let mut classes: Vec<VtClass> = by_form
        .into_iter()
        .map(|(canon, members)| {
            let types: BTreeSet<_> = members.iter().map(|m| m.params.ty).collect();
            let first = &members[0];
            let identified = refs.iter().find(|(f, _)| *f == canon).map(|(_, id)| id.clone());
            // the cubic arc-transitive graphs of these orders are unique
            let alias = match (first.arc_transitive, 6 * k, first.girth) {
                (true, 6, Some(4)) => Some("K33"),
                (true, 18, Some(6)) => Some("Pappus"),
                (true, 30, Some(8)) => Some("Tutte 8-cage"),
                _ => None,
            };
            VtClass {
                canonical: canon,
                identified,
                alias,
                types: types.into_iter().collect(),
                example: first.params,
                parameter_classes: members.len(),
                arc_transitive: first.arc_transitive,
                girth: first.girth,
                aut_order: first.aut_order.map(|o| o.to_string()),
            }
        })
        .collect();
    classes.sort_by(|a, b| (a.types[0], &a.canonical).cmp(&(b.types[0], &b.canonical)));
    Ok((stats, classes))
}

fn anomalies(k: u64, classes: &[VtClass]) -> (Vec<String>, Vec<String>) {
    let mut anomalies = Vec::new();
    let mut notes = Vec::new();
    for c in classes {
        let name = c.identified.as_ref().map_or_else(|| format!("unidentified class {}", c.canonical), |i| i.to_string());
        for &ty in &c.types {
            let ok = matches!(
                (ty, &c.identified),
                (TricirculantType::T1, Some(Identified::X(_)))
                    | (TricirculantType::T2, Some(Identified::Y(_)))
                    | (TricirculantType::T3, Some(Identified::Prism(_) | Identified::Moebius(_)))
            );
            if !ok {
                anomalies.push(format!("type {ty} vertex-transitive graph {name} (e.g. {})", c.example));
            }
        }
        if k % 2 == 0 && matches!(c.identified, Some(Identified::Prism(_))) {
            notes.push(format!("prism({}) at even k = {k}", 3 * k));
        }
    }
    let mut expected = vec![Identified::Moebius(3 * k)];
    if k % 2 == 1 {
        expected.extend([Identified::X(k), Identified::Y(k), Identified::Prism(3 * k)]);
    }
    for e in expected {
        if !classes.iter().any(|c| c.identified.as_ref() == Some(&e)) {
            anomalies.push(format!("expected class {e} not found"));
        }
    }
    (anomalies, notes)
}

fn guard(k: u64) -> Result<(), VerifyError> {
    if 6 * k > DEFAULT_ORDER_GUARD {
        return Err(VerifyError::GuardExceeded { order: 6 * k, limit: DEFAULT_ORDER_GUARD });
    }
    Ok(())
}

/// Enumerates every type over all parameters for each `k` in range and
/// checks that the vertex-transitive classes are exactly the expected ones.
pub fn classification_sweep(k_min: u64, k_max: u64) -> Result<Vec<SweepReport>, VerifyError> {
    if k_min == 0 || k_min > k_max {
        return Err(VerifyError::InvalidRange(format!("{k_min}..={k_max}")));
    }
    guard(k_max)?;
    (k_min..=k_max)
        .map(|k| {
            let (types, classes) = sweep_order(k, true)?;
            let (anomalies, notes) = anomalies(k, &classes);
            Ok(SweepReport { k, order: 6 * k, types, classes, anomalies, notes })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub order: u64,
    pub types: Vec<TypeStats>,
    pub classes: Vec<VtClass>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub max_order: u64,
    pub rows: Vec<CensusRow>,
}

impl CensusReport {
    pub fn counts(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.classes.len()).collect()
    }

    pub fn total(&self) -> usize {
        self.counts().iter().sum()
    }

    pub fn arc_transitive(&self) -> Vec<(u64, &VtClass)> {
        self.rows.iter().flat_map(|r| r.classes.iter().filter(|c| c.arc_transitive).map(move |c| (r.order, c))).collect()
    }
}

/// All vertex-transitive tricirculants of order `6k <= max_order`, with the
/// set of types each one carries.
pub fn small_census(max_order: u64) -> Result<CensusReport, VerifyError> {
    if max_order % 6 != 0 || max_order == 0 {
        return Err(VerifyError::InvalidRange(format!("max order {max_order} is not a positive multiple of 6")));
    }
    guard(max_order / 6)?;
    let rows = (1..=max_order / 6)
        .map(|k| {
            let (types, classes) = sweep_order(k, true)?;
            Ok(CensusRow { order: 6 * k, types, classes })
        })
        .collect::<Result<_, VerifyError>>()?;
    Ok(CensusReport { max_order, rows })
}

// ---------------------------------------------------------------------------
// lemma spot checks

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpotCheck {
    pub lemma: &'static str,
    pub instance: String,
    pub passed: bool,
    pub detail: String,
}

fn spot(lemma: &'static str, instance: String, passed: bool, detail: String) -> SpotCheck {
    SpotCheck { lemma, instance, passed, detail }
}

fn fibre_counts(g: &SimpleGraph, c: usize) -> [u64; 3] {
    let n = g.num_vertices() / 3;
    [0, n, 2 * n].map(|v| cycles_through_vertex(g, v, c))
}

/// Constructive checks of the small lemmas used in the classification:
///
/// * `r = k` in type 1: not 4-vertex-regular;
/// * `r = 0` in type 1: not 8-cycle-regular;
/// * `2r - 2s + k = 0` in type 1: a 7-cycle exists and 7-vertex-regularity
///   fails;
/// * `Y(k)` is triangle-free;
/// * `x_i -> x_{-i}` is an automorphism of every type-4 graph.
pub fn lemma_spot_checks(ks: &[u64]) -> Result<Vec<SpotCheck>, VerifyError> {
    let mut out = Vec::new();
    for &k in ks {
        let n = 2 * k;
        for s in 0..n {
            for (lemma, r) in [("r = k", k), ("r = 0", 0)] {
                let Ok(inst) = families::t1(k, r, s) else { continue };
                if !inst.connected {
                    continue;
                }
                let g = &inst.graph;
                let (passed, detail) = if r == k {
                    let c = fibre_counts(g, 4);
                    (!symmetry::is_c_vertex_regular(g, 4), format!("4-cycles through u0, v0, w0: {c:?}"))
                } else {
                    let regular = symmetry::is_c_cycle_regular(g, 8)?;
                    (!regular, format!("8-cycle-regular: {regular}"))
                };
                out.push(spot(lemma, inst.params.to_string(), passed, detail));
            }
        }
        for r in 0..n {
            for s in 0..n {
                if SymbolicVoltage::new(1, 2, -2).evaluate(k, r, s) != 0 {
                    continue;
                }
                let Ok(inst) = families::t1(k, r, s) else { continue };
                if !inst.connected {
                    continue;
                }
                let sevens = count_cycles(&inst.graph, 7);
                let regular = symmetry::is_c_vertex_regular(&inst.graph, 7);
                out.push(spot(
                    "2r-2s+k = 0",
                    inst.params.to_string(),
                    sevens > 0 && !regular,
                    format!("{sevens} 7-cycles, 7-vertex-regular: {regular}"),
                ));
            }
        }
        if k % 2 == 1 && k >= 3 {
            let y = families::y_graph(k)?;
            let triangles = count_cycles(&y, 3);
            out.push(spot("triangle-free", format!("Y({k})"), triangles == 0, format!("{triangles} triangles")));
        }
        let refl = families::family_automorphism(FamilyAutomorphism::Reflection, k)?;
        let (mut total, mut good) = (0, 0);
        for r in 0..n {
            for s in 0..n {
                if let Ok(inst) = families::t4(k, r, s) {
                    total += 1;
                    good += usize::from(refl.is_automorphism(&inst.graph));
                }
            }
        }
        out.push(spot("reflection", format!("all simple T4({k},r,s)"), good == total, format!("{good}/{total} preserved")));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// reports

/// Any report the harness emits, tagged by `kind`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Report {
    Sweep(SweepReport),
    Census(CensusReport),
    Lemmas { checks: Vec<SpotCheck> },
}

impl Report {
    fn sort_key(&self) -> (u8, u64) {
        match self {
            Report::Census(c) => (0, c.max_order),
            Report::Sweep(s) => (1, s.order),
            Report::Lemmas { .. } => (2, 0),
        }
    }

    pub fn anomalies(&self) -> &[String] {
        match self {
            Report::Sweep(s) => &s.anomalies,
            _ => &[],
        }
    }
}

/// Sorts reports into their canonical order (census, sweeps by order,
/// lemma checks) and emits them.
pub fn emit_reports(mut reports: Vec<Report>) -> String {
    reports.sort_by_key(Report::sort_key);
    report_emit(&reports)
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema: u32,
    reports: &'a [T],
}

/// Compact, schema-versioned JSON.
pub fn report_emit<T: Serialize>(reports: &[T]) -> String {
    serde_json::to_string(&Envelope { schema: 1, reports }).expect("reports serialise")
}
