//! Combinatorial recognition of graphs whose binomial edge ideal `J_G` or
//! parity binomial edge ideal `I_G` is a complete intersection (CI) or an
//! almost complete intersection (ACI).
//!
//! Connected components are matched against the structural families; a
//! disconnected graph is ACI when exactly one component is ACI and all
//! others are CI. Every ACI verdict carries a [`Structure`] witness.
//! When several edges qualify as the witness the lexicographically smallest
//! is used.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{mask_vertices, Edge, Girth, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BinomialVerdict {
    #[serde(rename = "CI_Paths")]
    CiPaths,
    #[serde(rename = "ACI_Cycle")]
    AciCycle,
    #[serde(rename = "ACI_Balloon")]
    AciBalloon,
    #[serde(rename = "ACI_G2Type")]
    AciG2Type,
    #[serde(rename = "ACI_C3Type")]
    AciC3Type,
    #[serde(rename = "ACI_TTypeTree")]
    AciTTypeTree,
    #[serde(rename = "ACI_HTypeTree")]
    AciHTypeTree,
    #[serde(rename = "NotACI")]
    NotAci,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ParityVerdict {
    #[serde(rename = "CI_PathsAndOddCycles")]
    CiPathsAndOddCycles,
    #[serde(rename = "ACI_BipartiteTree")]
    AciBipartiteTree,
    #[serde(rename = "ACI_BipartiteUnicyclic")]
    AciBipartiteUnicyclic,
    #[serde(rename = "ACI_OddBalloon")]
    AciOddBalloon,
    #[serde(rename = "ACI_OddCycleInternalPath")]
    AciOddCycleInternalPath,
    #[serde(rename = "ACI_G2Odd")]
    AciG2Odd,
    #[serde(rename = "ACI_TrianglePaths")]
    AciTrianglePaths,
    #[serde(rename = "ACI_TwoOddCyclesBridge")]
    AciTwoOddCyclesBridge,
    #[serde(rename = "ACI_ChordOddCycle")]
    AciChordOddCycle,
    #[serde(rename = "ACI_ChordEvenCycle")]
    AciChordEvenCycle,
    #[serde(rename = "ACI_ChordEvenCyclePlusPath")]
    AciChordEvenCyclePlusPath,
    #[serde(rename = "NotACI")]
    NotAci,
}

impl BinomialVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::CiPaths => "CI_Paths",
            Self::AciCycle => "ACI_Cycle",
            Self::AciBalloon => "ACI_Balloon",
            Self::AciG2Type => "ACI_G2Type",
            Self::AciC3Type => "ACI_C3Type",
            Self::AciTTypeTree => "ACI_TTypeTree",
            Self::AciHTypeTree => "ACI_HTypeTree",
            Self::NotAci => "NotACI",
        }
    }

    pub fn is_ci(self) -> bool {
        self == Self::CiPaths
    }

    pub fn is_aci(self) -> bool {
        !matches!(self, Self::CiPaths | Self::NotAci)
    }
}

impl ParityVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::CiPathsAndOddCycles => "CI_PathsAndOddCycles",
            Self::AciBipartiteTree => "ACI_BipartiteTree",
            Self::AciBipartiteUnicyclic => "ACI_BipartiteUnicyclic",
            Self::AciOddBalloon => "ACI_OddBalloon",
            Self::AciOddCycleInternalPath => "ACI_OddCycleInternalPath",
            Self::AciG2Odd => "ACI_G2Odd",
            Self::AciTrianglePaths => "ACI_TrianglePaths",
            Self::AciTwoOddCyclesBridge => "ACI_TwoOddCyclesBridge",
            Self::AciChordOddCycle => "ACI_ChordOddCycle",
            Self::AciChordEvenCycle => "ACI_ChordEvenCycle",
            Self::AciChordEvenCyclePlusPath => "ACI_ChordEvenCyclePlusPath",
            Self::NotAci => "NotACI",
        }
    }

    pub fn is_ci(self) -> bool {
        self == Self::CiPathsAndOddCycles
    }

    pub fn is_aci(self) -> bool {
        !matches!(self, Self::CiPathsAndOddCycles | Self::NotAci)
    }
}

impl fmt::Display for BinomialVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Display for ParityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Decomposition witness of an ACI component, in the original labels.
///
/// `paths` are the tails for unicyclic shapes (ordered outward from the
/// attachment vertex, which is not included), the two joined paths for
/// trees, and empty otherwise.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Structure {
    /// The added edge, chord, bridge or joining edge.
    pub witness_edge: Option<Edge>,
    pub cycles: Vec<Vec<usize>>,
    pub paths: Vec<Vec<usize>>,
    /// Attachment vertices matching `paths` (unicyclic shapes only).
    pub attachments: Vec<usize>,
}

/// Parameters extracted while classifying.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassParams {
    pub n: usize,
    pub edges: usize,
    pub girth: Girth,
    pub iv: usize,
    pub bipartite: bool,
    pub connected: bool,
    /// Vertices of the graph with at least one edge.
    pub active_vertices: usize,
    /// Whether the non-isolated vertices form one component.
    pub active_connected: bool,
    pub subtype: Option<String>,
    pub cycle_length: Option<usize>,
    pub path_lengths: Vec<usize>,
    pub structure: Option<Structure>,
    /// Vertices of the ACI component.
    pub component: Option<Vec<usize>>,
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialClass {
    pub verdict: BinomialVerdict,
    pub params: ClassParams,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityClass {
    pub verdict: ParityVerdict,
    pub params: ClassParams,
}

impl BinomialClass {
    /// Verdict with subtype, e.g. `ACI_C3Type-degenerate`.
    pub fn label(&self) -> String {
        label(self.verdict.as_str(), &self.params)
    }
}

impl ParityClass {
    pub fn label(&self) -> String {
        label(self.verdict.as_str(), &self.params)
    }
}

fn label(v: &str, p: &ClassParams) -> String {
    match &p.subtype {
        Some(s) => format!("{v}-{s}"),
        None => v.to_string(),
    }
}

/// Either classifier's verdict, for [`decompose_structure`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Binomial(BinomialVerdict),
    Parity(ParityVerdict),
}

/// Outcome for a single connected component.
struct Found<V> {
    verdict: V,
    subtype: Option<&'static str>,
    structure: Structure,
}

fn found<V>(verdict: V, subtype: Option<&'static str>, structure: Structure) -> Found<V> {
    Found { verdict, subtype, structure }
}

fn edge(a: usize, b: usize) -> Edge {
    (a.min(b), a.max(b))
}

fn component_edges(g: &Graph, comp: u64) -> Vec<Edge> {
    g.edges().into_iter().filter(|&(i, _)| comp & (1 << (i - 1)) != 0).collect()
}

/// Vertices of a path component in order, starting from the smaller end.
fn path_order(g: &Graph, comp: u64) -> Vec<usize> {
    let vs = mask_vertices(comp);
    let start = vs.iter().copied().find(|&v| g.degree(v) <= 1).unwrap_or(vs[0]);
    walk(g, start, 0, comp)
}

/// Walks from `start` away from `prev` while the next vertex is unique.
fn walk(g: &Graph, start: usize, prev: usize, within: u64) -> Vec<usize> {
    let mut out = vec![start];
    let (mut p, mut v) = (prev, start);
    loop {
        let next: Vec<usize> =
            g.neighbors(v).into_iter().filter(|&w| w != p && within & (1 << (w - 1)) != 0 && !out.contains(&w)).collect();
        if next.len() != 1 {
            return out;
        }
        p = v;
        v = next[0];
        out.push(v);
    }
}

/// The unique cycle of a unicyclic component, from its smallest vertex
/// towards the smaller neighbour.
fn unique_cycle(g: &Graph, comp: u64) -> Vec<usize> {
    let mut alive = comp;
    loop {
        let leaves: Vec<usize> =
            mask_vertices(alive).into_iter().filter(|&v| (g.neighbor_mask(v) & alive).count_ones() <= 1).collect();
        if leaves.is_empty() {
            break;
        }
        for v in leaves {
            alive &= !(1 << (v - 1));
        }
    }
    let vs = mask_vertices(alive);
    let s = vs[0];
    let first = mask_vertices(g.neighbor_mask(s) & alive)[0];
    let mut out = vec![s];
    out.extend(walk(g, first, s, alive & !(1 << (s - 1))));
    out
}

/// A unicyclic component split into its cycle and the trees hanging off it.
struct Unicyclic {
    cycle: Vec<usize>,
    cycle_mask: u64,
    /// `(attachment, vertices of the hanging tree)` for every cycle vertex with one.
    hangs: Vec<(usize, u64)>,
}

fn unicyclic(g: &Graph, comp: u64) -> Unicyclic {
    let cycle = unique_cycle(g, comp);
    let cycle_mask: u64 = cycle.iter().map(|&v| 1u64 << (v - 1)).sum();
    let rest = comp & !cycle_mask;
    let mut hangs = Vec::new();
    for &c in &cycle {
        let off = g.neighbor_mask(c) & rest;
        if off != 0 {
            let mut tree = off;
            let mut frontier = off;
            while frontier != 0 {
                let mut next = 0;
                for v in mask_vertices(frontier) {
                    next |= g.neighbor_mask(v);
                }
                next &= rest & !tree;
                tree |= next;
                frontier = next;
            }
            hangs.push((c, tree));
        }
    }
    Unicyclic { cycle, cycle_mask, hangs }
}

impl Unicyclic {
    /// The tail at `c` if the hanging tree is a path attached at one end.
    fn tail(&self, g: &Graph, c: usize, tree: u64) -> Option<Vec<usize>> {
        let off = g.neighbor_mask(c) & !self.cycle_mask;
        if off.count_ones() != 1 {
            return None;
        }
        let start = off.trailing_zeros() as usize + 1;
        let path = walk(g, start, c, tree);
        (path.len() == tree.count_ones() as usize && path.iter().all(|&v| g.degree(v) <= 2)).then_some(path)
    }

    fn adjacent_on_cycle(&self, a: usize, b: usize) -> bool {
        let k = self.cycle.len();
        let (i, j) = (self.cycle.iter().position(|&v| v == a), self.cycle.iter().position(|&v| v == b));
        match (i, j) {
            (Some(i), Some(j)) => (i + 1) % k == j || (j + 1) % k == i,
            _ => false,
        }
    }

    /// Cycle edges at `c`, smallest first.
    fn cycle_edges_at(&self, c: usize) -> Vec<Edge> {
        let k = self.cycle.len();
        let i = self.cycle.iter().position(|&v| v == c).unwrap();
        let mut es = vec![edge(c, self.cycle[(i + 1) % k]), edge(c, self.cycle[(i + k - 1) % k])];
        es.sort_unstable();
        es
    }

    fn smallest_cycle_edge(&self) -> Edge {
        let k = self.cycle.len();
        (0..k).map(|i| edge(self.cycle[i], self.cycle[(i + 1) % k])).min().unwrap()
    }

    /// Every hanging tree is a path attached by one edge.
    fn tails(&self, g: &Graph) -> Option<Vec<(usize, Vec<usize>)>> {
        self.hangs.iter().map(|&(c, t)| self.tail(g, c, t).map(|p| (c, p))).collect()
    }
}

/// Cycle, balloon or G₂ shape: a path plus one edge. Triangles are left to the caller.
enum PathPlusEdge {
    Cycle(Structure),
    Balloon(Structure),
    G2(Structure),
}

fn path_plus_edge(g: &Graph, u: &Unicyclic) -> Option<PathPlusEdge> {
    let tails = u.tails(g)?;
    let mut s = Structure { cycles: vec![u.cycle.clone()], ..Structure::default() };
    match tails.as_slice() {
        [] => {
            s.witness_edge = Some(u.smallest_cycle_edge());
            Some(PathPlusEdge::Cycle(s))
        }
        [(c, p)] => {
            s.witness_edge = Some(u.cycle_edges_at(*c)[0]);
            s.attachments = vec![*c];
            s.paths = vec![p.clone()];
            Some(PathPlusEdge::Balloon(s))
        }
        [(a, p), (b, q)] if u.adjacent_on_cycle(*a, *b) => {
            s.witness_edge = Some(edge(*a, *b));
            s.attachments = vec![*a, *b];
            s.paths = vec![p.clone(), q.clone()];
            Some(PathPlusEdge::G2(s))
        }
        _ => None,
    }
}

/// A triangle with a (possibly empty) path at each vertex.
fn triangle_with_paths(g: &Graph, u: &Unicyclic) -> Option<Structure> {
    if u.cycle.len() != 3 {
        return None;
    }
    let tails = u.tails(g)?;
    let mut paths = Vec::new();
    for &c in &u.cycle {
        paths.push(tails.iter().find(|(a, _)| *a == c).map(|(_, p)| p.clone()).unwrap_or_default());
    }
    Some(Structure {
        witness_edge: Some(u.smallest_cycle_edge()),
        cycles: vec![u.cycle.clone()],
        paths,
        attachments: u.cycle.clone(),
    })
}

/// A tree made of two disjoint paths and one joining edge, not itself a path.
/// Returns the structure and whether both ends of the joining edge are internal.
fn two_paths_plus_edge(g: &Graph, comp: u64) -> Option<(Structure, bool)> {
    let vs = mask_vertices(comp);
    if vs.iter().any(|&v| g.degree(v) > 3) {
        return None;
    }
    let big: Vec<usize> = vs.iter().copied().filter(|&v| g.degree(v) == 3).collect();
    let (e, h_type) = match big.as_slice() {
        [c] => {
            let w = g.neighbors(*c)[0];
            (edge(*c, w), false)
        }
        [a, b] if g.has_edge(*a, *b) => (edge(*a, *b), true),
        _ => return None,
    };
    let h = g.delete_edge(e).ok()?;
    let paths: Vec<Vec<usize>> = h
        .components()
        .into_iter()
        .filter(|&c| c & comp == c && c & ((1 << (e.0 - 1)) | (1 << (e.1 - 1))) != 0)
        .map(|c| path_order(&h, c))
        .collect();
    Some((Structure { witness_edge: Some(e), paths, ..Structure::default() }, h_type))
}

fn classify_binomial_component(g: &Graph, comp: u64) -> Found<BinomialVerdict> {
    use BinomialVerdict::*;
    let k = comp.count_ones() as usize;
    let m = component_edges(g, comp).len();
    let h = g.induced_subgraph(comp);
    if h.is_path() {
        let s = Structure { paths: vec![path_order(g, comp)], ..Structure::default() };
        return found(CiPaths, None, s);
    }
    if m == k {
        let u = unicyclic(g, comp);
        // triangles go to the C₃ family first, so G₂ and balloons here have girth >= 4
        if let Some(s) = triangle_with_paths(g, &u) {
            let degenerate = s.paths.iter().any(Vec::is_empty);
            return found(AciC3Type, degenerate.then_some("degenerate"), s);
        }
        return match path_plus_edge(g, &u) {
            Some(PathPlusEdge::Cycle(s)) => found(AciCycle, None, s),
            Some(PathPlusEdge::Balloon(s)) => found(AciBalloon, None, s),
            Some(PathPlusEdge::G2(s)) => found(AciG2Type, None, s),
            None => found(NotAci, None, Structure::default()),
        };
    }
    if m + 1 == k {
        if let Some((s, h_type)) = two_paths_plus_edge(g, comp) {
            return if h_type { found(AciHTypeTree, Some("H"), s) } else { found(AciTTypeTree, Some("T"), s) };
        }
    }
    found(NotAci, None, Structure::default())
}

fn classify_parity_component(g: &Graph, comp: u64) -> Found<ParityVerdict> {
    use ParityVerdict::*;
    let k = comp.count_ones() as usize;
    let m = component_edges(g, comp).len();
    let h = g.induced_subgraph(comp);
    let not = || found(NotAci, None, Structure::default());
    if h.is_bipartite() {
        if h.is_path() {
            let s = Structure { paths: vec![path_order(g, comp)], ..Structure::default() };
            return found(CiPathsAndOddCycles, None, s);
        }
        if m + 1 == k {
            return match two_paths_plus_edge(g, comp) {
                Some((s, true)) => found(AciBipartiteTree, Some("H"), s),
                Some((s, false)) => found(AciBipartiteTree, Some("T"), s),
                None => not(),
            };
        }
        if m == k {
            return match path_plus_edge(g, &unicyclic(g, comp)) {
                Some(PathPlusEdge::Cycle(s)) => found(AciBipartiteUnicyclic, Some("even-cycle"), s),
                Some(PathPlusEdge::Balloon(s)) => found(AciBipartiteUnicyclic, Some("balloon"), s),
                Some(PathPlusEdge::G2(s)) => found(AciBipartiteUnicyclic, Some("g2"), s),
                None => not(),
            };
        }
        return not();
    }
    if h.is_cycle() {
        let s = Structure { cycles: vec![unique_cycle(g, comp)], ..Structure::default() };
        return found(CiPathsAndOddCycles, None, s);
    }
    if m == k {
        let u = unicyclic(g, comp);
        if let Some(s) = triangle_with_paths(g, &u) {
            if s.paths.iter().all(|p| !p.is_empty()) {
                return found(AciTrianglePaths, None, s);
            }
        }
        match path_plus_edge(g, &u) {
            Some(PathPlusEdge::Balloon(s)) => return found(AciOddBalloon, None, s),
            Some(PathPlusEdge::G2(s)) => return found(AciG2Odd, None, s),
            Some(PathPlusEdge::Cycle(_)) => unreachable!("odd cycles are handled above"),
            None => {}
        }
        return odd_cycle_internal_path(g, &u).map_or_else(not, |s| found(AciOddCycleInternalPath, None, s));
    }
    if m == k + 1 {
        for e in component_edges(g, comp) {
            let rest = g.delete_edge(e).unwrap();
            let parts: Vec<u64> = rest.components().into_iter().filter(|c| c & comp != 0).collect();
            let cycles: Vec<Graph> = parts.iter().map(|&c| rest.induced_subgraph(c)).collect();
            if parts.len() == 2 && cycles.iter().all(|c| c.is_cycle() && c.n() % 2 == 1) {
                let s = Structure {
                    witness_edge: Some(e),
                    cycles: parts.iter().map(|&c| unique_cycle(&rest, c)).collect(),
                    ..Structure::default()
                };
                return found(AciTwoOddCyclesBridge, None, s);
            }
            if parts.len() != 1 {
                continue;
            }
            let hh = &cycles[0];
            if hh.is_cycle() {
                let s = Structure {
                    witness_edge: Some(e),
                    cycles: vec![unique_cycle(&rest, parts[0])],
                    ..Structure::default()
                };
                return if k % 2 == 1 { found(AciChordOddCycle, None, s) } else { found(AciChordEvenCycle, None, s) };
            }
            if hh.edge_count() == hh.n() && hh.is_bipartite() {
                let u = unicyclic(&rest, parts[0]);
                if let Some(PathPlusEdge::Balloon(mut s)) = path_plus_edge(&rest, &u) {
                    let i = s.attachments[0];
                    let (a, b) = e;
                    let spans = u.adjacent_on_cycle(a, i)
                        && u.adjacent_on_cycle(b, i)
                        && rest.degree(a) == 2
                        && rest.degree(b) == 2;
                    if spans {
                        s.witness_edge = Some(e);
                        return found(AciChordEvenCyclePlusPath, None, s);
                    }
                }
            }
        }
    }
    not()
}

/// An odd cycle joined by one edge `{c, p}` to an internal vertex `p` of a path.
fn odd_cycle_internal_path(g: &Graph, u: &Unicyclic) -> Option<Structure> {
    let [(c, tree)] = u.hangs.as_slice() else { return None };
    let off = g.neighbor_mask(*c) & !u.cycle_mask;
    if off.count_ones() != 1 {
        return None;
    }
    let p = off.trailing_zeros() as usize + 1;
    if g.degree(p) != 3 || mask_vertices(*tree).iter().any(|&v| v != p && g.degree(v) > 2) {
        return None;
    }
    let legs: Vec<Vec<usize>> = g.neighbors(p).into_iter().filter(|&w| w != *c).map(|w| walk(g, w, p, *tree)).collect();
    if legs.iter().map(Vec::len).sum::<usize>() + 1 != tree.count_ones() as usize {
        return None;
    }
    let mut path: Vec<usize> = legs[0].iter().rev().copied().collect();
    path.push(p);
    path.extend(&legs[1]);
    Some(Structure {
        witness_edge: Some(edge(*c, p)),
        cycles: vec![u.cycle.clone()],
        paths: vec![path],
        attachments: vec![*c],
    })
}

fn base_params(g: &Graph) -> ClassParams {
    let comps = g.components();
    let active: Vec<u64> = comps.iter().copied().filter(|c| c.count_ones() > 1).collect();
    ClassParams {
        n: g.n(),
        edges: g.edge_count(),
        girth: g.girth(),
        iv: g.internal_vertex_count(),
        bipartite: g.is_bipartite(),
        connected: comps.len() == 1,
        active_vertices: active.iter().map(|c| c.count_ones() as usize).sum(),
        active_connected: active.len() == 1,
        subtype: None,
        cycle_length: None,
        path_lengths: Vec::new(),
        structure: None,
        component: None,
        reason: None,
    }
}

/// Combines per-component outcomes: CI iff all CI; ACI iff exactly one ACI.
fn combine<V: Copy + PartialEq>(
    g: &Graph,
    per: Vec<(u64, Found<V>)>,
    ci: V,
    not: V,
    is_aci: impl Fn(V) -> bool,
) -> (V, ClassParams) {
    let mut params = base_params(g);
    if g.edge_count() == 0 {
        params.reason = Some("no edges".into());
        return (not, params);
    }
    let bad: Vec<&(u64, Found<V>)> = per.iter().filter(|(_, f)| f.verdict == not).collect();
    let aci: Vec<&(u64, Found<V>)> = per.iter().filter(|(_, f)| is_aci(f.verdict)).collect();
    if let Some((c, _)) = bad.first() {
        params.reason = Some(format!("component {:?} is in no CI or ACI family", mask_vertices(*c)));
        return (not, params);
    }
    match aci.as_slice() {
        [] => {
            params.path_lengths = per
                .iter()
                .flat_map(|(_, f)| f.structure.paths.iter().map(|p| p.len().saturating_sub(1)))
                .collect();
            (ci, params)
        }
        [(c, f)] => {
            params.subtype = f.subtype.map(str::to_string);
            params.cycle_length = f.structure.cycles.first().map(Vec::len);
            params.path_lengths = f.structure.paths.iter().map(Vec::len).collect();
            params.structure = Some(f.structure.clone());
            params.component = Some(mask_vertices(*c));
            (f.verdict, params)
        }
        _ => {
            params.reason = Some(format!("{} components are ACI; at most one may be", aci.len()));
            (not, params)
        }
    }
}

/// Classification of `J_G`.
pub fn classify_binomial(g: &Graph) -> BinomialClass {
    let per = g.components().into_iter().map(|c| (c, classify_binomial_component(g, c))).collect();
    let (verdict, mut params) = combine(g, per, BinomialVerdict::CiPaths, BinomialVerdict::NotAci, BinomialVerdict::is_aci);
    if verdict == BinomialVerdict::CiPaths {
        params.reason = None;
    }
    BinomialClass { verdict, params }
}

/// Classification of `I_G`.
pub fn classify_parity(g: &Graph) -> ParityClass {
    let per = g.components().into_iter().map(|c| (c, classify_parity_component(g, c))).collect();
    let (verdict, params) =
        combine(g, per, ParityVerdict::CiPathsAndOddCycles, ParityVerdict::NotAci, ParityVerdict::is_aci);
    ParityClass { verdict, params }
}

/// The witness for an ACI verdict; errors when `g` does not have that verdict.
pub fn decompose_structure(g: &Graph, family: Family) -> Result<Structure> {
    let (actual, params, aci) = match family {
        Family::Binomial(v) => {
            let c = classify_binomial(g);
            (Family::Binomial(c.verdict), c.params, v.is_aci())
        }
        Family::Parity(v) => {
            let c = classify_parity(g);
            (Family::Parity(c.verdict), c.params, v.is_aci())
        }
    };
    if !aci {
        return Err(Error::WitnessNotFound("only ACI verdicts carry a witness".into()));
    }
    if actual != family {
        return Err(Error::WitnessNotFound(format!("graph does not have verdict {family:?}")));
    }
    params.structure.ok_or_else(|| Error::WitnessNotFound("classifier produced no structure".into()))
}
