//! Binomial and parity binomial edge ideals, the bipartite swap `Φ`, and
//! the oracle pipeline `G -> I -> I^t -> Betti table`.
//!
//! The ambient ring is `F_p[x_1..x_n, y_1..y_n]` with `x_i` at index `i-1`
//! and `y_i` at index `n+i-1`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::ideal::{check_obs24, is_d_sequence, is_regular_sequence, Ideal};
use crate::poly::{Polynomial, PrimeField, Ring};
use crate::resolution::{betti_table, BettiTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeIdealKind {
    Binomial,
    Parity,
}

impl EdgeIdealKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeIdealKind::Binomial => "binomial",
            EdgeIdealKind::Parity => "parity",
        }
    }
}

impl std::str::FromStr for EdgeIdealKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "binomial" => Ok(EdgeIdealKind::Binomial),
            "parity" => Ok(EdgeIdealKind::Parity),
            _ => Err(format!("unknown ideal kind '{s}' (expected binomial or parity)")),
        }
    }
}

fn check_field(kind: EdgeIdealKind, field: PrimeField) -> Result<()> {
    if kind == EdgeIdealKind::Parity && field.characteristic() == 2 {
        return Err(Error::InvalidCharacteristic(2, "parity binomial edge ideals need odd characteristic"));
    }
    Ok(())
}

fn x(n: usize, i: usize) -> Vec<u32> {
    let mut e = vec![0; 2 * n];
    e[i - 1] = 1;
    e
}

fn y(n: usize, i: usize) -> Vec<u32> {
    let mut e = vec![0; 2 * n];
    e[n + i - 1] = 1;
    e
}

fn times(a: Vec<u32>, b: Vec<u32>) -> Vec<u32> {
    a.iter().zip(&b).map(|(p, q)| p + q).collect()
}

/// `f_e = x_i y_j - x_j y_i` or `ḡ_e = x_i x_j - y_i y_j` for `e = {i, j}`, `i < j`.
pub fn generator(ring: &Arc<Ring>, kind: EdgeIdealKind, e: Edge) -> Result<Polynomial> {
    let n = ring.nvars() / 2;
    let (i, j) = (e.0.min(e.1), e.0.max(e.1));
    if i == 0 || j > n || i == j {
        return Err(Error::InvalidGraph(format!("edge {{{i}, {j}}} does not fit a ring on {n} vertices")));
    }
    let terms = match kind {
        EdgeIdealKind::Binomial => vec![(1, times(x(n, i), y(n, j))), (-1, times(x(n, j), y(n, i)))],
        EdgeIdealKind::Parity => vec![(1, times(x(n, i), x(n, j))), (-1, times(y(n, i), y(n, j)))],
    };
    ring.polynomial(&terms)
}

/// Generators for the edges in the given order; an empty list gives the zero ideal.
pub fn ideal_from_edges(ring: &Arc<Ring>, kind: EdgeIdealKind, edges: &[Edge]) -> Result<Ideal> {
    check_field(kind, ring.field())?;
    let gens = edges.iter().map(|&e| generator(ring, kind, e)).collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, gens)
}

/// `J_G` or `I_G` with one generator per edge, edges in lexicographic order.
pub fn build_ideal(g: &Graph, kind: EdgeIdealKind, field: PrimeField) -> Result<Ideal> {
    if g.edge_count() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    check_field(kind, field)?;
    let ring = Ring::edge_ring(g.n(), field)?;
    ideal_from_edges(&ring, kind, &g.edges())
}

/// Variable permutation of `Φ`: `x_i <-> y_i` for every `i ∈ V₂`.
fn phi_permutation(nvars: usize, v2: &[usize]) -> Result<Vec<usize>> {
    let n = nvars / 2;
    let mut perm: Vec<usize> = (0..nvars).collect();
    for &i in v2 {
        if i == 0 || i > n {
            return Err(Error::InvalidGraph(format!("vertex {i} outside 1..={n}")));
        }
        perm.swap(i - 1, n + i - 1);
    }
    Ok(perm)
}

/// `Φ(f)` for the bipartition `(V₁, V₂)`; only `V₂` matters.
pub fn phi_map(f: &Polynomial, bipartition: &(Vec<usize>, Vec<usize>)) -> Result<Polynomial> {
    let perm = phi_permutation(f.ring().nvars(), &bipartition.1)?;
    f.permute_variables(&perm)
}

/// `Φ` applied to every generator.
pub fn phi_ideal(i: &Ideal, bipartition: &(Vec<usize>, Vec<usize>)) -> Result<Ideal> {
    let perm = phi_permutation(i.ring().nvars(), &bipartition.1)?;
    i.map(|f| f.permute_variables(&perm))
}

/// Betti table of `S/I^t`.
pub fn oracle_betti(g: &Graph, kind: EdgeIdealKind, t: u32, field: PrimeField, budget: &Budget) -> Result<BettiTable> {
    if t == 0 {
        return Err(Error::PowerOutOfRange(0));
    }
    let i = build_ideal(g, kind, field)?;
    let it = if t == 1 { i } else { i.power(t) };
    betti_table(&it, budget)
}

/// `reg(S/I^t)` computed from the minimal free resolution.
pub fn oracle_regularity(g: &Graph, kind: EdgeIdealKind, t: u32, field: PrimeField, budget: &Budget) -> Result<i64> {
    oracle_betti(g, kind, t, field, budget)?
        .regularity()
        .ok_or_else(|| Error::PreconditionViolated("power is the unit ideal".into()))
}

/// Both sides of `I_{G∖e} : ḡ_e = Φ(J_{(G∖e)_e})` with `Φ` for the bipartition of `G∖e`.
pub fn colon_lemma_sides(g: &Graph, e: Edge, field: PrimeField, budget: &Budget) -> Result<(Ideal, Ideal)> {
    if g.is_bipartite() {
        return Err(Error::PreconditionViolated("graph is bipartite".into()));
    }
    let h = g.delete_edge(e)?;
    let bip = h
        .bipartition()
        .ok_or_else(|| Error::PreconditionViolated(format!("G minus {{{}, {}}} is not bipartite", e.0, e.1)))?;
    check_field(EdgeIdealKind::Parity, field)?;
    let ring = Ring::edge_ring(g.n(), field)?;
    let ge = generator(&ring, EdgeIdealKind::Parity, e)?;
    let lhs = ideal_from_edges(&ring, EdgeIdealKind::Parity, &h.edges())?.colon(&ge, budget)?;
    let completed = h.edge_completion(e)?;
    let rhs = phi_ideal(&ideal_from_edges(&ring, EdgeIdealKind::Binomial, &completed.edges())?, &bip)?;
    Ok((lhs, rhs))
}

/// Checks the colon identity by comparing reduced Gröbner bases.
pub fn verify_colon_lemma(g: &Graph, e: Edge, field: PrimeField, budget: &Budget) -> Result<bool> {
    let (lhs, rhs) = colon_lemma_sides(g, e, field, budget)?;
    lhs.equals(&rhs, budget)
}

/// Edges of `h` in traversal order: per component, a depth-first walk from an
/// end vertex (or the smallest vertex) preferring smaller neighbours.
pub fn traversal_order(h: &Graph) -> Vec<Edge> {
    let mut out: Vec<Edge> = Vec::new();
    let mut visited = vec![false; h.n() + 1];
    for comp in h.components() {
        let vs = crate::graph::mask_vertices(comp);
        let start = vs.iter().copied().find(|&v| h.degree(v) == 1).unwrap_or(vs[0]);
        let mut stack = vec![start];
        while let Some(&v) = stack.last() {
            visited[v] = true;
            let mut advanced = false;
            for w in h.neighbors(v) {
                let e = (v.min(w), v.max(w));
                if out.contains(&e) {
                    continue;
                }
                out.push(e);
                if !visited[w] {
                    stack.push(w);
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                stack.pop();
            }
        }
    }
    out
}

/// Natural generator order: edges of `G∖e` in traversal order, then `e`.
pub fn natural_order(g: &Graph, e: Edge) -> Result<Vec<Edge>> {
    let h = g.delete_edge(e)?;
    let mut order = traversal_order(&h);
    order.push((e.0.min(e.1), e.0.max(e.1)));
    Ok(order)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obs24Check {
    pub i: usize,
    pub t: u32,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DSeqReport {
    pub kind: EdgeIdealKind,
    pub order: Vec<Edge>,
    /// The first `|E| - 1` natural generators form a regular sequence.
    pub prefix_regular: bool,
    /// All natural generators, witness last, form a d-sequence.
    pub d_sequence: bool,
    pub obs24: Vec<Obs24Check>,
}

impl DSeqReport {
    /// `false` means the check failed on natural generators; the family formulas
    /// may still hold through other generators.
    pub fn hypotheses_hold(&self) -> bool {
        self.prefix_regular && self.d_sequence && self.obs24.iter().all(|c| c.holds)
    }
}

/// Sequence checks on the natural generators ordered with the witness edge
/// last, plus `((u_1..u_{i-1}) + U^t) : u_i = ((u_1..u_{i-1}) : u_i) + U^{t-1}`
/// for each `t` in `obs_powers` and every index `i`.
pub fn verify_dseq_hypotheses(
    g: &Graph,
    kind: EdgeIdealKind,
    e: Edge,
    obs_powers: &[u32],
    field: PrimeField,
    budget: &Budget,
) -> Result<DSeqReport> {
    check_field(kind, field)?;
    let order = natural_order(g, e)?;
    let ring = Ring::edge_ring(g.n(), field)?;
    let gens = order.iter().map(|&f| generator(&ring, kind, f)).collect::<Result<Vec<_>>>()?;
    let prefix_regular = is_regular_sequence(&gens[..gens.len() - 1], budget)?;
    let d_sequence = is_d_sequence(&gens, budget)?;
    let mut obs24 = Vec::new();
    for &t in obs_powers {
        for i in 1..=gens.len() {
            obs24.push(Obs24Check { i, t, holds: check_obs24(&gens, i, t, budget)? });
        }
    }
    Ok(DSeqReport { kind, order, prefix_regular, d_sequence, obs24 })
}
