//! Closed-form regularity of powers.
//!
//! Two layers: evaluators for powers of an ideal `U = (u_1, ..., u_n)`
//! generated by a homogeneous d-sequence of degree `δ` whose first `n - 1`
//! elements form a regular sequence, and per-family predictions for
//! `reg(S/J_G^t)` and `reg(S/I_G^t)` built on them.
//!
//! A family prediction is a list of affine pieces `a·t + b`, each valid on a
//! range of `t`. Pieces that only pin down `t = 1` have `valid_to = Some(1)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::taxonomy::{BinomialClass, BinomialVerdict, ClassParams, ParityClass, ParityVerdict};

/// Inputs of the d-sequence evaluators. `n` counts generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DSeqParams {
    pub n: i64,
    pub delta: i64,
    /// `reg(R/U)`.
    pub reg_u: Option<i64>,
    /// `reg(R/((u_1, ..., u_{n-1}) : u_n))`.
    pub b: Option<i64>,
}

impl DSeqParams {
    pub fn new(n: i64, delta: i64) -> DSeqParams {
        DSeqParams { n, delta, reg_u: None, b: None }
    }

    pub fn with_reg_u(mut self, r: i64) -> Self {
        self.reg_u = Some(r);
        self
    }

    pub fn with_b(mut self, b: i64) -> Self {
        self.b = Some(b);
        self
    }

    fn check(&self) -> Result<()> {
        if self.delta < 2 || self.n < 1 {
            return Err(Error::PreconditionViolated(format!("need δ >= 2 and n >= 1, got δ={} n={}", self.delta, self.n)));
        }
        Ok(())
    }

    /// `nδ - n - δ`, the threshold of the low-regularity case.
    fn low(&self) -> i64 {
        self.n * self.delta - self.n - self.delta
    }

    /// `(n-1)(δ-1)`, the regularity of `R/(u_1, ..., u_{n-1})`.
    fn gap(&self) -> i64 {
        (self.n - 1) * (self.delta - 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Proven,
    Conjectured,
    Unavailable,
}

/// `reg = slope·t + intercept` for `valid_from <= t <= valid_to`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityPrediction {
    pub slope: i64,
    pub intercept: i64,
    pub valid_from: i64,
    pub valid_to: Option<i64>,
    pub status: Status,
    pub source: String,
}

impl RegularityPrediction {
    fn piece(slope: i64, intercept: i64, valid_from: i64, valid_to: Option<i64>, status: Status, source: &str) -> Self {
        RegularityPrediction { slope, intercept, valid_from, valid_to, status, source: source.to_string() }
    }

    pub fn unavailable(source: impl Into<String>) -> Self {
        RegularityPrediction {
            slope: 0,
            intercept: 0,
            valid_from: 1,
            valid_to: None,
            status: Status::Unavailable,
            source: source.into(),
        }
    }

    pub fn covers(&self, t: i64) -> bool {
        t >= self.valid_from && self.valid_to.is_none_or(|hi| t <= hi)
    }

    /// The predicted value when available and `t` is in range.
    pub fn value_at(&self, t: i64) -> Option<i64> {
        (self.status != Status::Unavailable && self.covers(t)).then(|| self.slope * t + self.intercept)
    }

    /// Human-readable form, e.g. `2t+3 (t>=2)`.
    pub fn formula(&self) -> String {
        if self.status == Status::Unavailable {
            return "unavailable".into();
        }
        let range = match self.valid_to {
            Some(hi) if hi == self.valid_from => format!("t={hi}"),
            Some(hi) => format!("{}<=t<={hi}", self.valid_from),
            None => format!("t>={}", self.valid_from),
        };
        let sign = if self.intercept < 0 { '-' } else { '+' };
        format!("{}t{sign}{} ({range})", self.slope, self.intercept.abs())
    }
}

fn power_at_least(t: i64, lo: i64) -> Result<()> {
    if t < lo {
        return Err(Error::PowerOutOfRange(t));
    }
    Ok(())
}

/// `reg(R/U^t) = nδ - n - 2δ + δt` for `t >= 2`, assuming `reg(R/U) <= nδ - n - δ`.
pub fn thm31_value(p: &DSeqParams, t: i64) -> Result<i64> {
    p.check()?;
    power_at_least(t, 2)?;
    let r = p.reg_u.ok_or_else(|| Error::HypothesisViolated("reg(R/U) is required".into()))?;
    if r > p.low() {
        return Err(Error::HypothesisViolated(format!("reg(R/U) = {r} exceeds nδ-n-δ = {}", p.low())));
    }
    Ok(p.n * p.delta - p.n - 2 * p.delta + p.delta * t)
}

/// `reg(R/((u_1..u_i) + U^t)) = B + δt - 1` for `t >= 2`, `0 <= i <= n-1`,
/// assuming `B >= max{reg(R/U) - δ + 1, nδ - n - 3δ + 2}`.
pub fn thm35_value(p: &DSeqParams, t: i64, i: i64) -> Result<i64> {
    p.check()?;
    power_at_least(t, 2)?;
    if !(0..p.n).contains(&i) {
        return Err(Error::PreconditionViolated(format!("i = {i} outside 0..={}", p.n - 1)));
    }
    let b = p.b.ok_or_else(|| Error::HypothesisViolated("B is required".into()))?;
    let mut bound = p.n * p.delta - p.n - 3 * p.delta + 2;
    if let Some(r) = p.reg_u {
        bound = bound.max(r - p.delta + 1);
    }
    if b < bound {
        return Err(Error::HypothesisViolated(format!("B = {b} is below the lower bound {bound}")));
    }
    Ok(b + p.delta * t - 1)
}

/// `B` as forced by `reg(R/U)` outside the gap value `(n-1)(δ-1)`:
/// `B + δ = max{(n-1)(δ-1), reg(R/U) + 1}`.
pub fn colon_regularity(p: &DSeqParams) -> Option<i64> {
    let r = p.reg_u?;
    (r != p.gap()).then(|| p.gap().max(r + 1) - p.delta)
}

/// `reg(R/U^t)` from `B` (`t >= 2`), or `reg(R/U) + δt - δ` (`t >= 1`) when
/// `reg(R/U) >= nδ - n - δ + 2` or `reg(R/U) = nδ - n - δ`.
/// Undefined when `reg(R/U) = (n-1)(δ-1)`.
pub fn cor36_value(p: &DSeqParams, t: i64) -> Result<i64> {
    p.check()?;
    power_at_least(t, 1)?;
    if p.reg_u == Some(p.gap()) {
        return Err(Error::HypothesisViolated("unavailable: reg(R/U) = (n-1)(δ-1); requires B".into()));
    }
    if let Some(r) = p.reg_u {
        if let (Some(b), Some(forced)) = (p.b, colon_regularity(p)) {
            if b != forced {
                return Err(Error::HypothesisViolated(format!("B = {b} contradicts reg(R/U) = {r} (forces {forced})")));
            }
        }
        if r >= p.low() + 2 || r == p.low() {
            return Ok(r + p.delta * t - p.delta);
        }
    }
    power_at_least(t, 2)?;
    let b = p
        .b
        .or_else(|| colon_regularity(p))
        .ok_or_else(|| Error::HypothesisViolated("B or reg(R/U) is required".into()))?;
    Ok(b + p.delta * t - 1)
}

/// For an ACI ideal of height `n - 1` generated by `n` forms of degree `δ`:
/// (a) `reg(R/U) <= nδ-n-δ` gives `nδ - n + δt - 2δ` for `t >= 2`;
/// (b) `reg(R/U) >= nδ-n-δ+2` gives `reg(R/U) + δt - δ` for `t >= 1`.
/// The returned prediction is unavailable outside both cases or when `t`
/// is below the valid range.
pub fn cor37_value(n: i64, delta: i64, reg_u: i64, t: i64) -> RegularityPrediction {
    const SRC_A: &str = "ACI power formula, low case: reg(R/U^t) = nδ-n+δt-2δ for t>=2";
    const SRC_B: &str = "ACI power formula, high case: reg(R/U^t) = reg(R/U)+δt-δ for t>=1";
    if delta < 2 || n < 1 {
        return RegularityPrediction::unavailable("ACI power formula needs δ >= 2");
    }
    let low = n * delta - n - delta;
    let p = if reg_u <= low {
        RegularityPrediction::piece(delta, n * delta - n - 2 * delta, 2, None, Status::Proven, SRC_A)
    } else if reg_u >= low + 2 {
        RegularityPrediction::piece(delta, reg_u - delta, 1, None, Status::Proven, SRC_B)
    } else {
        return RegularityPrediction::unavailable("ACI power formula: reg(R/U) = nδ-n-δ+1 is not covered");
    };
    if p.covers(t) {
        p
    } else {
        RegularityPrediction { status: Status::Unavailable, ..p }
    }
}

mod src {
    pub const CI: &str = "complete intersection of |E| quadrics: reg(S/I) = |E|";
    pub const PATH_EDGE: &str = "path plus one edge, girth >= 4: reg(S/J_G^t) = 2t+n-4 for t>=2";
    pub const G2_ONE: &str = "G2-type: reg(S/J_G) = n-3";
    pub const C3: &str = "C3-type: reg(S/J_G^t) = 2t+n-4 for t>=1";
    pub const TREE: &str = "ACI tree: reg(S/J_G^t) = 2t+iv(G)-1 for t>=2";
    pub const TREE_ONE: &str = "ACI tree: reg(S/J_G) = iv(G)+1";
    pub const BIP_TREE: &str = "bipartite ACI tree: reg(S/I_G^t) = 2t+iv(G)-1 for t>=2";
    pub const BIP_TREE_ONE: &str = "bipartite ACI tree, via J_G: reg(S/I_G) = iv(G)+1";
    pub const BIP_UNI: &str = "bipartite ACI unicyclic: reg(S/I_G^t) = 2t+n-4 for t>=2";
    pub const BIP_G2_ONE: &str = "bipartite G2-type, via J_G: reg(S/I_G) = n-3";
    pub const ODD_BALLOON: &str = "odd-girth balloon: reg(S/I_G^t) = 2t+n-3 for t>=1";
    pub const ODD_INTERNAL: &str = "odd cycle joined to an internal path vertex: reg(S/I_G^t) = 2t+n-4 for t>=1";
    pub const G2_ODD: &str = "two internal path vertices joined, odd girth: reg(S/I_G^t) = 2t+n-4 for t>=1";
    pub const TRIANGLE: &str = "triangle with paths of length >= 1: reg(S/I_G^t) = 2t+n-4 for t>=2";
    pub const CHORD_ODD: &str = "chord in an odd cycle: reg(S/I_G^t) = 2t+n-3 for t>=2";
    pub const CHORD_ODD_ONE: &str = "chord in an odd cycle: reg(S/I_G) = n-2";
    pub const CHORD_EVEN: &str = "chord in an even cycle: reg(S/I_G^t) = 2t+n-3 for t>=1";
    pub const CHORD_EVEN_PATH: &str = "chord across an even cycle with a path: reg(S/I_G^t) = 2t+n-3 for t>=2";
    pub const TWO_ODD: &str =
        "conjecture: reg(S/I_G) = n-1 for two odd cycles joined by an edge, fed to the ACI power formula (low case)";
}

fn pieces_or_disconnected(p: &ClassParams, pieces: Vec<RegularityPrediction>) -> Vec<RegularityPrediction> {
    if p.active_connected {
        pieces
    } else {
        vec![RegularityPrediction::unavailable("formulas are stated for connected graphs")]
    }
}

fn ci_pieces(p: &ClassParams) -> Vec<RegularityPrediction> {
    let e = p.edges as i64;
    vec![RegularityPrediction::piece(2, e - 2, 1, Some(1), Status::Proven, src::CI)]
}

/// All affine pieces for `reg(S/J_G^t)`.
pub fn binomial_pieces(class: &BinomialClass) -> Result<Vec<RegularityPrediction>> {
    use BinomialVerdict::*;
    use RegularityPrediction as P;
    use Status::Proven;
    let p = &class.params;
    let n = p.active_vertices as i64;
    let iv = p.iv as i64;
    let pieces = match class.verdict {
        NotAci => return Err(Error::ClassOutOfScope),
        CiPaths => return Ok(ci_pieces(p)),
        AciCycle | AciBalloon => vec![P::piece(2, n - 4, 2, None, Proven, src::PATH_EDGE)],
        AciG2Type => {
            vec![P::piece(2, n - 5, 1, Some(1), Proven, src::G2_ONE), P::piece(2, n - 4, 2, None, Proven, src::PATH_EDGE)]
        }
        AciC3Type => vec![P::piece(2, n - 4, 1, None, Proven, src::C3)],
        AciTTypeTree | AciHTypeTree => {
            vec![P::piece(2, iv - 1, 1, Some(1), Proven, src::TREE_ONE), P::piece(2, iv - 1, 2, None, Proven, src::TREE)]
        }
    };
    Ok(pieces_or_disconnected(p, pieces))
}

/// All affine pieces for `reg(S/I_G^t)`.
pub fn parity_pieces(class: &ParityClass) -> Result<Vec<RegularityPrediction>> {
    use ParityVerdict::*;
    use RegularityPrediction as P;
    use Status::{Conjectured, Proven};
    let p = &class.params;
    let n = p.active_vertices as i64;
    let iv = p.iv as i64;
    let pieces = match class.verdict {
        NotAci => return Err(Error::ClassOutOfScope),
        CiPathsAndOddCycles => return Ok(ci_pieces(p)),
        AciBipartiteTree => vec![
            P::piece(2, iv - 1, 1, Some(1), Proven, src::BIP_TREE_ONE),
            P::piece(2, iv - 1, 2, None, Proven, src::BIP_TREE),
        ],
        AciBipartiteUnicyclic => {
            let mut v = Vec::new();
            if p.subtype.as_deref() == Some("g2") {
                v.push(P::piece(2, n - 5, 1, Some(1), Proven, src::BIP_G2_ONE));
            }
            v.push(P::piece(2, n - 4, 2, None, Proven, src::BIP_UNI));
            v
        }
        AciOddBalloon => vec![P::piece(2, n - 3, 1, None, Proven, src::ODD_BALLOON)],
        AciOddCycleInternalPath => vec![P::piece(2, n - 4, 1, None, Proven, src::ODD_INTERNAL)],
        AciG2Odd => vec![P::piece(2, n - 4, 1, None, Proven, src::G2_ODD)],
        AciTrianglePaths => vec![P::piece(2, n - 4, 2, None, Proven, src::TRIANGLE)],
        AciTwoOddCyclesBridge => vec![P::piece(2, n - 3, 1, None, Conjectured, src::TWO_ODD)],
        AciChordOddCycle => vec![
            P::piece(2, n - 4, 1, Some(1), Proven, src::CHORD_ODD_ONE),
            P::piece(2, n - 3, 2, None, Proven, src::CHORD_ODD),
        ],
        AciChordEvenCycle => vec![P::piece(2, n - 3, 1, None, Proven, src::CHORD_EVEN)],
        AciChordEvenCyclePlusPath => vec![P::piece(2, n - 3, 2, None, Proven, src::CHORD_EVEN_PATH)],
    };
    Ok(pieces_or_disconnected(p, pieces))
}

fn select(pieces: Vec<RegularityPrediction>, t: i64) -> Result<RegularityPrediction> {
    power_at_least(t, 1)?;
    Ok(pieces
        .into_iter()
        .find(|p| p.status != Status::Unavailable && p.covers(t))
        .unwrap_or_else(|| RegularityPrediction::unavailable(format!("no closed form for t = {t} in this family"))))
}

/// The piece of `reg(S/J_G^t)` covering `t`.
pub fn predict_binomial(class: &BinomialClass, t: i64) -> Result<RegularityPrediction> {
    select(binomial_pieces(class)?, t)
}

/// The piece of `reg(S/I_G^t)` covering `t`.
pub fn predict_parity(class: &ParityClass, t: i64) -> Result<RegularityPrediction> {
    select(parity_pieces(class)?, t)
}

/// `(ℓ(G), n - 1)`, bounds on `reg(S/J_G)`.
pub fn matsuda_murai_bounds(g: &Graph) -> (i64, i64) {
    (g.longest_induced_path() as i64, g.n() as i64 - 1)
}

/// `max{ℓ(G), oc(G)}`, a lower bound on `reg(S/I_G)`.
pub fn parity_lower_bound(g: &Graph) -> i64 {
    g.longest_induced_path().max(g.longest_induced_odd_cycle()) as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::connected_graphs;
    use crate::taxonomy::{classify_binomial, classify_parity};

    fn dp(n: i64, delta: i64) -> DSeqParams {
        DSeqParams::new(n, delta)
    }

    #[test]
    fn thm31_examples() {
        assert_eq!(thm31_value(&dp(3, 2).with_reg_u(1), 2).unwrap(), 3);
        assert_eq!(thm31_value(&dp(5, 2).with_reg_u(3), 2).unwrap(), 5);
        let p = dp(4, 3).with_reg_u(2);
        for t in 2..8 {
            assert_eq!(thm31_value(&p, t + 1).unwrap() - thm31_value(&p, t).unwrap(), 3);
        }
        assert_eq!(thm31_value(&dp(3, 2).with_reg_u(1), 1), Err(Error::PowerOutOfRange(1)));
        assert!(matches!(thm31_value(&dp(3, 2).with_reg_u(2), 2), Err(Error::HypothesisViolated(_))));
        assert!(matches!(thm31_value(&dp(3, 2), 2), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn thm35_examples() {
        for n in 4..9 {
            assert_eq!(thm35_value(&dp(n, 2).with_b(n - 3), 2, 0).unwrap(), n);
        }
        assert_eq!(thm35_value(&dp(3, 2).with_b(2), 3, 1).unwrap(), 7);
        let p = dp(5, 2).with_b(4).with_reg_u(4);
        let vals: Vec<i64> = (0..5).map(|i| thm35_value(&p, 3, i).unwrap()).collect();
        assert!(vals.windows(2).all(|w| w[0] == w[1]));
        assert!(thm35_value(&p, 3, 5).is_err());
        assert!(matches!(thm35_value(&dp(5, 2).with_b(4).with_reg_u(9), 2, 0), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn cor36_examples() {
        // reg(R/U) = nδ - n - δ with n = 4, δ = 2
        assert_eq!(cor36_value(&dp(4, 2).with_reg_u(2), 3).unwrap(), 6);
        assert_eq!(cor36_value(&dp(4, 2).with_reg_u(2), 1).unwrap(), 2);
        assert!(matches!(cor36_value(&dp(4, 2).with_reg_u(3), 2), Err(Error::HypothesisViolated(_))));
        assert_eq!(cor36_value(&dp(4, 2).with_b(3), 2).unwrap(), 3 + 4 - 1);
        assert_eq!(cor36_value(&dp(4, 2).with_b(3), 1), Err(Error::PowerOutOfRange(1)));
        // inconsistent B and reg(R/U)
        assert!(cor36_value(&dp(4, 2).with_reg_u(2).with_b(7), 2).is_err());
    }

    #[test]
    fn cor37_examples() {
        let a = cor37_value(3, 2, 1, 2);
        assert_eq!(a.value_at(2), Some(3));
        assert_eq!(a.status, Status::Proven);
        let b = cor37_value(5, 2, 5, 1);
        assert_eq!(b.value_at(1), Some(5));
        assert_eq!(cor37_value(4, 2, 3, 2).status, Status::Unavailable);
        assert_eq!(cor37_value(3, 2, 1, 1).status, Status::Unavailable);
    }

    #[test]
    fn family_predictions() {
        let c3 = classify_binomial(&Graph::cycle(3));
        assert_eq!(predict_binomial(&c3, 2).unwrap().value_at(2), Some(3));
        let star = classify_binomial(&Graph::from_edges(4, &[(1, 2), (2, 3), (2, 4)]).unwrap());
        assert_eq!(predict_binomial(&star, 2).unwrap().value_at(2), Some(4));
        assert_eq!(predict_binomial(&star, 1).unwrap().value_at(1), Some(2));
        let f3 = classify_binomial(&Graph::from_edges(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 5)]).unwrap());
        assert_eq!(predict_binomial(&f3, 3).unwrap().value_at(3), Some(8));
        assert_eq!(predict_binomial(&f3, 1).unwrap().value_at(1), Some(3));
        let chord = classify_parity(&Graph::cycle(4).add_edge((1, 3)).unwrap());
        assert_eq!(predict_parity(&chord, 1).unwrap().value_at(1), Some(3));
        let balloon = classify_parity(&Graph::from_edges(5, &[(1, 2), (2, 3), (1, 3), (1, 4), (4, 5)]).unwrap());
        assert_eq!(predict_parity(&balloon, 2).unwrap().value_at(2), Some(6));
        let bridge = classify_parity(
            &Graph::from_edges(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 4)]).unwrap(),
        );
        let p = predict_parity(&bridge, 2).unwrap();
        assert_eq!((p.value_at(2), p.status), (Some(7), Status::Conjectured));
        assert_eq!(predict_binomial(&classify_binomial(&Graph::complete(4)), 1), Err(Error::ClassOutOfScope));
        assert_eq!(predict_binomial(&c3, 0), Err(Error::PowerOutOfRange(0)));
        let tri = classify_parity(&Graph::from_edges(6, &[(1, 2), (2, 3), (1, 3), (1, 4), (2, 5), (3, 6)]).unwrap());
        assert_eq!(predict_parity(&tri, 1).unwrap().status, Status::Unavailable);
        assert_eq!(predict_parity(&tri, 2).unwrap().value_at(2), Some(6));
    }

    #[test]
    fn disconnected_graphs_have_no_formula() {
        let g = Graph::from_edges(5, &[(1, 2), (2, 3), (1, 3), (4, 5)]).unwrap();
        let c = classify_binomial(&g);
        assert_eq!(predict_binomial(&c, 2).unwrap().status, Status::Unavailable);
        // isolated vertices do not change the ideal
        let g = Graph::from_edges(5, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(predict_binomial(&classify_binomial(&g), 2).unwrap().value_at(2), Some(3));
    }

    #[test]
    fn bounds_examples() {
        assert_eq!(matsuda_murai_bounds(&Graph::path(4)), (3, 3));
        assert_eq!(matsuda_murai_bounds(&Graph::cycle(3)), (1, 2));
        assert_eq!(parity_lower_bound(&Graph::cycle(5)), 5);
    }

    #[test]
    fn slopes_are_two_on_proven_pieces() {
        for n in 2..=6 {
            for g in connected_graphs(n) {
                let b = classify_binomial(&g);
                let p = classify_parity(&g);
                let mut pieces = binomial_pieces(&b).unwrap_or_default();
                pieces.extend(parity_pieces(&p).unwrap_or_default());
                for piece in pieces.iter().filter(|p| p.status == Status::Proven) {
                    assert_eq!(piece.slope, 2, "{g}: {}", piece.source);
                }
            }
        }
    }

    #[test]
    fn formula_strings() {
        let p = RegularityPrediction::piece(2, -1, 2, None, Status::Proven, "x");
        assert_eq!(p.formula(), "2t-1 (t>=2)");
        let q = RegularityPrediction::piece(2, 1, 1, Some(1), Status::Proven, "x");
        assert_eq!(q.formula(), "2t+1 (t=1)");
        assert_eq!(serde_json::to_value(Status::Conjectured).unwrap(), "conjectured");
    }
}
