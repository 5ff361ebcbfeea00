//! Reconciles closed-form predictions with oracle regularities.

use std::time::Instant;

use rayon::prelude::*;
use regpow_core::budget::Budget;
use regpow_core::edge_ideals::{oracle_betti, verify_colon_lemma, verify_dseq_hypotheses, DSeqReport, EdgeIdealKind};
use regpow_core::error::Error;
use regpow_core::formulas::{
    matsuda_murai_bounds, parity_lower_bound, predict_binomial, predict_parity, RegularityPrediction, Status,
};
use regpow_core::graph::{Edge, Graph};
use regpow_core::poly::PrimeField;
use regpow_core::resolution::BettiTable;
use regpow_core::taxonomy::{classify_binomial, classify_parity, ClassParams};
use serde::{Deserialize, Serialize};

use crate::cache::{Cache, CacheKey};
use crate::corpus::{CorpusEntry, Loaded};
use crate::SCHEMA_VERSION;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub kind: EdgeIdealKind,
    pub t_max: u32,
    /// First entry is the reference field; the rest are cross-checks.
    pub characteristics: Vec<u32>,
    /// Wall-clock seconds per resolution job.
    pub budget_secs: f64,
    pub hypotheses: bool,
}

impl VerifyOptions {
    pub fn new(kind: EdgeIdealKind, t_max: u32) -> VerifyOptions {
        VerifyOptions { kind, t_max, characteristics: vec![32003], budget_secs: 300.0, hypotheses: true }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub verdict: String,
    pub label: String,
    pub params: ClassParams,
}

pub fn classify(g: &Graph, kind: EdgeIdealKind) -> Classification {
    match kind {
        EdgeIdealKind::Binomial => {
            let c = classify_binomial(g);
            Classification { verdict: c.verdict.to_string(), label: c.label(), params: c.params }
        }
        EdgeIdealKind::Parity => {
            let c = classify_parity(g);
            Classification { verdict: c.verdict.to_string(), label: c.label(), params: c.params }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictionRow {
    pub t: u32,
    pub value: Option<i64>,
    pub status: Status,
    pub formula: String,
    pub source: String,
}

fn prediction(g: &Graph, kind: EdgeIdealKind, t: u32) -> RegularityPrediction {
    let r = match kind {
        EdgeIdealKind::Binomial => predict_binomial(&classify_binomial(g), t as i64),
        EdgeIdealKind::Parity => predict_parity(&classify_parity(g), t as i64),
    };
    match r {
        Ok(p) => p,
        Err(Error::ClassOutOfScope) => RegularityPrediction::unavailable("class out of scope"),
        Err(e) => RegularityPrediction::unavailable(e.to_string()),
    }
}

/// Prediction table for `t = 1..=t_max`.
pub fn predict_table(g: &Graph, kind: EdgeIdealKind, t_max: u32) -> Vec<PredictionRow> {
    (1..=t_max)
        .map(|t| {
            let p = prediction(g, kind, t);
            PredictionRow { t, value: p.value_at(t as i64), status: p.status, formula: p.formula(), source: p.source }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum OracleOutcome {
    Computed { regularity: i64, betti: BettiTable },
    BudgetExceeded,
    /// The ring would exceed the supported number of variables.
    TooLarge { reason: String },
    Skipped { reason: String },
    Error { message: String },
}

impl OracleOutcome {
    pub fn regularity(&self) -> Option<i64> {
        match self {
            OracleOutcome::Computed { regularity, .. } => Some(*regularity),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleRow {
    pub t: u32,
    pub characteristic: u32,
    #[serde(flatten)]
    pub outcome: OracleOutcome,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub classify_ms: u64,
    pub oracle_ms: u64,
    pub hypotheses_ms: u64,
    pub cache_hits: u32,
}

/// Oracle Betti table of `I^t`, through the cache when one is given.
pub fn oracle_outcome(
    g: &Graph,
    kind: EdgeIdealKind,
    t: u32,
    characteristic: u32,
    budget_secs: f64,
    cache: Option<&Cache>,
    hits: &mut u32,
) -> OracleOutcome {
    if g.edge_count() == 0 {
        return OracleOutcome::Skipped { reason: "no edges".into() };
    }
    let field = match PrimeField::new(characteristic) {
        Ok(f) => f,
        Err(e) => return OracleOutcome::Error { message: e.to_string() },
    };
    let key = cache.map(|_| CacheKey::new(g, kind, t, characteristic));
    if let (Some(c), Some(k)) = (cache, &key) {
        if let Some(betti) = c.get(k) {
            *hits += 1;
            return computed(betti);
        }
    }
    match oracle_betti(g, kind, t, field, &Budget::seconds(budget_secs)) {
        Ok(betti) => {
            if let (Some(c), Some(k)) = (cache, &key) {
                // a failed write only costs a recomputation later
                let _ = c.put(k, &betti);
            }
            computed(betti)
        }
        Err(Error::BudgetExceeded) => OracleOutcome::BudgetExceeded,
        Err(e @ (Error::TooManyVariables(_) | Error::ExponentOverflow)) => OracleOutcome::TooLarge { reason: e.to_string() },
        Err(e) => OracleOutcome::Error { message: e.to_string() },
    }
}

fn computed(betti: BettiTable) -> OracleOutcome {
    match betti.regularity() {
        Some(regularity) => OracleOutcome::Computed { regularity, betti },
        None => OracleOutcome::Error { message: "power is the unit ideal".into() },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub t: u32,
    pub predicted: Option<i64>,
    pub status: Status,
    pub oracle: Option<i64>,
    /// `Some` only for proven predictions with an oracle value.
    #[serde(rename = "match")]
    pub matched: Option<bool>,
    /// Agreement of a conjectured value with the oracle; never gating.
    pub conjecture_agrees: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsCheck {
    pub lower: i64,
    pub upper: Option<i64>,
    pub oracle: i64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisChecks {
    pub witness_edge: Edge,
    pub sequence: Result<DSeqReport, String>,
    /// Parity ideals of non-bipartite `G` with `G∖e` bipartite only.
    pub colon_identity: Option<Result<bool, String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TagCheck {
    pub expected: String,
    pub actual: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub matches: u32,
    pub mismatches: u32,
    pub skips: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub id: String,
    pub ideal: EdgeIdealKind,
    pub characteristics: Vec<u32>,
    pub graph: Graph,
    pub classification: Classification,
    pub predictions: Vec<PredictionRow>,
    pub oracle: Vec<OracleRow>,
    pub comparisons: Vec<Comparison>,
    /// Oracle values differ between characteristics at some `t`.
    pub characteristic_discrepancies: Vec<u32>,
    pub bounds: Option<BoundsCheck>,
    pub hypotheses: Option<HypothesisChecks>,
    pub tag_check: Option<TagCheck>,
    pub tally: Tally,
    pub timings: Timings,
}

impl VerificationReport {
    /// Any proven mismatch, characteristic discrepancy, bound violation or
    /// failed tag expectation.
    pub fn has_findings(&self) -> bool {
        self.tally.mismatches > 0
            || !self.characteristic_discrepancies.is_empty()
            || self.bounds.as_ref().is_some_and(|b| !b.holds)
            || self.tag_check.as_ref().is_some_and(|c| !c.holds)
    }

    /// Copy with the timing fields reset, for deterministic comparison.
    pub fn without_timings(&self) -> VerificationReport {
        VerificationReport { timings: Timings::default(), ..self.clone() }
    }
}

fn ms(since: Instant) -> u64 {
    since.elapsed().as_millis() as u64
}

fn hypothesis_checks(g: &Graph, class: &Classification, opts: &VerifyOptions, t_max: u32) -> Option<HypothesisChecks> {
    let e = class.params.structure.as_ref()?.witness_edge?;
    let field = PrimeField::new(*opts.characteristics.first()?).ok()?;
    let budget = Budget::seconds(opts.budget_secs);
    let powers: Vec<u32> = (2..=t_max.min(3)).collect();
    let sequence = verify_dseq_hypotheses(g, opts.kind, e, &powers, field, &budget).map_err(|e| e.to_string());
    let applies = opts.kind == EdgeIdealKind::Parity
        && !g.is_bipartite()
        && g.delete_edge(e).is_ok_and(|h| h.is_bipartite());
    let colon_identity = applies.then(|| verify_colon_lemma(g, e, field, &budget).map_err(|e| e.to_string()));
    Some(HypothesisChecks { witness_edge: e, sequence, colon_identity })
}

/// Full pipeline for one graph: classify, predict, compute the oracle for
/// every `t` and characteristic, compare, and run the side checks.
pub fn verify_graph(
    id: &str,
    g: &Graph,
    expected_label: Option<&str>,
    opts: &VerifyOptions,
    cache: Option<&Cache>,
) -> VerificationReport {
    let mut timings = Timings::default();
    let start = Instant::now();
    let classification = classify(g, opts.kind);
    let predictions = predict_table(g, opts.kind, opts.t_max);
    timings.classify_ms = ms(start);

    let start = Instant::now();
    let mut oracle = Vec::new();
    for &p in &opts.characteristics {
        let mut exhausted = false;
        for t in 1..=opts.t_max {
            // a power that ran out of budget makes the higher ones hopeless
            let outcome = if exhausted {
                OracleOutcome::Skipped { reason: "budget exceeded at a lower power".into() }
            } else {
                oracle_outcome(g, opts.kind, t, p, opts.budget_secs, cache, &mut timings.cache_hits)
            };
            exhausted |= outcome == OracleOutcome::BudgetExceeded;
            oracle.push(OracleRow { t, characteristic: p, outcome });
        }
    }
    timings.oracle_ms = ms(start);

    let mut tally = Tally::default();
    let mut comparisons = Vec::new();
    let mut characteristic_discrepancies = Vec::new();
    for row in &predictions {
        let at_t: Vec<&OracleRow> = oracle.iter().filter(|o| o.t == row.t).collect();
        let values: Vec<i64> = at_t.iter().filter_map(|o| o.outcome.regularity()).collect();
        let tables: Vec<&BettiTable> = at_t
            .iter()
            .filter_map(|o| match &o.outcome {
                OracleOutcome::Computed { betti, .. } => Some(betti),
                _ => None,
            })
            .collect();
        if tables.windows(2).any(|w| w[0] != w[1]) {
            characteristic_discrepancies.push(row.t);
        }
        let reference = at_t.first().and_then(|o| o.outcome.regularity());
        let (matched, conjecture_agrees) = match (row.value, row.status) {
            (Some(v), Status::Proven) if !values.is_empty() => (Some(values.iter().all(|&o| o == v)), None),
            (Some(v), Status::Conjectured) if !values.is_empty() => (None, Some(values.iter().all(|&o| o == v))),
            _ => (None, None),
        };
        match (matched, row.status) {
            (Some(true), _) => tally.matches += 1,
            (Some(false), _) => tally.mismatches += 1,
            (None, Status::Proven) if row.value.is_some() => tally.skips += 1,
            _ => {}
        }
        comparisons.push(Comparison {
            t: row.t,
            predicted: row.value,
            status: row.status,
            oracle: reference,
            matched,
            conjecture_agrees,
        });
    }

    let bounds = oracle.first().filter(|o| o.t == 1).and_then(|o| o.outcome.regularity()).map(|r| {
        let (lower, upper) = match opts.kind {
            EdgeIdealKind::Binomial => {
                let (lo, hi) = matsuda_murai_bounds(g);
                (lo, Some(hi))
            }
            EdgeIdealKind::Parity => (parity_lower_bound(g), None),
        };
        BoundsCheck { lower, upper, oracle: r, holds: lower <= r && upper.is_none_or(|u| r <= u) }
    });

    let start = Instant::now();
    let hypotheses = if opts.hypotheses { hypothesis_checks(g, &classification, opts, opts.t_max) } else { None };
    timings.hypotheses_ms = ms(start);

    let tag_check = expected_label.map(|expected| TagCheck {
        expected: expected.to_string(),
        actual: classification.label.clone(),
        holds: expected == classification.label,
    });

    VerificationReport {
        schema_version: SCHEMA_VERSION,
        id: id.to_string(),
        ideal: opts.kind,
        characteristics: opts.characteristics.clone(),
        graph: g.clone(),
        classification,
        predictions,
        oracle,
        comparisons,
        characteristic_discrepancies,
        bounds,
        hypotheses,
        tag_check,
        tally,
        timings,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntrySummary {
    pub id: String,
    pub ideal: EdgeIdealKind,
    /// `ok`, `finding` or `error`.
    pub outcome: String,
    pub label: Option<String>,
    #[serde(flatten)]
    pub tally: Tally,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub schema_version: u32,
    pub entries: u32,
    pub reports: u32,
    pub matches: u32,
    pub mismatches: u32,
    pub skips: u32,
    /// Reports with an oracle job over budget or too large to attempt.
    pub budget_skips: u32,
    pub findings: u32,
    pub errors: u32,
    pub rows: Vec<EntrySummary>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorpusRun {
    pub summary: CorpusSummary,
    pub reports: Vec<VerificationReport>,
}

/// Verifies every entry for every kind on a pool of `jobs` threads; the
/// output order is the input order regardless of scheduling.
pub fn run_corpus(
    entries: &[Loaded],
    kinds: &[EdgeIdealKind],
    opts: &VerifyOptions,
    cache: Option<&Cache>,
    jobs: usize,
) -> CorpusRun {
    let tasks: Vec<(&Loaded, EdgeIdealKind)> = entries.iter().flat_map(|e| kinds.iter().map(move |&k| (e, k))).collect();
    let work = |(entry, kind): &(&Loaded, EdgeIdealKind)| -> Result<VerificationReport, (String, String)> {
        match entry {
            Ok(CorpusEntry { id, graph, .. }) => {
                let e = entry.as_ref().unwrap();
                let o = VerifyOptions { kind: *kind, ..opts.clone() };
                Ok(verify_graph(id, graph, e.expected_label(*kind), &o, cache))
            }
            Err(err) => Err((err.id.clone(), err.message.clone())),
        }
    };
    let results: Vec<Result<VerificationReport, (String, String)>> = match rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
    {
        Ok(pool) => pool.install(|| tasks.par_iter().map(work).collect()),
        Err(_) => tasks.iter().map(work).collect(),
    };

    let mut summary = CorpusSummary { schema_version: SCHEMA_VERSION, entries: entries.len() as u32, ..Default::default() };
    let mut reports = Vec::new();
    for ((_, kind), r) in tasks.iter().zip(results) {
        match r {
            Ok(report) => {
                let finding = report.has_findings();
                summary.matches += report.tally.matches;
                summary.mismatches += report.tally.mismatches;
                summary.skips += report.tally.skips;
                summary.findings += finding as u32;
                summary.budget_skips += report
                    .oracle
                    .iter()
                    .any(|o| matches!(o.outcome, OracleOutcome::BudgetExceeded | OracleOutcome::TooLarge { .. }))
                    as u32;
                summary.rows.push(EntrySummary {
                    id: report.id.clone(),
                    ideal: *kind,
                    outcome: if finding { "finding" } else { "ok" }.into(),
                    label: Some(report.classification.label.clone()),
                    tally: report.tally.clone(),
                    error: None,
                });
                reports.push(report);
            }
            Err((id, message)) => {
                summary.errors += 1;
                summary.rows.push(EntrySummary {
                    id,
                    ideal: *kind,
                    outcome: "error".into(),
                    label: None,
                    tally: Tally::default(),
                    error: Some(message),
                });
            }
        }
    }
    summary.reports = reports.len() as u32;
    CorpusRun { summary, reports }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(kind: EdgeIdealKind, t_max: u32) -> VerifyOptions {
        VerifyOptions::new(kind, t_max)
    }

    #[test]
    fn triangle_binomial_matches() {
        let r = verify_graph("c3", &Graph::cycle(3), None, &opts(EdgeIdealKind::Binomial, 2), None);
        let oracle: Vec<Option<i64>> = r.comparisons.iter().map(|c| c.oracle).collect();
        assert_eq!(oracle, vec![Some(1), Some(3)]);
        assert_eq!(r.tally, Tally { matches: 2, mismatches: 0, skips: 0 });
        assert!(!r.has_findings());
        assert!(r.bounds.unwrap().holds);
    }

    #[test]
    fn claw_binomial_matches() {
        let claw = Graph::from_edges(4, &[(1, 2), (2, 3), (2, 4)]).unwrap();
        let r = verify_graph("k13", &claw, Some("ACI_TTypeTree"), &opts(EdgeIdealKind::Binomial, 2), None);
        assert_eq!(r.comparisons.iter().map(|c| c.oracle).collect::<Vec<_>>(), vec![Some(2), Some(4)]);
        assert_eq!(r.tally.matches, 2);
    }

    #[test]
    fn wrong_tag_is_a_finding() {
        let r = verify_graph("p3", &Graph::path(3), Some("ACI_Cycle"), &opts(EdgeIdealKind::Binomial, 1), None);
        assert!(!r.tag_check.as_ref().unwrap().holds);
        assert!(r.has_findings());
    }

    #[test]
    fn expired_budget_is_a_skip() {
        let mut o = opts(EdgeIdealKind::Parity, 2);
        o.budget_secs = 0.0;
        o.hypotheses = false;
        let chord = Graph::cycle(4).add_edge((1, 3)).unwrap();
        let r = verify_graph("c4c", &chord, None, &o, None);
        assert_eq!(r.oracle[0].outcome, OracleOutcome::BudgetExceeded);
        assert!(matches!(r.oracle[1].outcome, OracleOutcome::Skipped { .. }));
        assert_eq!(r.tally, Tally { matches: 0, mismatches: 0, skips: 2 });
        assert!(!r.has_findings());
    }

    #[test]
    fn empty_graph_is_recorded_not_computed() {
        let g = Graph::empty(3).unwrap();
        let r = verify_graph("e", &g, None, &opts(EdgeIdealKind::Binomial, 1), None);
        assert_eq!(r.classification.verdict, "NotACI");
        assert_eq!(r.oracle[0].outcome, OracleOutcome::Skipped { reason: "no edges".into() });
    }

    #[test]
    fn conjectured_rows_never_gate() {
        let g = Graph::from_edges(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 4)]).unwrap();
        let r = verify_graph("bridge", &g, None, &opts(EdgeIdealKind::Parity, 1), None);
        assert_eq!(r.comparisons[0].status, Status::Conjectured);
        assert_eq!(r.comparisons[0].matched, None);
        assert!(r.comparisons[0].conjecture_agrees.is_some());
        assert_eq!(r.tally, Tally::default());
    }

    #[test]
    fn second_characteristic_is_reported() {
        let mut o = opts(EdgeIdealKind::Binomial, 1);
        o.characteristics = vec![32003, 101];
        let r = verify_graph("c4", &Graph::cycle(4), None, &o, None);
        assert_eq!(r.oracle.len(), 2);
        assert_eq!(r.oracle[1].characteristic, 101);
        assert!(r.characteristic_discrepancies.is_empty());
    }
}
