//! Classifier verdicts against μ and height computed from the ideals, over
//! every connected graph on up to seven vertices.

use regpow_core::budget::Budget;
use regpow_core::edge_ideals::{build_ideal, EdgeIdealKind};
use regpow_core::graph::{connected_graphs, Graph};
use regpow_core::poly::PrimeField;
use regpow_core::resolution::{height, minimal_generator_count};
use regpow_core::taxonomy::{classify_binomial, classify_parity};

fn mu_ht(g: &Graph, kind: EdgeIdealKind) -> (i64, i64) {
    let u = Budget::unlimited();
    let i = build_ideal(g, kind, PrimeField::default()).unwrap();
    (minimal_generator_count(&i, &u).unwrap() as i64, height(&i, &u).unwrap() as i64)
}

#[test]
fn verdicts_match_generator_count_and_height() {
    let mut mismatches = Vec::new();
    let mut total = 0;
    for n in 2..=7 {
        for g in connected_graphs(n) {
            total += 1;
            let b = classify_binomial(&g);
            let (mu, ht) = mu_ht(&g, EdgeIdealKind::Binomial);
            if b.verdict.is_aci() != (mu == ht + 1) || b.verdict.is_ci() != (mu == ht) {
                mismatches.push(format!("binomial {:?}: {} μ={mu} ht={ht}", g.edges(), b.label()));
            }
            let p = classify_parity(&g);
            let (mu, ht) = mu_ht(&g, EdgeIdealKind::Parity);
            if p.verdict.is_aci() != (mu == ht + 1) || p.verdict.is_ci() != (mu == ht) {
                mismatches.push(format!("parity {:?}: {} μ={mu} ht={ht}", g.edges(), p.label()));
            }
        }
    }
    assert_eq!(total, 1 + 2 + 6 + 21 + 112 + 853);
    assert!(mismatches.is_empty(), "{} mismatches:\n{}", mismatches.len(), mismatches.join("\n"));
}
