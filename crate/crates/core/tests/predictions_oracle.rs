//! Every proven closed-form value agrees with the resolution oracle on all
//! connected graphs up to seven vertices, for the first two powers.

use regpow_core::budget::Budget;
use regpow_core::edge_ideals::{oracle_regularity, EdgeIdealKind};
use regpow_core::formulas::{predict_binomial, predict_parity, Status};
use regpow_core::graph::connected_graphs;
use regpow_core::poly::PrimeField;
use regpow_core::taxonomy::{classify_binomial, classify_parity};

#[test]
fn proven_predictions_match_oracle() {
    let u = Budget::unlimited();
    let f = PrimeField::default();
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 2..=7 {
        for g in connected_graphs(n) {
            for t in 1..=2u32 {
                let preds = [
                    (EdgeIdealKind::Binomial, predict_binomial(&classify_binomial(&g), t as i64)),
                    (EdgeIdealKind::Parity, predict_parity(&classify_parity(&g), t as i64)),
                ];
                for (kind, pred) in preds {
                    let Ok(p) = pred else { continue };
                    let Some(want) = p.value_at(t as i64).filter(|_| p.status == Status::Proven) else { continue };
                    let got = oracle_regularity(&g, kind, t, f, &u).unwrap();
                    checked += 1;
                    if got != want {
                        failures.push(format!("{} {:?} t={t}: oracle {got}, predicted {want} ({})", kind.as_str(), g.edges(), p.source));
                    }
                }
            }
        }
    }
    assert!(checked > 100, "only {checked} proven values");
    assert!(failures.is_empty(), "{} failures:\n{}", failures.len(), failures.join("\n"));
}
