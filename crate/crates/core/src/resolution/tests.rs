use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::poly::{parse_polynomial, PrimeField, Ring};

const U: Budget = Budget::unlimited();

fn ring(names: &[&str]) -> Arc<Ring> {
    Ring::new(names.iter().map(|s| s.to_string()).collect(), MonomialOrder::DegRevLex, PrimeField::default()).unwrap()
}

fn ideal(r: &Arc<Ring>, gens: &[&str]) -> Ideal {
    Ideal::new(r, gens.iter().map(|g| parse_polynomial(r, g).unwrap()).collect()).unwrap()
}

fn table(rows: &[(usize, i64, u64)]) -> BettiTable {
    BettiTable::from_entries(rows.iter().map(|&(i, j, v)| ((i, j), v)))
}

/// J_G for a graph on `n` vertices given by 1-based edges.
fn binomial_edge_ideal(n: usize, edges: &[(usize, usize)], field: PrimeField) -> Ideal {
    let r = Ring::edge_ring(n, field).unwrap();
    let gens = edges
        .iter()
        .map(|&(i, j)| parse_polynomial(&r, &format!("x{i}*y{j} - x{j}*y{i}")).unwrap())
        .collect();
    Ideal::new(&r, gens).unwrap()
}

fn check_all_routes(i: &Ideal) -> BettiTable {
    let res = schreyer_resolution(i, &U).unwrap();
    assert!(res.is_complex().unwrap());
    assert!(res.is_graded());
    let min = minimalize(&res).unwrap();
    assert!(min.is_complex().unwrap());
    assert!(!min.has_constant_entries());
    let by_rank = betti_table(i, &U).unwrap();
    assert_eq!(by_rank, BettiTable::from_entries(min.graded_ranks()));
    assert_eq!(by_rank, betti_table_by_cancellation(i, &U).unwrap());
    assert_eq!(by_rank.euler_numerator(), hilbert_series_numerator(i, &U).unwrap());
    by_rank
}

#[test]
fn principal_ideal() {
    let r = ring(&["x"]);
    let i = ideal(&r, &["x"]);
    let res = schreyer_resolution(&i, &U).unwrap();
    assert_eq!(res.modules.len(), 2);
    assert_eq!(res.modules[1].shifts, vec![1]);
    assert_eq!(check_all_routes(&i), table(&[(0, 0, 1), (1, 1, 1)]));
}

#[test]
fn koszul_on_two_variables() {
    let r = ring(&["x", "y"]);
    let b = check_all_routes(&ideal(&r, &["x", "y"]));
    assert_eq!(b, table(&[(0, 0, 1), (1, 1, 2), (2, 2, 1)]));
}

#[test]
fn square_of_variable() {
    let r = ring(&["x"]);
    let i = ideal(&r, &["x^2"]);
    assert_eq!(regularity(&i, &U).unwrap(), 1);
    assert_eq!(proj_dim(&i, &U).unwrap(), 1);
}

#[test]
fn path_p3_is_koszul_on_two_quadrics() {
    let i = binomial_edge_ideal(3, &[(1, 2), (2, 3)], PrimeField::default());
    let res = schreyer_resolution(&i, &U).unwrap();
    assert_eq!(res.modules[1].shifts, vec![2, 2]);
    assert_eq!(res.modules[2].shifts, vec![4]);
    assert_eq!(check_all_routes(&i), table(&[(0, 0, 1), (1, 2, 2), (2, 4, 1)]));
}

#[test]
fn triangle_has_regularity_one() {
    let i = binomial_edge_ideal(3, &[(1, 2), (1, 3), (2, 3)], PrimeField::default());
    let b = check_all_routes(&i);
    assert_eq!(b.regularity(), Some(1));
    // generic 2 x 3 determinantal ideal: Eagon-Northcott
    assert_eq!(b, table(&[(0, 0, 1), (1, 2, 3), (2, 3, 2)]));
}

#[test]
fn regular_sequence_of_quadrics() {
    let r = ring(&["a", "b", "c", "d"]);
    for k in 1..=4 {
        let gens: Vec<String> = ["a^2", "b^2 + a*c", "c^2 - a*d", "d^2 + b*c"][..k].iter().map(|s| s.to_string()).collect();
        let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
        assert_eq!(regularity(&ideal(&r, &refs), &U).unwrap(), k as i64);
    }
}

#[test]
fn paths_have_regularity_n_minus_one() {
    for n in 2..=5 {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        let i = binomial_edge_ideal(n, &edges, PrimeField::default());
        assert_eq!(regularity(&i, &U).unwrap(), n as i64 - 1);
    }
}

#[test]
fn complete_graph_k4() {
    let edges = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
    let i = binomial_edge_ideal(4, &edges, PrimeField::default());
    assert_eq!(regularity(&i, &U).unwrap(), 1);
}

#[test]
fn padded_identity_summand_cancels() {
    let r = ring(&["x"]);
    let x = parse_polynomial(&r, "x").unwrap();
    let res = FreeResolution {
        ring: r.clone(),
        modules: vec![
            GradedFreeModule { shifts: vec![0] },
            GradedFreeModule { shifts: vec![1, 1] },
            GradedFreeModule { shifts: vec![1] },
        ],
        differentials: vec![
            vec![BTreeMap::from([(0, x.clone())]), BTreeMap::from([(0, x.clone())])],
            vec![BTreeMap::from([(0, r.one()), (1, r.constant(-1))])],
        ],
        minimal: false,
    };
    assert!(res.is_complex().unwrap());
    let min = minimalize(&res).unwrap();
    assert_eq!(min.modules.len(), 2);
    assert_eq!(min.modules[1].shifts, vec![1]);
    assert!(min.is_complex().unwrap());
}

#[test]
fn minimal_resolution_is_unchanged() {
    let r = ring(&["x", "y"]);
    let res = schreyer_resolution(&ideal(&r, &["x", "y"]), &U).unwrap();
    assert!(!res.has_constant_entries());
    let min = minimalize(&res).unwrap();
    assert_eq!(min.modules, res.modules);
}

#[test]
fn heights_and_generators() {
    let f = PrimeField::default();
    for n in 2..=5 {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        let i = binomial_edge_ideal(n, &edges, f);
        assert_eq!(height(&i, &U).unwrap(), n - 1);
        assert_eq!(minimal_generator_count(&i, &U).unwrap(), n as u64 - 1);
    }
    // triangle with a pendant: height n - 1, four generators
    let i = binomial_edge_ideal(4, &[(1, 2), (1, 3), (2, 3), (3, 4)], f);
    assert_eq!(height(&i, &U).unwrap(), 3);
    assert_eq!(minimal_generator_count(&i, &U).unwrap(), 4);
}

#[test]
fn zero_and_unit_ideals() {
    let r = ring(&["x", "y"]);
    let zero = Ideal::zero(&r);
    assert_eq!(betti_table(&zero, &U).unwrap(), table(&[(0, 0, 1)]));
    assert_eq!(regularity(&zero, &U).unwrap(), 0);
    let unit = Ideal::unit(&r);
    assert!(betti_table(&unit, &U).unwrap().is_empty());
    assert!(betti_table_by_cancellation(&unit, &U).unwrap().is_empty());
    assert!(regularity(&unit, &U).is_err());
}

#[test]
fn rejects_inhomogeneous_input() {
    let r = ring(&["x", "y"]);
    assert!(betti_table(&ideal(&r, &["x^2 - y"]), &U).is_err());
}

#[test]
fn betti_json_shape() {
    let b = table(&[(0, 0, 1), (1, 2, 3), (2, 3, 2)]);
    let v = serde_json::to_value(&b).unwrap();
    assert_eq!(v, serde_json::json!({"entries": [[0, 0, 1], [1, 2, 3], [2, 3, 2]], "regularity": 1, "pdim": 2}));
    let back: BettiTable = serde_json::from_value(v).unwrap();
    assert_eq!(back, b);
    let bad = serde_json::json!({"entries": [[0, 0, 1]], "regularity": 4, "pdim": 0});
    assert!(serde_json::from_value::<BettiTable>(bad).is_err());
}

#[test]
fn display_layout() {
    let b = table(&[(0, 0, 1), (1, 2, 3), (2, 3, 2)]);
    assert_eq!(b.to_string(), "      0 1 2\n   0: 1 . .\n   1: . 3 2");
}

#[test]
fn characteristics_agree_on_small_graphs() {
    let cases: [&[(usize, usize)]; 3] =
        [&[(1, 2), (2, 3), (3, 4), (4, 1)], &[(1, 2), (1, 3), (2, 3), (3, 4)], &[(1, 2), (2, 3), (3, 4), (2, 4), (4, 5)]];
    for edges in cases {
        let n = edges.iter().map(|e| e.1.max(e.0)).max().unwrap();
        let a = betti_table(&binomial_edge_ideal(n, edges, PrimeField::new(32003).unwrap()), &U).unwrap();
        let b = betti_table(&binomial_edge_ideal(n, edges, PrimeField::new(101).unwrap()), &U).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn truncation_matches_full_table() {
    let i = binomial_edge_ideal(4, &[(1, 2), (2, 3), (3, 4), (4, 1)], PrimeField::default());
    let full = betti_table(&i, &U).unwrap();
    for k in 0..=3 {
        let part = betti_table_truncated(&i, k, &U).unwrap();
        for (a, j, v) in full.entries().filter(|e| e.0 <= k) {
            assert_eq!(part.get(a, j), v);
        }
        assert!(part.entries().all(|e| e.0 <= k));
    }
}

fn small_homogeneous_ideal() -> impl Strategy<Value = (Vec<Vec<(i64, Vec<u32>)>>, u64)> {
    // each generator: degree-2 terms in three variables
    let mono = prop_oneof![
        Just(vec![2, 0, 0]),
        Just(vec![1, 1, 0]),
        Just(vec![1, 0, 1]),
        Just(vec![0, 2, 0]),
        Just(vec![0, 1, 1]),
        Just(vec![0, 0, 2]),
    ];
    let poly = proptest::collection::vec((-3i64..=3, mono), 1..4);
    (proptest::collection::vec(poly, 1..4), any::<u64>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn routes_agree_and_ignore_generator_order((gens, seed) in small_homogeneous_ideal()) {
        let r = ring(&["x", "y", "z"]);
        let polys: Vec<Polynomial> = gens.iter().map(|g| r.polynomial(g).unwrap()).filter(|p| !p.is_zero()).collect();
        prop_assume!(!polys.is_empty());
        let i = Ideal::new(&r, polys.clone()).unwrap();
        let b = check_all_routes(&i);
        let mut shuffled = polys;
        let k = (seed as usize) % shuffled.len();
        shuffled.rotate_left(k);
        shuffled.reverse();
        prop_assert_eq!(betti_table(&Ideal::new(&r, shuffled).unwrap(), &U).unwrap(), b);
    }
}
