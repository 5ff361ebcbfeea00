//! Buchberger's algorithm with the Gebauer–Möller installation of the
//! product and chain criteria and sugar-degree pair selection.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::budget::Budget;
use crate::error::{Error, Result};

use super::field::PrimeField;
use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::{sub_mul, Polynomial, Term};
use super::ring::Ring;

#[derive(Clone, Debug)]
struct Element {
    terms: Vec<Term>,
    lm: Monomial,
    sugar: u32,
    active: bool,
}

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Reducer<'a> {
    ord: MonomialOrder,
    field: PrimeField,
    basis: &'a [Element],
}

impl Reducer<'_> {
    fn find(&self, m: &Monomial) -> Option<&Element> {
        self.basis.iter().find(|g| g.active && g.lm.divides(m))
    }

    /// Full reduction; basis elements are monic.
    fn reduce(&self, mut h: Vec<Term>, tail_only: bool) -> Vec<Term> {
        let mut rem: Vec<Term> = Vec::new();
        let mut start = usize::from(tail_only && !h.is_empty());
        if tail_only && !h.is_empty() {
            rem.push(h[0]);
        }
        loop {
            let Some(t) = h.get(start).copied() else { break };
            match self.find(&t.mono) {
                Some(g) => {
                    let q = t.mono.div(&g.lm);
                    h = sub_mul(&h[start..], &g.terms, t.coeff, &q, &self.ord, &self.field);
                    start = 0;
                }
                None => {
                    rem.push(t);
                    start += 1;
                }
            }
        }
        rem
    }
}

fn make_monic(terms: &mut [Term], field: &PrimeField) {
    if let Some(first) = terms.first() {
        if first.coeff != 1 {
            let inv = field.inv(first.coeff);
            for t in terms.iter_mut() {
                t.coeff = field.mul(t.coeff, inv);
            }
        }
    }
}

fn sugar_of(ring: &Ring, terms: &[Term]) -> u32 {
    terms.iter().map(|t| ring.sugar_degree(&t.mono)).max().unwrap_or(0)
}

fn check_same_ring(polys: &[Polynomial]) -> Result<Option<Arc<Ring>>> {
    let Some(first) = polys.first() else { return Ok(None) };
    for p in polys {
        if p.ring() != first.ring() {
            return Err(Error::RingMismatch);
        }
    }
    Ok(Some(first.ring().clone()))
}

/// Computes the reduced Gröbner basis of the ideal generated by `gens`,
/// sorted ascending by leading monomial with monic leading coefficients.
pub fn groebner_basis(gens: &[Polynomial], budget: &Budget) -> Result<Vec<Polynomial>> {
    let Some(ring) = check_same_ring(gens)? else { return Ok(Vec::new()) };
    let ord = ring.order();
    let field = ring.field();

    let mut input: Vec<Vec<Term>> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.terms().to_vec()).collect();
    input.sort_by(|a, b| {
        sugar_of(&ring, a).cmp(&sugar_of(&ring, b)).then_with(|| ord.cmp(&a[0].mono, &b[0].mono))
    });

    let mut basis: Vec<Element> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    for f in input {
        budget.check()?;
        let reducer = Reducer { ord, field, basis: &basis };
        let mut h = reducer.reduce(f, false);
        if h.is_empty() {
            continue;
        }
        make_monic(&mut h, &field);
        let sugar = sugar_of(&ring, &h);
        insert(&mut basis, &mut pairs, h, sugar, &ring);
    }

    while !pairs.is_empty() {
        budget.check()?;
        let best = select_pair(&pairs, &ord);
        let pair = pairs.swap_remove(best);
        let s = s_poly_terms(&basis[pair.i], &basis[pair.j], &pair.lcm, &ord, &field);
        let reducer = Reducer { ord, field, basis: &basis };
        let mut h = reducer.reduce(s, false);
        if h.is_empty() {
            continue;
        }
        make_monic(&mut h, &field);
        let sugar = pair.sugar.max(sugar_of(&ring, &h));
        insert(&mut basis, &mut pairs, h, sugar, &ring);
    }

    Ok(interreduce(&ring, basis))
}

fn select_pair(pairs: &[Pair], ord: &MonomialOrder) -> usize {
    let mut best = 0;
    for (k, p) in pairs.iter().enumerate().skip(1) {
        let b = &pairs[best];
        let better = match p.sugar.cmp(&b.sugar) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => match ord.cmp(&p.lcm, &b.lcm) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => (p.j, p.i) < (b.j, b.i),
            },
        };
        if better {
            best = k;
        }
    }
    best
}

fn s_poly_terms(a: &Element, b: &Element, lcm: &Monomial, ord: &MonomialOrder, field: &PrimeField) -> Vec<Term> {
    let ma = lcm.div(&a.lm);
    let mb = lcm.div(&b.lm);
    let left: Vec<Term> = a.terms[1..].iter().map(|t| Term { mono: t.mono.mul(&ma), coeff: t.coeff }).collect();
    sub_mul(&left, &b.terms[1..], 1, &mb, ord, field)
}

/// Gebauer–Möller update with the new element `h`.
fn insert(basis: &mut Vec<Element>, pairs: &mut Vec<Pair>, h: Vec<Term>, sugar: u32, ring: &Ring) {
    let lm_h = h[0].mono;
    let hi = basis.len();
    let hdeg = ring.sugar_degree(&lm_h);

    let candidates: Vec<(usize, Monomial, bool)> = basis
        .iter()
        .enumerate()
        .filter(|(_, g)| g.active)
        .map(|(k, g)| (k, g.lm.lcm(&lm_h), g.lm.is_coprime(&lm_h)))
        .collect();

    // chain criterion among the new pairs
    let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
    for (idx, &(k, l, coprime)) in candidates.iter().enumerate() {
        let dominated_later = candidates[idx + 1..].iter().any(|&(_, l2, _)| l2.divides(&l));
        let dominated_kept = kept.iter().any(|&(_, l2, _)| l2.divides(&l));
        if coprime || (!dominated_later && !dominated_kept) {
            kept.push((k, l, coprime));
        }
    }
    // among pairs with equal lcm keep only one; drop coprime ones (product criterion)
    let mut new_pairs: Vec<Pair> = Vec::new();
    let mut seen_lcms: Vec<Monomial> = Vec::new();
    for &(k, l, coprime) in &kept {
        if seen_lcms.contains(&l) {
            continue;
        }
        seen_lcms.push(l);
        if coprime {
            continue;
        }
        let g = &basis[k];
        let ldeg = ring.sugar_degree(&l);
        let s = (g.sugar + ldeg - ring.sugar_degree(&g.lm)).max(sugar + ldeg - hdeg);
        new_pairs.push(Pair { i: k, j: hi, lcm: l, sugar: s });
    }

    // prune old pairs
    pairs.retain(|p| {
        !(lm_h.divides(&p.lcm)
            && basis[p.i].lm.lcm(&lm_h) != p.lcm
            && basis[p.j].lm.lcm(&lm_h) != p.lcm)
    });
    pairs.extend(new_pairs);

    for g in basis.iter_mut() {
        if g.active && lm_h.divides(&g.lm) {
            g.active = false;
        }
    }
    basis.push(Element { terms: h, lm: lm_h, sugar, active: true });
}

fn interreduce(ring: &Arc<Ring>, basis: Vec<Element>) -> Vec<Polynomial> {
    let ord = ring.order();
    let field = ring.field();
    let mut minimal: Vec<Element> = basis.into_iter().filter(|g| g.active).collect();
    minimal.sort_by(|a, b| ord.cmp(&a.lm, &b.lm));
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let mut others = minimal.clone();
        others[k].active = false;
        let reducer = Reducer { ord, field, basis: &others };
        let mut t = reducer.reduce(minimal[k].terms.clone(), true);
        make_monic(&mut t, &field);
        out.push(Polynomial::from_sorted_terms(ring.clone(), t));
    }
    out
}

/// Fully reduces `f` modulo `basis` (any generating list; not required to be
/// a Gröbner basis).
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Result<Polynomial> {
    Ok(reduce_with_quotients(f, basis)?.1)
}

/// Multivariate division: returns `(q, r)` with `f = sum q_i * basis_i + r` and
/// no term of `r` divisible by a leading monomial of `basis`.
pub fn reduce_with_quotients(f: &Polynomial, basis: &[Polynomial]) -> Result<(Vec<Polynomial>, Polynomial)> {
    let ring = f.ring().clone();
    for b in basis {
        if b.ring() != &ring {
            return Err(Error::RingMismatch);
        }
    }
    let ord = ring.order();
    let field = ring.field();
    let mut quotients: Vec<Vec<Term>> = vec![Vec::new(); basis.len()];
    let mut h = f.terms().to_vec();
    let mut rem = Vec::new();
    let mut start = 0;
    while let Some(t) = h.get(start).copied() {
        let found = basis.iter().enumerate().find(|(_, b)| b.lead_monomial().is_some_and(|lm| lm.divides(&t.mono)));
        match found {
            Some((k, b)) => {
                let lt = b.lead_term().unwrap();
                let q = t.mono.div(&lt.mono);
                let c = field.div(t.coeff, lt.coeff);
                quotients[k].push(Term { mono: q, coeff: c });
                h = sub_mul(&h[start..], b.terms(), c, &q, &ord, &field);
                start = 0;
            }
            None => {
                rem.push(t);
                start += 1;
            }
        }
    }
    let qs = quotients.into_iter().map(|q| Polynomial::from_terms(ring.clone(), q)).collect();
    Ok((qs, Polynomial::from_sorted_terms(ring, rem)))
}

/// The S-polynomial of two nonzero polynomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.ring() != g.ring() {
        return Err(Error::RingMismatch);
    }
    let (Some(a), Some(b)) = (f.lead_term().copied(), g.lead_term().copied()) else {
        return Err(Error::PreconditionViolated("S-polynomial of zero".into()));
    };
    let field = f.ring().field();
    let lcm = a.mono.lcm(&b.mono);
    let left = f.mul_monomial(&lcm.div(&a.mono)).scale(field.inv(a.coeff));
    let right = g.mul_monomial(&lcm.div(&b.mono)).scale(field.inv(b.coeff));
    left.sub(&right)
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner_basis(basis: &[Polynomial]) -> Result<bool> {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = s_polynomial(&basis[i], &basis[j])?;
            if !normal_form(&s, basis)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, PrimeField};
    use proptest::prelude::*;

    fn ring(n: usize) -> Arc<Ring> {
        Ring::edge_ring(n, PrimeField::default()).unwrap()
    }

    fn polys(r: &Arc<Ring>, s: &[&str]) -> Vec<Polynomial> {
        s.iter().map(|t| parse_polynomial(r, t).unwrap()).collect()
    }

    fn gb(p: &[Polynomial]) -> Vec<Polynomial> {
        groebner_basis(p, &Budget::unlimited()).unwrap()
    }

    #[test]
    fn single_variable() {
        let r = ring(1);
        assert_eq!(gb(&polys(&r, &["x1"])), polys(&r, &["x1"]));
        assert!(normal_form(&parse_polynomial(&r, "x1^2").unwrap(), &polys(&r, &["x1"])).unwrap().is_zero());
        let y = parse_polynomial(&r, "y1").unwrap();
        assert_eq!(normal_form(&y, &polys(&r, &["x1"])).unwrap(), y);
    }

    #[test]
    fn path_p3_is_already_a_basis() {
        let r = ring(3);
        let g = polys(&r, &["x1*y2 - x2*y1", "x2*y3 - x3*y2"]);
        let mut expected = g.clone();
        expected.sort_by(|a, b| r.order().cmp(&a.lead_monomial().unwrap(), &b.lead_monomial().unwrap()));
        // leading terms x2*y1 and x3*y2 are coprime, so the S-pair reduces to zero
        assert_eq!(gb(&g), expected.into_iter().map(|p| p.monic()).collect::<Vec<_>>());
    }

    #[test]
    fn triangle_basis_is_quadratic() {
        let r = ring(3);
        let g = polys(&r, &["x1*y2 - x2*y1", "x1*y3 - x3*y1", "x2*y3 - x3*y2"]);
        let basis = gb(&g);
        assert!(is_groebner_basis(&basis).unwrap());
        assert!(basis.iter().all(|b| b.degree() == Some(2)));
        for f in &g {
            assert!(normal_form(f, &basis).unwrap().is_zero());
        }
    }

    #[test]
    fn unit_ideal() {
        let r = ring(1);
        let basis = gb(&polys(&r, &["x1", "x1 + 1"]));
        assert_eq!(basis, vec![r.one()]);
    }

    #[test]
    fn budget_is_respected() {
        let r = ring(3);
        let g = polys(&r, &["x1*y2 - x2*y1", "x1*y3 - x3*y1", "x2*y3 - x3*y2"]);
        let b = Budget::from_duration(std::time::Duration::ZERO);
        assert_eq!(groebner_basis(&g, &b), Err(Error::BudgetExceeded));
    }

    fn arb_poly(nvars: usize) -> impl Strategy<Value = Vec<(i64, Vec<u32>)>> {
        proptest::collection::vec((-5i64..5, proptest::collection::vec(0u32..3, nvars)), 1..5)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn division_identity(f in arb_poly(4), b1 in arb_poly(4), b2 in arb_poly(4)) {
            let r = ring(2);
            let f = r.polynomial(&f).unwrap();
            let basis: Vec<_> = [b1, b2].iter().map(|b| r.polynomial(b).unwrap()).filter(|b| !b.is_zero()).collect();
            let (qs, rem) = reduce_with_quotients(&f, &basis).unwrap();
            let mut acc = rem.clone();
            for (q, b) in qs.iter().zip(&basis) {
                acc = acc.add(&q.mul(b).unwrap()).unwrap();
            }
            prop_assert_eq!(acc, f);
            for t in rem.terms() {
                prop_assert!(basis.iter().all(|b| !b.lead_monomial().unwrap().divides(&t.mono)));
            }
        }

        #[test]
        fn reduced_basis_is_order_independent(a in arb_poly(4), b in arb_poly(4), c in arb_poly(4)) {
            let r = ring(2);
            let g: Vec<_> = [a, b, c].iter().map(|p| r.polynomial(p).unwrap()).collect();
            let mut rev = g.clone();
            rev.reverse();
            let g1 = gb(&g);
            prop_assert_eq!(&g1, &gb(&rev));
            prop_assert!(is_groebner_basis(&g1).unwrap());
        }

        #[test]
        fn membership_soundness(a in arb_poly(4), b in arb_poly(4), m in arb_poly(4)) {
            let r = ring(2);
            let g: Vec<_> = [a, b].iter().map(|p| r.polynomial(p).unwrap()).collect();
            let basis = gb(&g);
            let m = r.polynomial(&m).unwrap();
            for gen in &g {
                prop_assert!(normal_form(&m.mul(gen).unwrap(), &basis).unwrap().is_zero());
            }
        }
    }
}
