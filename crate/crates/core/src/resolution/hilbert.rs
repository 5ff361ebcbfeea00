//! Hilbert series and Krull dimension of monomial quotients.

use crate::poly::Monomial;

/// Removes generators divisible by another generator (and duplicates).
pub fn minimize_monomials(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp_degrevlex(b)));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Integer polynomials in `t` as coefficient vectors.
pub(crate) mod tpoly {
    pub fn trim(mut p: Vec<i64>) -> Vec<i64> {
        while p.len() > 1 && *p.last().unwrap() == 0 {
            p.pop();
        }
        if p.is_empty() {
            p.push(0);
        }
        p
    }

    pub fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len().max(b.len())];
        for (i, v) in a.iter().enumerate() {
            out[i] += v;
        }
        for (i, v) in b.iter().enumerate() {
            out[i] += v;
        }
        trim(out)
    }

    pub fn shift(a: &[i64], k: usize) -> Vec<i64> {
        let mut out = vec![0; k];
        out.extend_from_slice(a);
        trim(out)
    }

    pub fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(out)
    }
}

/// Numerator `N(t)` of `HS(R/M) = N(t) / (1 - t)^nvars` for the monomial ideal
/// generated by `gens`, by pivoting on the most frequent variable:
/// `N(M) = N(M + (x)) + t·N(M : x)`.
pub fn hilbert_numerator(gens: &[Monomial]) -> Vec<i64> {
    numerator(minimize_monomials(gens.to_vec()))
}

fn numerator(gens: Vec<Monomial>) -> Vec<i64> {
    let mut seen = 0u32;
    let mut coprime = true;
    for g in &gens {
        if seen & g.support() != 0 {
            coprime = false;
            break;
        }
        seen |= g.support();
    }
    if coprime {
        let mut out = vec![1];
        for g in &gens {
            let mut f = vec![0; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] -= 1;
            out = tpoly::mul(&out, &f);
        }
        return out;
    }
    let mut counts = [0usize; 32];
    for g in &gens {
        let mut s = g.support();
        while s != 0 {
            counts[s.trailing_zeros() as usize] += 1;
            s &= s - 1;
        }
    }
    let x = (0..32).max_by_key(|&i| (counts[i], std::cmp::Reverse(i))).unwrap();
    let xv = Monomial::var(x);
    let mut plus: Vec<Monomial> = gens.iter().copied().filter(|g| g.exponent(x) == 0).collect();
    plus.push(xv);
    let colon: Vec<Monomial> = gens.iter().map(|g| if g.exponent(x) > 0 { g.div(&xv) } else { *g }).collect();
    let a = numerator(minimize_monomials(plus));
    let b = numerator(minimize_monomials(colon));
    tpoly::add(&a, &tpoly::shift(&b, 1))
}

/// Number of degree-`d` monomials in `nvars` variables outside the ideal.
pub fn hilbert_function(gens: &[Monomial], nvars: usize, d: u32) -> u64 {
    fn rec(gens: &[Monomial], exps: &mut Vec<u32>, var: usize, left: u32, nvars: usize) -> u64 {
        if var + 1 == nvars {
            exps[var] = left;
            let m = Monomial::from_exponents(exps).expect("small exponents");
            exps[var] = 0;
            return u64::from(!gens.iter().any(|g| g.divides(&m)));
        }
        let mut total = 0;
        for e in 0..=left {
            exps[var] = e;
            total += rec(gens, exps, var + 1, left - e, nvars);
        }
        exps[var] = 0;
        total
    }
    if nvars == 0 {
        return u64::from(d == 0 && gens.iter().all(|g| !g.is_one()));
    }
    rec(gens, &mut vec![0; nvars], 0, d, nvars)
}

/// Krull dimension of `R/M`: the largest set of variables containing the
/// support of no generator. Computed as `nvars` minus a minimum transversal.
pub fn monomial_dimension(gens: &[Monomial], nvars: usize) -> usize {
    if gens.iter().any(Monomial::is_one) {
        return 0;
    }
    let mut supports: Vec<u32> = gens.iter().map(Monomial::support).collect();
    supports.sort_by_key(|s| s.count_ones());
    supports.dedup();
    let mut minimal: Vec<u32> = Vec::new();
    for s in supports {
        if !minimal.iter().any(|m| m & s == *m) {
            minimal.push(s);
        }
    }
    let mut best = nvars;
    cover(&minimal, 0, 0, 0, &mut best);
    nvars - best
}

fn cover(supports: &[u32], chosen: u32, forbidden: u32, count: usize, best: &mut usize) {
    if count >= *best {
        return;
    }
    let open = supports
        .iter()
        .filter(|&&s| s & chosen == 0)
        .min_by_key(|&&s| (s & !forbidden).count_ones());
    let Some(&s) = open else {
        *best = count;
        return;
    };
    let mut avail = s & !forbidden;
    if avail == 0 || count + 1 >= *best {
        return;
    }
    let mut forb = forbidden;
    while avail != 0 {
        let bit = avail & avail.wrapping_neg();
        cover(supports, chosen | bit, forb, count + 1, best);
        forb |= bit;
        avail &= avail - 1;
    }
}
