//! Ideals with cached reduced Gröbner bases, and the colon/sequence
//! machinery built on them.

use std::sync::{Arc, OnceLock};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::poly::{groebner_basis, normal_form, Monomial, Polynomial, Ring};

/// An ideal given by generators; its reduced Gröbner basis is computed once
/// on demand and shared by all readers.
#[derive(Debug)]
pub struct Ideal {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(g.clone());
        }
        Ideal { ring: self.ring.clone(), generators: self.generators.clone(), gb }
    }
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Arc<Ring>, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), generators, gb: OnceLock::new() })
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        Ideal { ring: ring.clone(), generators: Vec::new(), gb: OnceLock::new() }
    }

    pub fn unit(ring: &Arc<Ring>) -> Self {
        Ideal { ring: ring.clone(), generators: vec![ring.one()], gb: OnceLock::new() }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    /// The reduced Gröbner basis under the ring's order.
    pub fn groebner(&self, budget: &Budget) -> Result<&[Polynomial]> {
        if let Some(g) = self.gb.get() {
            return Ok(g);
        }
        let g = groebner_basis(&self.generators, budget)?;
        // a concurrent reader may have won the race; both values are equal
        let _ = self.gb.set(g);
        Ok(self.gb.get().expect("just set"))
    }

    pub fn leading_monomials(&self, budget: &Budget) -> Result<Vec<Monomial>> {
        Ok(self.groebner(budget)?.iter().filter_map(Polynomial::lead_monomial).collect())
    }

    pub fn is_unit_ideal(&self, budget: &Budget) -> Result<bool> {
        Ok(self.groebner(budget)?.iter().any(Polynomial::is_unit))
    }

    pub fn contains(&self, f: &Polynomial, budget: &Budget) -> Result<bool> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        Ok(normal_form(f, self.groebner(budget)?)?.is_zero())
    }

    pub fn is_subset_of(&self, other: &Ideal, budget: &Budget) -> Result<bool> {
        self.check_ring(other)?;
        for g in &self.generators {
            if !other.contains(g, budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a.mul(b)?);
            }
        }
        Ok(Ideal::new(&self.ring, dedup(gens))?)
    }

    /// `I^t`, generated by the t-fold products of generators (multisets).
    pub fn power(&self, t: u32) -> Ideal {
        if t == 0 {
            return Ideal::unit(&self.ring);
        }
        let n = self.generators.len();
        let mut gens = Vec::new();
        let mut idx = vec![0usize; t as usize];
        if n > 0 {
            loop {
                let mut prod = self.ring.one();
                for &k in &idx {
                    prod = prod.mul(&self.generators[k]).expect("same ring");
                }
                gens.push(prod);
                // next non-decreasing index tuple
                let mut pos = idx.len();
                while pos > 0 && idx[pos - 1] == n - 1 {
                    pos -= 1;
                }
                if pos == 0 {
                    break;
                }
                idx[pos - 1] += 1;
                let v = idx[pos - 1];
                for slot in idx[pos..].iter_mut() {
                    *slot = v;
                }
            }
        }
        Ideal { ring: self.ring.clone(), generators: dedup(gens), gb: OnceLock::new() }
    }

    /// `I ∩ J`, eliminating `w` from `w·I + (1 − w)·J`.
    pub fn intersect(&self, other: &Ideal, budget: &Budget) -> Result<Ideal> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let ext = self.ring.with_elimination_variable("elim_w")?;
        let w = ext.var(self.ring.nvars());
        let one_minus_w = ext.one().sub(&w)?;
        let mut gens = Vec::new();
        for f in &self.generators {
            gens.push(f.map_to(&ext)?.mul(&w)?);
        }
        for g in &other.generators {
            gens.push(g.map_to(&ext)?.mul(&one_minus_w)?);
        }
        let basis = groebner_basis(&gens, budget)?;
        let wi = self.ring.nvars();
        let kept = basis
            .into_iter()
            .filter(|p| p.terms().iter().all(|t| t.mono.exponent(wi) == 0))
            .map(|p| p.map_to(&self.ring))
            .collect::<Result<Vec<_>>>()?;
        let out = Ideal::new(&self.ring, kept)?;
        // the surviving elements are already the reduced basis of the intersection
        let reduced = groebner_basis(&out.generators, budget)?;
        let _ = out.gb.set(reduced);
        Ok(out)
    }

    /// `I : f = { g : g·f ∈ I }` for a single nonzero `f`.
    pub fn colon(&self, f: &Polynomial, budget: &Budget) -> Result<Ideal> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Err(Error::PreconditionViolated("colon by the zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        if self.contains(f, budget)? {
            return Ok(Ideal::unit(&self.ring));
        }
        let principal = Ideal::new(&self.ring, vec![f.clone()])?;
        let meet = self.intersect(&principal, budget)?;
        let mut gens = Vec::with_capacity(meet.generators.len());
        for g in &meet.generators {
            gens.push(g.divide_exact(f)?.ok_or(Error::DivisionFailure)?);
        }
        Ideal::new(&self.ring, gens)
    }

    /// Equality via reduced Gröbner bases.
    pub fn equals(&self, other: &Ideal, budget: &Budget) -> Result<bool> {
        self.check_ring(other)?;
        Ok(self.groebner(budget)? == other.groebner(budget)?)
    }

    /// Applies a ring endomorphism given on generators.
    pub fn map(&self, f: impl Fn(&Polynomial) -> Result<Polynomial>) -> Result<Ideal> {
        let gens = self.generators.iter().map(f).collect::<Result<Vec<_>>>()?;
        let ring = gens.first().map(|g| g.ring().clone()).unwrap_or_else(|| self.ring.clone());
        Ideal::new(&ring, gens)
    }
}

fn dedup(gens: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !g.is_zero() && !out.contains(&g) {
            out.push(g);
        }
    }
    out
}

fn prefix_ideal(ring: &Arc<Ring>, fs: &[Polynomial]) -> Result<Ideal> {
    Ideal::new(ring, fs.to_vec())
}

fn sequence_ring(fs: &[Polynomial]) -> Result<Arc<Ring>> {
    let ring = fs
        .first()
        .map(|f| f.ring().clone())
        .ok_or_else(|| Error::PreconditionViolated("empty sequence".into()))?;
    for f in fs {
        if f.ring() != &ring {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Err(Error::PreconditionViolated("sequence contains zero".into()));
        }
    }
    Ok(ring)
}

/// Each `f_i` is a nonzerodivisor and a non-unit modulo `(f_1, ..., f_{i-1})`.
pub fn is_regular_sequence(fs: &[Polynomial], budget: &Budget) -> Result<bool> {
    let ring = sequence_ring(fs)?;
    for i in 0..fs.len() {
        let prev = prefix_ideal(&ring, &fs[..i])?;
        if prev.sum(&Ideal::new(&ring, vec![fs[i].clone()])?)?.is_unit_ideal(budget)? {
            return Ok(false);
        }
        if !prev.is_zero() {
            let colon = prev.colon(&fs[i], budget)?;
            if !colon.is_subset_of(&prev, budget)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks `((u_1..u_i) : u_{i+1} u_j) = ((u_1..u_i) : u_j)` for all
/// `0 <= i <= n-1` and `j >= i+1`, with the empty prefix the zero ideal.
pub fn is_d_sequence(us: &[Polynomial], budget: &Budget) -> Result<bool> {
    let ring = sequence_ring(us)?;
    let n = us.len();
    // i = 0: the prefix is the zero ideal and both colons are zero in a domain
    for i in 1..n {
        let prefix = prefix_ideal(&ring, &us[..i])?;
        for j in (i + 1)..=n {
            let lhs = prefix.colon(&us[i].mul(&us[j - 1])?, budget)?;
            let rhs = prefix.colon(&us[j - 1], budget)?;
            if !lhs.equals(&rhs, budget)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Both sides of `((u_1..u_{i-1}) + U^t) : u_i = ((u_1..u_{i-1}) : u_i) + U^{t-1}`,
/// `1 <= i <= n`, `t >= 1`.
pub fn obs24_sides(us: &[Polynomial], i: usize, t: u32, budget: &Budget) -> Result<(Ideal, Ideal)> {
    let ring = sequence_ring(us)?;
    if i == 0 || i > us.len() {
        return Err(Error::PreconditionViolated(format!("index {i} outside 1..={}", us.len())));
    }
    if t == 0 {
        return Err(Error::PowerOutOfRange(0));
    }
    let u = Ideal::new(&ring, us.to_vec())?;
    let prefix = prefix_ideal(&ring, &us[..i - 1])?;
    let ui = &us[i - 1];
    let lhs = prefix.sum(&u.power(t))?.colon(ui, budget)?;
    let rhs = prefix.colon(ui, budget)?.sum(&u.power(t - 1))?;
    Ok((lhs, rhs))
}

pub fn check_obs24(us: &[Polynomial], i: usize, t: u32, budget: &Budget) -> Result<bool> {
    let (lhs, rhs) = obs24_sides(us, i, t, budget)?;
    lhs.equals(&rhs, budget)
}
