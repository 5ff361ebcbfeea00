//! Schreyer frames: a (generally non-minimal) free resolution built level by
//! level from the syzygies between Gröbner basis elements.
//!
//! Every basis element `e` of `F_L` carries a total monomial `tot(e)`; a term
//! `m·e` of `F_L` is stored by its key `m·tot(e)` together with `e`. The
//! induced order on `F_L` compares keys by degrevlex and breaks ties by the
//! larger index. Elements of each level are kept sorted by lead component,
//! which makes this two-field comparison agree with the full recursive
//! Schreyer order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::Range;
use std::sync::Arc;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, PrimeField, Ring, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VTerm {
    pub key: Monomial,
    pub comp: u32,
    pub coeff: u32,
}

#[derive(Clone, Copy, PartialEq, Eq)]
struct Key {
    key: Monomial,
    comp: u32,
}

impl Ord for Key {
    fn cmp(&self, o: &Self) -> Ordering {
        self.key.cmp_degrevlex(&o.key).then(self.comp.cmp(&o.comp))
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// The basis of `F_L` together with `d_L`, each column written in `F_{L-1}`.
#[derive(Clone, Debug, Default)]
pub struct Level {
    /// `d_L(e_k)`, sorted descending, lead coefficient one.
    pub columns: Vec<Vec<VTerm>>,
    pub tot: Vec<Monomial>,
    /// Elements grouped by lead component of `F_{L-1}`.
    groups: Vec<Range<usize>>,
}

impl Level {
    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn degree(&self, k: usize) -> u32 {
        self.tot[k].degree()
    }

    fn group(&self, comp: u32) -> Range<usize> {
        self.groups.get(comp as usize).cloned().unwrap_or(0..0)
    }
}

/// `levels[0]` is `F_1` with `d_1` given by the Gröbner basis; `F_0` is the ring.
pub struct Frame {
    pub ring: Arc<Ring>,
    pub levels: Vec<Level>,
}

impl Frame {
    /// Builds levels `1..=max_level` (or until the frame terminates).
    /// `gb` must be a reduced, monic, homogeneous Gröbner basis under
    /// degrevlex, sorted ascending by lead monomial, without units.
    pub fn build(ring: &Arc<Ring>, gb: &[Polynomial], max_level: usize, budget: &Budget) -> Result<Frame> {
        let mut levels = Vec::new();
        if gb.is_empty() || max_level == 0 {
            return Ok(Frame { ring: ring.clone(), levels });
        }
        let first = Level {
            columns: gb
                .iter()
                .map(|g| g.terms().iter().map(|t| VTerm { key: t.mono, comp: 0, coeff: t.coeff }).collect())
                .collect(),
            tot: gb.iter().map(|g| g.lead_monomial().expect("nonzero")).collect(),
            groups: vec![0..gb.len()],
        };
        levels.push(first);
        let bound = ring.nvars() + 1;
        while levels.len() < max_level {
            let next = next_level(levels.last().unwrap(), ring.field(), budget)?;
            if next.is_empty() {
                break;
            }
            if levels.len() >= bound {
                return Err(Error::PreconditionViolated("resolution longer than the number of variables".into()));
            }
            levels.push(next);
        }
        Ok(Frame { ring: ring.clone(), levels })
    }

    /// Column `k` of `d_L` (1-based `level`) as polynomial entries by row.
    pub fn column_polynomials(&self, level: usize, k: usize) -> Vec<(usize, Polynomial)> {
        let lv = &self.levels[level - 1];
        let mut by_row: BTreeMap<u32, Vec<Term>> = BTreeMap::new();
        for t in &lv.columns[k] {
            let mono = if level == 1 { t.key } else { t.key.div(&self.levels[level - 2].tot[t.comp as usize]) };
            by_row.entry(t.comp).or_default().push(Term { mono, coeff: t.coeff });
        }
        by_row
            .into_iter()
            .map(|(r, ts)| (r as usize, Polynomial::from_terms(self.ring.clone(), ts)))
            .collect()
    }

    /// Entries of `d_L` that are nonzero constants, as `(row, col, value)`.
    pub fn constant_entries(&self, level: usize) -> Vec<(usize, usize, u32)> {
        let lv = &self.levels[level - 1];
        let mut out = Vec::new();
        for (k, col) in lv.columns.iter().enumerate() {
            for t in col {
                let row_tot = if level == 1 { Monomial::one() } else { self.levels[level - 2].tot[t.comp as usize] };
                if t.key == row_tot {
                    out.push((t.comp as usize, k, t.coeff));
                }
            }
        }
        out
    }
}

struct PairSpec {
    a: usize,
    b: usize,
    ub: Monomial,
}

fn minimal_pairs(prev: &Level) -> Vec<PairSpec> {
    let mut specs = Vec::new();
    for range in &prev.groups {
        for b in range.clone() {
            let tb = prev.tot[b];
            let mut cands: Vec<(Monomial, usize)> =
                (range.start..b).map(|a| (prev.tot[a].lcm(&tb).div(&tb), a)).collect();
            cands.sort_by(|x, y| x.0.cmp_degrevlex(&y.0).then(x.1.cmp(&y.1)));
            let mut kept: Vec<(Monomial, usize)> = Vec::new();
            for (u, a) in cands {
                if !kept.iter().any(|(k, _)| k.divides(&u)) {
                    kept.push((u, a));
                }
            }
            specs.extend(kept.into_iter().map(|(ub, a)| PairSpec { a, b, ub }));
        }
    }
    specs
}

fn next_level(prev: &Level, field: PrimeField, budget: &Budget) -> Result<Level> {
    let specs = minimal_pairs(prev);
    let mut columns = Vec::with_capacity(specs.len());
    let mut tot = Vec::with_capacity(specs.len());
    let mut groups = vec![0..0; prev.len()];
    for (idx, s) in specs.iter().enumerate() {
        budget.check()?;
        let b = s.b;
        if groups[b].is_empty() {
            groups[b] = idx..idx + 1;
        } else {
            groups[b].end = idx + 1;
        }
        let lead = s.ub.mul(&prev.tot[b]);
        tot.push(lead);
        columns.push(syzygy(prev, s, lead, field)?);
    }
    Ok(Level { columns, tot, groups })
}

fn add_into(acc: &mut BTreeMap<Key, u32>, k: Key, c: u32, f: PrimeField) {
    use std::collections::btree_map::Entry;
    match acc.entry(k) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = f.add(*o.get(), c);
            if s == 0 {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// The syzygy with lead `u_b e_b`: reduce `u_b d(e_b) - u_a d(e_a)` to zero
/// by the previous level and record the quotients.
fn syzygy(prev: &Level, s: &PairSpec, lead: Monomial, f: PrimeField) -> Result<Vec<VTerm>> {
    let ua = lead.div(&prev.tot[s.a]);
    let mut acc: BTreeMap<Key, u32> = BTreeMap::new();
    for t in &prev.columns[s.b][1..] {
        add_into(&mut acc, Key { key: t.key.mul(&s.ub), comp: t.comp }, t.coeff, f);
    }
    for t in &prev.columns[s.a][1..] {
        add_into(&mut acc, Key { key: t.key.mul(&ua), comp: t.comp }, f.neg(t.coeff), f);
    }
    let mut syz: BTreeMap<Key, u32> = BTreeMap::new();
    add_into(&mut syz, Key { key: lead, comp: s.b as u32 }, 1, f);
    add_into(&mut syz, Key { key: lead, comp: s.a as u32 }, f.neg(1), f);
    while let Some((k, c)) = acc.pop_last() {
        let d = prev
            .group(k.comp)
            .find(|&d| prev.tot[d].divides(&k.key))
            .ok_or_else(|| Error::PreconditionViolated("syzygy reduction left a remainder".into()))?;
        let q = k.key.div(&prev.tot[d]);
        for t in &prev.columns[d][1..] {
            add_into(&mut acc, Key { key: t.key.mul(&q), comp: t.comp }, f.neg(f.mul(c, t.coeff)), f);
        }
        add_into(&mut syz, Key { key: k.key, comp: d as u32 }, f.neg(c), f);
    }
    Ok(syz.into_iter().rev().map(|(k, c)| VTerm { key: k.key, comp: k.comp, coeff: c }).collect())
}
