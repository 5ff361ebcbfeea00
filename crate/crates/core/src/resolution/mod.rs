//! Minimal graded free resolutions of cyclic modules `R/I`.
//!
//! Betti numbers come from a Schreyer frame: with `C_i` the constant part
//! of the frame differential `d_i`, the minimal Betti numbers are
//! `β_{i,j} = #F_{i,j} - rank C_{i,j} - rank C_{i+1,j}`.
//! [`minimalize`] performs the same cancellation explicitly on polynomial
//! matrices and is used to cross-check the rank computation.

mod complex;
mod frame;
pub mod hilbert;
pub mod linalg;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{MonomialOrder, Polynomial};

pub use complex::{minimalize, FreeResolution, GradedFreeModule, Matrix};
use frame::Frame;
pub use hilbert::{hilbert_function, hilbert_numerator, minimize_monomials, monomial_dimension};

/// Graded Betti numbers `β_{i,j}(R/I)`; only nonzero entries are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "BettiRepr", try_from = "BettiRepr")]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), u64>,
}

#[derive(Serialize, Deserialize)]
struct BettiRepr {
    entries: Vec<(usize, i64, u64)>,
    regularity: Option<i64>,
    pdim: Option<usize>,
}

impl From<BettiTable> for BettiRepr {
    fn from(b: BettiTable) -> Self {
        BettiRepr {
            regularity: b.regularity(),
            pdim: b.projective_dimension(),
            entries: b.entries.into_iter().map(|((i, j), v)| (i, j, v)).collect(),
        }
    }
}

impl TryFrom<BettiRepr> for BettiTable {
    type Error = String;

    fn try_from(r: BettiRepr) -> std::result::Result<Self, String> {
        let table = BettiTable::from_entries(r.entries.into_iter().map(|(i, j, v)| ((i, j), v)));
        if table.regularity() != r.regularity || table.projective_dimension() != r.pdim {
            return Err("regularity/pdim inconsistent with entries".into());
        }
        Ok(table)
    }
}

impl BettiTable {
    pub fn from_entries(entries: impl IntoIterator<Item = ((usize, i64), u64)>) -> Self {
        BettiTable { entries: entries.into_iter().filter(|&(_, v)| v > 0).collect() }
    }

    pub fn get(&self, i: usize, j: i64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, i64, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    /// `β_i = Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.range((i, i64::MIN)..=(i, i64::MAX)).map(|(_, v)| v).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `max { j - i }`; `None` for the zero module.
    pub fn regularity(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, j)| j - i as i64).max()
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// `Σ (-1)^i β_{i,j} t^j`, the numerator of the Hilbert series.
    pub fn euler_numerator(&self) -> Vec<i64> {
        let top = self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0).max(0) as usize;
        let mut out = vec![0i64; top + 1];
        for (&(i, j), &v) in &self.entries {
            let s = if i % 2 == 0 { 1 } else { -1 };
            out[j as usize] += s * v as i64;
        }
        hilbert::tpoly::trim(out)
    }
}

/// Macaulay2-style layout: columns are homological degrees, rows `j - i`.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (Some(reg), Some(pd)) = (self.regularity(), self.projective_dimension()) else {
            return write!(f, "(zero module)");
        };
        let low = self.entries.keys().map(|&(i, j)| j - i as i64).min().unwrap_or(0);
        let width = self.entries.values().map(|v| v.to_string().len()).max().unwrap_or(1).max(pd.to_string().len());
        write!(f, "{:>4} ", "")?;
        for i in 0..=pd {
            write!(f, " {i:>width$}")?;
        }
        for row in low..=reg {
            write!(f, "\n{:>4}:", row)?;
            for i in 0..=pd {
                match self.get(i, row + i as i64) {
                    0 => write!(f, " {:>width$}", ".")?,
                    v => write!(f, " {v:>width$}")?,
                }
            }
        }
        Ok(())
    }
}

fn check_input(ideal: &Ideal) -> Result<()> {
    if ideal.ring().order() != MonomialOrder::DegRevLex {
        return Err(Error::PreconditionViolated("resolutions need a degrevlex ring".into()));
    }
    if !ideal.is_homogeneous() {
        return Err(Error::PreconditionViolated("resolutions need homogeneous generators".into()));
    }
    Ok(())
}

fn frame_for(ideal: &Ideal, max_level: usize, budget: &Budget) -> Result<Option<Frame>> {
    check_input(ideal)?;
    let gb = ideal.groebner(budget)?;
    if gb.iter().any(Polynomial::is_unit) {
        return Ok(None);
    }
    Ok(Some(Frame::build(ideal.ring(), gb, max_level, budget)?))
}

/// A graded free resolution of `R/I` from the Schreyer frame; usually not minimal.
pub fn schreyer_resolution(ideal: &Ideal, budget: &Budget) -> Result<FreeResolution> {
    let ring = ideal.ring().clone();
    let mut modules = vec![GradedFreeModule { shifts: vec![0] }];
    let mut differentials = Vec::new();
    let Some(frame) = frame_for(ideal, usize::MAX, budget)? else {
        modules.push(GradedFreeModule { shifts: vec![0] });
        differentials.push(vec![BTreeMap::from([(0, ring.one())])]);
        return Ok(FreeResolution { ring, modules, differentials, minimal: false });
    };
    for (l, level) in frame.levels.iter().enumerate() {
        modules.push(GradedFreeModule { shifts: (0..level.len()).map(|k| level.degree(k) as i64).collect() });
        differentials.push((0..level.len()).map(|k| frame.column_polynomials(l + 1, k).into_iter().collect()).collect());
    }
    Ok(FreeResolution { ring, modules, differentials, minimal: false })
}

/// The minimal Betti table of `R/I`.
pub fn betti_table(ideal: &Ideal, budget: &Budget) -> Result<BettiTable> {
    betti_table_truncated(ideal, usize::MAX - 1, budget)
}

/// Betti numbers `β_{i,j}` for `i <= max_i`; only `max_i + 1` frame levels are built.
pub fn betti_table_truncated(ideal: &Ideal, max_i: usize, budget: &Budget) -> Result<BettiTable> {
    let Some(frame) = frame_for(ideal, max_i + 1, budget)? else {
        return Ok(BettiTable::default());
    };
    let field = ideal.ring().field();
    let nlev = frame.levels.len();
    // ranks[i][j] = rank of the degree-j constant part of d_i, 1 <= i <= nlev
    let mut ranks: Vec<BTreeMap<i64, usize>> = vec![BTreeMap::new(); nlev + 2];
    for l in 1..=nlev {
        let mut cols: BTreeMap<usize, Vec<(u32, u32)>> = BTreeMap::new();
        for (row, col, v) in frame.constant_entries(l) {
            cols.entry(col).or_default().push((row as u32, v));
        }
        let mut by_degree: BTreeMap<i64, Vec<Vec<(u32, u32)>>> = BTreeMap::new();
        for (col, mut entries) in cols {
            entries.sort_unstable();
            by_degree.entry(frame.levels[l - 1].degree(col) as i64).or_default().push(entries);
        }
        for (j, rows) in by_degree {
            ranks[l].insert(j, linalg::rank(rows, field));
        }
    }
    budget.check()?;
    let rank_at = |i: usize, j: i64| ranks.get(i).and_then(|m| m.get(&j)).copied().unwrap_or(0) as u64;
    let mut entries = BTreeMap::new();
    entries.insert((0usize, 0i64), 1 - rank_at(1, 0));
    for (l, level) in frame.levels.iter().enumerate() {
        let i = l + 1;
        if i > max_i {
            break;
        }
        let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
        for k in 0..level.len() {
            *counts.entry(level.degree(k) as i64).or_insert(0) += 1;
        }
        for (j, c) in counts {
            entries.insert((i, j), c - rank_at(i, j) - rank_at(i + 1, j));
        }
    }
    Ok(BettiTable::from_entries(entries))
}

/// Betti table via explicit [`minimalize`] of the Schreyer resolution.
pub fn betti_table_by_cancellation(ideal: &Ideal, budget: &Budget) -> Result<BettiTable> {
    let min = minimalize(&schreyer_resolution(ideal, budget)?)?;
    Ok(BettiTable::from_entries(min.graded_ranks()))
}

/// `reg(R/I)`.
pub fn regularity(ideal: &Ideal, budget: &Budget) -> Result<i64> {
    betti_table(ideal, budget)?
        .regularity()
        .ok_or_else(|| Error::PreconditionViolated("regularity of the zero module".into()))
}

/// `pd(R/I)`.
pub fn proj_dim(ideal: &Ideal, budget: &Budget) -> Result<usize> {
    betti_table(ideal, budget)?
        .projective_dimension()
        .ok_or_else(|| Error::PreconditionViolated("projective dimension of the zero module".into()))
}

/// `μ(I) = β_1(R/I)`, the minimal number of generators.
pub fn minimal_generator_count(ideal: &Ideal, budget: &Budget) -> Result<u64> {
    Ok(betti_table_truncated(ideal, 1, budget)?.total(1))
}

/// `dim R/I = dim R/in(I)`.
pub fn hilbert_dimension(ideal: &Ideal, budget: &Budget) -> Result<usize> {
    Ok(monomial_dimension(&ideal.leading_monomials(budget)?, ideal.ring().nvars()))
}

/// `ht(I) = nvars - dim R/I`; the unit ideal gets `nvars`.
pub fn height(ideal: &Ideal, budget: &Budget) -> Result<usize> {
    Ok(ideal.ring().nvars() - hilbert_dimension(ideal, budget)?)
}

/// Numerator of the Hilbert series of `R/I` over `(1 - t)^nvars`.
pub fn hilbert_series_numerator(ideal: &Ideal, budget: &Budget) -> Result<Vec<i64>> {
    Ok(hilbert_numerator(&ideal.leading_monomials(budget)?))
}

#[cfg(test)]
mod tests;
