//! Explicit graded free resolutions with polynomial matrices.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedFreeModule {
    pub shifts: Vec<i64>,
}

impl GradedFreeModule {
    pub fn rank(&self) -> usize {
        self.shifts.len()
    }
}

/// One column per basis element of the source: `row -> entry`, zeros omitted.
pub type Matrix = Vec<BTreeMap<usize, Polynomial>>;

/// `modules[0]` is the ring; `differentials[i]` maps `modules[i+1] -> modules[i]`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    pub ring: Arc<Ring>,
    pub modules: Vec<GradedFreeModule>,
    pub differentials: Vec<Matrix>,
    pub minimal: bool,
}

impl FreeResolution {
    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    /// Checks `d_i ∘ d_{i+1} = 0` for every consecutive pair.
    pub fn is_complex(&self) -> Result<bool> {
        for i in 1..self.differentials.len() {
            let (lower, upper) = (&self.differentials[i - 1], &self.differentials[i]);
            for col in upper {
                let mut acc: BTreeMap<usize, Polynomial> = BTreeMap::new();
                for (&mid, a) in col {
                    for (&row, b) in &lower[mid] {
                        let prod = b.mul(a)?;
                        let e = acc.entry(row).or_insert_with(|| self.ring.zero());
                        *e = e.add(&prod)?;
                    }
                }
                if acc.values().any(|p| !p.is_zero()) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Every entry is homogeneous of degree `source shift - target shift`.
    pub fn is_graded(&self) -> bool {
        self.differentials.iter().enumerate().all(|(i, d)| {
            d.iter().enumerate().all(|(c, col)| {
                col.iter().all(|(&r, p)| {
                    p.is_homogeneous()
                        && p.degree().map(i64::from) == Some(self.modules[i + 1].shifts[c] - self.modules[i].shifts[r])
                })
            })
        })
    }

    pub fn has_constant_entries(&self) -> bool {
        self.differentials.iter().flatten().flat_map(|c| c.values()).any(Polynomial::is_unit)
    }

    /// `(i, j) -> count` of basis elements of degree `j` in `F_i`.
    pub fn graded_ranks(&self) -> BTreeMap<(usize, i64), u64> {
        let mut out = BTreeMap::new();
        for (i, m) in self.modules.iter().enumerate() {
            for &s in &m.shifts {
                *out.entry((i, s)).or_insert(0) += 1;
            }
        }
        out
    }
}

/// Cancels unit entries one at a time until none remain.
pub fn minimalize(res: &FreeResolution) -> Result<FreeResolution> {
    let mut r = res.clone();
    while let Some((i, row, col)) = find_unit(&r) {
        cancel(&mut r, i, row, col)?;
    }
    while r.modules.len() > 1 && r.modules.last().unwrap().rank() == 0 {
        r.modules.pop();
        r.differentials.pop();
    }
    r.minimal = true;
    Ok(r)
}

fn find_unit(r: &FreeResolution) -> Option<(usize, usize, usize)> {
    for (i, d) in r.differentials.iter().enumerate() {
        for (c, col) in d.iter().enumerate() {
            if let Some((&row, _)) = col.iter().find(|(_, p)| p.is_unit()) {
                return Some((i, row, c));
            }
        }
    }
    None
}

fn drop_row(col: &mut BTreeMap<usize, Polynomial>, row: usize) {
    col.remove(&row);
    let shifted: Vec<(usize, Polynomial)> = col.range(row + 1..).map(|(&k, v)| (k, v.clone())).collect();
    for (k, v) in shifted {
        col.remove(&k);
        col.insert(k - 1, v);
    }
}

/// With `u = d_i[row, col]` a unit: subtract multiples of column `col` to
/// clear row `row`, then drop basis element `col` of `F_{i+1}` and `row` of `F_i`.
fn cancel(r: &mut FreeResolution, i: usize, row: usize, col: usize) -> Result<()> {
    let field = r.ring.field();
    let d = &mut r.differentials[i];
    let pivot_col = d[col].clone();
    let inv = field.inv(pivot_col[&row].lead_coeff().ok_or(Error::DivisionFailure)?);
    for (c, other) in d.iter_mut().enumerate() {
        if c == col {
            continue;
        }
        let Some(a) = other.get(&row).cloned() else { continue };
        let factor = a.scale(inv);
        for (&rr, p) in &pivot_col {
            let e = other.entry(rr).or_insert_with(|| r.ring.zero());
            *e = e.sub(&p.mul(&factor)?)?;
            if e.is_zero() {
                other.remove(&rr);
            }
        }
    }
    d.remove(col);
    for c in d.iter_mut() {
        drop_row(c, row);
    }
    r.modules[i + 1].shifts.remove(col);
    r.modules[i].shifts.remove(row);
    if let Some(upper) = r.differentials.get_mut(i + 1) {
        for c in upper.iter_mut() {
            drop_row(c, col);
        }
    }
    if i > 0 {
        r.differentials[i - 1].remove(row);
    }
    Ok(())
}
