//! Sparse row echelon form over a prime field, used for ranks of the
//! constant parts of resolution differentials.

use std::collections::HashMap;

use crate::poly::PrimeField;

/// A sparse row: `(column, nonzero value)` pairs with strictly increasing columns.
pub type SparseRow = Vec<(u32, u32)>;

/// Incremental echelon basis; rows are kept with leading coefficient one.
pub struct Echelon {
    field: PrimeField,
    pivots: HashMap<u32, SparseRow>,
}

impl Echelon {
    pub fn new(field: PrimeField) -> Self {
        Echelon { field, pivots: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the basis; returns true if it was independent.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        let f = self.field;
        loop {
            let Some(&(lead, val)) = row.first() else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(pivot) => row = axpy(&row, pivot, f.neg(val), f),
                None => {
                    let inv = f.inv(val);
                    for e in row.iter_mut() {
                        e.1 = f.mul(e.1, inv);
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
    }
}

/// `a + c·b` for sparse rows.
fn axpy(a: &[(u32, u32)], b: &[(u32, u32)], c: u32, f: PrimeField) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, f.mul(c, b[j].1)));
            j += 1;
        } else {
            let v = f.add(a[i].1, f.mul(c, b[j].1));
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn rank(rows: impl IntoIterator<Item = SparseRow>, field: PrimeField) -> usize {
    let mut e = Echelon::new(field);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dense_rank(mut m: Vec<Vec<u32>>, f: PrimeField) -> usize {
        let cols = m.first().map_or(0, Vec::len);
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
            m.swap(r, p);
            let inv = f.inv(m[r][c]);
            for i in 0..m.len() {
                if i != r && m[i][c] != 0 {
                    let k = f.mul(m[i][c], inv);
                    for j in 0..cols {
                        m[i][j] = f.sub(m[i][j], f.mul(k, m[r][j]));
                    }
                }
            }
            r += 1;
        }
        r
    }

    #[test]
    fn small_ranks() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(rank(vec![vec![(0, 1), (1, 2)], vec![(0, 2), (1, 4)]], f), 1);
        assert_eq!(rank(vec![vec![(0, 1)], vec![(1, 3)], vec![]], f), 2);
    }

    proptest! {
        #[test]
        fn matches_dense_elimination(m in proptest::collection::vec(proptest::collection::vec(0u32..5, 6), 0..7)) {
            let f = PrimeField::new(5).unwrap();
            let rows = m.iter().map(|r| r.iter().enumerate().filter(|(_, &v)| v != 0).map(|(c, &v)| (c as u32, v)).collect());
            prop_assert_eq!(rank(rows, f), dense_rank(m.clone(), f));
        }
    }
}
