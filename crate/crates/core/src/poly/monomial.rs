use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper bound on the number of ring variables.
pub const MAX_VARS: usize = 32;

/// An exponent vector with cached total degree and support mask.
/// Slots past the ring's variable count stay zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
    deg: u16,
    mask: u32,
}

impl Monomial {
    pub const fn one() -> Self {
        Monomial { exps: [0; MAX_VARS], deg: 0, mask: 0 }
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::one();
        m.exps[i] = 1;
        m.deg = 1;
        m.mask = 1 << i;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::TooManyVariables(exps.len()));
        }
        let mut m = Self::one();
        let mut deg = 0u32;
        for (i, &e) in exps.iter().enumerate() {
            let e8 = u8::try_from(e).map_err(|_| Error::ExponentOverflow)?;
            m.exps[i] = e8;
            deg += e;
            if e > 0 {
                m.mask |= 1 << i;
            }
        }
        m.deg = u16::try_from(deg).map_err(|_| Error::ExponentOverflow)?;
        Ok(m)
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg as u32
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&e| e as u32).collect()
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Bitmask of variables with positive exponent.
    #[inline]
    pub fn support(&self) -> u32 {
        self.mask
    }

    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].checked_add(other.exps[i])?;
        }
        out.deg = self.deg.checked_add(other.deg)?;
        out.mask = self.mask | other.mask;
        Some(out)
    }

    /// Product; panics on exponent overflow (exponents are bounded by 255).
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("monomial exponent overflow")
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.mask & !other.mask != 0 || self.deg > other.deg {
            return false;
        }
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`, assuming `other` divides `self`.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        let mut out = *self;
        let mut mask = 0;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i] - other.exps[i];
            if out.exps[i] > 0 {
                mask |= 1 << i;
            }
        }
        out.deg = self.deg - other.deg;
        out.mask = mask;
        out
    }

    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| self.div(other))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        let mut deg = 0u16;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].max(other.exps[i]);
            deg += out.exps[i] as u16;
        }
        out.deg = deg;
        out.mask = self.mask | other.mask;
        out
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        let mut deg = 0u16;
        let mut mask = 0;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].min(other.exps[i]);
            deg += out.exps[i] as u16;
            if out.exps[i] > 0 {
                mask |= 1 << i;
            }
        }
        out.deg = deg;
        out.mask = mask;
        out
    }

    #[inline]
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.mask & other.mask == 0
    }

    /// Sum of the exponents of variables `start..`.
    pub fn block_degree(&self, start: usize) -> u32 {
        self.exps[start..].iter().map(|&e| e as u32).sum()
    }

    /// Swaps the exponents of variables `i` and `j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> Monomial {
        let mut out = *self;
        out.exps.swap(i, j);
        let (bi, bj) = ((self.mask >> i) & 1, (self.mask >> j) & 1);
        out.mask &= !((1 << i) | (1 << j));
        out.mask |= (bi << j) | (bj << i);
        out
    }

    /// Degree reverse lexicographic comparison.
    #[inline]
    pub fn cmp_degrevlex(&self, other: &Monomial) -> Ordering {
        match self.deg.cmp(&other.deg) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in (0..MAX_VARS).rev() {
            let (a, b) = (self.exps[i], other.exps[i]);
            if a != b {
                return b.cmp(&a);
            }
        }
        Ordering::Equal
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = (0..MAX_VARS).rev().find(|&i| self.exps[i] > 0).map_or(0, |i| i + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

/// A monomial order on a ring's variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    DegRevLex,
    /// Variables with index `>= block_start` form an auxiliary block that is
    /// compared first (by its total degree), then degrevlex breaks ties.
    Elimination { block_start: usize },
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => a.cmp_degrevlex(b),
            MonomialOrder::Elimination { block_start } => a
                .block_degree(block_start)
                .cmp(&b.block_degree(block_start))
                .then_with(|| a.cmp_degrevlex(b)),
        }
    }

    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::DegRevLex)
    }
}
