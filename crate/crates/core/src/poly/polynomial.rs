use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

use super::field::PrimeField;
use super::monomial::{Monomial, MonomialOrder};
use super::ring::Ring;

/// A nonzero coefficient attached to a monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub mono: Monomial,
    pub coeff: u32,
}

/// A sparse polynomial: terms sorted strictly descending in the ring's order,
/// no zero coefficients.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    /// Trusts that `terms` is already canonical.
    pub(crate) fn from_sorted_terms(ring: Arc<Ring>, terms: Vec<Term>) -> Self {
        debug_assert!(is_canonical(&terms, &ring.order()));
        Polynomial { ring, terms }
    }

    /// Sorts and combines arbitrary terms.
    pub fn from_terms(ring: Arc<Ring>, terms: Vec<Term>) -> Self {
        let terms = canonicalize(terms, &ring.order(), &ring.field());
        Polynomial { ring, terms }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.mono)
    }

    pub fn lead_coeff(&self) -> Option<u32> {
        self.terms.first().map(|t| t.coeff)
    }

    /// Maximum total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => self.terms.iter().all(|s| s.mono.degree() == t.mono.degree()),
        }
    }

    /// A nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let f = self.ring.field();
        let terms = sub_mul(&self.terms, &other.terms, f.neg(1), &Monomial::one(), &self.ring.order(), &f);
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let f = self.ring.field();
        let terms = sub_mul(&self.terms, &other.terms, 1, &Monomial::one(), &self.ring.order(), &f);
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let terms = mul_terms(&self.terms, &other.terms, &self.ring.order(), &self.ring.field());
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.ring.field().neg(1))
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let f = self.ring.field();
        if c == 0 {
            return self.ring.zero();
        }
        let terms = self.terms.iter().map(|t| Term { mono: t.mono, coeff: f.mul(t.coeff, c) }).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        let terms = self.terms.iter().map(|t| Term { mono: t.mono.mul(m), coeff: t.coeff }).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.lead_coeff() {
            None => self.clone(),
            Some(c) => self.scale(self.ring.field().inv(c)),
        }
    }

    /// Re-expresses the polynomial in `target`, which must start with the same
    /// variable names (extra trailing variables allowed in either direction as
    /// long as they are unused).
    pub fn map_to(&self, target: &Arc<Ring>) -> Result<Polynomial> {
        let common = self.ring.nvars().min(target.nvars());
        if self.ring.names()[..common] != target.names()[..common] || self.ring.field() != target.field() {
            return Err(Error::RingMismatch);
        }
        for t in &self.terms {
            if (common..self.ring.nvars()).any(|i| t.mono.exponent(i) > 0) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Polynomial::from_terms(target.clone(), self.terms.clone()))
    }

    /// Applies the variable permutation `z_i -> z_{perm[i]}`.
    pub fn permute_variables(&self, perm: &[usize]) -> Result<Polynomial> {
        let n = self.ring.nvars();
        if perm.len() != n {
            return Err(Error::PreconditionViolated("permutation length mismatch".into()));
        }
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let old = t.mono.exponents(n);
                let mut new = vec![0u32; n];
                for (i, e) in old.into_iter().enumerate() {
                    new[perm[i]] = e;
                }
                Ok(Term { mono: Monomial::from_exponents(&new)?, coeff: t.coeff })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::from_terms(self.ring.clone(), terms))
    }

    /// Exact division; `None` if `divisor` does not divide `self`.
    pub fn divide_exact(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        self.check_ring(divisor)?;
        let Some(lt) = divisor.lead_term().copied() else {
            return Err(Error::DivisionFailure);
        };
        let f = self.ring.field();
        let ord = self.ring.order();
        let inv = f.inv(lt.coeff);
        let mut rest = self.terms.clone();
        let mut quotient = Vec::new();
        while let Some(head) = rest.first().copied() {
            let Some(q) = head.mono.checked_div(&lt.mono) else {
                return Ok(None);
            };
            let c = f.mul(head.coeff, inv);
            quotient.push(Term { mono: q, coeff: c });
            rest = sub_mul(&rest, &divisor.terms, c, &q, &ord, &f);
        }
        Ok(Some(Polynomial { ring: self.ring.clone(), terms: quotient }))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

pub(crate) fn is_canonical(terms: &[Term], ord: &MonomialOrder) -> bool {
    terms.iter().all(|t| t.coeff != 0)
        && terms.windows(2).all(|w| ord.cmp(&w[0].mono, &w[1].mono) == Ordering::Greater)
}

pub(crate) fn canonicalize(mut terms: Vec<Term>, ord: &MonomialOrder, f: &PrimeField) -> Vec<Term> {
    terms.sort_by(|a, b| ord.cmp(&b.mono, &a.mono));
    let mut out: Vec<Term> = Vec::with_capacity(terms.len());
    for t in terms {
        match out.last_mut() {
            Some(last) if last.mono == t.mono => {
                last.coeff = f.add(last.coeff, t.coeff);
            }
            _ => out.push(t),
        }
        if out.last().is_some_and(|l| l.coeff == 0) {
            out.pop();
        }
    }
    out.retain(|t| t.coeff != 0);
    out
}

/// `a - c * m * b`, merging two sorted term lists.
pub(crate) fn sub_mul(a: &[Term], b: &[Term], c: u32, m: &Monomial, ord: &MonomialOrder, f: &PrimeField) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let negc = f.neg(c);
    let (mut i, mut j) = (0, 0);
    let mut next_b = b.first().map(|t| t.mono.mul(m));
    while i < a.len() || j < b.len() {
        let ord_ab = match (a.get(i), next_b.as_ref()) {
            (Some(ta), Some(mb)) => ord.cmp(&ta.mono, mb),
            (Some(_), None) => Ordering::Greater,
            (None, _) => Ordering::Less,
        };
        match ord_ab {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                let coeff = f.mul(negc, b[j].coeff);
                if coeff != 0 {
                    out.push(Term { mono: next_b.unwrap(), coeff });
                }
                j += 1;
                next_b = b.get(j).map(|t| t.mono.mul(m));
            }
            Ordering::Equal => {
                let coeff = f.add(a[i].coeff, f.mul(negc, b[j].coeff));
                if coeff != 0 {
                    out.push(Term { mono: a[i].mono, coeff });
                }
                i += 1;
                j += 1;
                next_b = b.get(j).map(|t| t.mono.mul(m));
            }
        }
    }
    out
}

pub(crate) fn mul_terms(a: &[Term], b: &[Term], ord: &MonomialOrder, f: &PrimeField) -> Vec<Term> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut prods = Vec::with_capacity(a.len() * b.len());
    for s in small {
        for l in large {
            prods.push(Term { mono: s.mono.mul(&l.mono), coeff: f.mul(s.coeff, l.coeff) });
        }
    }
    canonicalize(prods, ord, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PrimeField;

    fn ring() -> Arc<Ring> {
        Ring::edge_ring(3, PrimeField::default()).unwrap()
    }

    fn p(r: &Arc<Ring>, s: &str) -> Polynomial {
        crate::poly::parse_polynomial(r, s).unwrap()
    }

    #[test]
    fn cancellation_to_zero() {
        let r = ring();
        let a = p(&r, "x1*y1");
        let b = p(&r, "-x1*y1");
        assert!(a.add(&b).unwrap().is_zero());
    }

    #[test]
    fn identity_multiplication() {
        let r = ring();
        let f12 = p(&r, "x1*y2 - x2*y1");
        assert_eq!(f12.mul(&r.one()).unwrap(), f12);
    }

    #[test]
    fn product_of_two_edge_binomials() {
        let r = ring();
        let f12 = p(&r, "x1*y2 - x2*y1");
        let f23 = p(&r, "x2*y3 - x3*y2");
        let prod = f12.mul(&f23).unwrap();
        // hand expansion
        let expected = p(&r, "x1*x2*y2*y3 - x1*x3*y2^2 - x2^2*y1*y3 + x2*x3*y1*y2");
        assert_eq!(prod, expected);
        assert_eq!(prod.len(), 4);
        assert_eq!(prod.degree(), Some(4));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let r = ring();
        let s = Ring::edge_ring(2, PrimeField::default()).unwrap();
        assert_eq!(r.var(0).add(&s.var(0)), Err(Error::RingMismatch));
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let f = p(&r, "x1*y2 - x2*y1");
        let g = p(&r, "x3 + y3");
        let q = f.mul(&g).unwrap().divide_exact(&g).unwrap().unwrap();
        assert_eq!(q, f);
        assert!(f.divide_exact(&g).unwrap().is_none());
    }
}
