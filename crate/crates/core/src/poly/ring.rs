use std::sync::Arc;

use crate::error::{Error, Result};

use super::field::PrimeField;
use super::monomial::{Monomial, MonomialOrder, MAX_VARS};
use super::polynomial::{Polynomial, Term};

/// A polynomial ring `F_p[z_1, ..., z_m]` with a fixed monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    order: MonomialOrder,
    field: PrimeField,
}

impl Ring {
    pub fn new(names: Vec<String>, order: MonomialOrder, field: PrimeField) -> Result<Arc<Ring>> {
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables(names.len()));
        }
        if let MonomialOrder::Elimination { block_start } = order {
            if block_start > names.len() {
                return Err(Error::PreconditionViolated(format!(
                    "elimination block starts at {block_start} but ring has {} variables",
                    names.len()
                )));
            }
        }
        for (i, a) in names.iter().enumerate() {
            if a.is_empty() || !a.chars().next().unwrap().is_ascii_alphabetic() {
                return Err(Error::PreconditionViolated(format!("bad variable name {a:?}")));
            }
            if !a.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::PreconditionViolated(format!("bad variable name {a:?}")));
            }
            if names[..i].contains(a) {
                return Err(Error::PreconditionViolated(format!("duplicate variable {a}")));
            }
        }
        Ok(Arc::new(Ring { names, order, field }))
    }

    /// `F_p[x_1..x_n, y_1..y_n]` with degrevlex, the ambient ring of edge ideals.
    pub fn edge_ring(n: usize, field: PrimeField) -> Result<Arc<Ring>> {
        let names = (1..=n)
            .map(|i| format!("x{i}"))
            .chain((1..=n).map(|i| format!("y{i}")))
            .collect();
        Ring::new(names, MonomialOrder::DegRevLex, field)
    }

    /// Same ring plus one trailing auxiliary variable that is eliminated first.
    pub fn with_elimination_variable(&self, name: &str) -> Result<Arc<Ring>> {
        let mut names = self.names.clone();
        names.push(name.to_string());
        Ring::new(names, MonomialOrder::Elimination { block_start: self.names.len() }, self.field)
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Degree used for pair selection: auxiliary elimination variables weigh zero.
    #[inline]
    pub fn sugar_degree(&self, m: &Monomial) -> u32 {
        match self.order {
            MonomialOrder::DegRevLex => m.degree(),
            MonomialOrder::Elimination { block_start } => m.degree() - m.block_degree(block_start),
        }
    }

    pub fn zero(self: &Arc<Self>) -> Polynomial {
        Polynomial::from_sorted_terms(self.clone(), Vec::new())
    }

    pub fn one(self: &Arc<Self>) -> Polynomial {
        self.constant(1)
    }

    pub fn constant(self: &Arc<Self>, c: i64) -> Polynomial {
        let c = self.field.from_i64(c);
        let terms = if c == 0 { vec![] } else { vec![Term { mono: Monomial::one(), coeff: c }] };
        Polynomial::from_sorted_terms(self.clone(), terms)
    }

    pub fn var(self: &Arc<Self>, i: usize) -> Polynomial {
        assert!(i < self.nvars(), "variable index out of range");
        Polynomial::from_sorted_terms(self.clone(), vec![Term { mono: Monomial::var(i), coeff: 1 }])
    }

    pub fn var_by_name(self: &Arc<Self>, name: &str) -> Option<Polynomial> {
        self.var_index(name).map(|i| self.var(i))
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs in any order.
    pub fn polynomial(self: &Arc<Self>, terms: &[(i64, Vec<u32>)]) -> Result<Polynomial> {
        let mut ts = Vec::with_capacity(terms.len());
        for (c, e) in terms {
            if e.len() != self.nvars() {
                return Err(Error::PreconditionViolated(format!(
                    "exponent vector of length {} in a ring with {} variables",
                    e.len(),
                    self.nvars()
                )));
            }
            ts.push(Term { mono: Monomial::from_exponents(e)?, coeff: self.field.from_i64(*c) });
        }
        Ok(Polynomial::from_terms(self.clone(), ts))
    }

    pub fn monomial_string(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, name) in self.names.iter().enumerate() {
            match m.exponent(i) {
                0 => {}
                1 => parts.push(name.clone()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}
