use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

use super::monomial::Monomial;
use super::polynomial::{Polynomial, Term};
use super::ring::Ring;

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let ring = self.ring();
        let field = ring.field();
        for (k, t) in self.terms().iter().enumerate() {
            let c = field.to_signed(t.coeff);
            let (neg, abs) = (c < 0, c.unsigned_abs());
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if t.mono.is_one() {
                write!(f, "{abs}")?;
            } else if abs == 1 {
                write!(f, "{}", ring.monomial_string(&t.mono))?;
            } else {
                write!(f, "{abs}*{}", ring.monomial_string(&t.mono))?;
            }
        }
        Ok(())
    }
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse { column: self.pos + 1, message: message.into() }
    }

    fn integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .map_err(|_| Error::Parse { column: start + 1, message: "integer too large".into() })
    }

    fn identifier(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a variable"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }
}

/// Parses text such as `3*x1*y2^2 - x2*y1 + 5` over `ring`.
pub fn parse_polynomial(ring: &Arc<Ring>, text: &str) -> Result<Polynomial> {
    let field = ring.field();
    let p = field.characteristic() as u64;
    let mut lx = Lexer { src: text.as_bytes(), pos: 0 };
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let mut negative = false;
        match lx.peek() {
            None if first => return Err(lx.err("empty polynomial")),
            None => break,
            Some(b'-') => {
                negative = true;
                lx.pos += 1;
            }
            Some(b'+') if !first => lx.pos += 1,
            Some(_) if first => {}
            Some(c) => return Err(lx.err(format!("expected '+' or '-', found {:?}", c as char))),
        }
        first = false;
        let mut coeff: u64 = 1;
        let mut exps = vec![0u32; ring.nvars()];
        loop {
            match lx.peek() {
                Some(c) if c.is_ascii_digit() => {
                    coeff = coeff * (lx.integer()? % p) % p;
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let col = lx.pos + 1;
                    let name = lx.identifier()?;
                    let idx = ring
                        .var_index(name)
                        .ok_or_else(|| Error::Parse { column: col, message: format!("unknown variable {name}") })?;
                    let mut e = 1u64;
                    if lx.peek() == Some(b'^') {
                        lx.pos += 1;
                        e = lx.integer()?;
                    }
                    exps[idx] = u32::try_from(exps[idx] as u64 + e).map_err(|_| Error::ExponentOverflow)?;
                }
                _ => return Err(lx.err("expected a coefficient or variable")),
            }
            if lx.peek() == Some(b'*') {
                lx.pos += 1;
            } else {
                break;
            }
        }
        let mut c = coeff as u32;
        if negative {
            c = field.neg(c);
        }
        terms.push(Term { mono: Monomial::from_exponents(&exps)?, coeff: c });
    }
    Ok(Polynomial::from_terms(ring.clone(), terms))
}
