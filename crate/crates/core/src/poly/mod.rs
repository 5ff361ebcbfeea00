//! Exact sparse polynomial arithmetic over prime fields and Gröbner bases.

mod field;
mod groebner;
mod monomial;
mod parse;
mod polynomial;
mod ring;

pub use field::{PrimeField, CROSS_CHECK_CHARACTERISTIC, DEFAULT_CHARACTERISTIC};
pub use groebner::{groebner_basis, is_groebner_basis, normal_form, reduce_with_quotients, s_polynomial};
pub use monomial::{Monomial, MonomialOrder, MAX_VARS};
pub use parse::parse_polynomial;
pub use polynomial::{Polynomial, Term};
pub use ring::Ring;

