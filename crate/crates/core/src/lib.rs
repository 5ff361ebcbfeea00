//! Regularity of powers of (parity) binomial edge ideals.
//!
//! The crate has two halves. The combinatorial half ([`graph`], [`taxonomy`],
//! [`formulas`]) classifies graphs whose (parity) binomial edge ideal is an
//! almost complete intersection and evaluates closed-form regularity
//! predictions for all powers. The algebraic half ([`poly`], [`ideal`],
//! [`resolution`], [`edge_ideals`]) recomputes those regularities exactly
//! over a prime field from minimal graded free resolutions.

pub mod budget;
pub mod edge_ideals;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod ideal;
pub mod poly;
pub mod resolution;
pub mod taxonomy;

pub use budget::Budget;
pub use error::{Error, Result};
