//! Command-line harness: corpus handling, a content-addressed Betti table
//! cache and the prediction-vs-oracle reconciliation behind `regpow verify`.

pub mod cache;
pub mod cli;
pub mod corpus;
pub mod input;
pub mod verify;

/// Version of every JSON document the harness emits.
pub const SCHEMA_VERSION: u32 = 1;
