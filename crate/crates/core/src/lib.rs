//! Prime graphs of character degrees for small graphs.
//!
//! The prime graph of a finite group joins two primes when their product
//! divides some irreducible character degree. This crate provides small-graph
//! machinery (invariants, canonical forms, exhaustive census), exact integer
//! arithmetic, character degree sets for several families of groups, and the
//! checks that decide which regular graphs can occur as such prime graphs.

pub mod arith;
pub mod canon;
pub mod census;
pub mod classify;
pub mod cli;
pub mod degrees;
pub mod dot;
pub mod error;
pub mod graph;
pub mod primegraph;
pub mod report;

pub use canon::CanonicalForm;
pub use error::{Error, Result};
pub use graph::SmallGraph;
