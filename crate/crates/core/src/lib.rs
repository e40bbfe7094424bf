//! Finite-model verification toolkit for order-theoretic, topological and
//! algebraic properties of binary relations.
//!
//! The crate decides relation axioms on finite carriers, computes the
//! structure of finite (Alexandrov) topological spaces, searches for
//! continuous (weak) orders, verifies additivity/transitivity equivalences on
//! finite Abelian groups and event algebras, evaluates monotone-continuity
//! axioms over chain probes, and solves exact rational linear programs for
//! linear-utility and qualitative-probability representations.
//!
//! Everything is `no_std` + `alloc`: all operations are pure functions over
//! immutable value objects, so results are deterministic and safe to share
//! across threads. IO, file formats and the command line live in the
//! companion `ordcheck` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod enumerate;
pub mod error;
pub mod group;
pub mod monotone;
pub mod orderability;
pub mod partition;
pub mod relation;
pub mod represent;
pub mod sample;
pub mod topology;
pub mod verify;

pub use error::Error;
pub use relation::{BinaryRelation, Carrier, PropertyReport};
pub use topology::FiniteTopology;
