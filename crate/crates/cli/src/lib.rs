//! Command-line front end for the ordcheck toolkit: instance-file parsing,
//! dispatch to the core library, and deterministic report emission.
//!
//! Exit-code contract: 0 = operation completed with an affirmative or
//! report verdict, 1 = a checked property fails or an instance is
//! infeasible, 2 = input or cap error. Reports are byte-identical for
//! identical inputs and flags, up to a timing field that the report digest
//! excludes.

pub mod commands;
pub mod formats;
pub mod parallel;
pub mod rational;
pub mod report;
