//! Crate-wide error type.

use alloc::string::String;
use thiserror::Error;

/// Errors reported by toolkit operations.
///
/// Every cap violation is an error, never a silent truncation, and every
/// structural rejection names a witness for the failed condition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown element label `{0}`")]
    UnknownLabel(String),

    #[error("carrier mismatch: `{left}` vs `{right}`")]
    CarrierMismatch { left: String, right: String },

    #[error("size cap exceeded: {what} has size {size}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("open family is not a topology: {reason}")]
    InvalidOpenFamily { reason: String },

    #[error("minimal-neighborhood map is not a topology: {reason}")]
    InvalidMinNbhd { reason: String },

    #[error("relation is not an equivalence: fails {axiom} at {witness}")]
    NotEquivalence { axiom: &'static str, witness: String },

    #[error("symmetric part is not transitive at {witness}")]
    SymmetricPartNotTransitive { witness: String },

    #[error("supplied order fails its certificate on block {block}: {reason}")]
    WitnessFailsCertificate { block: usize, reason: String },

    #[error("ranking does not cover all blocks: {reason}")]
    RankingIncomplete { reason: String },

    #[error("blocks do not partition the carrier: {reason}")]
    InvalidBlocks { reason: String },

    #[error("relation is not complete: ({0}, {1}) unordered")]
    NotComplete(String, String),

    #[error("malformed probe {probe}: {defect}")]
    MalformedProbe { probe: usize, defect: String },

    #[error("verdict table inconsistent: pair ({lhs}, {rhs}) marked twice incompatibly")]
    InconsistentVerdicts { lhs: String, rhs: String },

    #[error("weights must be strictly positive (weight {index} is not)")]
    NonPositiveWeight { index: usize },

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;
