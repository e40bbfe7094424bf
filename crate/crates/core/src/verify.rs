//! Shared report types for relation-universe verification suites.
//!
//! A suite scans a universe of relations (exhaustively or by seeded
//! sampling) for counterexamples to a claim, keeping only the least one in
//! enumeration order; scans over disjoint ranges merge deterministically, so
//! a multi-threaded scan reports byte-identically to a single-threaded one.

use alloc::string::String;
use alloc::vec::Vec;

use crate::relation::BinaryRelation;

/// The claims the verification suites test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ClaimId {
    /// Reflexive and strongly additive implies additive.
    Prop1,
    /// Additive and transitive implies strongly additive.
    AdditivityFwd,
    /// Additive and strongly additive implies transitive.
    AdditivityBwd,
    /// Reflexive and strongly additive implies transitive.
    Cor1,
    /// Complete and Villegas-additive implies transitive.
    DeGroot,
}

impl ClaimId {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::Prop1 => "prop1",
            ClaimId::AdditivityFwd => "additivity-theorem-fwd",
            ClaimId::AdditivityBwd => "additivity-theorem-bwd",
            ClaimId::Cor1 => "cor1",
            ClaimId::DeGroot => "degroot",
        }
    }
}

/// How a universe of relations was walked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UniverseDesc {
    Exhaustive { total: u64 },
    Sampled { samples: u64, seed: u64 },
}

/// A relation violating a claim, with the tuple that breaks the conclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    /// Position in the enumeration (mask value or sample index).
    pub index: u64,
    pub relation: BinaryRelation,
    /// Element indices violating the claim's conclusion.
    pub witness: Vec<usize>,
    pub description: String,
}

/// Outcome of scanning one claim over one universe: the least counterexample
/// if any. Expected to stay `None`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClaimOutcome {
    pub counterexample: Option<Counterexample>,
}

impl ClaimOutcome {
    pub fn record(&mut self, candidate: Counterexample) {
        match &self.counterexample {
            Some(existing) if existing.index <= candidate.index => {}
            _ => self.counterexample = Some(candidate),
        }
    }

    pub fn merge(&mut self, other: ClaimOutcome) {
        if let Some(c) = other.counterexample {
            self.record(c);
        }
    }
}

/// Result of verifying one claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub claim: ClaimId,
    pub universe: UniverseDesc,
    pub checked: u64,
    pub counterexample: Option<Counterexample>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}
