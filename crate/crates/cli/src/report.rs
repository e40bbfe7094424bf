//! The run-report envelope: a single machine-readable document per
//! invocation, byte-identical for identical inputs and configuration.
//!
//! The digest covers the canonical form of the report — everything except
//! the timing field and the digest itself — so re-runs can be compared
//! regardless of wall-clock noise. `serde_json` maps are sorted, and every
//! detail value is built from sorted containers, so serialization order is
//! fixed.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const REPORT_SCHEMA: &str = "ordcheck-report/1";

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub schema: &'static str,
    pub tool: &'static str,
    pub version: &'static str,
    pub operation: String,
    pub input_digest: String,
    pub verdict: String,
    pub details: Value,
    pub report_digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl RunReport {
    pub fn new(operation: &str, input_digest: String, verdict: String, details: Value) -> Self {
        let mut report = RunReport {
            schema: REPORT_SCHEMA,
            tool: "ordcheck",
            version: env!("CARGO_PKG_VERSION"),
            operation: operation.to_string(),
            input_digest,
            verdict,
            details,
            report_digest: String::new(),
            timing_ms: None,
        };
        report.report_digest = format!("sha256:{}", hex_digest(&report.canonical_bytes()));
        report
    }

    /// The digest-covered form: no timing, empty digest field.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut canonical = self.clone();
        canonical.report_digest = String::new();
        canonical.timing_ms = None;
        serde_json::to_vec(&canonical).expect("report serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn hex_digest(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let out = hasher.finalize();
    let mut s = String::with_capacity(64);
    for b in out {
        s.push_str(&format!("{b:02x}"));
    }
    s
}

/// Digest over all input files in argument order.
pub fn input_digest(files: &[&[u8]]) -> String {
    let mut hasher = Sha256::new();
    for f in files {
        hasher.update((f.len() as u64).to_le_bytes());
        hasher.update(f);
    }
    let out = hasher.finalize();
    let mut s = String::from("sha256:");
    for b in out {
        s.push_str(&format!("{b:02x}"));
    }
    s
}
