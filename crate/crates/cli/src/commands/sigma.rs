//! `sigma`: Villegas additivity of one event relation, or the DeGroot
//! transitivity suite over the whole relation universe of an event algebra.

use serde_json::json;

use ordcheck_core::enumerate::relation_universe_size;
use ordcheck_core::group::VerifyBudget;
use ordcheck_core::monotone::{
    is_villegas_additive, scan_degroot_exhaustive, scan_degroot_sampled, DegrootScan,
    EventAlgebra, VillegasClause, DEGROOT_EXHAUSTIVE_CAP,
};
use ordcheck_core::verify::{ClaimId, UniverseDesc, VerificationReport};

use super::CommandOutput;
use crate::commands::group::verification_json;
use crate::formats::{FormatError, FormatResult, InstanceDocument};
use crate::parallel::scan_partitioned;
use crate::report::RunReport;

/// Relation-file mode: Villegas additivity with the least violating
/// quadruple.
pub fn run_relation(doc: &InstanceDocument, input_digest: String) -> FormatResult<CommandOutput> {
    let InstanceDocument::EventRelation(doc) = doc else {
        return Err(FormatError::invalid(
            "kind",
            format!("expected an event-relation document, got `{}`", doc.kind()),
        ));
    };
    let algebra = doc.to_algebra()?;
    let rel = doc.to_relation(&algebra)?;
    let verdict = is_villegas_additive(&rel, &algebra)?;
    let details = json!({
        "name": doc.name,
        "atoms": algebra.atoms(),
        "relation": super::relation_json(&rel),
        "villegas_additive": {
            "holds": verdict.holds,
            "violation": verdict.violation.map(|v| json!({
                "a1": algebra.label(v.a1),
                "a2": algebra.label(v.a2),
                "b1": algebra.label(v.b1),
                "b2": algebra.label(v.b2),
                "clause": match v.clause {
                    VillegasClause::Weak => "weak",
                    VillegasClause::Strict => "strict",
                },
            })),
        },
    });
    let verdict_str = if verdict.holds {
        "Villegas-additive"
    } else {
        "not Villegas-additive"
    };
    let report = RunReport::new("sigma", input_digest, verdict_str.to_string(), details);
    Ok(CommandOutput {
        report,
        exit_code: 0,
    })
}

/// Suite mode: complete and Villegas-additive implies transitive.
pub fn run_suite(
    atoms: u32,
    budget: VerifyBudget,
    threads: usize,
    input_digest: String,
) -> FormatResult<CommandOutput> {
    let algebra = EventAlgebra::new(atoms)?;
    let report = verify_with_threads(&algebra, budget, threads)?;
    let details = json!({
        "atoms": atoms,
        "claims": [verification_json(&report)],
    });
    let verdict = if report.passed() {
        "zero counterexamples"
    } else {
        "counterexample found"
    };
    let run_report = RunReport::new("sigma", input_digest, verdict.to_string(), details);
    Ok(CommandOutput {
        report: run_report,
        exit_code: if report.passed() { 0 } else { 1 },
    })
}

pub fn verify_with_threads(
    algebra: &EventAlgebra,
    budget: VerifyBudget,
    threads: usize,
) -> FormatResult<VerificationReport> {
    let (partials, universe): (Vec<ordcheck_core::error::Result<DegrootScan>>, _) = match budget
    {
        VerifyBudget::Exhaustive => {
            if algebra.atoms() > DEGROOT_EXHAUSTIVE_CAP {
                return Err(ordcheck_core::Error::CapExceeded {
                    what: "exhaustive DeGroot universe (atoms)",
                    size: algebra.atoms() as usize,
                    cap: DEGROOT_EXHAUSTIVE_CAP as usize,
                }
                .into());
            }
            let total = relation_universe_size(algebra.event_count())?;
            (
                scan_partitioned(total, threads, |lo, hi| {
                    scan_degroot_exhaustive(algebra, lo, hi)
                }),
                UniverseDesc::Exhaustive { total },
            )
        }
        VerifyBudget::Sampled { samples, seed } => {
            if samples == 0 {
                return Err(FormatError::invalid("--sample", "sample budget is zero"));
            }
            (
                scan_partitioned(samples, threads, |lo, hi| {
                    scan_degroot_sampled(algebra, seed, lo, hi)
                }),
                UniverseDesc::Sampled { samples, seed },
            )
        }
    };
    let mut merged = DegrootScan::default();
    for partial in partials {
        merged.merge(partial?);
    }
    Ok(VerificationReport {
        claim: ClaimId::DeGroot,
        universe,
        checked: merged.checked,
        counterexample: merged.outcome.counterexample,
    })
}
