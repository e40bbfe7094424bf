//! `group`: additivity checks for one relation on a finite Abelian group,
//! or the exhaustive/sampled verification suite over the whole relation
//! universe.

use serde_json::{json, Value};

use ordcheck_core::enumerate::relation_universe_size;
use ordcheck_core::group::{
    is_additive, is_strongly_additive, scan_additivity_exhaustive, scan_additivity_sampled,
    wrap_additivity_reports, AdditivityScan, FiniteAbelianGroup, VerifyBudget,
    EXHAUSTIVE_ORDER_CAP,
};
use ordcheck_core::verify::{UniverseDesc, VerificationReport};

use super::{labels, relation_json, CommandOutput};
use crate::formats::{FormatError, FormatResult, InstanceDocument};
use crate::parallel::scan_partitioned;
use crate::report::RunReport;

pub fn universe_json(u: &UniverseDesc) -> Value {
    match u {
        UniverseDesc::Exhaustive { total } => json!({ "mode": "exhaustive", "total": total }),
        UniverseDesc::Sampled { samples, seed } => {
            json!({ "mode": "sampled", "samples": samples, "seed": seed })
        }
    }
}

pub fn verification_json(report: &VerificationReport) -> Value {
    json!({
        "claim": report.claim.as_str(),
        "universe": universe_json(&report.universe),
        "checked": report.checked,
        "counterexamples": report
            .counterexample
            .as_ref()
            .map(|c| vec![json!({
                "index": c.index,
                "relation": relation_json(&c.relation),
                "witness": labels(c.relation.carrier(), &c.witness),
                "description": c.description,
            })])
            .unwrap_or_default(),
    })
}

/// Relation-file mode: report additivity and strong additivity.
pub fn run_relation(
    doc: &InstanceDocument,
    input_digest: String,
) -> FormatResult<CommandOutput> {
    let InstanceDocument::GroupRelation(doc) = doc else {
        return Err(FormatError::invalid(
            "kind",
            format!("expected a group-relation document, got `{}`", doc.kind()),
        ));
    };
    let group = doc.to_group()?;
    let Some(rel) = doc.to_relation(&group)? else {
        return Err(FormatError::invalid(
            "relation",
            "document carries no relation; give `pairs` or `difference_set`",
        ));
    };
    let additive = is_additive(&rel, &group)?;
    let strongly = is_strongly_additive(&rel, &group)?;
    let witness_labels = |w: &Option<Vec<usize>>| {
        w.as_ref().map(|w| labels(group.carrier(), w))
    };
    let details = json!({
        "name": doc.name,
        "moduli": group.moduli(),
        "relation": relation_json(&rel),
        "additive": { "holds": additive.holds, "witness": witness_labels(&additive.witness) },
        "strongly_additive": { "holds": strongly.holds, "witness": witness_labels(&strongly.witness) },
    });
    let verdict = match (additive.holds, strongly.holds) {
        (true, true) => "additive and strongly additive",
        (true, false) => "additive, not strongly additive",
        (false, true) => "strongly additive, not additive",
        (false, false) => "neither additive nor strongly additive",
    };
    let report = RunReport::new("group", input_digest, verdict.to_string(), details);
    Ok(CommandOutput {
        report,
        exit_code: 0,
    })
}

/// Suite mode: the four additivity claims over the relation universe.
pub fn run_suite(
    moduli: &[u32],
    budget: VerifyBudget,
    threads: usize,
    input_digest: String,
) -> FormatResult<CommandOutput> {
    let group = FiniteAbelianGroup::new(moduli)?;
    let reports = verify_with_threads(&group, budget, threads)?;
    let all_pass = reports.iter().all(VerificationReport::passed);
    let details = json!({
        "moduli": group.moduli(),
        "claims": reports.iter().map(verification_json).collect::<Vec<_>>(),
    });
    let verdict = if all_pass {
        "zero counterexamples"
    } else {
        "counterexample found"
    };
    let report = RunReport::new("group", input_digest, verdict.to_string(), details);
    Ok(CommandOutput {
        report,
        exit_code: if all_pass { 0 } else { 1 },
    })
}

/// Range-partitioned verification with a deterministic merge: identical
/// reports for any thread count.
pub fn verify_with_threads(
    group: &FiniteAbelianGroup,
    budget: VerifyBudget,
    threads: usize,
) -> FormatResult<Vec<VerificationReport>> {
    let (partials, universe): (Vec<ordcheck_core::error::Result<AdditivityScan>>, _) =
        match budget {
            VerifyBudget::Exhaustive => {
                if group.size() > EXHAUSTIVE_ORDER_CAP {
                    return Err(ordcheck_core::Error::CapExceeded {
                        what: "exhaustive additivity universe (group order)",
                        size: group.size(),
                        cap: EXHAUSTIVE_ORDER_CAP,
                    }
                    .into());
                }
                let total = relation_universe_size(group.size())?;
                (
                    scan_partitioned(total, threads, |lo, hi| {
                        scan_additivity_exhaustive(group, lo, hi)
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
                        scan_additivity_sampled(group, seed, lo, hi)
                    }),
                    UniverseDesc::Sampled { samples, seed },
                )
            }
        };
    let mut merged = AdditivityScan::default();
    for partial in partials {
        merged.merge(partial?);
    }
    Ok(wrap_additivity_reports(merged, universe))
}
