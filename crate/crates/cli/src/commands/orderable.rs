//! `orderable`: punctured-square criterion and the order searches, with the
//! criterion-witness gap flagged when they disagree.

use serde_json::{json, Value};

use ordcheck_core::orderability::{
    brute_force_weak_order_with_cap, eilenberg_criterion, find_order_with_cap,
    find_weak_order_with_cap, OrderWitness, BRUTE_FORCE_CAP, FIND_ORDER_CAP, FIND_WEAK_ORDER_CAP,
};
use ordcheck_core::topology::FiniteTopology;

use super::{labels, property_report_json, relation_json, CommandOutput};
use crate::formats::{FormatError, FormatResult, InstanceDocument};
use crate::report::RunReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Criterion,
    Search,
    Weak,
    Brute,
}

impl Mode {
    pub fn parse(s: &str) -> FormatResult<Mode> {
        match s {
            "criterion" => Ok(Mode::Criterion),
            "search" => Ok(Mode::Search),
            "weak" => Ok(Mode::Weak),
            "brute" => Ok(Mode::Brute),
            other => Err(FormatError::invalid(
                "--mode",
                format!("`{other}` is not one of criterion, search, weak, brute"),
            )),
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Mode::Criterion => "criterion",
            Mode::Search => "search",
            Mode::Weak => "weak",
            Mode::Brute => "brute",
        }
    }
}

fn witness_json(top: &FiniteTopology, witness: &Option<OrderWitness>) -> Value {
    match witness {
        None => json!({ "found": false }),
        Some(w) => json!({
            "found": true,
            "relation": relation_json(&w.relation),
            "properties": property_report_json(w.relation.carrier(), &w.properties),
            "continuous": w.continuity.continuous,
            "equivalence_classes": w.equivalence.as_ref().map(|p| {
                p.blocks()
                    .iter()
                    .map(|b| labels(top.carrier(), &b.iter().copied().collect::<Vec<_>>()))
                    .collect::<Vec<_>>()
            }),
        }),
    }
}

pub fn run(
    topology_doc: &InstanceDocument,
    modes: &[Mode],
    max_size: Option<usize>,
    input_digest: String,
) -> FormatResult<CommandOutput> {
    let InstanceDocument::Topology(doc) = topology_doc else {
        return Err(FormatError::invalid(
            "kind",
            format!("expected a topology document, got `{}`", topology_doc.kind()),
        ));
    };
    let top = doc.to_topology()?;
    let mut details = serde_json::Map::new();
    details.insert("name".into(), json!(doc.name));
    details.insert(
        "modes".into(),
        json!(modes.iter().map(|m| m.as_str()).collect::<Vec<_>>()),
    );

    let mut criterion_satisfied = None;
    let mut search_found = None;
    for mode in modes {
        match mode {
            Mode::Criterion => {
                let report = eilenberg_criterion(&top)?;
                criterion_satisfied = Some(report.satisfied);
                details.insert(
                    "criterion".into(),
                    json!({
                        "satisfied": report.satisfied,
                        "component_count": report.component_count(),
                        "components": report.components.iter().map(|c| json!({
                            "members": labels(top.carrier(), &c.members.iter().copied().collect::<Vec<_>>()),
                            "exempt": c.exempt,
                            "punctured_square_disconnected": c.punctured_disconnected,
                        })).collect::<Vec<_>>(),
                        "note": report.convention_note,
                    }),
                );
            }
            Mode::Search => {
                let witness = find_order_with_cap(&top, max_size.unwrap_or(FIND_ORDER_CAP))?;
                search_found = Some(witness.is_some());
                details.insert("search".into(), witness_json(&top, &witness));
            }
            Mode::Weak => {
                let witness =
                    find_weak_order_with_cap(&top, max_size.unwrap_or(FIND_WEAK_ORDER_CAP))?;
                details.insert("weak".into(), witness_json(&top, &witness));
            }
            Mode::Brute => {
                let witness =
                    brute_force_weak_order_with_cap(&top, max_size.unwrap_or(BRUTE_FORCE_CAP))?;
                details.insert("brute".into(), witness_json(&top, &witness));
            }
        }
    }

    // The converse of the criterion is not asserted on finite models;
    // disagreement is reported, never treated as an error.
    let gap = matches!((criterion_satisfied, search_found), (Some(true), Some(false)));
    if gap {
        details.insert(
            "gap".into(),
            json!("criterion-witness gap (non-Hausdorff finite model)"),
        );
    }

    let verdict = match (criterion_satisfied, search_found) {
        (_, Some(true)) => "orderable",
        (Some(true), Some(false)) => "criterion satisfied, no witness",
        (_, Some(false)) => "not orderable",
        (Some(true), None) => "criterion satisfied",
        (Some(false), None) => "criterion failed",
        (None, None) => "reported",
    };
    let report = RunReport::new(
        "orderable",
        input_digest,
        verdict.to_string(),
        Value::Object(details),
    );
    Ok(CommandOutput {
        report,
        exit_code: 0,
    })
}
