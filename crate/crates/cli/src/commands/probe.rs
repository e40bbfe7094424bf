//! `probe`: monotone-continuity axioms over the chains of a probes
//! document, with a per-probe trace.

use serde_json::{json, Value};

use ordcheck_core::monotone::{
    check_primed_axioms, check_set_axioms, AxiomReport, AxiomVerdict,
};

use super::CommandOutput;
use crate::formats::{FormatError, FormatResult, InstanceDocument, ResolvedProbes};
use crate::report::RunReport;

fn axiom_report_json(report: &AxiomReport) -> Value {
    json!({
        "axioms": report.verdicts.iter().map(|(axiom, verdict)| {
            let mut entry = serde_json::Map::new();
            entry.insert("axiom".into(), json!(axiom.as_str()));
            match verdict {
                AxiomVerdict::Violated(v) => {
                    entry.insert("verdict".into(), json!("violated"));
                    entry.insert("witness".into(), json!({
                        "probe": v.probe,
                        "index": v.index,
                        "detail": v.detail,
                    }));
                }
                AxiomVerdict::HoldsOnProbes { engaged } => {
                    entry.insert("verdict".into(), json!("holds-on-probes"));
                    entry.insert("engaged_probes".into(), json!(engaged));
                }
                AxiomVerdict::Vacuous => {
                    entry.insert("verdict".into(), json!("vacuous"));
                }
            }
            Value::Object(entry)
        }).collect::<Vec<_>>(),
        "notes": report.notes,
    })
}

pub fn run(doc: &InstanceDocument, input_digest: String) -> FormatResult<CommandOutput> {
    let InstanceDocument::Probes(pdoc) = doc else {
        return Err(FormatError::invalid(
            "kind",
            format!("expected a probes document, got `{}`", doc.kind()),
        ));
    };
    let resolved = pdoc.resolve()?;
    let (structure_json, report) = match &resolved {
        ResolvedProbes::Box { bx, oracle, probes } => {
            let (lo, hi) = bx.bounds();
            (
                json!({ "type": "box", "lo": lo, "hi": hi }),
                check_primed_axioms(bx, oracle, probes)?,
            )
        }
        ResolvedProbes::Events {
            algebra,
            oracle,
            probes,
        } => (
            json!({ "type": "events", "atoms": algebra.atoms() }),
            check_set_axioms(algebra, oracle, probes)?,
        ),
    };
    let violated = report.any_violation();
    let details = json!({
        "name": pdoc.name,
        "structure": structure_json,
        "probe_count": pdoc.probes.len(),
        "report": axiom_report_json(&report),
    });
    let verdict = if violated {
        "axiom violated on probes"
    } else {
        "no violations on probes"
    };
    Ok(CommandOutput {
        report: RunReport::new("probe", input_digest, verdict.to_string(), details),
        exit_code: if violated { 1 } else { 0 },
    })
}
