//! `check`: relation axioms and, with a topology, continuity.

use serde_json::json;

use ordcheck_core::relation::{check_properties_with_cap, is_continuous, PROPERTY_CHECK_CAP};

use super::{labels, property_report_json, CommandOutput};
use crate::formats::{FormatError, FormatResult, InstanceDocument};
use crate::report::RunReport;

pub const KNOWN_PROPERTIES: [&str; 7] = [
    "reflexive",
    "complete",
    "non-trivial",
    "transitive",
    "semi-transitive",
    "anti-symmetric",
    "continuous",
];

pub fn run(
    relation_doc: &InstanceDocument,
    topology_doc: Option<&InstanceDocument>,
    require: &[String],
    max_size: Option<usize>,
    input_digest: String,
) -> FormatResult<CommandOutput> {
    let InstanceDocument::Relation(doc) = relation_doc else {
        return Err(FormatError::invalid(
            "kind",
            format!("expected a relation document, got `{}`", relation_doc.kind()),
        ));
    };
    for r in require {
        if !KNOWN_PROPERTIES.contains(&r.as_str()) {
            return Err(FormatError::invalid(
                "--require",
                format!("unknown property `{r}`"),
            ));
        }
    }
    let rel = doc.to_relation()?;
    let cap = max_size.unwrap_or(PROPERTY_CHECK_CAP);
    let properties = check_properties_with_cap(&rel, cap)?;
    let carrier = rel.carrier();

    let continuity = match topology_doc {
        None => None,
        Some(InstanceDocument::Topology(tdoc)) => {
            let top = tdoc.to_topology()?;
            Some(is_continuous(&rel, &top)?)
        }
        Some(other) => {
            return Err(FormatError::invalid(
                "kind",
                format!("expected a topology document, got `{}`", other.kind()),
            ))
        }
    };

    let holds = |name: &str| -> Option<bool> {
        match name {
            "reflexive" => Some(properties.reflexive.holds()),
            "complete" => Some(properties.complete.holds()),
            "non-trivial" => Some(properties.non_trivial),
            "transitive" => Some(properties.transitive.holds()),
            "semi-transitive" => Some(properties.semi_transitive.holds()),
            "anti-symmetric" => Some(properties.anti_symmetric.holds()),
            "continuous" => continuity.as_ref().map(|c| c.continuous),
            _ => None,
        }
    };
    let mut failed: Vec<String> = Vec::new();
    for r in require {
        match holds(r) {
            Some(true) => {}
            Some(false) => failed.push(r.clone()),
            None => {
                return Err(FormatError::invalid(
                    "--require",
                    "continuity requires a --topology file",
                ))
            }
        }
    }

    let continuity_json = continuity.as_ref().map(|c| {
        json!({
            "continuous": c.continuous,
            "violation": c.violation.as_ref().map(|v| json!({
                "element": carrier.label(v.element),
                "section": v.kind.as_str(),
                "members": labels(carrier, &v.section.iter().copied().collect::<Vec<_>>()),
            })),
        })
    });

    let details = json!({
        "name": doc.name,
        "elements": carrier.labels(),
        "properties": property_report_json(carrier, &properties),
        "continuity": continuity_json,
        "required": require,
        "failed_requirements": failed,
    });
    let verdict = if failed.is_empty() { "pass" } else { "fail" };
    let report = RunReport::new("check", input_digest, verdict.to_string(), details);
    Ok(CommandOutput {
        report,
        exit_code: if failed.is_empty() { 0 } else { 1 },
    })
}
