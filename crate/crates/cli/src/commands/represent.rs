//! `represent`: exact rational representation. A verdicts document runs the
//! linear-utility solver; an event-relation document runs the
//! qualitative-probability solver. Witness weights come back as exact
//! fractions; failures come back as re-verified certificates.

use serde_json::{json, Value};

use ordcheck_core::monotone::point_label;
use ordcheck_core::represent::{
    linear_representation_system, qualitative_probability_system, solve_linear_representation,
    solve_qualitative_probability, CertificateKind, ConstraintTag, InfeasibilityCertificate,
    LinearOutcome, QualitativeOutcome, TaggedSystem,
};

use super::CommandOutput;
use crate::formats::{FormatError, FormatResult, InstanceDocument};
use crate::rational::format_rational;
use crate::report::RunReport;

fn tag_json(tag: &ConstraintTag, describe: &dyn Fn(usize) -> String) -> Value {
    match tag {
        ConstraintTag::Normalization => json!({ "constraint": "normalization" }),
        ConstraintTag::Strict { lhs, rhs } => json!({
            "constraint": "strict",
            "lhs": describe(*lhs),
            "rhs": describe(*rhs),
        }),
        ConstraintTag::Tie { lhs, rhs } => json!({
            "constraint": "tie",
            "lhs": describe(*lhs),
            "rhs": describe(*rhs),
        }),
        ConstraintTag::Positivity { index } => json!({
            "constraint": "positivity",
            "index": index,
        }),
        ConstraintTag::SlackCap => json!({ "constraint": "slack-cap" }),
    }
}

fn certificate_json(
    cert: &InfeasibilityCertificate,
    tagged: &TaggedSystem,
    describe: &dyn Fn(usize) -> String,
) -> Value {
    let combination: Vec<Value> = tagged
        .tags
        .iter()
        .zip(&cert.multipliers)
        .filter(|(_, y)| !num_traits::Zero::is_zero(*y))
        .map(|(tag, y)| {
            let mut entry = tag_json(tag, describe);
            entry
                .as_object_mut()
                .expect("object")
                .insert("multiplier".into(), json!(format_rational(y)));
            entry
        })
        .collect();
    json!({
        "kind": match cert.kind {
            CertificateKind::SystemInfeasible => "system-infeasible",
            CertificateKind::NoStrictSlack => "no-strict-slack",
        },
        "combination": combination,
        "reverified": cert.verify(tagged),
    })
}

pub fn run(doc: &InstanceDocument, positive_atoms: bool, input_digest: String) -> FormatResult<CommandOutput> {
    match doc {
        InstanceDocument::Verdicts(vdoc) => {
            let vs = vdoc.to_verdict_set()?;
            let tagged = linear_representation_system(&vs);
            let describe = |i: usize| point_label(&vs.points[i]);
            match solve_linear_representation(&vs)? {
                LinearOutcome::Witness(w) => {
                    let details = json!({
                        "name": vdoc.name,
                        "kind": "linear-utility",
                        "dimension": vs.dimension,
                        "witness": {
                            "weights": w.weights.iter().map(format_rational).collect::<Vec<_>>(),
                            "slack": format_rational(&w.slack),
                        },
                    });
                    Ok(CommandOutput {
                        report: RunReport::new(
                            "represent",
                            input_digest,
                            "witness".to_string(),
                            details,
                        ),
                        exit_code: 0,
                    })
                }
                LinearOutcome::Infeasible(cert) => {
                    let details = json!({
                        "name": vdoc.name,
                        "kind": "linear-utility",
                        "dimension": vs.dimension,
                        "infeasible": certificate_json(&cert, &tagged, &describe),
                    });
                    Ok(CommandOutput {
                        report: RunReport::new(
                            "represent",
                            input_digest,
                            "infeasible".to_string(),
                            details,
                        ),
                        exit_code: 1,
                    })
                }
            }
        }
        InstanceDocument::EventRelation(edoc) => {
            let algebra = edoc.to_algebra()?;
            let rel = edoc.to_relation(&algebra)?;
            let tagged = qualitative_probability_system(&rel, &algebra, positive_atoms)?;
            let describe = |i: usize| algebra.label(i as u32);
            match solve_qualitative_probability(&rel, &algebra, positive_atoms)? {
                QualitativeOutcome::Witness(w) => {
                    let details = json!({
                        "name": edoc.name,
                        "kind": "qualitative-probability",
                        "atoms": algebra.atoms(),
                        "witness": {
                            "atom_weights": w.atom_weights.iter().map(format_rational).collect::<Vec<_>>(),
                            "event_values": (0..algebra.event_count()).map(|m| json!({
                                "event": algebra.label(m as u32),
                                "value": format_rational(&w.event_values[m]),
                            })).collect::<Vec<_>>(),
                            "slack": format_rational(&w.slack),
                        },
                    });
                    Ok(CommandOutput {
                        report: RunReport::new(
                            "represent",
                            input_digest,
                            "witness".to_string(),
                            details,
                        ),
                        exit_code: 0,
                    })
                }
                QualitativeOutcome::Infeasible(cert) => {
                    let details = json!({
                        "name": edoc.name,
                        "kind": "qualitative-probability",
                        "atoms": algebra.atoms(),
                        "infeasible": certificate_json(&cert, &tagged, &describe),
                    });
                    Ok(CommandOutput {
                        report: RunReport::new(
                            "represent",
                            input_digest,
                            "infeasible".to_string(),
                            details,
                        ),
                        exit_code: 1,
                    })
                }
            }
        }
        other => Err(FormatError::invalid(
            "kind",
            format!(
                "expected a verdicts or event-relation document, got `{}`",
                other.kind()
            ),
        )),
    }
}
