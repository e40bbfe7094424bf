//! One module per subcommand. Each command returns a [`CommandOutput`]:
//! the run report plus the exit code under the contract 0 = affirmative /
//! report delivered, 1 = a checked property fails or the instance is
//! infeasible, 2 = input or cap error (raised as an error before a report
//! exists).

pub mod check;
pub mod group;
pub mod orderable;
pub mod probe;
pub mod represent;
pub mod sigma;

use serde_json::{json, Value};

use crate::report::RunReport;
use ordcheck_core::relation::{BinaryRelation, Carrier, PropertyReport, Verdict};

pub struct CommandOutput {
    pub report: RunReport,
    pub exit_code: i32,
}

pub(crate) fn labels(carrier: &Carrier, indices: &[usize]) -> Vec<String> {
    indices.iter().map(|&i| carrier.label(i).to_string()).collect()
}

pub(crate) fn verdict_json(carrier: &Carrier, v: &Verdict) -> Value {
    match v {
        Verdict::Holds => json!({ "holds": true }),
        Verdict::Fails { witness } => json!({
            "holds": false,
            "witness": labels(carrier, witness),
        }),
    }
}

pub(crate) fn property_report_json(carrier: &Carrier, report: &PropertyReport) -> Value {
    json!({
        "reflexive": verdict_json(carrier, &report.reflexive),
        "complete": verdict_json(carrier, &report.complete),
        "non_trivial": {
            "holds": report.non_trivial,
            "witness": report
                .strict_pair
                .map(|(x, y)| labels(carrier, &[x, y])),
        },
        "transitive": verdict_json(carrier, &report.transitive),
        "semi_transitive": verdict_json(carrier, &report.semi_transitive),
        "anti_symmetric": verdict_json(carrier, &report.anti_symmetric),
    })
}

/// Relation as its sorted pair list plus row-major 0/1 strings.
pub(crate) fn relation_json(rel: &BinaryRelation) -> Value {
    let carrier = rel.carrier();
    let n = carrier.len();
    let mut pairs = Vec::new();
    let mut matrix = Vec::new();
    for i in 0..n {
        let mut row = String::with_capacity(n);
        for j in 0..n {
            if rel.holds(i, j) {
                pairs.push(json!([carrier.label(i), carrier.label(j)]));
                row.push('1');
            } else {
                row.push('0');
            }
        }
        matrix.push(Value::String(row));
    }
    json!({
        "elements": carrier.labels(),
        "pairs": pairs,
        "matrix": matrix,
    })
}
