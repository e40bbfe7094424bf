//! Instance documents: JSON files with explicit `kind` and `version`
//! fields, parsed into the core types with location-bearing messages.
//!
//! Relations are pair lists over string labels; topologies arrive as either
//! a full open family or a minimal-neighborhood map; groups as residue
//! moduli; events as 1-based atom lists; rationals as `n/d` strings; probes
//! as documented chain objects bundling a structure, a relation oracle and
//! the chains themselves.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use ordcheck_core::monotone::{
    Alteration, AlterationProbe, ChainProbe, Direction, EventAlgebra, EventProbe, IntegerBox,
    RelOracle,
};
use ordcheck_core::relation::{BinaryRelation, Carrier};
use ordcheck_core::represent::{InputVerdict, VerdictSet};
use ordcheck_core::topology::FiniteTopology;

use crate::rational::parse_rational;

pub const SUPPORTED_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{0}")]
    Json(String),
    #[error("{path}: {message}")]
    Invalid { path: String, message: String },
    #[error(transparent)]
    Core(#[from] ordcheck_core::Error),
}

impl FormatError {
    pub fn invalid(path: &str, message: impl Into<String>) -> Self {
        FormatError::Invalid {
            path: path.to_string(),
            message: message.into(),
        }
    }
}

pub type FormatResult<T> = Result<T, FormatError>;

/// A parsed instance file, dispatched on its `kind`.
#[derive(Debug, Clone, PartialEq)]
pub enum InstanceDocument {
    Relation(RelationDoc),
    Topology(TopologyDoc),
    GroupRelation(GroupRelationDoc),
    EventRelation(EventRelationDoc),
    Verdicts(VerdictsDoc),
    Probes(ProbesDoc),
}

impl InstanceDocument {
    pub fn kind(&self) -> &'static str {
        match self {
            InstanceDocument::Relation(_) => "relation",
            InstanceDocument::Topology(_) => "topology",
            InstanceDocument::GroupRelation(_) => "group-relation",
            InstanceDocument::EventRelation(_) => "event-relation",
            InstanceDocument::Verdicts(_) => "verdicts",
            InstanceDocument::Probes(_) => "probes",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct RelationDoc {
    pub version: u32,
    #[serde(default)]
    pub name: Option<String>,
    pub elements: Vec<String>,
    pub pairs: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct TopologyDoc {
    pub version: u32,
    #[serde(default)]
    pub name: Option<String>,
    pub elements: Vec<String>,
    #[serde(default)]
    pub opens: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub min_nbhd: Option<BTreeMap<String, Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct GroupRelationDoc {
    pub version: u32,
    #[serde(default)]
    pub name: Option<String>,
    pub moduli: Vec<u32>,
    #[serde(default)]
    pub pairs: Option<Vec<(Vec<u32>, Vec<u32>)>>,
    #[serde(default)]
    pub difference_set: Option<Vec<Vec<u32>>>,
}

#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct EventRelationDoc {
    pub version: u32,
    #[serde(default)]
    pub name: Option<String>,
    pub atoms: u32,
    /// Ordered pairs of events, each an atom list.
    #[serde(default)]
    pub pairs: Option<Vec<(Vec<u32>, Vec<u32>)>>,
    /// Atom weights inducing the comparative-likelihood relation.
    #[serde(default)]
    pub weights: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct VerdictEntry {
    pub lhs: Vec<i64>,
    pub rhs: Vec<i64>,
    pub verdict: String,
}

#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct VerdictsDoc {
    pub version: u32,
    #[serde(default)]
    pub name: Option<String>,
    pub dimension: usize,
    pub pairs: Vec<VerdictEntry>,
}

#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case", deny_unknown_fields)]
pub enum StructureSpec {
    Box { lo: Vec<i64>, hi: Vec<i64> },
    Events { atoms: u32 },
}

#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case", deny_unknown_fields)]
pub enum OracleSpec {
    /// Closed-world list of ≽ facts.
    Pairs { geq: Vec<(Vec<i64>, Vec<i64>)> },
    /// Atom weights (events) or utility coefficients (box), as `n/d`.
    Weights { weights: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct AlterationSpec {
    pub index: usize,
    pub f_alt: Vec<i64>,
    pub g_alt: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ProbeSpec {
    Chain {
        direction: String,
        window: Vec<Vec<i64>>,
        limit: Vec<i64>,
        exhaustive: bool,
        comparison: Vec<i64>,
    },
    Alteration {
        window: Vec<Vec<i64>>,
        exhaustive: bool,
        f: Vec<i64>,
        g: Vec<i64>,
        alterations: Vec<AlterationSpec>,
    },
}

#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ProbesDoc {
    pub version: u32,
    #[serde(default)]
    pub name: Option<String>,
    pub structure: StructureSpec,
    pub oracle: OracleSpec,
    pub probes: Vec<ProbeSpec>,
}

fn parse_with_path<T: serde::de::DeserializeOwned>(value: Value) -> FormatResult<T> {
    let mut track = serde_path_to_error::Track::new();
    let de = serde_path_to_error::Deserializer::new(value, &mut track);
    T::deserialize(de).map_err(|e| FormatError::Invalid {
        path: track.path().to_string(),
        message: e.to_string(),
    })
}

/// Parses an instance document, validating `kind` and `version`.
pub fn parse_instance(bytes: &[u8]) -> FormatResult<InstanceDocument> {
    let value: Value =
        serde_json::from_slice(bytes).map_err(|e| FormatError::Json(e.to_string()))?;
    let kind = value
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| FormatError::invalid("kind", "missing or non-string"))?
        .to_string();
    let version = value
        .get("version")
        .and_then(Value::as_u64)
        .ok_or_else(|| FormatError::invalid("version", "missing or non-integer"))?;
    if version != u64::from(SUPPORTED_VERSION) {
        return Err(FormatError::invalid(
            "version",
            format!("unsupported version {version}, expected {SUPPORTED_VERSION}"),
        ));
    }
    let mut body = value;
    body.as_object_mut().expect("object").remove("kind");
    match kind.as_str() {
        "relation" => Ok(InstanceDocument::Relation(parse_with_path(body)?)),
        "topology" => Ok(InstanceDocument::Topology(parse_with_path(body)?)),
        "group-relation" => Ok(InstanceDocument::GroupRelation(parse_with_path(body)?)),
        "event-relation" => Ok(InstanceDocument::EventRelation(parse_with_path(body)?)),
        "verdicts" => Ok(InstanceDocument::Verdicts(parse_with_path(body)?)),
        "probes" => Ok(InstanceDocument::Probes(parse_with_path(body)?)),
        other => Err(FormatError::invalid(
            "kind",
            format!("unknown kind `{other}`"),
        )),
    }
}

/// Serializes a document back to JSON bytes; re-parsing yields an equal
/// document. Keys are emitted sorted, so emission is deterministic.
pub fn emit_instance(doc: &InstanceDocument) -> Vec<u8> {
    fn with_kind<T: Serialize>(kind: &str, body: &T) -> Vec<u8> {
        let mut value = serde_json::to_value(body).expect("document serializes");
        value
            .as_object_mut()
            .expect("document is an object")
            .insert("kind".to_string(), Value::String(kind.to_string()));
        serde_json::to_vec_pretty(&value).expect("document serializes")
    }
    match doc {
        InstanceDocument::Relation(d) => with_kind("relation", d),
        InstanceDocument::Topology(d) => with_kind("topology", d),
        InstanceDocument::GroupRelation(d) => with_kind("group-relation", d),
        InstanceDocument::EventRelation(d) => with_kind("event-relation", d),
        InstanceDocument::Verdicts(d) => with_kind("verdicts", d),
        InstanceDocument::Probes(d) => with_kind("probes", d),
    }
}

// ---------------------------------------------------------------------------
// Conversions into core types
// ---------------------------------------------------------------------------

impl RelationDoc {
    pub fn to_relation(&self) -> FormatResult<BinaryRelation> {
        if self.elements.is_empty() {
            return Err(FormatError::invalid("elements", "at least one element required"));
        }
        let carrier = Carrier::new(self.elements.clone())?;
        let pairs: Vec<(&str, &str)> = self
            .pairs
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        Ok(BinaryRelation::from_pairs(carrier, pairs)?)
    }
}

impl TopologyDoc {
    pub fn to_topology(&self) -> FormatResult<FiniteTopology> {
        if self.elements.is_empty() {
            return Err(FormatError::invalid("elements", "at least one element required"));
        }
        let carrier = Carrier::new(self.elements.clone())?;
        let resolve = |labels: &[String], path: &str| -> FormatResult<BTreeSet<usize>> {
            labels
                .iter()
                .map(|l| {
                    carrier
                        .index_of(l)
                        .ok_or_else(|| FormatError::invalid(path, format!("unknown label `{l}`")))
                })
                .collect()
        };
        match (&self.opens, &self.min_nbhd) {
            (Some(opens), None) => {
                let family: Vec<BTreeSet<usize>> = opens
                    .iter()
                    .enumerate()
                    .map(|(i, set)| resolve(set, &format!("opens[{i}]")))
                    .collect::<FormatResult<_>>()?;
                Ok(FiniteTopology::from_open_family(carrier, &family)?)
            }
            (None, Some(map)) => {
                let mut nbhds = vec![BTreeSet::new(); carrier.len()];
                let mut covered = vec![false; carrier.len()];
                for (label, nbhd) in map {
                    let x = carrier.index_of(label).ok_or_else(|| {
                        FormatError::invalid("min_nbhd", format!("unknown label `{label}`"))
                    })?;
                    nbhds[x] = resolve(nbhd, &format!("min_nbhd.{label}"))?;
                    covered[x] = true;
                }
                if let Some(missing) = covered.iter().position(|&c| !c) {
                    return Err(FormatError::invalid(
                        "min_nbhd",
                        format!("no neighborhood for `{}`", carrier.label(missing)),
                    ));
                }
                Ok(FiniteTopology::from_min_nbhds(carrier, nbhds)?)
            }
            _ => Err(FormatError::invalid(
                "topology",
                "exactly one of `opens` and `min_nbhd` must be given",
            )),
        }
    }
}

impl GroupRelationDoc {
    pub fn to_group(&self) -> FormatResult<ordcheck_core::group::FiniteAbelianGroup> {
        Ok(ordcheck_core::group::FiniteAbelianGroup::new(&self.moduli)?)
    }

    pub fn to_relation(
        &self,
        group: &ordcheck_core::group::FiniteAbelianGroup,
    ) -> FormatResult<Option<BinaryRelation>> {
        match (&self.pairs, &self.difference_set) {
            (None, None) => Ok(None),
            (Some(_), Some(_)) => Err(FormatError::invalid(
                "relation",
                "give either `pairs` or `difference_set`, not both",
            )),
            (Some(pairs), None) => {
                let mut rel = BinaryRelation::empty(group.carrier().clone());
                for (k, (lhs, rhs)) in pairs.iter().enumerate() {
                    let i = group
                        .index_of_tuple(lhs)
                        .map_err(|e| FormatError::invalid(&format!("pairs[{k}][0]"), e.to_string()))?;
                    let j = group
                        .index_of_tuple(rhs)
                        .map_err(|e| FormatError::invalid(&format!("pairs[{k}][1]"), e.to_string()))?;
                    rel.set(i, j, true);
                }
                Ok(Some(rel))
            }
            (None, Some(set)) => {
                let mut indices = BTreeSet::new();
                for (k, tuple) in set.iter().enumerate() {
                    let i = group.index_of_tuple(tuple).map_err(|e| {
                        FormatError::invalid(&format!("difference_set[{k}]"), e.to_string())
                    })?;
                    indices.insert(i);
                }
                Ok(Some(group.difference_set_relation(&indices)))
            }
        }
    }
}

/// Atom list (1-based) to event mask.
pub fn atoms_to_event(atoms: &[i64], algebra: &EventAlgebra, path: &str) -> FormatResult<u32> {
    let mut mask = 0u32;
    for &a in atoms {
        if a < 1 || a > i64::from(algebra.atoms()) {
            return Err(FormatError::invalid(
                path,
                format!("atom {a} outside 1..={}", algebra.atoms()),
            ));
        }
        let bit = 1u32 << (a - 1);
        if mask & bit != 0 {
            return Err(FormatError::invalid(path, format!("atom {a} repeated")));
        }
        mask |= bit;
    }
    Ok(mask)
}

impl EventRelationDoc {
    pub fn to_algebra(&self) -> FormatResult<EventAlgebra> {
        Ok(EventAlgebra::new(self.atoms)?)
    }

    pub fn to_relation(&self, algebra: &EventAlgebra) -> FormatResult<BinaryRelation> {
        match (&self.pairs, &self.weights) {
            (Some(_), Some(_)) | (None, None) => Err(FormatError::invalid(
                "event-relation",
                "give exactly one of `pairs` and `weights`",
            )),
            (Some(pairs), None) => {
                let carrier = algebra.carrier()?;
                let mut rel = BinaryRelation::empty(carrier);
                for (k, (lhs, rhs)) in pairs.iter().enumerate() {
                    let lhs: Vec<i64> = lhs.iter().map(|&a| i64::from(a)).collect();
                    let rhs: Vec<i64> = rhs.iter().map(|&a| i64::from(a)).collect();
                    let i = atoms_to_event(&lhs, algebra, &format!("pairs[{k}][0]"))?;
                    let j = atoms_to_event(&rhs, algebra, &format!("pairs[{k}][1]"))?;
                    rel.set(i as usize, j as usize, true);
                }
                Ok(rel)
            }
            (None, Some(weights)) => {
                let weights = parse_weights(weights, "weights")?;
                Ok(algebra.measure_relation(&weights)?)
            }
        }
    }
}

pub fn parse_weights(raw: &[String], path: &str) -> FormatResult<Vec<BigRational>> {
    raw.iter()
        .enumerate()
        .map(|(i, s)| {
            parse_rational(s).map_err(|e| FormatError::invalid(&format!("{path}[{i}]"), e))
        })
        .collect()
}

impl VerdictsDoc {
    pub fn to_verdict_set(&self) -> FormatResult<VerdictSet> {
        let entries: Vec<(Vec<i64>, Vec<i64>, InputVerdict)> = self
            .pairs
            .iter()
            .enumerate()
            .map(|(k, entry)| {
                let verdict = match entry.verdict.as_str() {
                    "succ" => InputVerdict::Succ,
                    "sim" => InputVerdict::Sim,
                    "prec" => InputVerdict::Prec,
                    other => {
                        return Err(FormatError::invalid(
                            &format!("pairs[{k}].verdict"),
                            format!("`{other}` is not one of succ, sim, prec"),
                        ))
                    }
                };
                Ok((entry.lhs.clone(), entry.rhs.clone(), verdict))
            })
            .collect::<FormatResult<_>>()?;
        Ok(VerdictSet::new(self.dimension, &entries)?)
    }
}

/// A probes document resolved against its structure.
#[derive(Debug, Clone)]
pub enum ResolvedProbes {
    Box {
        bx: IntegerBox,
        oracle: RelOracle<Vec<i64>>,
        probes: Vec<ChainProbe<Vec<i64>>>,
    },
    Events {
        algebra: EventAlgebra,
        oracle: RelOracle<u32>,
        probes: Vec<EventProbe>,
    },
}

impl ProbesDoc {
    pub fn resolve(&self) -> FormatResult<ResolvedProbes> {
        let direction = |s: &str, path: &str| -> FormatResult<Direction> {
            match s {
                "increasing" => Ok(Direction::Increasing),
                "decreasing" => Ok(Direction::Decreasing),
                other => Err(FormatError::invalid(
                    path,
                    format!("`{other}` is not `increasing` or `decreasing`"),
                )),
            }
        };
        match &self.structure {
            StructureSpec::Box { lo, hi } => {
                let bx = IntegerBox::new(lo.clone(), hi.clone())?;
                let oracle = match &self.oracle {
                    OracleSpec::Pairs { geq } => RelOracle::Pairs(
                        geq.iter().cloned().collect::<BTreeSet<(Vec<i64>, Vec<i64>)>>(),
                    ),
                    OracleSpec::Weights { weights } => {
                        RelOracle::Weights(parse_weights(weights, "oracle.weights")?)
                    }
                };
                let mut probes = Vec::new();
                for (k, spec) in self.probes.iter().enumerate() {
                    match spec {
                        ProbeSpec::Chain {
                            direction: d,
                            window,
                            limit,
                            exhaustive,
                            comparison,
                        } => probes.push(ChainProbe {
                            direction: direction(d, &format!("probes[{k}].direction"))?,
                            window: window.clone(),
                            limit: limit.clone(),
                            exhaustive: *exhaustive,
                            comparison: comparison.clone(),
                        }),
                        ProbeSpec::Alteration { .. } => {
                            return Err(FormatError::invalid(
                                &format!("probes[{k}]"),
                                "alteration probes need an event structure",
                            ))
                        }
                    }
                }
                Ok(ResolvedProbes::Box { bx, oracle, probes })
            }
            StructureSpec::Events { atoms } => {
                let algebra = EventAlgebra::new(*atoms)?;
                let event =
                    |v: &[i64], path: &str| -> FormatResult<u32> { atoms_to_event(v, &algebra, path) };
                let oracle = match &self.oracle {
                    OracleSpec::Pairs { geq } => {
                        let mut pairs = BTreeSet::new();
                        for (k, (a, b)) in geq.iter().enumerate() {
                            pairs.insert((
                                event(a, &format!("oracle.geq[{k}][0]"))?,
                                event(b, &format!("oracle.geq[{k}][1]"))?,
                            ));
                        }
                        RelOracle::Pairs(pairs)
                    }
                    OracleSpec::Weights { weights } => {
                        RelOracle::Weights(parse_weights(weights, "oracle.weights")?)
                    }
                };
                let mut probes = Vec::new();
                for (k, spec) in self.probes.iter().enumerate() {
                    match spec {
                        ProbeSpec::Chain {
                            direction: d,
                            window,
                            limit,
                            exhaustive,
                            comparison,
                        } => {
                            let window = window
                                .iter()
                                .enumerate()
                                .map(|(i, w)| event(w, &format!("probes[{k}].window[{i}]")))
                                .collect::<FormatResult<Vec<u32>>>()?;
                            probes.push(EventProbe::Chain(ChainProbe {
                                direction: direction(d, &format!("probes[{k}].direction"))?,
                                window,
                                limit: event(limit, &format!("probes[{k}].limit"))?,
                                exhaustive: *exhaustive,
                                comparison: event(comparison, &format!("probes[{k}].comparison"))?,
                            }));
                        }
                        ProbeSpec::Alteration {
                            window,
                            exhaustive,
                            f,
                            g,
                            alterations,
                        } => {
                            let window = window
                                .iter()
                                .enumerate()
                                .map(|(i, w)| event(w, &format!("probes[{k}].window[{i}]")))
                                .collect::<FormatResult<Vec<u32>>>()?;
                            let alterations = alterations
                                .iter()
                                .enumerate()
                                .map(|(i, a)| {
                                    Ok(Alteration {
                                        index: a.index,
                                        f_alt: event(
                                            &a.f_alt,
                                            &format!("probes[{k}].alterations[{i}].f_alt"),
                                        )?,
                                        g_alt: event(
                                            &a.g_alt,
                                            &format!("probes[{k}].alterations[{i}].g_alt"),
                                        )?,
                                    })
                                })
                                .collect::<FormatResult<Vec<Alteration>>>()?;
                            probes.push(EventProbe::Alteration(AlterationProbe {
                                window,
                                exhaustive: *exhaustive,
                                f: event(f, &format!("probes[{k}].f"))?,
                                g: event(g, &format!("probes[{k}].g"))?,
                                alterations,
                            }));
                        }
                    }
                }
                Ok(ResolvedProbes::Events {
                    algebra,
                    oracle,
                    probes,
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_relation_document() {
        let doc = parse_instance(
            br#"{"kind":"relation","version":1,"elements":["a","b"],"pairs":[["a","b"]]}"#,
        )
        .unwrap();
        let InstanceDocument::Relation(rel) = doc else {
            panic!("wrong kind")
        };
        let rel = rel.to_relation().unwrap();
        assert!(rel.holds(0, 1));
        assert!(!rel.holds(1, 0));
    }

    #[test]
    fn version_and_kind_are_validated() {
        assert!(matches!(
            parse_instance(br#"{"kind":"relation","version":2,"elements":[],"pairs":[]}"#),
            Err(FormatError::Invalid { .. })
        ));
        assert!(matches!(
            parse_instance(br#"{"kind":"nope","version":1}"#),
            Err(FormatError::Invalid { .. })
        ));
        assert!(matches!(
            parse_instance(b"{nonsense"),
            Err(FormatError::Json(_))
        ));
    }

    #[test]
    fn duplicate_label_is_an_error() {
        let doc = parse_instance(
            br#"{"kind":"relation","version":1,"elements":["a","a"],"pairs":[]}"#,
        )
        .unwrap();
        let InstanceDocument::Relation(rel) = doc else {
            panic!("wrong kind")
        };
        assert!(rel.to_relation().is_err());
    }

    #[test]
    fn unknown_field_is_rejected_with_path() {
        let err = parse_instance(
            br#"{"kind":"relation","version":1,"elements":["a"],"pairs":[],"extra":1}"#,
        )
        .unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("extra"), "{msg}");
    }

    #[test]
    fn topology_document_both_encodings() {
        let opens = parse_instance(
            br#"{"kind":"topology","version":1,"elements":["a","b"],"opens":[[],["a"],["a","b"]]}"#,
        )
        .unwrap();
        let InstanceDocument::Topology(t) = opens else {
            panic!()
        };
        let by_opens = t.to_topology().unwrap();

        let nbhd = parse_instance(
            br#"{"kind":"topology","version":1,"elements":["a","b"],"min_nbhd":{"a":["a"],"b":["a","b"]}}"#,
        )
        .unwrap();
        let InstanceDocument::Topology(t) = nbhd else {
            panic!()
        };
        assert_eq!(by_opens, t.to_topology().unwrap());
    }

    #[test]
    fn event_relation_by_weights() {
        let doc = parse_instance(
            br#"{"kind":"event-relation","version":1,"atoms":2,"weights":["1/4","3/4"]}"#,
        )
        .unwrap();
        let InstanceDocument::EventRelation(e) = doc else {
            panic!()
        };
        let algebra = e.to_algebra().unwrap();
        let rel = e.to_relation(&algebra).unwrap();
        // {2} ≻ {1} since 3/4 > 1/4.
        assert!(rel.holds(2, 1) && !rel.holds(1, 2));
    }

    #[test]
    fn probes_document_resolves() {
        let doc = parse_instance(
            br#"{"kind":"probes","version":1,
                 "structure":{"type":"events","atoms":3},
                 "oracle":{"type":"weights","weights":["1/4","1/4","1/2"]},
                 "probes":[{"type":"chain","direction":"decreasing",
                            "window":[[1,2,3],[1,2],[1],[]],"limit":[],
                            "exhaustive":true,"comparison":[3]}]}"#,
        )
        .unwrap();
        let InstanceDocument::Probes(p) = doc else {
            panic!()
        };
        let ResolvedProbes::Events { probes, .. } = p.resolve().unwrap() else {
            panic!()
        };
        assert_eq!(probes.len(), 1);
    }
}
