//! Deciding whether a finite space carries a continuous (weak) order.
//!
//! The pieces fit together like this: the punctured-square criterion grades
//! each component of a space; `find_order` searches the n! linear orders for
//! a continuous one (anti-symmetric + complete + transitive on a finite set
//! is exactly a linear order); `find_weak_order` searches equivalence
//! relations whose quotient carries a continuous linear order and lifts the
//! result; `brute_force_weak_order` exhausts all 2^(n²) relations outright
//! and serves as the ground-truth oracle for the quotient search.
//!
//! Searches are deterministic: permutations in lexicographic order,
//! equivalences in restricted-growth-string order, relations in row-major
//! matrix order. The first hit in that order is the witness.
//!
//! The criterion and the searches can disagree on finite models (the
//! criterion's converse direction needs separation properties no finite
//! connected space with two points has), so reports carry both verdicts and
//! never assert the converse; the CLI flags the gap.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::enumerate::{permutations_lex, relation_universe_size, MaskRel};
use crate::error::{Error, Result};
use crate::partition::{restricted_growth_strings, Partition};
use crate::relation::{
    check_properties_with_cap, is_continuous, BinaryRelation, ContinuityReport, PropertyReport,
};
use crate::topology::FiniteTopology;

/// Cap for the linear-order search (n! permutations).
pub const FIND_ORDER_CAP: usize = 8;
/// Cap for the weak-order search (Bell-number many equivalences).
pub const FIND_WEAK_ORDER_CAP: usize = 6;
/// Cap for the brute-force relation scan (2^(n²) relations).
pub const BRUTE_FORCE_CAP: usize = 4;

/// Verdict for one component of the criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentVerdict {
    pub members: BTreeSet<usize>,
    /// Singleton components are exempt from the criterion.
    pub exempt: bool,
    /// Whether the component's punctured square is disconnected; present
    /// for non-exempt components.
    pub punctured_disconnected: Option<bool>,
}

/// Per-component punctured-square verdicts and their conjunction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionReport {
    pub components: Vec<ComponentVerdict>,
    /// Conjunction over non-singleton components; vacuously true when all
    /// components are singletons.
    pub satisfied: bool,
    /// Set when the verdict rests on the empty/singleton-connected
    /// convention (spaces with fewer than two points).
    pub convention_note: Option<&'static str>,
}

impl CriterionReport {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }
}

/// Grades every component: the space can carry a continuous linear order
/// only if each non-singleton component has a disconnected punctured square.
pub fn eilenberg_criterion(top: &FiniteTopology) -> Result<CriterionReport> {
    let components = top.components();
    let mut verdicts = Vec::with_capacity(components.count());
    let mut satisfied = true;
    for block in &components.blocks {
        if block.len() < 2 {
            verdicts.push(ComponentVerdict {
                members: block.clone(),
                exempt: true,
                punctured_disconnected: None,
            });
            continue;
        }
        let punctured = top.subspace(block).punctured_square()?;
        let disconnected = !punctured.is_connected();
        satisfied &= disconnected;
        verdicts.push(ComponentVerdict {
            members: block.clone(),
            exempt: false,
            punctured_disconnected: Some(disconnected),
        });
    }
    let convention_note = (top.len() < 2)
        .then_some("carrier has fewer than two points; empty/singleton spaces count as connected");
    Ok(CriterionReport {
        components: verdicts,
        satisfied,
        convention_note,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    Order,
    WeakOrder,
}

/// A relation found by a search, together with the certificate that it
/// qualifies: the axiom report plus the continuity verdict, and for weak
/// orders the equivalence whose quotient produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderWitness {
    pub relation: BinaryRelation,
    pub kind: WitnessKind,
    pub properties: PropertyReport,
    pub continuity: ContinuityReport,
    pub equivalence: Option<Partition>,
}

impl OrderWitness {
    /// Re-checks the certificate against a topology.
    pub fn certifies_on(&self, top: &FiniteTopology) -> Result<bool> {
        let props = check_properties_with_cap(&self.relation, top.len().max(1))?;
        let continuity = is_continuous(&self.relation, top)?;
        let axioms_ok = match self.kind {
            WitnessKind::Order => props.is_linear_order(),
            WitnessKind::WeakOrder => props.is_weak_order_base(),
        };
        Ok(axioms_ok && continuity.continuous)
    }
}

/// The linear order ranking `perm[0]` strictly above `perm[1]` above the
/// rest: x ≽ y iff x's position is no later than y's.
fn linear_order_from_permutation(
    carrier: &crate::relation::Carrier,
    perm: &[usize],
) -> BinaryRelation {
    let n = perm.len();
    let mut position = alloc::vec![0usize; n];
    for (pos, &el) in perm.iter().enumerate() {
        position[el] = pos;
    }
    BinaryRelation::from_fn(carrier.clone(), |i, j| position[i] <= position[j])
}

/// Searches the linear orders in lexicographic permutation order for one
/// whose relation is continuous; returns the first hit with its certificate.
pub fn find_order(top: &FiniteTopology) -> Result<Option<OrderWitness>> {
    find_order_with_cap(top, FIND_ORDER_CAP)
}

pub fn find_order_with_cap(top: &FiniteTopology, cap: usize) -> Result<Option<OrderWitness>> {
    let n = top.len();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "linear-order search carrier",
            size: n,
            cap,
        });
    }
    for perm in permutations_lex(n) {
        let candidate = linear_order_from_permutation(top.carrier(), &perm);
        let continuity = is_continuous(&candidate, top)?;
        if continuity.continuous {
            let properties = check_properties_with_cap(&candidate, n.max(1))?;
            debug_assert!(properties.is_linear_order());
            return Ok(Some(OrderWitness {
                relation: candidate,
                kind: WitnessKind::Order,
                properties,
                continuity,
                equivalence: None,
            }));
        }
    }
    Ok(None)
}

/// Joins per-block orders into one relation on the whole carrier: inside a
/// block the supplied order decides, and across blocks the ranking decides
/// (every element of a higher-ranked block is strictly above every element
/// of a lower-ranked one). Singleton blocks need no supplied order; they
/// contribute their diagonal pair.
///
/// Each supplied order must certify as a continuous linear order on its
/// block's subspace, and `ranking` must list every block exactly once,
/// highest first. The output is a continuous linear order whenever each
/// block is clopen.
pub fn glue_component_orders(
    top: &FiniteTopology,
    blocks: &[BTreeSet<usize>],
    orders: &[Option<BinaryRelation>],
    ranking: &[usize],
) -> Result<BinaryRelation> {
    let n = top.len();
    // Blocks must partition the carrier.
    let mut seen = alloc::vec![false; n];
    for block in blocks {
        for &x in block {
            if x >= n {
                return Err(Error::InvalidBlocks {
                    reason: format!("index {x} out of range"),
                });
            }
            if seen[x] {
                return Err(Error::InvalidBlocks {
                    reason: format!(
                        "element `{}` appears in two blocks",
                        top.carrier().label(x)
                    ),
                });
            }
            seen[x] = true;
        }
    }
    if let Some(missing) = seen.iter().position(|&s| !s) {
        return Err(Error::InvalidBlocks {
            reason: format!("element `{}` is in no block", top.carrier().label(missing)),
        });
    }
    if orders.len() != blocks.len() {
        return Err(Error::InvalidBlocks {
            reason: format!(
                "{} orders supplied for {} blocks",
                orders.len(),
                blocks.len()
            ),
        });
    }
    // Ranking must be a permutation of the block indices.
    if ranking.len() != blocks.len() {
        return Err(Error::RankingIncomplete {
            reason: format!("{} entries for {} blocks", ranking.len(), blocks.len()),
        });
    }
    let mut ranked = alloc::vec![false; blocks.len()];
    for &b in ranking {
        if b >= blocks.len() || ranked[b] {
            return Err(Error::RankingIncomplete {
                reason: format!("block {b} missing or repeated"),
            });
        }
        ranked[b] = true;
    }
    // Validate each supplied order's certificate on its block subspace.
    for (idx, (block, order)) in blocks.iter().zip(orders).enumerate() {
        match order {
            None => {
                if block.len() > 1 {
                    return Err(Error::WitnessFailsCertificate {
                        block: idx,
                        reason: "non-singleton block has no supplied order".to_string(),
                    });
                }
            }
            Some(rel) => {
                let subspace = top.subspace(block);
                if rel.carrier() != subspace.carrier() {
                    return Err(Error::WitnessFailsCertificate {
                        block: idx,
                        reason: "order's carrier does not match the block subspace".to_string(),
                    });
                }
                let props = check_properties_with_cap(rel, block.len().max(1))?;
                if !props.is_linear_order() {
                    return Err(Error::WitnessFailsCertificate {
                        block: idx,
                        reason: "order is not anti-symmetric, complete and transitive"
                            .to_string(),
                    });
                }
                if !is_continuous(rel, &subspace)?.continuous {
                    return Err(Error::WitnessFailsCertificate {
                        block: idx,
                        reason: "order is not continuous on the block subspace".to_string(),
                    });
                }
            }
        }
    }
    // rank_of[b] = position in the ranking; earlier is higher.
    let mut rank_of = alloc::vec![0usize; blocks.len()];
    for (pos, &b) in ranking.iter().enumerate() {
        rank_of[b] = pos;
    }
    let mut block_of = alloc::vec![0usize; n];
    let mut index_in_block = alloc::vec![0usize; n];
    for (b, block) in blocks.iter().enumerate() {
        for (k, &x) in block.iter().enumerate() {
            block_of[x] = b;
            index_in_block[x] = k;
        }
    }
    Ok(BinaryRelation::from_fn(top.carrier().clone(), |i, j| {
        let (bi, bj) = (block_of[i], block_of[j]);
        if bi == bj {
            match &orders[bi] {
                Some(rel) => rel.holds(index_in_block[i], index_in_block[j]),
                None => i == j,
            }
        } else {
            rank_of[bi] < rank_of[bj]
        }
    }))
}

/// Collapses a relation along its indifference classes: the class of x is
/// related to the class of y iff every representative of the first is
/// related to every representative of the second. Requires the symmetric
/// part to be a (transitive) equivalence.
pub fn induced_quotient_relation(rel: &BinaryRelation) -> Result<(Partition, BinaryRelation)> {
    let sym = rel.symmetric_part();
    let partition = Partition::from_equivalence(&sym).map_err(|e| match e {
        Error::NotEquivalence {
            axiom: "transitivity",
            witness,
        } => Error::SymmetricPartNotTransitive { witness },
        other => other,
    })?;
    let class_carrier = partition.class_carrier(rel.carrier())?;
    let blocks = partition.blocks().to_vec();
    let quotient = BinaryRelation::from_fn(class_carrier, |ci, cj| {
        blocks[ci]
            .iter()
            .all(|&x| blocks[cj].iter().all(|&y| rel.holds(x, y)))
    });
    Ok((partition, quotient))
}

/// Pulls a relation on classes back to the carrier: (x, y) related iff
/// ([x], [y]) is. When the class relation is a continuous linear order on
/// the quotient space, the lift is complete, transitive and continuous with
/// symmetric part exactly the equivalence, and non-trivial whenever there
/// are at least two classes.
pub fn lift_quotient_relation(
    top: &FiniteTopology,
    partition: &Partition,
    qrel: &BinaryRelation,
) -> Result<BinaryRelation> {
    if partition.len() != top.len() {
        return Err(Error::InvalidArgument(format!(
            "partition covers {} of {} elements",
            partition.len(),
            top.len()
        )));
    }
    let class_carrier = partition.class_carrier(top.carrier())?;
    if qrel.carrier() != &class_carrier {
        return Err(Error::CarrierMismatch {
            left: qrel.carrier().describe(),
            right: format!("{} (the partition's classes)", class_carrier.describe()),
        });
    }
    Ok(BinaryRelation::from_fn(top.carrier().clone(), |i, j| {
        qrel.holds(partition.class_of(i), partition.class_of(j))
    }))
}

/// Searches for a non-trivial, complete, transitive, continuous relation by
/// walking the equivalence relations in restricted-growth order, ordering
/// each quotient space, and lifting the first success. Partitions with a
/// single class are skipped: their lift is the full relation, which is
/// trivial.
pub fn find_weak_order(top: &FiniteTopology) -> Result<Option<OrderWitness>> {
    find_weak_order_with_cap(top, FIND_WEAK_ORDER_CAP)
}

pub fn find_weak_order_with_cap(
    top: &FiniteTopology,
    cap: usize,
) -> Result<Option<OrderWitness>> {
    let n = top.len();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "weak-order search carrier",
            size: n,
            cap,
        });
    }
    for rgs in restricted_growth_strings(n) {
        let partition = Partition::from_rgs(&rgs)?;
        if partition.class_count() < 2 {
            continue;
        }
        let quotient_top = top.quotient_by(&partition)?;
        if let Some(quotient_witness) = find_order_with_cap(&quotient_top, cap)? {
            let lifted = lift_quotient_relation(top, &partition, &quotient_witness.relation)?;
            let properties = check_properties_with_cap(&lifted, n.max(1))?;
            let continuity = is_continuous(&lifted, top)?;
            if properties.is_weak_order_base() && continuity.continuous {
                return Ok(Some(OrderWitness {
                    relation: lifted,
                    kind: WitnessKind::WeakOrder,
                    properties,
                    continuity,
                    equivalence: Some(partition),
                }));
            }
        }
    }
    Ok(None)
}

/// Ground-truth oracle: exhausts all 2^(n²) relations in row-major matrix
/// order and returns the first non-trivial, complete, transitive,
/// continuous one.
pub fn brute_force_weak_order(top: &FiniteTopology) -> Result<Option<OrderWitness>> {
    brute_force_weak_order_with_cap(top, BRUTE_FORCE_CAP)
}

pub fn brute_force_weak_order_with_cap(
    top: &FiniteTopology,
    cap: usize,
) -> Result<Option<OrderWitness>> {
    let n = top.len();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "brute-force relation scan carrier",
            size: n,
            cap,
        });
    }
    let total = relation_universe_size(n)?;
    for mask in 0..total {
        let view = MaskRel::new(mask, n);
        if crate::relation::strict_pair(&view).is_none()
            || crate::relation::complete_violation(&view).is_some()
            || crate::relation::transitive_violation(&view).is_some()
        {
            continue;
        }
        let candidate = BinaryRelation::from_view(top.carrier().clone(), &view);
        let continuity = is_continuous(&candidate, top)?;
        if continuity.continuous {
            let properties = check_properties_with_cap(&candidate, n.max(1))?;
            return Ok(Some(OrderWitness {
                relation: candidate,
                kind: WitnessKind::WeakOrder,
                properties,
                continuity,
                equivalence: None,
            }));
        }
    }
    Ok(None)
}
