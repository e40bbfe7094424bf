//! Additivity postulates on finite Abelian groups.
//!
//! Groups are products of cyclic groups (every finite Abelian group is one,
//! so the declarative input loses nothing). Elements are residue tuples in
//! lexicographic order with componentwise modular addition; tuple index 0 is
//! the identity. The verification suite scans relation universes for
//! counterexamples to the additivity/transitivity claims: a relation is
//! additive iff translation cannot break a comparison, strongly additive iff
//! comparisons add pairwise.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::enumerate::{relation_universe_size, MaskRel};
use crate::error::{Error, Result};
use crate::relation::{BinaryRelation, Carrier, RelView};
use crate::sample::{random_relation, stream_rng};
use crate::verify::{ClaimId, ClaimOutcome, Counterexample, UniverseDesc, VerificationReport};

/// Cap on group order.
pub const GROUP_ORDER_CAP: usize = 64;

/// Largest group order for which the relation universe is scanned
/// exhaustively: 2^(4²) = 65,536 relations.
pub const EXHAUSTIVE_ORDER_CAP: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    moduli: Vec<u32>,
    size: usize,
    add: Vec<usize>,
    neg: Vec<usize>,
    carrier: Carrier,
}

impl FiniteAbelianGroup {
    pub fn new(moduli: &[u32]) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::InvalidArgument("at least one modulus required".to_string()));
        }
        if let Some(&m) = moduli.iter().find(|&&m| m < 1) {
            return Err(Error::InvalidArgument(format!("modulus {m} is below 1")));
        }
        let mut size: usize = 1;
        for &m in moduli {
            size = size.saturating_mul(m as usize);
            if size > GROUP_ORDER_CAP {
                return Err(Error::CapExceeded {
                    what: "group order",
                    size,
                    cap: GROUP_ORDER_CAP,
                });
            }
        }
        let tuples: Vec<Vec<u32>> = (0..size).map(|i| index_to_tuple(i, moduli)).collect();
        let labels: Vec<String> = tuples.iter().map(|t| tuple_label(t)).collect();
        let carrier = Carrier::new(labels)?;
        let mut add = Vec::with_capacity(size * size);
        for a in &tuples {
            for b in &tuples {
                let sum: Vec<u32> = a
                    .iter()
                    .zip(b)
                    .zip(moduli)
                    .map(|((&x, &y), &m)| (x + y) % m)
                    .collect();
                add.push(tuple_to_index(&sum, moduli));
            }
        }
        let neg = tuples
            .iter()
            .map(|t| {
                let n: Vec<u32> = t
                    .iter()
                    .zip(moduli)
                    .map(|(&x, &m)| (m - x) % m)
                    .collect();
                tuple_to_index(&n, moduli)
            })
            .collect();
        Ok(FiniteAbelianGroup {
            moduli: moduli.to_vec(),
            size,
            add,
            neg,
            carrier,
        })
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn element_tuple(&self, index: usize) -> Vec<u32> {
        index_to_tuple(index, &self.moduli)
    }

    pub fn index_of_tuple(&self, tuple: &[u32]) -> Result<usize> {
        if tuple.len() != self.moduli.len() {
            return Err(Error::InvalidArgument(format!(
                "tuple has {} components, group has {}",
                tuple.len(),
                self.moduli.len()
            )));
        }
        if let Some((i, (&x, &m))) = tuple
            .iter()
            .zip(&self.moduli)
            .enumerate()
            .find(|(_, (&x, &m))| x >= m)
        {
            return Err(Error::InvalidArgument(format!(
                "component {i} is {x}, modulus is {m}"
            )));
        }
        Ok(tuple_to_index(tuple, &self.moduli))
    }

    /// The relation x ≽ y iff x − y lies in `set`. These are exactly the
    /// additive relations on the group.
    pub fn difference_set_relation(&self, set: &BTreeSet<usize>) -> BinaryRelation {
        BinaryRelation::from_fn(self.carrier.clone(), |i, j| set.contains(&self.sub(i, j)))
    }
}

fn index_to_tuple(index: usize, moduli: &[u32]) -> Vec<u32> {
    let mut rest = index;
    let mut out = alloc::vec![0u32; moduli.len()];
    for (slot, &m) in out.iter_mut().zip(moduli).rev() {
        *slot = (rest % m as usize) as u32;
        rest /= m as usize;
    }
    out
}

fn tuple_to_index(tuple: &[u32], moduli: &[u32]) -> usize {
    let mut index = 0usize;
    for (&x, &m) in tuple.iter().zip(moduli) {
        index = index * m as usize + x as usize;
    }
    index
}

pub fn tuple_label(tuple: &[u32]) -> String {
    let parts: Vec<String> = tuple.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Least (x, y, z) with x ≽ y but not x + z ≽ y + z, scanned in index order.
pub fn additivity_violation<R: RelView>(rel: &R, g: &FiniteAbelianGroup) -> Option<[usize; 3]> {
    let n = g.size();
    for x in 0..n {
        for y in 0..n {
            if !rel.rel(x, y) {
                continue;
            }
            for z in 0..n {
                if !rel.rel(g.add(x, z), g.add(y, z)) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

/// Least (x1, x2, y1, y2) with x1 ≽ y1 and x2 ≽ y2 but not
/// x1 + x2 ≽ y1 + y2.
pub fn strong_additivity_violation<R: RelView>(
    rel: &R,
    g: &FiniteAbelianGroup,
) -> Option<[usize; 4]> {
    let n = g.size();
    for x1 in 0..n {
        for x2 in 0..n {
            let sum_x = g.add(x1, x2);
            for y1 in 0..n {
                if !rel.rel(x1, y1) {
                    continue;
                }
                for y2 in 0..n {
                    if rel.rel(x2, y2) && !rel.rel(sum_x, g.add(y1, y2)) {
                        return Some([x1, x2, y1, y2]);
                    }
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditivityVerdict {
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

pub fn is_additive(rel: &BinaryRelation, g: &FiniteAbelianGroup) -> Result<AdditivityVerdict> {
    if rel.carrier() != g.carrier() {
        return Err(Error::CarrierMismatch {
            left: rel.carrier().describe(),
            right: g.carrier().describe(),
        });
    }
    let witness = additivity_violation(rel, g);
    Ok(AdditivityVerdict {
        holds: witness.is_none(),
        witness: witness.map(|w| w.to_vec()),
    })
}

pub fn is_strongly_additive(
    rel: &BinaryRelation,
    g: &FiniteAbelianGroup,
) -> Result<AdditivityVerdict> {
    if rel.carrier() != g.carrier() {
        return Err(Error::CarrierMismatch {
            left: rel.carrier().describe(),
            right: g.carrier().describe(),
        });
    }
    let witness = strong_additivity_violation(rel, g);
    Ok(AdditivityVerdict {
        holds: witness.is_none(),
        witness: witness.map(|w| w.to_vec()),
    })
}

/// How a verification suite walks its relation universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyBudget {
    Exhaustive,
    Sampled { samples: u64, seed: u64 },
}

/// Per-claim scan state over a range of the universe, mergeable across
/// disjoint ranges.
#[derive(Debug, Clone, Default)]
pub struct AdditivityScan {
    pub checked: u64,
    pub outcomes: [ClaimOutcome; 4],
}

impl AdditivityScan {
    pub fn merge(&mut self, other: AdditivityScan) {
        self.checked += other.checked;
        for (mine, theirs) in self.outcomes.iter_mut().zip(other.outcomes) {
            mine.merge(theirs);
        }
    }
}

pub const ADDITIVITY_CLAIMS: [ClaimId; 4] = [
    ClaimId::Prop1,
    ClaimId::AdditivityFwd,
    ClaimId::AdditivityBwd,
    ClaimId::Cor1,
];

fn check_additivity_claims<R: RelView>(
    rel: &R,
    g: &FiniteAbelianGroup,
    index: u64,
    scan: &mut AdditivityScan,
) {
    let reflexive = crate::relation::reflexive_violation(rel).is_none();
    let additive = additivity_violation(rel, g);
    let strongly = strong_additivity_violation(rel, g);
    let transitive = crate::relation::transitive_violation(rel);

    let materialize = || BinaryRelation::from_view(g.carrier().clone(), rel);

    // Prop1: reflexive and strongly additive implies additive.
    if reflexive && strongly.is_none() {
        if let Some(w) = additive {
            scan.outcomes[0].record(Counterexample {
                index,
                relation: materialize(),
                witness: w.to_vec(),
                description: "reflexive, strongly additive, yet translation breaks a comparison"
                    .to_string(),
            });
        }
    }
    // Forward: additive and transitive implies strongly additive.
    if additive.is_none() && transitive.is_none() {
        if let Some(w) = strongly {
            scan.outcomes[1].record(Counterexample {
                index,
                relation: materialize(),
                witness: w.to_vec(),
                description: "additive and transitive, yet comparisons do not add".to_string(),
            });
        }
    }
    // Backward: additive and strongly additive implies transitive.
    if additive.is_none() && strongly.is_none() {
        if let Some(w) = transitive {
            scan.outcomes[2].record(Counterexample {
                index,
                relation: materialize(),
                witness: w.to_vec(),
                description: "additive and strongly additive, yet not transitive".to_string(),
            });
        }
    }
    // Cor1: reflexive and strongly additive implies transitive.
    if reflexive && strongly.is_none() {
        if let Some(w) = transitive {
            scan.outcomes[3].record(Counterexample {
                index,
                relation: materialize(),
                witness: w.to_vec(),
                description: "reflexive and strongly additive, yet not transitive".to_string(),
            });
        }
    }
    scan.checked += 1;
}

/// Scans masks in `lo..hi` of the exhaustive universe.
pub fn scan_additivity_exhaustive(
    g: &FiniteAbelianGroup,
    lo: u64,
    hi: u64,
) -> Result<AdditivityScan> {
    if g.size() > EXHAUSTIVE_ORDER_CAP {
        return Err(Error::CapExceeded {
            what: "exhaustive additivity universe (group order)",
            size: g.size(),
            cap: EXHAUSTIVE_ORDER_CAP,
        });
    }
    let total = relation_universe_size(g.size())?;
    if hi > total || lo > hi {
        return Err(Error::InvalidArgument(format!(
            "range {lo}..{hi} outside universe of {total}"
        )));
    }
    let mut scan = AdditivityScan::default();
    for mask in lo..hi {
        let rel = MaskRel::new(mask, g.size());
        check_additivity_claims(&rel, g, mask, &mut scan);
    }
    Ok(scan)
}

/// Scans sample indices in `lo..hi` of a seeded sampled universe.
pub fn scan_additivity_sampled(
    g: &FiniteAbelianGroup,
    seed: u64,
    lo: u64,
    hi: u64,
) -> Result<AdditivityScan> {
    if lo > hi {
        return Err(Error::InvalidArgument(format!("range {lo}..{hi} is reversed")));
    }
    let mut scan = AdditivityScan::default();
    for i in lo..hi {
        let rel = random_relation(&mut stream_rng(seed, i), g.size());
        check_additivity_claims(&rel, g, i, &mut scan);
    }
    Ok(scan)
}

/// Runs the four additivity claims over the whole universe.
pub fn verify_additivity_theorems(
    g: &FiniteAbelianGroup,
    budget: VerifyBudget,
) -> Result<Vec<VerificationReport>> {
    let (scan, universe) = match budget {
        VerifyBudget::Exhaustive => {
            let total = relation_universe_size(g.size())?;
            (
                scan_additivity_exhaustive(g, 0, total)?,
                UniverseDesc::Exhaustive { total },
            )
        }
        VerifyBudget::Sampled { samples, seed } => {
            if samples == 0 {
                return Err(Error::InvalidArgument("sample budget is zero".to_string()));
            }
            (
                scan_additivity_sampled(g, seed, 0, samples)?,
                UniverseDesc::Sampled { samples, seed },
            )
        }
    };
    Ok(wrap_additivity_reports(scan, universe))
}

pub fn wrap_additivity_reports(
    scan: AdditivityScan,
    universe: UniverseDesc,
) -> Vec<VerificationReport> {
    ADDITIVITY_CLAIMS
        .iter()
        .zip(scan.outcomes)
        .map(|(&claim, outcome)| VerificationReport {
            claim,
            universe,
            checked: scan.checked,
            counterexample: outcome.counterexample,
        })
        .collect()
}
