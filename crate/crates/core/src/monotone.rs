//! Monotone-continuity axioms over chain probes, Villegas additivity and the
//! DeGroot transitivity suite.
//!
//! Two order-complete structures realize everything the axioms quantify
//! over: finite power-set event algebras (events as bit masks, ordered by
//! inclusion) and finite integer boxes (points ordered componentwise). Both
//! honestly have all the sups and infs the axioms mention.
//!
//! The axiom checkers are falsification harnesses over supplied chains, not
//! decision procedures. On a finite structure every monotone chain
//! stabilizes, so an exhaustive probe (one whose declared limit is attained
//! by the window) can never violate an axiom; the interesting content lives
//! in non-exhaustive probes, whose declared limit is a bound of the window
//! but not its computed sup or inf — the finite stand-in for a genuinely
//! infinite chain. A "holds" verdict is therefore always relative to the
//! probes supplied.
//!
//! Quantifiers over sequence tails are read off the listed window
//! cofinally: "eventually" means "from some listed position on, including
//! the last".

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use crate::enumerate::{relation_universe_size, MaskRel};
use crate::error::{Error, Result};
use crate::relation::{BinaryRelation, Carrier, RelView};
use crate::sample::{random_relation, stream_rng};
use crate::verify::{ClaimId, ClaimOutcome, Counterexample, UniverseDesc, VerificationReport};

/// Atom cap for materializing event carriers and relation matrices.
pub const EVENT_CARRIER_CAP: u32 = 5;
/// Atom cap for probe work (events referenced individually, never
/// enumerated).
pub const EVENT_PROBE_CAP: u32 = 16;
/// Atom cap for the exhaustive DeGroot scan (2^((2^n)²) relations).
pub const DEGROOT_EXHAUSTIVE_CAP: u32 = 2;
/// Cap for enumerating the points of an integer box.
pub const BOX_POINT_CAP: usize = 4096;

// ---------------------------------------------------------------------------
// Event algebras
// ---------------------------------------------------------------------------

/// The power set of `atoms` atoms: events are bit masks (atom i is bit i),
/// ordered by inclusion, closed under union, intersection and complement.
/// Models a finite σ-algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EventAlgebra {
    atoms: u32,
}

impl EventAlgebra {
    pub fn new(atoms: u32) -> Result<Self> {
        if atoms < 1 {
            return Err(Error::InvalidArgument("at least one atom required".to_string()));
        }
        if atoms > EVENT_PROBE_CAP {
            return Err(Error::CapExceeded {
                what: "event algebra atoms",
                size: atoms as usize,
                cap: EVENT_PROBE_CAP as usize,
            });
        }
        Ok(EventAlgebra { atoms })
    }

    pub fn atoms(&self) -> u32 {
        self.atoms
    }

    pub fn event_count(&self) -> usize {
        1usize << self.atoms
    }

    pub fn universe(&self) -> u32 {
        ((1u64 << self.atoms) - 1) as u32
    }

    pub fn contains(&self, event: u32) -> bool {
        u64::from(event) < (1u64 << self.atoms)
    }

    pub fn is_subset(&self, a: u32, b: u32) -> bool {
        a & !b == 0
    }

    /// Atom-set notation, e.g. `{}`, `{1,3}`; atoms are 1-based.
    pub fn label(&self, event: u32) -> String {
        let atoms: Vec<String> = (0..self.atoms)
            .filter(|i| event >> i & 1 == 1)
            .map(|i| (i + 1).to_string())
            .collect();
        format!("{{{}}}", atoms.join(","))
    }

    /// Carrier of all events in subset-rank (ascending mask) order, so the
    /// carrier index of an event equals its mask.
    pub fn carrier(&self) -> Result<Carrier> {
        if self.atoms > EVENT_CARRIER_CAP {
            return Err(Error::CapExceeded {
                what: "event carrier atoms",
                size: self.atoms as usize,
                cap: EVENT_CARRIER_CAP as usize,
            });
        }
        Carrier::new((0..self.event_count()).map(|m| self.label(m as u32)))
    }

    /// Total event mass under nonnegative atom weights.
    pub fn event_value(&self, weights: &[BigRational], event: u32) -> BigRational {
        (0..self.atoms)
            .filter(|i| event >> i & 1 == 1)
            .map(|i| weights[i as usize].clone())
            .fold(BigRational::zero(), |acc, w| acc + w)
    }

    fn validate_weights(&self, weights: &[BigRational]) -> Result<()> {
        if weights.len() != self.atoms as usize {
            return Err(Error::InvalidWeights(format!(
                "{} weights for {} atoms",
                weights.len(),
                self.atoms
            )));
        }
        if let Some(i) = weights.iter().position(|w| w < &BigRational::zero()) {
            return Err(Error::InvalidWeights(format!("weight {i} is negative")));
        }
        Ok(())
    }

    /// The comparative-likelihood relation A ≽ B iff the weight of A is at
    /// least the weight of B.
    pub fn measure_relation(&self, weights: &[BigRational]) -> Result<BinaryRelation> {
        self.validate_weights(weights)?;
        let carrier = self.carrier()?;
        let values: Vec<BigRational> = (0..self.event_count())
            .map(|m| self.event_value(weights, m as u32))
            .collect();
        Ok(BinaryRelation::from_fn(carrier, |i, j| values[i] >= values[j]))
    }
}

// ---------------------------------------------------------------------------
// Villegas additivity and the DeGroot suite
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VillegasClause {
    /// A1 ≽ B1 and A2 ≽ B2 must give A1 ∪ A2 ≽ B1 ∪ B2.
    Weak,
    /// With additionally A1 ≻ B1 or A2 ≻ B2, the union comparison must be
    /// strict.
    Strict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VillegasViolation {
    pub a1: u32,
    pub a2: u32,
    pub b1: u32,
    pub b2: u32,
    pub clause: VillegasClause,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VillegasVerdict {
    pub holds: bool,
    pub violation: Option<VillegasViolation>,
}

/// Scans all quadruples (A1, A2, B1, B2) with A1 ∩ A2 = B1 ∩ B2 = ∅ in
/// ascending mask order, checking both clauses; returns the least violation.
pub fn villegas_violation<R: RelView>(rel: &R, atoms: u32) -> Option<VillegasViolation> {
    let count = 1u32 << atoms;
    let geq = |a: u32, b: u32| rel.rel(a as usize, b as usize);
    let strict = |a: u32, b: u32| geq(a, b) && !geq(b, a);
    for a1 in 0..count {
        for a2 in 0..count {
            if a1 & a2 != 0 {
                continue;
            }
            let ua = a1 | a2;
            for b1 in 0..count {
                if !geq(a1, b1) {
                    continue;
                }
                for b2 in 0..count {
                    if b1 & b2 != 0 || !geq(a2, b2) {
                        continue;
                    }
                    let ub = b1 | b2;
                    if !geq(ua, ub) {
                        return Some(VillegasViolation {
                            a1,
                            a2,
                            b1,
                            b2,
                            clause: VillegasClause::Weak,
                        });
                    }
                    if (strict(a1, b1) || strict(a2, b2)) && !strict(ua, ub) {
                        return Some(VillegasViolation {
                            a1,
                            a2,
                            b1,
                            b2,
                            clause: VillegasClause::Strict,
                        });
                    }
                }
            }
        }
    }
    None
}

pub fn is_villegas_additive(
    rel: &BinaryRelation,
    algebra: &EventAlgebra,
) -> Result<VillegasVerdict> {
    if rel.carrier().len() != algebra.event_count() {
        return Err(Error::CarrierMismatch {
            left: rel.carrier().describe(),
            right: format!("event algebra with {} events", algebra.event_count()),
        });
    }
    let violation = villegas_violation(rel, algebra.atoms());
    Ok(VillegasVerdict {
        holds: violation.is_none(),
        violation,
    })
}

/// Scan state for the DeGroot claim, mergeable across disjoint ranges.
#[derive(Debug, Clone, Default)]
pub struct DegrootScan {
    pub checked: u64,
    pub outcome: ClaimOutcome,
}

impl DegrootScan {
    pub fn merge(&mut self, other: DegrootScan) {
        self.checked += other.checked;
        self.outcome.merge(other.outcome);
    }
}

fn check_degroot_claim<R: RelView>(
    rel: &R,
    algebra: &EventAlgebra,
    index: u64,
    scan: &mut DegrootScan,
) -> Result<()> {
    scan.checked += 1;
    if crate::relation::complete_violation(rel).is_some() {
        return Ok(());
    }
    if villegas_violation(rel, algebra.atoms()).is_some() {
        return Ok(());
    }
    if let Some(w) = crate::relation::transitive_violation(rel) {
        scan.outcome.record(Counterexample {
            index,
            relation: BinaryRelation::from_view(algebra.carrier()?, rel),
            witness: w.to_vec(),
            description: "complete and Villegas-additive, yet not transitive".to_string(),
        });
    }
    Ok(())
}

pub fn scan_degroot_exhaustive(algebra: &EventAlgebra, lo: u64, hi: u64) -> Result<DegrootScan> {
    if algebra.atoms() > DEGROOT_EXHAUSTIVE_CAP {
        return Err(Error::CapExceeded {
            what: "exhaustive DeGroot universe (atoms)",
            size: algebra.atoms() as usize,
            cap: DEGROOT_EXHAUSTIVE_CAP as usize,
        });
    }
    let n = algebra.event_count();
    let total = relation_universe_size(n)?;
    if hi > total || lo > hi {
        return Err(Error::InvalidArgument(format!(
            "range {lo}..{hi} outside universe of {total}"
        )));
    }
    let mut scan = DegrootScan::default();
    for mask in lo..hi {
        check_degroot_claim(&MaskRel::new(mask, n), algebra, mask, &mut scan)?;
    }
    Ok(scan)
}

pub fn scan_degroot_sampled(
    algebra: &EventAlgebra,
    seed: u64,
    lo: u64,
    hi: u64,
) -> Result<DegrootScan> {
    if algebra.atoms() > EVENT_CARRIER_CAP {
        return Err(Error::CapExceeded {
            what: "sampled DeGroot universe (atoms)",
            size: algebra.atoms() as usize,
            cap: EVENT_CARRIER_CAP as usize,
        });
    }
    if lo > hi {
        return Err(Error::InvalidArgument(format!("range {lo}..{hi} is reversed")));
    }
    let n = algebra.event_count();
    let mut scan = DegrootScan::default();
    for i in lo..hi {
        let rel = random_relation(&mut stream_rng(seed, i), n);
        check_degroot_claim(&rel, algebra, i, &mut scan)?;
    }
    Ok(scan)
}

/// Complete and Villegas-additive implies transitive, over the whole
/// universe.
pub fn verify_degroot(
    algebra: &EventAlgebra,
    budget: crate::group::VerifyBudget,
) -> Result<VerificationReport> {
    let (scan, universe) = match budget {
        crate::group::VerifyBudget::Exhaustive => {
            let total = relation_universe_size(algebra.event_count())?;
            (
                scan_degroot_exhaustive(algebra, 0, total)?,
                UniverseDesc::Exhaustive { total },
            )
        }
        crate::group::VerifyBudget::Sampled { samples, seed } => {
            if samples == 0 {
                return Err(Error::InvalidArgument("sample budget is zero".to_string()));
            }
            (
                scan_degroot_sampled(algebra, seed, 0, samples)?,
                UniverseDesc::Sampled { samples, seed },
            )
        }
    };
    Ok(VerificationReport {
        claim: ClaimId::DeGroot,
        universe,
        checked: scan.checked,
        counterexample: scan.outcome.counterexample,
    })
}

// ---------------------------------------------------------------------------
// Integer boxes
// ---------------------------------------------------------------------------

/// Integer tuples inside a declared window of Z^d under the componentwise
/// order, with partial componentwise addition (defined when the result stays
/// inside). Every nonempty subset has its componentwise max and min inside
/// the box, so the poset is order-complete.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerBox {
    lo: Vec<i64>,
    hi: Vec<i64>,
}

impl IntegerBox {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Result<Self> {
        if lo.is_empty() || lo.len() != hi.len() {
            return Err(Error::InvalidArgument(format!(
                "box bounds have dimensions {} and {}",
                lo.len(),
                hi.len()
            )));
        }
        if let Some(i) = lo.iter().zip(&hi).position(|(l, h)| l > h) {
            return Err(Error::InvalidArgument(format!(
                "box is empty in coordinate {i}"
            )));
        }
        Ok(IntegerBox { lo, hi })
    }

    pub fn dimension(&self) -> usize {
        self.lo.len()
    }

    pub fn bounds(&self) -> (&[i64], &[i64]) {
        (&self.lo, &self.hi)
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        p.len() == self.dimension()
            && p.iter()
                .zip(self.lo.iter().zip(&self.hi))
                .all(|(x, (l, h))| l <= x && x <= h)
    }

    pub fn leq(a: &[i64], b: &[i64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x <= y)
    }

    /// Componentwise max of a nonempty point set.
    pub fn sup(points: &[Vec<i64>]) -> Vec<i64> {
        let mut out = points[0].clone();
        for p in &points[1..] {
            for (o, &x) in out.iter_mut().zip(p) {
                *o = (*o).max(x);
            }
        }
        out
    }

    /// Componentwise min of a nonempty point set.
    pub fn inf(points: &[Vec<i64>]) -> Vec<i64> {
        let mut out = points[0].clone();
        for p in &points[1..] {
            for (o, &x) in out.iter_mut().zip(p) {
                *o = (*o).min(x);
            }
        }
        out
    }

    /// Componentwise sum when it stays inside the box.
    pub fn add(&self, a: &[i64], b: &[i64]) -> Option<Vec<i64>> {
        let sum: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        self.contains(&sum).then_some(sum)
    }

    pub fn point_count(&self) -> u64 {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(l, h)| (h - l + 1) as u64)
            .product()
    }

    /// All points in lexicographic order. Capped.
    pub fn points(&self) -> Result<Vec<Vec<i64>>> {
        let count = self.point_count();
        if count > BOX_POINT_CAP as u64 {
            return Err(Error::CapExceeded {
                what: "box point enumeration",
                size: count as usize,
                cap: BOX_POINT_CAP,
            });
        }
        let mut out = Vec::with_capacity(count as usize);
        let mut current = self.lo.clone();
        loop {
            out.push(current.clone());
            let mut k = self.dimension();
            loop {
                if k == 0 {
                    return Ok(out);
                }
                k -= 1;
                if current[k] < self.hi[k] {
                    current[k] += 1;
                    for c in k + 1..self.dimension() {
                        current[c] = self.lo[c];
                    }
                    break;
                }
            }
        }
    }

    pub fn index_of(&self, p: &[i64]) -> Option<usize> {
        if !self.contains(p) {
            return None;
        }
        let mut index = 0usize;
        for ((&x, &l), &h) in p.iter().zip(&self.lo).zip(&self.hi) {
            index = index * (h - l + 1) as usize + (x - l) as usize;
        }
        Some(index)
    }

    pub fn carrier(&self) -> Result<Carrier> {
        Carrier::new(self.points()?.iter().map(|p| point_label(p)))
    }

    /// Dot product against rational weights.
    pub fn utility(weights: &[BigRational], p: &[i64]) -> BigRational {
        weights
            .iter()
            .zip(p)
            .map(|(w, &x)| w * BigRational::from_integer(x.into()))
            .fold(BigRational::zero(), |acc, t| acc + t)
    }
}

pub fn point_label(p: &[i64]) -> String {
    let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Checks inf(−S) = −sup(S) for a finite point set, computing the two sides
/// independently from the componentwise formulas. Errors when S or −S leaves
/// the box.
pub fn neg_sup_inf_lemma(bx: &IntegerBox, s: &[Vec<i64>]) -> Result<bool> {
    if s.is_empty() {
        return Err(Error::InvalidArgument("point set is empty".to_string()));
    }
    for p in s {
        if !bx.contains(p) {
            return Err(Error::InvalidArgument(format!(
                "point {} is outside the box",
                point_label(p)
            )));
        }
        let neg: Vec<i64> = p.iter().map(|&x| -x).collect();
        if !bx.contains(&neg) {
            return Err(Error::InvalidArgument(format!(
                "negated point {} is outside the box",
                point_label(&neg)
            )));
        }
    }
    let sup = IntegerBox::sup(s);
    let negated: Vec<Vec<i64>> = s
        .iter()
        .map(|p| p.iter().map(|&x| -x).collect())
        .collect();
    let inf_of_neg = IntegerBox::inf(&negated);
    let neg_of_sup: Vec<i64> = sup.iter().map(|&x| -x).collect();
    Ok(inf_of_neg == neg_of_sup)
}

// ---------------------------------------------------------------------------
// Relation oracles
// ---------------------------------------------------------------------------

/// Answers ≽ queries between structure elements. `Pairs` is closed-world:
/// the listed pairs are exactly the facts, anything else is not related.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelOracle<E: Ord> {
    Pairs(BTreeSet<(E, E)>),
    /// Rational weights inducing A ≽ B iff value(A) ≥ value(B): atom
    /// weights on an event algebra, linear-utility coefficients on a box.
    Weights(Vec<BigRational>),
    /// Extensional matrix with carrier index = structure index.
    Matrix(BinaryRelation),
}

impl EventAlgebra {
    pub fn oracle_geq(&self, oracle: &RelOracle<u32>, a: u32, b: u32) -> Result<bool> {
        match oracle {
            RelOracle::Pairs(pairs) => Ok(pairs.contains(&(a, b))),
            RelOracle::Weights(w) => {
                self.validate_weights(w)?;
                Ok(self.event_value(w, a) >= self.event_value(w, b))
            }
            RelOracle::Matrix(rel) => {
                if rel.carrier().len() != self.event_count() {
                    return Err(Error::CarrierMismatch {
                        left: rel.carrier().describe(),
                        right: format!("event algebra with {} events", self.event_count()),
                    });
                }
                Ok(rel.holds(a as usize, b as usize))
            }
        }
    }
}

impl IntegerBox {
    pub fn oracle_geq(&self, oracle: &RelOracle<Vec<i64>>, a: &[i64], b: &[i64]) -> Result<bool> {
        match oracle {
            RelOracle::Pairs(pairs) => Ok(pairs.contains(&(a.to_vec(), b.to_vec()))),
            RelOracle::Weights(w) => {
                if w.len() != self.dimension() {
                    return Err(Error::InvalidWeights(format!(
                        "{} weights for dimension {}",
                        w.len(),
                        self.dimension()
                    )));
                }
                Ok(IntegerBox::utility(w, a) >= IntegerBox::utility(w, b))
            }
            RelOracle::Matrix(rel) => {
                let (ia, ib) = match (self.index_of(a), self.index_of(b)) {
                    (Some(ia), Some(ib)) => (ia, ib),
                    _ => {
                        return Err(Error::InvalidArgument(format!(
                            "point {} or {} outside the box",
                            point_label(a),
                            point_label(b)
                        )))
                    }
                };
                if rel.carrier().len() as u64 != self.point_count() {
                    return Err(Error::CarrierMismatch {
                        left: rel.carrier().describe(),
                        right: format!("box with {} points", self.point_count()),
                    });
                }
                Ok(rel.holds(ia, ib))
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Probes
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Increasing,
    Decreasing,
}

/// A monotone window of structure elements with a declared limit.
///
/// `exhaustive` means the window attains the limit (so the declared limit is
/// the chain's computed sup or inf); otherwise the limit is a symbolic tail
/// value, merely a bound of the window, and the probe models an infinite
/// chain by its listed representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainProbe<E> {
    pub direction: Direction,
    pub window: Vec<E>,
    pub limit: E,
    pub exhaustive: bool,
    /// The element the axioms compare against (the y or B of the axiom).
    pub comparison: E,
}

/// One altered pair for a vanishing-sequence probe: `f_alt` and `g_alt` must
/// agree with the probe's F and G outside `window[index]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alteration {
    pub index: usize,
    pub f_alt: u32,
    pub g_alt: u32,
}

/// A decreasing event chain with empty declared intersection, a strict pair
/// F ≻ G, and altered pairs per index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlterationProbe {
    pub window: Vec<u32>,
    pub exhaustive: bool,
    pub f: u32,
    pub g: u32,
    pub alterations: Vec<Alteration>,
}

/// Probes accepted by the event-algebra checker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EventProbe {
    Chain(ChainProbe<u32>),
    Alteration(AlterationProbe),
}

fn validate_chain<E: Clone + Eq>(
    probe_index: usize,
    probe: &ChainProbe<E>,
    leq: impl Fn(&E, &E) -> bool,
    contains: impl Fn(&E) -> bool,
) -> Result<()> {
    let defect = |d: String| Error::MalformedProbe {
        probe: probe_index,
        defect: d,
    };
    if probe.window.is_empty() {
        return Err(defect("window is empty".to_string()));
    }
    for (i, e) in probe.window.iter().enumerate() {
        if !contains(e) {
            return Err(defect(format!("window element {i} is outside the structure")));
        }
    }
    if !contains(&probe.limit) {
        return Err(defect("limit is outside the structure".to_string()));
    }
    if !contains(&probe.comparison) {
        return Err(defect("comparison element is outside the structure".to_string()));
    }
    for i in 0..probe.window.len() - 1 {
        let ok = match probe.direction {
            Direction::Increasing => leq(&probe.window[i], &probe.window[i + 1]),
            Direction::Decreasing => leq(&probe.window[i + 1], &probe.window[i]),
        };
        if !ok {
            return Err(defect(format!("window is not monotone at position {i}")));
        }
    }
    for (i, e) in probe.window.iter().enumerate() {
        let ok = match probe.direction {
            Direction::Increasing => leq(e, &probe.limit),
            Direction::Decreasing => leq(&probe.limit, e),
        };
        if !ok {
            return Err(defect(format!(
                "limit is not a bound of window element {i}"
            )));
        }
    }
    if probe.exhaustive {
        // For a monotone chain the computed sup/inf is the last element.
        if probe.window.last() != Some(&probe.limit) {
            return Err(defect(
                "probe is marked exhaustive but the window does not attain the limit".to_string(),
            ));
        }
    }
    Ok(())
}

fn validate_alteration_probe(
    probe_index: usize,
    probe: &AlterationProbe,
    algebra: &EventAlgebra,
) -> Result<()> {
    let defect = |d: String| Error::MalformedProbe {
        probe: probe_index,
        defect: d,
    };
    if probe.window.is_empty() {
        return Err(defect("window is empty".to_string()));
    }
    for (i, &e) in probe.window.iter().enumerate() {
        if !algebra.contains(e) {
            return Err(defect(format!("window element {i} is outside the algebra")));
        }
        if i + 1 < probe.window.len() && !algebra.is_subset(probe.window[i + 1], e) {
            return Err(defect(format!("window is not decreasing at position {i}")));
        }
    }
    if probe.exhaustive && probe.window.last() != Some(&0) {
        return Err(defect(
            "probe is marked exhaustive but the window does not reach the empty event"
                .to_string(),
        ));
    }
    if !algebra.contains(probe.f) || !algebra.contains(probe.g) {
        return Err(defect("F or G is outside the algebra".to_string()));
    }
    if probe.alterations.is_empty() {
        return Err(defect("no alterations supplied".to_string()));
    }
    for (k, alt) in probe.alterations.iter().enumerate() {
        if alt.index >= probe.window.len() {
            return Err(defect(format!(
                "alteration {k} points at window index {} of {}",
                alt.index,
                probe.window.len()
            )));
        }
        let inside = probe.window[alt.index];
        if (alt.f_alt ^ probe.f) & !inside != 0 {
            return Err(defect(format!(
                "alteration {k} changes F outside the window event at its index"
            )));
        }
        if (alt.g_alt ^ probe.g) & !inside != 0 {
            return Err(defect(format!(
                "alteration {k} changes G outside the window event at its index"
            )));
        }
        if !algebra.contains(alt.f_alt) || !algebra.contains(alt.g_alt) {
            return Err(defect(format!("alteration {k} is outside the algebra")));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Axiom evaluation
// ---------------------------------------------------------------------------

/// The monotone-continuity axioms: primed forms on ordered groups, unprimed
/// on event algebras, C4 in the event form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum AxiomId {
    C1Prime,
    C2Prime,
    C3Prime,
    C1,
    C2,
    C3,
    C4,
}

impl AxiomId {
    pub fn as_str(self) -> &'static str {
        match self {
            AxiomId::C1Prime => "C1'",
            AxiomId::C2Prime => "C2'",
            AxiomId::C3Prime => "C3'",
            AxiomId::C1 => "C1",
            AxiomId::C2 => "C2",
            AxiomId::C3 => "C3",
            AxiomId::C4 => "C4",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    pub probe: usize,
    /// Window or alteration position where the failure shows, when one
    /// exists.
    pub index: Option<usize>,
    pub detail: String,
}

/// Verdict for one axiom over all supplied probes. "Holds" is always
/// relative to the probes: `engaged` counts probes whose hypothesis fired.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomVerdict {
    Violated(AxiomViolation),
    HoldsOnProbes { engaged: usize },
    Vacuous,
}

impl AxiomVerdict {
    pub fn violated(&self) -> bool {
        matches!(self, AxiomVerdict::Violated(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub verdicts: Vec<(AxiomId, AxiomVerdict)>,
    pub notes: Vec<String>,
}

impl AxiomReport {
    pub fn verdict(&self, axiom: AxiomId) -> Option<&AxiomVerdict> {
        self.verdicts
            .iter()
            .find(|(a, _)| *a == axiom)
            .map(|(_, v)| v)
    }

    pub fn any_violation(&self) -> bool {
        self.verdicts.iter().any(|(_, v)| v.violated())
    }
}

struct Tally {
    engaged: usize,
    violation: Option<AxiomViolation>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            engaged: 0,
            violation: None,
        }
    }

    fn engage(&mut self) {
        self.engaged += 1;
    }

    fn violate(&mut self, v: AxiomViolation) {
        if self.violation.is_none() {
            self.violation = Some(v);
        }
    }

    fn verdict(self) -> AxiomVerdict {
        match self.violation {
            Some(v) => AxiomVerdict::Violated(v),
            None if self.engaged == 0 => AxiomVerdict::Vacuous,
            None => AxiomVerdict::HoldsOnProbes {
                engaged: self.engaged,
            },
        }
    }
}

/// Evaluates the three chain axioms on one probe. `geq` answers ≽ queries.
///
/// Decreasing probes engage the C1 form (all window elements ≽ comparison
/// must give limit ≽ comparison); increasing probes engage the C2 form
/// (comparison ≽ all window elements must give comparison ≽ limit) and the
/// C3 form (comparison ≺ limit must give a listed position from which the
/// window is strictly above the comparison, the last included).
fn evaluate_chain_probe<E: Clone + Eq>(
    probe_index: usize,
    probe: &ChainProbe<E>,
    describe: impl Fn(&E) -> String,
    mut geq: impl FnMut(&E, &E) -> Result<bool>,
    c1: &mut Tally,
    c2: &mut Tally,
    c3: &mut Tally,
) -> Result<()> {
    let y = &probe.comparison;
    match probe.direction {
        Direction::Decreasing => {
            let mut hypothesis = true;
            for w in &probe.window {
                if !geq(w, y)? {
                    hypothesis = false;
                    break;
                }
            }
            if hypothesis {
                c1.engage();
                if !geq(&probe.limit, y)? {
                    c1.violate(AxiomViolation {
                        probe: probe_index,
                        index: None,
                        detail: format!(
                            "every window element ≽ {}, yet the limit {} is not",
                            describe(y),
                            describe(&probe.limit)
                        ),
                    });
                }
            }
        }
        Direction::Increasing => {
            let mut hypothesis = true;
            for w in &probe.window {
                if !geq(y, w)? {
                    hypothesis = false;
                    break;
                }
            }
            if hypothesis {
                c2.engage();
                if !geq(y, &probe.limit)? {
                    c2.violate(AxiomViolation {
                        probe: probe_index,
                        index: None,
                        detail: format!(
                            "{} ≽ every window element, yet not ≽ the limit {}",
                            describe(y),
                            describe(&probe.limit)
                        ),
                    });
                }
            }
            // C3: y strictly below the (declared) sup.
            let y_below = geq(&probe.limit, y)? && !geq(y, &probe.limit)?;
            if y_below {
                c3.engage();
                // The conclusion asks for a listed position from which the
                // window stays strictly above y; read cofinally, the final
                // listed element must already be.
                let mut threshold = None;
                for k in (0..probe.window.len()).rev() {
                    let w = &probe.window[k];
                    if geq(w, y)? && !geq(y, w)? {
                        threshold = Some(k);
                    } else {
                        break;
                    }
                }
                if threshold.is_none() {
                    c3.violate(AxiomViolation {
                        probe: probe_index,
                        index: Some(probe.window.len() - 1),
                        detail: format!(
                            "{} ≺ the limit {}, yet no listed tail stays strictly above it",
                            describe(y),
                            describe(&probe.limit)
                        ),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Evaluates the primed axioms on an integer box.
pub fn check_primed_axioms(
    bx: &IntegerBox,
    oracle: &RelOracle<Vec<i64>>,
    probes: &[ChainProbe<Vec<i64>>],
) -> Result<AxiomReport> {
    let mut c1 = Tally::new();
    let mut c2 = Tally::new();
    let mut c3 = Tally::new();
    let mut any_non_exhaustive = false;
    for (i, probe) in probes.iter().enumerate() {
        validate_chain(i, probe, |a, b| IntegerBox::leq(a, b), |e| bx.contains(e))?;
        any_non_exhaustive |= !probe.exhaustive;
        evaluate_chain_probe(
            i,
            probe,
            |e| point_label(e),
            |a, b| bx.oracle_geq(oracle, a, b),
            &mut c1,
            &mut c2,
            &mut c3,
        )?;
    }
    Ok(AxiomReport {
        verdicts: alloc::vec![
            (AxiomId::C1Prime, c1.verdict()),
            (AxiomId::C2Prime, c2.verdict()),
            (AxiomId::C3Prime, c3.verdict()),
        ],
        notes: report_notes(any_non_exhaustive),
    })
}

/// Evaluates the set axioms, C4 included, on an event algebra.
pub fn check_set_axioms(
    algebra: &EventAlgebra,
    oracle: &RelOracle<u32>,
    probes: &[EventProbe],
) -> Result<AxiomReport> {
    let mut c1 = Tally::new();
    let mut c2 = Tally::new();
    let mut c3 = Tally::new();
    let mut c4 = Tally::new();
    let mut any_non_exhaustive = false;
    for (i, probe) in probes.iter().enumerate() {
        match probe {
            EventProbe::Chain(chain) => {
                validate_chain(
                    i,
                    chain,
                    |&a, &b| algebra.is_subset(a, b),
                    |&e| algebra.contains(e),
                )?;
                any_non_exhaustive |= !chain.exhaustive;
                evaluate_chain_probe(
                    i,
                    chain,
                    |&e| algebra.label(e),
                    |&a, &b| algebra.oracle_geq(oracle, a, b),
                    &mut c1,
                    &mut c2,
                    &mut c3,
                )?;
            }
            EventProbe::Alteration(alteration) => {
                validate_alteration_probe(i, alteration, algebra)?;
                any_non_exhaustive |= !alteration.exhaustive;
                evaluate_alteration_probe(i, alteration, algebra, oracle, &mut c4)?;
            }
        }
    }
    Ok(AxiomReport {
        verdicts: alloc::vec![
            (AxiomId::C1, c1.verdict()),
            (AxiomId::C2, c2.verdict()),
            (AxiomId::C3, c3.verdict()),
            (AxiomId::C4, c4.verdict()),
        ],
        notes: report_notes(any_non_exhaustive),
    })
}

fn report_notes(any_non_exhaustive: bool) -> Vec<String> {
    let mut notes = alloc::vec![
        "verdicts are relative to the supplied probes; holds-on-probes is not a proof"
            .to_string(),
    ];
    if any_non_exhaustive {
        notes.push(
            "some probes are non-exhaustive: their declared limits are symbolic tail values"
                .to_string(),
        );
    } else {
        notes.push(
            "all probes are exhaustive: monotone chains attain their limits on finite structures"
                .to_string(),
        );
    }
    notes
}

/// C4 on one probe: with F ≻ G and the window vanishing, some listed
/// threshold must exist beyond which every supplied altered pair keeps
/// F′ ≻ G′ (the alterations at the greatest supplied index included).
fn evaluate_alteration_probe(
    probe_index: usize,
    probe: &AlterationProbe,
    algebra: &EventAlgebra,
    oracle: &RelOracle<u32>,
    c4: &mut Tally,
) -> Result<()> {
    let f_strict = algebra.oracle_geq(oracle, probe.f, probe.g)?
        && !algebra.oracle_geq(oracle, probe.g, probe.f)?;
    if !f_strict {
        return Ok(());
    }
    c4.engage();
    let max_index = probe
        .alterations
        .iter()
        .map(|a| a.index)
        .max()
        .expect("validated nonempty");
    let mut last_failing: Option<usize> = None;
    for alt in &probe.alterations {
        let ok = algebra.oracle_geq(oracle, alt.f_alt, alt.g_alt)?
            && !algebra.oracle_geq(oracle, alt.g_alt, alt.f_alt)?;
        if !ok {
            last_failing = Some(last_failing.map_or(alt.index, |p| p.max(alt.index)));
        }
    }
    if let Some(fail) = last_failing {
        if fail >= max_index {
            c4.violate(AxiomViolation {
                probe: probe_index,
                index: Some(fail),
                detail: format!(
                    "altering inside {} breaks the strict ranking with no later recovery",
                    algebra.label(probe.window[fail])
                ),
            });
        }
    }
    Ok(())
}

/// Stabilization threshold for a passing C4 probe: the least N such that
/// every supplied alteration at an index above N keeps the strict ranking.
pub fn c4_stabilization_index(
    probe: &AlterationProbe,
    algebra: &EventAlgebra,
    oracle: &RelOracle<u32>,
) -> Result<Option<usize>> {
    let mut last_failing: Option<usize> = None;
    for alt in &probe.alterations {
        let ok = algebra.oracle_geq(oracle, alt.f_alt, alt.g_alt)?
            && !algebra.oracle_geq(oracle, alt.g_alt, alt.f_alt)?;
        if !ok {
            last_failing = Some(last_failing.map_or(alt.index, |p| p.max(alt.index)));
        }
    }
    let max_index = probe.alterations.iter().map(|a| a.index).max();
    Ok(match (last_failing, max_index) {
        (None, _) => Some(0),
        (Some(fail), Some(max)) if fail < max => Some(fail + 1),
        _ => None,
    })
}

/// The mechanical sub-probe extraction behind the C3 → C2 linkage: from a
/// probe violating the C3 form, keep exactly the listed entries the
/// comparison element is ≽ of; against the same declared limit they violate
/// the C2 form.
pub fn c3_violation_to_c2_subprobe<E: Clone + Eq>(
    probe: &ChainProbe<E>,
    mut geq: impl FnMut(&E, &E) -> Result<bool>,
) -> Result<ChainProbe<E>> {
    let mut window = Vec::new();
    for w in &probe.window {
        if geq(&probe.comparison, w)? {
            window.push(w.clone());
        }
    }
    Ok(ChainProbe {
        direction: Direction::Increasing,
        window,
        limit: probe.limit.clone(),
        exhaustive: false,
        comparison: probe.comparison.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::VerifyBudget;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn event_algebra_basics() {
        for (n, count) in [(1u32, 2usize), (2, 4), (3, 8)] {
            let a = EventAlgebra::new(n).unwrap();
            assert_eq!(a.event_count(), count);
        }
        let a = EventAlgebra::new(2).unwrap();
        assert_eq!(a.label(0), "{}");
        assert_eq!(a.label(3), "{1,2}");
        assert_eq!(a.carrier().unwrap().labels(), ["{}", "{1}", "{2}", "{1,2}"]);
        assert!(EventAlgebra::new(0).is_err());
        assert!(EventAlgebra::new(17).is_err());
        // Probe-scale algebras exist but cannot materialize carriers.
        let big = EventAlgebra::new(16).unwrap();
        assert!(matches!(big.carrier(), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn measure_relation_is_villegas_additive() {
        let a = EventAlgebra::new(2).unwrap();
        let rel = a.measure_relation(&[rat(1, 2), rat(1, 2)]).unwrap();
        let verdict = is_villegas_additive(&rel, &a).unwrap();
        assert!(verdict.holds, "violation: {:?}", verdict.violation);
    }

    #[test]
    fn full_relation_is_villegas_additive() {
        let a = EventAlgebra::new(2).unwrap();
        let rel = BinaryRelation::full(a.carrier().unwrap());
        assert!(is_villegas_additive(&rel, &a).unwrap().holds);
    }

    #[test]
    fn least_non_villegas_relation_witness_recheck() {
        // Oracle: an independent scan over the same universe with the two
        // clauses written out directly.
        let a = EventAlgebra::new(2).unwrap();
        let n = a.event_count();
        let total = relation_universe_size(n).unwrap();
        let naive_first = (0..total).find(|&mask| {
            let r = MaskRel::new(mask, n);
            let geq = |x: u32, y: u32| r.rel(x as usize, y as usize);
            for a1 in 0..4u32 {
                for a2 in 0..4u32 {
                    for b1 in 0..4u32 {
                        for b2 in 0..4u32 {
                            if a1 & a2 != 0 || b1 & b2 != 0 {
                                continue;
                            }
                            if !(geq(a1, b1) && geq(a2, b2)) {
                                continue;
                            }
                            if !geq(a1 | a2, b1 | b2) {
                                return true;
                            }
                            let s1 = geq(a1, b1) && !geq(b1, a1);
                            let s2 = geq(a2, b2) && !geq(b2, a2);
                            let su = geq(a1 | a2, b1 | b2) && !geq(b1 | b2, a1 | a2);
                            if (s1 || s2) && !su {
                                return true;
                            }
                        }
                    }
                }
            }
            false
        });
        let search_first =
            (0..total).find(|&mask| villegas_violation(&MaskRel::new(mask, n), 2).is_some());
        assert_eq!(naive_first, search_first);
        let mask = search_first.expect("some relation fails Villegas additivity");
        let violation = villegas_violation(&MaskRel::new(mask, n), 2).unwrap();
        // The returned quadruple re-checks as a violation of its clause.
        let r = MaskRel::new(mask, n);
        let geq = |x: u32, y: u32| r.rel(x as usize, y as usize);
        assert!(geq(violation.a1, violation.b1) && geq(violation.a2, violation.b2));
        match violation.clause {
            VillegasClause::Weak => {
                assert!(!geq(violation.a1 | violation.a2, violation.b1 | violation.b2))
            }
            VillegasClause::Strict => {
                let ua = violation.a1 | violation.a2;
                let ub = violation.b1 | violation.b2;
                assert!(!(geq(ua, ub) && !geq(ub, ua)));
            }
        }
    }

    #[test]
    fn degroot_exhaustive_one_atom() {
        let a = EventAlgebra::new(1).unwrap();
        let report = verify_degroot(&a, VerifyBudget::Exhaustive).unwrap();
        assert_eq!(report.checked, 16);
        assert!(report.passed());
    }

    #[test]
    fn degroot_sampled_three_atoms_small_budget() {
        let a = EventAlgebra::new(3).unwrap();
        let report = verify_degroot(
            &a,
            VerifyBudget::Sampled {
                samples: 2_000,
                seed: 9,
            },
        )
        .unwrap();
        assert_eq!(report.checked, 2_000);
        assert!(report.passed());
    }

    #[test]
    fn degroot_scan_merges() {
        let a = EventAlgebra::new(2).unwrap();
        let full = scan_degroot_exhaustive(&a, 0, 4096).unwrap();
        let mut merged = scan_degroot_exhaustive(&a, 0, 1000).unwrap();
        merged.merge(scan_degroot_exhaustive(&a, 1000, 4096).unwrap());
        assert_eq!(full.checked, merged.checked);
        assert_eq!(
            full.outcome.counterexample.is_some(),
            merged.outcome.counterexample.is_some()
        );
    }

    #[test]
    fn box_basics() {
        let bx = IntegerBox::new(alloc::vec![0, 0], alloc::vec![2, 2]).unwrap();
        assert_eq!(bx.point_count(), 9);
        let points = bx.points().unwrap();
        assert_eq!(points[0], [0, 0]);
        assert_eq!(points[1], [0, 1]);
        assert_eq!(points[8], [2, 2]);
        for (i, p) in points.iter().enumerate() {
            assert_eq!(bx.index_of(p), Some(i));
        }
        assert_eq!(bx.add(&[1, 1], &[1, 1]), Some(alloc::vec![2, 2]));
        assert_eq!(bx.add(&[2, 2], &[1, 0]), None);
        assert!(IntegerBox::new(alloc::vec![1], alloc::vec![0]).is_err());
    }

    #[test]
    fn neg_sup_inf_examples() {
        let bx = IntegerBox::new(alloc::vec![-5, -5], alloc::vec![5, 5]).unwrap();
        // Componentwise max and min are negation-dual.
        let s = alloc::vec![alloc::vec![0, 1], alloc::vec![1, 0]];
        assert_eq!(IntegerBox::sup(&s), [1, 1]);
        assert!(neg_sup_inf_lemma(&bx, &s).unwrap());
        // Singleton.
        assert!(neg_sup_inf_lemma(&bx, &[alloc::vec![3, -2]]).unwrap());
        // Bound violations error.
        assert!(neg_sup_inf_lemma(&bx, &[alloc::vec![6, 0]]).is_err());
        let asym = IntegerBox::new(alloc::vec![-1], alloc::vec![5]).unwrap();
        assert!(neg_sup_inf_lemma(&asym, &[alloc::vec![4]]).is_err());
        assert!(neg_sup_inf_lemma(&bx, &[]).is_err());
    }

    #[test]
    fn primed_axioms_hold_on_exhaustive_probe() {
        // Utility u(x) = x1 + x2; decreasing chain attaining its inf.
        let bx = IntegerBox::new(alloc::vec![0, 0], alloc::vec![2, 2]).unwrap();
        let oracle = RelOracle::Weights(alloc::vec![rat(1, 1), rat(1, 1)]);
        let probe = ChainProbe {
            direction: Direction::Decreasing,
            window: alloc::vec![alloc::vec![2, 2], alloc::vec![1, 1], alloc::vec![0, 0]],
            limit: alloc::vec![0, 0],
            exhaustive: true,
            comparison: alloc::vec![0, 0],
        };
        let report = check_primed_axioms(&bx, &oracle, &[probe]).unwrap();
        assert_eq!(
            report.verdict(AxiomId::C1Prime),
            Some(&AxiomVerdict::HoldsOnProbes { engaged: 1 })
        );
        assert_eq!(
            report.verdict(AxiomId::C2Prime),
            Some(&AxiomVerdict::Vacuous)
        );
        assert!(!report.any_violation());
    }

    #[test]
    fn malformed_probes_report_their_defect() {
        let bx = IntegerBox::new(alloc::vec![0], alloc::vec![3]).unwrap();
        let oracle = RelOracle::Weights(alloc::vec![rat(1, 1)]);
        // Not monotone.
        let probe = ChainProbe {
            direction: Direction::Increasing,
            window: alloc::vec![alloc::vec![1], alloc::vec![0]],
            limit: alloc::vec![3],
            exhaustive: false,
            comparison: alloc::vec![2],
        };
        match check_primed_axioms(&bx, &oracle, &[probe]).unwrap_err() {
            Error::MalformedProbe { probe: 0, defect } => {
                assert!(defect.contains("monotone"), "{defect}")
            }
            other => panic!("unexpected {other:?}"),
        }
        // Exhaustive but limit not attained.
        let probe = ChainProbe {
            direction: Direction::Increasing,
            window: alloc::vec![alloc::vec![0], alloc::vec![1]],
            limit: alloc::vec![3],
            exhaustive: true,
            comparison: alloc::vec![2],
        };
        assert!(matches!(
            check_primed_axioms(&bx, &oracle, &[probe]),
            Err(Error::MalformedProbe { .. })
        ));
    }

    #[test]
    fn non_exhaustive_c2_violation() {
        // A valuation that is only finitely additive in spirit: B ≽ each
        // small A_i but B ≺ the declared union Ω.
        let algebra = EventAlgebra::new(16).unwrap();
        let omega = algebra.universe();
        let b = 1u32 << 3;
        let window = alloc::vec![0b1, 0b11, 0b111];
        let mut pairs: BTreeSet<(u32, u32)> = BTreeSet::new();
        for &a in &window {
            pairs.insert((b, a));
        }
        pairs.insert((omega, b));
        let probe = EventProbe::Chain(ChainProbe {
            direction: Direction::Increasing,
            window,
            limit: omega,
            exhaustive: false,
            comparison: b,
        });
        let report = check_set_axioms(&algebra, &RelOracle::Pairs(pairs), &[probe]).unwrap();
        match report.verdict(AxiomId::C2) {
            Some(AxiomVerdict::Violated(v)) => {
                assert_eq!(v.probe, 0);
            }
            other => panic!("expected C2 violation, got {other:?}"),
        }
    }

    #[test]
    fn c3_violation_yields_c2_subprobe_violation() {
        // Increasing window with y ≽ every listed element yet y ≺ limit:
        // C3 (cofinal reading) is violated; the extracted sub-probe
        // violates C2 by construction.
        let algebra = EventAlgebra::new(16).unwrap();
        let omega = algebra.universe();
        let y = 1u32 << 5;
        let window = alloc::vec![0b1, 0b11];
        let mut pairs: BTreeSet<(u32, u32)> = BTreeSet::new();
        for &a in &window {
            pairs.insert((y, a));
        }
        pairs.insert((omega, y));
        let oracle = RelOracle::Pairs(pairs);
        let probe = ChainProbe {
            direction: Direction::Increasing,
            window,
            limit: omega,
            exhaustive: false,
            comparison: y,
        };
        let report =
            check_set_axioms(&algebra, &oracle, &[EventProbe::Chain(probe.clone())]).unwrap();
        assert!(matches!(
            report.verdict(AxiomId::C3),
            Some(AxiomVerdict::Violated(_))
        ));
        let subprobe =
            c3_violation_to_c2_subprobe(&probe, |a, b| algebra.oracle_geq(&oracle, *a, *b))
                .unwrap();
        assert_eq!(subprobe.window.len(), 2);
        let report = check_set_axioms(&algebra, &oracle, &[EventProbe::Chain(subprobe)]).unwrap();
        assert!(matches!(
            report.verdict(AxiomId::C2),
            Some(AxiomVerdict::Violated(_))
        ));
    }

    #[test]
    fn measure_chain_with_failed_hypothesis_is_vacuous() {
        // Weights (1/4, 1/4, 1/2), decreasing chain Ω ⊇ {1,2} ⊇ {1} ⊇ ∅,
        // comparison B = {3}: the hypothesis A_i ≽ B fails at {1}, so the
        // C1 implication is vacuously true on this probe.
        let algebra = EventAlgebra::new(3).unwrap();
        let weights = alloc::vec![rat(1, 4), rat(1, 4), rat(1, 2)];
        let oracle = RelOracle::Weights(weights.clone());
        let b = 0b100;
        assert!(algebra.event_value(&weights, 0b001) < algebra.event_value(&weights, b));
        let probe = EventProbe::Chain(ChainProbe {
            direction: Direction::Decreasing,
            window: alloc::vec![0b111, 0b011, 0b001, 0b000],
            limit: 0b000,
            exhaustive: true,
            comparison: b,
        });
        let report = check_set_axioms(&algebra, &oracle, &[probe]).unwrap();
        assert_eq!(report.verdict(AxiomId::C1), Some(&AxiomVerdict::Vacuous));
    }

    #[test]
    fn c4_measure_example() {
        // Weights (1/4, 1/4, 1/2), F = {3} ≻ G = {1}; worst-case
        // alterations flip F and G inside each A_i. The early alterations
        // can break the ranking, the final one (inside ∅) cannot.
        let algebra = EventAlgebra::new(3).unwrap();
        let oracle = RelOracle::Weights(alloc::vec![rat(1, 4), rat(1, 4), rat(1, 2)]);
        let f = 0b100;
        let g = 0b001;
        let window = alloc::vec![0b011, 0b010, 0b000];
        let alterations = alloc::vec![
            Alteration {
                index: 0,
                f_alt: f & !0b011,
                g_alt: g | 0b011,
            },
            Alteration {
                index: 1,
                f_alt: f & !0b010,
                g_alt: g | 0b010,
            },
            Alteration {
                index: 2,
                f_alt: f,
                g_alt: g,
            },
        ];
        let probe = AlterationProbe {
            window,
            exhaustive: true,
            f,
            g,
            alterations,
        };
        let report =
            check_set_axioms(&algebra, &oracle, &[EventProbe::Alteration(probe.clone())])
                .unwrap();
        assert_eq!(
            report.verdict(AxiomId::C4),
            Some(&AxiomVerdict::HoldsOnProbes { engaged: 1 })
        );
        // Stabilization from position 2 on: alterations 0 and 1 destroy the
        // strict ranking (both sides end at weight 1/2).
        assert_eq!(
            c4_stabilization_index(&probe, &algebra, &oracle).unwrap(),
            Some(2)
        );
    }

    #[test]
    fn c4_alteration_mismatch_is_malformed() {
        let algebra = EventAlgebra::new(3).unwrap();
        let oracle = RelOracle::Weights(alloc::vec![rat(1, 4), rat(1, 4), rat(1, 2)]);
        let probe = AlterationProbe {
            window: alloc::vec![0b010, 0b000],
            exhaustive: true,
            f: 0b100,
            g: 0b001,
            alterations: alloc::vec![Alteration {
                index: 1,
                // Changes F on atom 1, which is outside A_1 = ∅.
                f_alt: 0b101,
                g_alt: 0b001,
            }],
        };
        match check_set_axioms(&algebra, &oracle, &[EventProbe::Alteration(probe)]) {
            Err(Error::MalformedProbe { defect, .. }) => {
                assert!(defect.contains("changes F outside"), "{defect}")
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn c4_violated_when_last_alteration_breaks_ranking() {
        let algebra = EventAlgebra::new(3).unwrap();
        let oracle = RelOracle::Weights(alloc::vec![rat(1, 4), rat(1, 4), rat(1, 2)]);
        let probe = AlterationProbe {
            window: alloc::vec![0b011, 0b010],
            exhaustive: false,
            f: 0b100,
            g: 0b001,
            alterations: alloc::vec![Alteration {
                index: 1,
                f_alt: 0b100,
                g_alt: 0b011,
            }],
        };
        let report =
            check_set_axioms(&algebra, &oracle, &[EventProbe::Alteration(probe.clone())])
                .unwrap();
        assert!(matches!(
            report.verdict(AxiomId::C4),
            Some(AxiomVerdict::Violated(_))
        ));
        assert_eq!(
            c4_stabilization_index(&probe, &algebra, &oracle).unwrap(),
            None
        );
    }
}
