//! Finite binary relations: representation, derived parts, sections, the
//! standard relation axioms with minimal witnesses, and continuity against a
//! finite topology.
//!
//! A relation is stored extensionally as an n x n boolean incidence matrix
//! over a [`Carrier`] of labelled elements, so every axiom check is an
//! exhaustive scan with O(1) membership. Witness tuples are always the
//! lexicographically least in carrier index order, which keeps reports
//! deterministic no matter how a scan is scheduled.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::topology::FiniteTopology;

/// Default size cap for exhaustive property checks.
pub const PROPERTY_CHECK_CAP: usize = 16;

/// An ordered list of distinct element labels. The index order is fixed at
/// construction and used for all tie-breaking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Carrier {
    labels: Vec<String>,
}

impl Carrier {
    /// Builds a carrier from labels, rejecting duplicates.
    ///
    /// Empty carriers are representable: they arise internally as subspaces
    /// (e.g. the punctured square of a one-point space). Input validation for
    /// user-supplied carriers lives in the CLI layer, which requires at least
    /// one element.
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Carrier { labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Short description used in mismatch errors.
    pub fn describe(&self) -> String {
        format!("carrier of {} elements", self.len())
    }
}

/// Read-only view of a relation, shared by the extensional matrix type and
/// the packed bit-mask relations used by enumeration kernels.
pub trait RelView {
    fn size(&self) -> usize;
    /// Whether element `i` is related to element `j` (`i` ≽ `j`).
    fn rel(&self, i: usize, j: usize) -> bool;
}

/// An extensional binary relation on a finite carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryRelation {
    carrier: Carrier,
    bits: Vec<bool>,
}

impl RelView for BinaryRelation {
    fn size(&self) -> usize {
        self.carrier.len()
    }

    fn rel(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.carrier.len() + j]
    }
}

impl BinaryRelation {
    pub fn empty(carrier: Carrier) -> Self {
        let n = carrier.len();
        BinaryRelation {
            carrier,
            bits: alloc::vec![false; n * n],
        }
    }

    pub fn full(carrier: Carrier) -> Self {
        let n = carrier.len();
        BinaryRelation {
            carrier,
            bits: alloc::vec![true; n * n],
        }
    }

    pub fn identity(carrier: Carrier) -> Self {
        let mut r = Self::empty(carrier);
        for i in 0..r.carrier.len() {
            r.set(i, i, true);
        }
        r
    }

    /// Builds the relation from (lhs, rhs) label pairs, lhs ≽ rhs.
    pub fn from_pairs<'a, I>(carrier: Carrier, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut r = Self::empty(carrier);
        for (a, b) in pairs {
            let i = r.carrier.require(a)?;
            let j = r.carrier.require(b)?;
            r.set(i, j, true);
        }
        Ok(r)
    }

    pub fn from_fn(carrier: Carrier, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let n = carrier.len();
        let mut bits = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                bits.push(f(i, j));
            }
        }
        BinaryRelation { carrier, bits }
    }

    /// Materializes any [`RelView`] over the given carrier.
    pub fn from_view<R: RelView>(carrier: Carrier, view: &R) -> Self {
        debug_assert_eq!(carrier.len(), view.size());
        Self::from_fn(carrier, |i, j| view.rel(i, j))
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn holds(&self, i: usize, j: usize) -> bool {
        self.rel(i, j)
    }

    pub fn holds_labels(&self, a: &str, b: &str) -> Result<bool> {
        Ok(self.rel(self.carrier.require(a)?, self.carrier.require(b)?))
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        let n = self.carrier.len();
        self.bits[i * n + j] = value;
    }

    pub fn with_reflexive_closure(mut self) -> Self {
        for i in 0..self.carrier.len() {
            self.set(i, i, true);
        }
        self
    }

    /// Strict part: x ≻ y iff x ≽ y and not y ≽ x.
    pub fn asymmetric_part(&self) -> Self {
        Self::from_fn(self.carrier.clone(), |i, j| {
            self.rel(i, j) && !self.rel(j, i)
        })
    }

    /// Indifference part: x ∼ y iff x ≽ y and y ≽ x.
    pub fn symmetric_part(&self) -> Self {
        Self::from_fn(self.carrier.clone(), |i, j| {
            self.rel(i, j) && self.rel(j, i)
        })
    }

    /// The transpose relation.
    pub fn inverse(&self) -> Self {
        Self::from_fn(self.carrier.clone(), |i, j| self.rel(j, i))
    }

    /// Weak upper section {y : y ≽ x}, the elements above x.
    pub fn upper_section(&self, x: usize) -> BTreeSet<usize> {
        (0..self.size()).filter(|&y| self.rel(y, x)).collect()
    }

    /// Weak lower section {y : y ≼ x}, i.e. {y : x ≽ y}.
    pub fn lower_section(&self, x: usize) -> BTreeSet<usize> {
        (0..self.size()).filter(|&y| self.rel(x, y)).collect()
    }

    /// Strict upper section {y : y ≻ x}.
    pub fn strict_upper_section(&self, x: usize) -> BTreeSet<usize> {
        (0..self.size())
            .filter(|&y| self.rel(y, x) && !self.rel(x, y))
            .collect()
    }

    /// Strict lower section {y : y ≺ x}, i.e. {y : x ≻ y}.
    pub fn strict_lower_section(&self, x: usize) -> BTreeSet<usize> {
        (0..self.size())
            .filter(|&y| self.rel(x, y) && !self.rel(y, x))
            .collect()
    }

    pub fn upper_section_of(&self, label: &str) -> Result<BTreeSet<usize>> {
        Ok(self.upper_section(self.carrier.require(label)?))
    }

    pub fn lower_section_of(&self, label: &str) -> Result<BTreeSet<usize>> {
        Ok(self.lower_section(self.carrier.require(label)?))
    }

    pub fn labels_of(&self, set: &BTreeSet<usize>) -> Vec<String> {
        set.iter().map(|&i| self.carrier.label(i).to_string()).collect()
    }
}

/// Verdict for a universally quantified relation property: either it holds,
/// or the lexicographically least violating tuple is reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails { witness: Vec<usize> },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&[usize]> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails { witness } => Some(witness),
        }
    }

    fn from_opt<const K: usize>(violation: Option<[usize; K]>) -> Self {
        match violation {
            None => Verdict::Holds,
            Some(w) => Verdict::Fails { witness: w.to_vec() },
        }
    }
}

/// One flag per relation axiom, with a minimal witness for each failure.
///
/// `non_trivial` is existential, so a failure carries no finite witness
/// tuple; instead `strict_pair` holds the least witnessing strict pair when
/// the relation is non-trivial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub reflexive: Verdict,
    pub complete: Verdict,
    pub non_trivial: bool,
    /// Least (x, y) with x ≻ y, present exactly when `non_trivial`.
    pub strict_pair: Option<(usize, usize)>,
    pub transitive: Verdict,
    pub semi_transitive: Verdict,
    pub anti_symmetric: Verdict,
}

impl PropertyReport {
    /// Anti-symmetric, complete and transitive: a linear order.
    pub fn is_linear_order(&self) -> bool {
        self.anti_symmetric.holds() && self.complete.holds() && self.transitive.holds()
    }

    /// Non-trivial, complete and transitive: a weak order modulo continuity.
    pub fn is_weak_order_base(&self) -> bool {
        self.non_trivial && self.complete.holds() && self.transitive.holds()
    }
}

/// Least x with not x ≽ x.
pub fn reflexive_violation<R: RelView>(r: &R) -> Option<[usize; 1]> {
    (0..r.size()).find(|&x| !r.rel(x, x)).map(|x| [x])
}

/// Least (x, y) with neither x ≽ y nor y ≽ x.
pub fn complete_violation<R: RelView>(r: &R) -> Option<[usize; 2]> {
    let n = r.size();
    for x in 0..n {
        for y in 0..n {
            if !r.rel(x, y) && !r.rel(y, x) {
                return Some([x, y]);
            }
        }
    }
    None
}

/// Least (x, y) with x ≻ y, if any.
pub fn strict_pair<R: RelView>(r: &R) -> Option<(usize, usize)> {
    let n = r.size();
    for x in 0..n {
        for y in 0..n {
            if r.rel(x, y) && !r.rel(y, x) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Least (x, y, z) with x ≽ y ≽ z but not x ≽ z.
pub fn transitive_violation<R: RelView>(r: &R) -> Option<[usize; 3]> {
    let n = r.size();
    for x in 0..n {
        for y in 0..n {
            if !r.rel(x, y) {
                continue;
            }
            for z in 0..n {
                if r.rel(y, z) && !r.rel(x, z) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

/// Least (x, y, z) violating x ≻ y ∼ z ⟹ x ≻ z or x ∼ y ≻ z ⟹ x ≻ z.
pub fn semi_transitive_violation<R: RelView>(r: &R) -> Option<[usize; 3]> {
    let n = r.size();
    let strict = |a: usize, b: usize| r.rel(a, b) && !r.rel(b, a);
    let indiff = |a: usize, b: usize| r.rel(a, b) && r.rel(b, a);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if strict(x, y) && indiff(y, z) && !strict(x, z) {
                    return Some([x, y, z]);
                }
                if indiff(x, y) && strict(y, z) && !strict(x, z) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

/// Least (x, y) with x ≽ y, y ≽ x and x ≠ y.
pub fn antisymmetric_violation<R: RelView>(r: &R) -> Option<[usize; 2]> {
    let n = r.size();
    for x in 0..n {
        for y in 0..n {
            if x != y && r.rel(x, y) && r.rel(y, x) {
                return Some([x, y]);
            }
        }
    }
    None
}

/// Evaluates every relation axiom by exhaustion. Errors beyond the default
/// size cap rather than running silently slow; use
/// [`check_properties_with_cap`] to raise it.
pub fn check_properties(rel: &BinaryRelation) -> Result<PropertyReport> {
    check_properties_with_cap(rel, PROPERTY_CHECK_CAP)
}

pub fn check_properties_with_cap(rel: &BinaryRelation, cap: usize) -> Result<PropertyReport> {
    let n = rel.size();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "property check carrier",
            size: n,
            cap,
        });
    }
    let sp = strict_pair(rel);
    Ok(PropertyReport {
        reflexive: Verdict::from_opt(reflexive_violation(rel)),
        complete: Verdict::from_opt(complete_violation(rel)),
        non_trivial: sp.is_some(),
        strict_pair: sp,
        transitive: Verdict::from_opt(transitive_violation(rel)),
        semi_transitive: Verdict::from_opt(semi_transitive_violation(rel)),
        anti_symmetric: Verdict::from_opt(antisymmetric_violation(rel)),
    })
}

/// Which section of which element breaks continuity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SectionKind {
    WeakUpper,
    WeakLower,
    StrictUpper,
    StrictLower,
}

impl SectionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SectionKind::WeakUpper => "weak upper",
            SectionKind::WeakLower => "weak lower",
            SectionKind::StrictUpper => "strict upper",
            SectionKind::StrictLower => "strict lower",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuityViolation {
    pub element: usize,
    pub kind: SectionKind,
    pub section: BTreeSet<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuityReport {
    pub continuous: bool,
    /// First violation in carrier order, sections checked weak-upper,
    /// weak-lower, strict-upper, strict-lower at each element.
    pub violation: Option<ContinuityViolation>,
}

/// Decides continuity of a relation against a topology on the same carrier:
/// both weak sections must be closed and both strict sections open at every
/// element.
pub fn is_continuous(rel: &BinaryRelation, top: &FiniteTopology) -> Result<ContinuityReport> {
    if rel.carrier() != top.carrier() {
        return Err(Error::CarrierMismatch {
            left: rel.carrier().describe(),
            right: top.carrier().describe(),
        });
    }
    for x in 0..rel.size() {
        let checks = [
            (SectionKind::WeakUpper, rel.upper_section(x), true),
            (SectionKind::WeakLower, rel.lower_section(x), true),
            (SectionKind::StrictUpper, rel.strict_upper_section(x), false),
            (SectionKind::StrictLower, rel.strict_lower_section(x), false),
        ];
        for (kind, section, want_closed) in checks {
            let ok = if want_closed {
                top.is_closed(&section)
            } else {
                top.is_open(&section)
            };
            if !ok {
                return Ok(ContinuityReport {
                    continuous: false,
                    violation: Some(ContinuityViolation {
                        element: x,
                        kind,
                        section,
                    }),
                });
            }
        }
    }
    Ok(ContinuityReport {
        continuous: true,
        violation: None,
    })
}
