//! Finite topological spaces stored as minimal-neighborhood maps.
//!
//! Every finite topology is Alexandrov, so the map sending each point to the
//! smallest open set containing it determines the whole space; the two
//! characterizing conditions are `x ∈ U(x)` and `y ∈ U(x) ⟹ U(y) ⊆ U(x)`.
//! Construction validates these (or, for an open family, validates closure
//! under union and intersection), after which the operations here are total.
//!
//! Empty and singleton spaces count as connected. The convention makes the
//! connectivity predicates total; reports that depend on it say so.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::relation::{BinaryRelation, Carrier};

/// Cap on product carriers; the punctured square of a 12-point space is the
/// largest object desk-scale work needs.
pub const PRODUCT_CAP: usize = 144;

/// Cap on carriers for full open-family enumeration (2^n subsets scanned).
pub const OPEN_FAMILY_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteTopology {
    carrier: Carrier,
    min_nbhd: Vec<BTreeSet<usize>>,
}

/// The blocks of a space's decomposition into maximal connected subsets,
/// pairwise disjoint, covering the carrier, ordered by least member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    pub blocks: Vec<BTreeSet<usize>>,
}

impl ComponentPartition {
    pub fn count(&self) -> usize {
        self.blocks.len()
    }
}

impl FiniteTopology {
    pub fn discrete(carrier: Carrier) -> Self {
        let min_nbhd = (0..carrier.len()).map(|x| BTreeSet::from([x])).collect();
        FiniteTopology { carrier, min_nbhd }
    }

    pub fn indiscrete(carrier: Carrier) -> Self {
        let all: BTreeSet<usize> = (0..carrier.len()).collect();
        let min_nbhd = (0..carrier.len()).map(|_| all.clone()).collect();
        FiniteTopology { carrier, min_nbhd }
    }

    /// The two-point space whose opens are ∅, {first element}, X.
    pub fn sierpinski(carrier: Carrier) -> Self {
        assert_eq!(carrier.len(), 2, "sierpinski space has two points");
        FiniteTopology {
            carrier,
            min_nbhd: alloc::vec![BTreeSet::from([0]), BTreeSet::from([0, 1])],
        }
    }

    /// Builds from a minimal-neighborhood map, validating the two
    /// characterizing conditions.
    pub fn from_min_nbhds(carrier: Carrier, min_nbhd: Vec<BTreeSet<usize>>) -> Result<Self> {
        let n = carrier.len();
        if min_nbhd.len() != n {
            return Err(Error::InvalidMinNbhd {
                reason: format!("map covers {} of {} elements", min_nbhd.len(), n),
            });
        }
        for (x, u) in min_nbhd.iter().enumerate() {
            if let Some(&y) = u.iter().find(|&&y| y >= n) {
                return Err(Error::InvalidMinNbhd {
                    reason: format!("neighborhood of `{}` mentions index {y} out of range", carrier.label(x)),
                });
            }
            if !u.contains(&x) {
                return Err(Error::InvalidMinNbhd {
                    reason: format!("`{}` is not in its own minimal neighborhood", carrier.label(x)),
                });
            }
        }
        for (x, u) in min_nbhd.iter().enumerate() {
            for &y in u {
                if !min_nbhd[y].is_subset(u) {
                    return Err(Error::InvalidMinNbhd {
                        reason: format!(
                            "`{}` lies in the neighborhood of `{}` but its own neighborhood is not contained in it",
                            carrier.label(y),
                            carrier.label(x)
                        ),
                    });
                }
            }
        }
        Ok(FiniteTopology { carrier, min_nbhd })
    }

    /// Builds from a full open-set family: verifies ∅ and X membership and
    /// closure under pairwise union and intersection (which, on a finite
    /// carrier, is closure under arbitrary unions and finite intersections),
    /// then derives minimal neighborhoods.
    pub fn from_open_family(carrier: Carrier, opens: &[BTreeSet<usize>]) -> Result<Self> {
        let n = carrier.len();
        let full: BTreeSet<usize> = (0..n).collect();
        let family: BTreeSet<BTreeSet<usize>> = opens.iter().cloned().collect();
        let describe = |s: &BTreeSet<usize>| -> String {
            let labels: Vec<&str> = s.iter().map(|&i| carrier.label(i)).collect();
            format!("{{{}}}", labels.join(", "))
        };
        for s in &family {
            if let Some(&i) = s.iter().find(|&&i| i >= n) {
                return Err(Error::InvalidOpenFamily {
                    reason: format!("open set mentions index {i} out of range"),
                });
            }
        }
        if !family.contains(&BTreeSet::new()) {
            return Err(Error::InvalidOpenFamily {
                reason: "the empty set is missing".to_string(),
            });
        }
        if !family.contains(&full) {
            return Err(Error::InvalidOpenFamily {
                reason: "the whole carrier is missing".to_string(),
            });
        }
        for a in &family {
            for b in &family {
                let union: BTreeSet<usize> = a.union(b).copied().collect();
                if !family.contains(&union) {
                    return Err(Error::InvalidOpenFamily {
                        reason: format!(
                            "{} ∪ {} = {} missing",
                            describe(a),
                            describe(b),
                            describe(&union)
                        ),
                    });
                }
                let inter: BTreeSet<usize> = a.intersection(b).copied().collect();
                if !family.contains(&inter) {
                    return Err(Error::InvalidOpenFamily {
                        reason: format!(
                            "{} ∩ {} = {} missing",
                            describe(a),
                            describe(b),
                            describe(&inter)
                        ),
                    });
                }
            }
        }
        // Minimal neighborhood: intersection of all opens containing x.
        let min_nbhd: Vec<BTreeSet<usize>> = (0..n)
            .map(|x| {
                family
                    .iter()
                    .filter(|s| s.contains(&x))
                    .fold(full.clone(), |acc, s| {
                        acc.intersection(s).copied().collect()
                    })
            })
            .collect();
        Self::from_min_nbhds(carrier, min_nbhd)
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn min_nbhd(&self, x: usize) -> &BTreeSet<usize> {
        &self.min_nbhd[x]
    }

    /// A set is open iff it contains the minimal neighborhood of each of its
    /// points.
    pub fn is_open(&self, s: &BTreeSet<usize>) -> bool {
        s.iter().all(|&x| self.min_nbhd[x].is_subset(s))
    }

    pub fn is_closed(&self, s: &BTreeSet<usize>) -> bool {
        let complement: BTreeSet<usize> = (0..self.len()).filter(|x| !s.contains(x)).collect();
        self.is_open(&complement)
    }

    /// Smallest closed superset: the points whose every neighborhood meets
    /// `s`, which for minimal neighborhoods is `{y : U(y) ∩ s ≠ ∅}`.
    pub fn closure(&self, s: &BTreeSet<usize>) -> BTreeSet<usize> {
        (0..self.len())
            .filter(|&y| self.min_nbhd[y].iter().any(|x| s.contains(x)))
            .collect()
    }

    /// Enumerates the full open family. Exponential in the carrier size, so
    /// capped; meant for small spaces and cross-checks.
    pub fn open_sets(&self) -> Result<Vec<BTreeSet<usize>>> {
        let n = self.len();
        if n > OPEN_FAMILY_CAP {
            return Err(Error::CapExceeded {
                what: "open family enumeration",
                size: n,
                cap: OPEN_FAMILY_CAP,
            });
        }
        let mut out = Vec::new();
        for mask in 0u32..(1u32 << n) {
            let s: BTreeSet<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if self.is_open(&s) {
                out.push(s);
            }
        }
        Ok(out)
    }

    /// Components of the comparability graph: x and y are adjacent iff one
    /// lies in the other's minimal neighborhood. On finite spaces this
    /// agrees with the clopen-separation notion of connected component.
    pub fn components(&self) -> ComponentPartition {
        let n = self.len();
        let mut assigned = alloc::vec![usize::MAX; n];
        let mut blocks: Vec<BTreeSet<usize>> = Vec::new();
        for start in 0..n {
            if assigned[start] != usize::MAX {
                continue;
            }
            let id = blocks.len();
            let mut block = BTreeSet::new();
            let mut stack = alloc::vec![start];
            assigned[start] = id;
            while let Some(x) = stack.pop() {
                block.insert(x);
                for y in 0..n {
                    if assigned[y] == usize::MAX
                        && (self.min_nbhd[x].contains(&y) || self.min_nbhd[y].contains(&x))
                    {
                        assigned[y] = id;
                        stack.push(y);
                    }
                }
            }
            blocks.push(block);
        }
        ComponentPartition { blocks }
    }

    /// Empty and singleton spaces are connected by convention.
    pub fn is_connected(&self) -> bool {
        self.components().count() <= 1
    }

    /// At most k components.
    pub fn is_k_connected(&self, k: usize) -> Result<bool> {
        if k < 1 {
            return Err(Error::InvalidArgument("k must be at least 1".to_string()));
        }
        Ok(self.components().count() <= k)
    }

    /// Every open neighborhood of x contains a connected open set containing
    /// x. Since U(x) is contained in every open neighborhood of x and any
    /// open subset of U(x) containing x equals U(x), this holds iff every
    /// minimal neighborhood is connected.
    pub fn is_locally_connected(&self) -> bool {
        (0..self.len()).all(|x| self.subspace(&self.min_nbhd[x]).is_connected())
    }

    /// Product space on ordered pairs, with `U((x, y)) = U(x) × U(y)` and
    /// pair labels `(x,y)` in row-major order.
    pub fn product(&self, other: &FiniteTopology) -> Result<FiniteTopology> {
        let n = self.len();
        let m = other.len();
        if n.saturating_mul(m) > PRODUCT_CAP {
            return Err(Error::CapExceeded {
                what: "product carrier",
                size: n * m,
                cap: PRODUCT_CAP,
            });
        }
        let mut labels = Vec::with_capacity(n * m);
        for i in 0..n {
            for j in 0..m {
                labels.push(format!("({},{})", self.carrier.label(i), other.carrier.label(j)));
            }
        }
        let carrier = Carrier::new(labels)?;
        let mut min_nbhd = Vec::with_capacity(n * m);
        for i in 0..n {
            for j in 0..m {
                let mut u = BTreeSet::new();
                for &a in &self.min_nbhd[i] {
                    for &b in &other.min_nbhd[j] {
                        u.insert(a * m + b);
                    }
                }
                min_nbhd.push(u);
            }
        }
        Ok(FiniteTopology { carrier, min_nbhd })
    }

    /// Subspace on `s` with the trace neighborhoods `U(x) ∩ s`, keeping the
    /// original labels in their original order.
    pub fn subspace(&self, s: &BTreeSet<usize>) -> FiniteTopology {
        let members: Vec<usize> = s.iter().copied().collect();
        let carrier = Carrier::new(
            members
                .iter()
                .map(|&i| self.carrier.label(i).to_string()),
        )
        .expect("subset of distinct labels");
        let reindex = |set: &BTreeSet<usize>| -> BTreeSet<usize> {
            members
                .iter()
                .enumerate()
                .filter(|(_, &orig)| set.contains(&orig))
                .map(|(new, _)| new)
                .collect()
        };
        let min_nbhd = members.iter().map(|&x| reindex(&self.min_nbhd[x])).collect();
        FiniteTopology { carrier, min_nbhd }
    }

    /// The square of the space with the diagonal deleted.
    pub fn punctured_square(&self) -> Result<FiniteTopology> {
        let square = self.product(self)?;
        let n = self.len();
        let off_diagonal: BTreeSet<usize> = (0..n * n).filter(|p| p / n != p % n).collect();
        Ok(square.subspace(&off_diagonal))
    }

    /// Quotient by a validated equivalence relation: a set of classes is
    /// open iff the union of its classes is open here.
    pub fn quotient(&self, eq: &BinaryRelation) -> Result<FiniteTopology> {
        if eq.carrier() != self.carrier() {
            return Err(Error::CarrierMismatch {
                left: eq.carrier().describe(),
                right: self.carrier().describe(),
            });
        }
        let partition = Partition::from_equivalence(eq)?;
        self.quotient_by(&partition)
    }

    /// Quotient by an explicit partition of the carrier.
    ///
    /// The minimal neighborhood of a class is computed as the least
    /// saturated open superset of the class: alternately close under
    /// minimal neighborhoods and saturate by classes until the set is fixed.
    pub fn quotient_by(&self, partition: &Partition) -> Result<FiniteTopology> {
        if partition.len() != self.len() {
            return Err(Error::InvalidArgument(format!(
                "partition covers {} of {} elements",
                partition.len(),
                self.len()
            )));
        }
        let carrier = partition.class_carrier(&self.carrier)?;
        let mut min_nbhd = Vec::with_capacity(partition.class_count());
        for block in partition.blocks() {
            let mut saturated: BTreeSet<usize> = block.clone();
            loop {
                let mut grown: BTreeSet<usize> = saturated.clone();
                for &x in &saturated {
                    grown.extend(self.min_nbhd[x].iter().copied());
                }
                let classes: BTreeSet<usize> = grown.iter().map(|&x| partition.class_of(x)).collect();
                for c in &classes {
                    grown.extend(partition.blocks()[*c].iter().copied());
                }
                if grown == saturated {
                    break;
                }
                saturated = grown;
            }
            let classes: BTreeSet<usize> = saturated.iter().map(|&x| partition.class_of(x)).collect();
            min_nbhd.push(classes);
        }
        FiniteTopology::from_min_nbhds(carrier, min_nbhd)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Carrier {
        Carrier::new(["a", "b"]).unwrap()
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn sierpinski_from_open_family() {
        let top = FiniteTopology::from_open_family(
            ab(),
            &[BTreeSet::new(), set(&[0]), set(&[0, 1])],
        )
        .unwrap();
        assert_eq!(top.min_nbhd(0), &set(&[0]));
        assert_eq!(top.min_nbhd(1), &set(&[0, 1]));
        assert_eq!(top, FiniteTopology::sierpinski(ab()));
    }

    #[test]
    fn indiscrete_from_open_family() {
        let top =
            FiniteTopology::from_open_family(ab(), &[BTreeSet::new(), set(&[0, 1])]).unwrap();
        assert_eq!(top, FiniteTopology::indiscrete(ab()));
    }

    #[test]
    fn union_closure_violation_reports_offending_pair() {
        let err = FiniteTopology::from_open_family(
            ab(),
            &[BTreeSet::new(), set(&[0]), set(&[1])],
        )
        .unwrap_err();
        match err {
            Error::InvalidOpenFamily { reason } => {
                assert!(reason.contains("missing"), "{reason}");
                assert!(reason.contains("∪") || reason.contains("whole carrier"), "{reason}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn min_nbhd_validation() {
        // b's neighborhood does not contain b.
        assert!(matches!(
            FiniteTopology::from_min_nbhds(ab(), alloc::vec![set(&[0]), set(&[0])]),
            Err(Error::InvalidMinNbhd { .. })
        ));
        // a in U(b) but U(a) ⊄ U(b).
        let c3 = Carrier::new(["a", "b", "c"]).unwrap();
        assert!(matches!(
            FiniteTopology::from_min_nbhds(
                c3,
                alloc::vec![set(&[0, 2]), set(&[0, 1]), set(&[2])]
            ),
            Err(Error::InvalidMinNbhd { .. })
        ));
    }

    #[test]
    fn closure_examples() {
        let sierpinski = FiniteTopology::sierpinski(ab());
        // Complement of the largest open set avoiding a is the whole space.
        assert_eq!(sierpinski.closure(&set(&[0])), set(&[0, 1]));
        assert_eq!(sierpinski.closure(&BTreeSet::new()), BTreeSet::new());
        let discrete = FiniteTopology::discrete(ab());
        assert!(discrete.is_closed(&set(&[0])));
    }

    #[test]
    fn components_and_k_connectedness() {
        let c3 = Carrier::new(["a", "b", "c"]).unwrap();
        let discrete = FiniteTopology::discrete(c3);
        assert_eq!(discrete.components().count(), 3);
        assert!(discrete.is_k_connected(3).unwrap());
        assert!(!discrete.is_k_connected(2).unwrap());
        assert!(discrete.is_k_connected(1).is_ok());
        assert!(discrete.is_k_connected(0).is_err());

        // a and b cannot be separated by clopen sets.
        let sierpinski = FiniteTopology::sierpinski(ab());
        assert_eq!(sierpinski.components().count(), 1);

        // Disjoint clopen union of two sierpinski copies.
        let c4 = Carrier::new(["a", "b", "c", "d"]).unwrap();
        let two_copies = FiniteTopology::from_min_nbhds(
            c4,
            alloc::vec![set(&[0]), set(&[0, 1]), set(&[2]), set(&[2, 3])],
        )
        .unwrap();
        let components = two_copies.components();
        assert_eq!(components.count(), 2);
        assert_eq!(components.blocks[0], set(&[0, 1]));
        assert_eq!(components.blocks[1], set(&[2, 3]));
        assert!(two_copies.is_locally_connected());
    }

    #[test]
    fn product_rule() {
        let discrete = FiniteTopology::discrete(ab());
        let product = discrete.product(&discrete).unwrap();
        assert_eq!(product.len(), 4);
        for x in 0..4 {
            assert_eq!(product.min_nbhd(x), &set(&[x]));
        }

        let indiscrete = FiniteTopology::indiscrete(ab());
        let product = indiscrete.product(&indiscrete).unwrap();
        for x in 0..4 {
            assert_eq!(product.min_nbhd(x), &set(&[0, 1, 2, 3]));
        }

        // U((b,a)) = {a,b} × {a} = {(a,a), (b,a)}.
        let s = FiniteTopology::sierpinski(ab());
        let product = s.product(&s).unwrap();
        assert_eq!(product.carrier().label(2), "(b,a)");
        assert_eq!(product.min_nbhd(2), &set(&[0, 2]));
    }

    #[test]
    fn product_cap() {
        let labels: Vec<String> = (0..13).map(|i| format!("x{i}")).collect();
        let big = FiniteTopology::discrete(Carrier::new(labels).unwrap());
        assert!(matches!(big.product(&big), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn punctured_square_examples() {
        // Indiscrete two-point: the trace opens are only ∅ and P itself.
        let indiscrete = FiniteTopology::indiscrete(ab());
        let p = indiscrete.punctured_square().unwrap();
        assert_eq!(p.len(), 2);
        assert!(p.is_connected());

        // Sierpinski: both off-diagonal points are open in the trace.
        let s = FiniteTopology::sierpinski(ab());
        let p = s.punctured_square().unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.min_nbhd(0), &set(&[0]));
        assert_eq!(p.min_nbhd(1), &set(&[1]));
        assert!(!p.is_connected());

        // Singleton space: empty punctured square, connected by convention.
        let single = FiniteTopology::discrete(Carrier::new(["a"]).unwrap());
        let p = single.punctured_square().unwrap();
        assert_eq!(p.len(), 0);
        assert!(p.is_connected());
    }

    #[test]
    fn subspace_of_product_on_full_set_is_product() {
        let s = FiniteTopology::sierpinski(ab());
        let product = s.product(&s).unwrap();
        let full: BTreeSet<usize> = (0..4).collect();
        assert_eq!(product.subspace(&full), product);
    }

    #[test]
    fn quotient_examples() {
        let s = FiniteTopology::sierpinski(ab());

        // Quotient by equality is a homeomorphic copy (same open count).
        let by_equality = s.quotient(&BinaryRelation::identity(ab())).unwrap();
        assert_eq!(
            by_equality.open_sets().unwrap().len(),
            s.open_sets().unwrap().len()
        );

        // Quotient by the total equivalence collapses to a point.
        let total = s.quotient(&BinaryRelation::full(ab())).unwrap();
        assert_eq!(total.len(), 1);

        let discrete = FiniteTopology::discrete(ab());
        let total = discrete.quotient(&BinaryRelation::full(ab())).unwrap();
        assert_eq!(total.len(), 1);

        // Non-equivalence input errors out.
        let bad = BinaryRelation::from_pairs(ab(), [("a", "b")])
            .unwrap()
            .with_reflexive_closure();
        assert!(matches!(s.quotient(&bad), Err(Error::NotEquivalence { .. })));
    }

    #[test]
    fn quotient_neighborhoods_are_least_saturated_opens() {
        // Three points a -> b -> c in specialization: U(a)={a}, U(b)={a,b},
        // U(c)={a,b,c}; glue a and c. The only saturated open containing
        // {a,c} is everything.
        let c3 = Carrier::new(["a", "b", "c"]).unwrap();
        let chain = FiniteTopology::from_min_nbhds(
            c3.clone(),
            alloc::vec![set(&[0]), set(&[0, 1]), set(&[0, 1, 2])],
        )
        .unwrap();
        let eq = Partition::from_rgs(&[0, 1, 0]).unwrap().to_equivalence(c3);
        let q = chain.quotient(&eq).unwrap();
        assert_eq!(q.len(), 2);
        assert_eq!(q.carrier().label(0), "[a]");
        assert_eq!(q.carrier().label(1), "[b]");
        assert_eq!(q.min_nbhd(0), &set(&[0, 1]));
        assert_eq!(q.min_nbhd(1), &set(&[0, 1]));
    }
}
