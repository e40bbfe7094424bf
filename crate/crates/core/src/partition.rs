//! Set partitions and equivalence relations on finite carriers.
//!
//! Partitions double as validated equivalence relations: quotient topologies
//! and quotient relations both go through this type so that class labels and
//! class order agree everywhere. Classes are ordered by their least member
//! and labelled `[x]` after their least member's label.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::relation::{BinaryRelation, Carrier, RelView};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    class_of: Vec<usize>,
    blocks: Vec<BTreeSet<usize>>,
}

impl Partition {
    /// Builds a partition from a restricted-growth string: `rgs[0] = 0` and
    /// each later entry is at most one more than the running maximum.
    pub fn from_rgs(rgs: &[usize]) -> Result<Self> {
        let mut max_seen: Option<usize> = None;
        for (i, &c) in rgs.iter().enumerate() {
            let bound = max_seen.map_or(0, |m| m + 1);
            if c > bound {
                return Err(Error::InvalidArgument(format!(
                    "restricted-growth string entry {i} is {c}, at most {bound} allowed"
                )));
            }
            max_seen = Some(max_seen.map_or(c, |m| m.max(c)));
        }
        let class_count = max_seen.map_or(0, |m| m + 1);
        let mut blocks = alloc::vec![BTreeSet::new(); class_count];
        for (i, &c) in rgs.iter().enumerate() {
            blocks[c].insert(i);
        }
        Ok(Partition {
            class_of: rgs.to_vec(),
            blocks,
        })
    }

    /// Each element in its own class.
    pub fn identity(n: usize) -> Self {
        Partition {
            class_of: (0..n).collect(),
            blocks: (0..n).map(|i| BTreeSet::from([i])).collect(),
        }
    }

    /// A single class containing everything.
    pub fn total(n: usize) -> Self {
        if n == 0 {
            return Partition {
                class_of: Vec::new(),
                blocks: Vec::new(),
            };
        }
        Partition {
            class_of: alloc::vec![0; n],
            blocks: alloc::vec![(0..n).collect()],
        }
    }

    /// Validates that a relation is reflexive, symmetric and transitive and
    /// extracts its classes. Failures name the broken axiom and a witness.
    pub fn from_equivalence(rel: &BinaryRelation) -> Result<Self> {
        let n = rel.size();
        let witness = |ixs: &[usize]| -> String {
            let labels: Vec<&str> = ixs.iter().map(|&i| rel.carrier().label(i)).collect();
            format!("({})", labels.join(", "))
        };
        if let Some([x]) = crate::relation::reflexive_violation(rel) {
            return Err(Error::NotEquivalence {
                axiom: "reflexivity",
                witness: witness(&[x]),
            });
        }
        for x in 0..n {
            for y in 0..n {
                if rel.rel(x, y) && !rel.rel(y, x) {
                    return Err(Error::NotEquivalence {
                        axiom: "symmetry",
                        witness: witness(&[x, y]),
                    });
                }
            }
        }
        if let Some(w) = crate::relation::transitive_violation(rel) {
            return Err(Error::NotEquivalence {
                axiom: "transitivity",
                witness: witness(&w),
            });
        }
        // Classes in order of least member; the scan assigns them that way.
        let mut class_of = alloc::vec![usize::MAX; n];
        let mut blocks: Vec<BTreeSet<usize>> = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = blocks.len();
            let members: BTreeSet<usize> = (0..n).filter(|&y| rel.rel(x, y)).collect();
            for &y in &members {
                class_of[y] = id;
            }
            blocks.push(members);
        }
        Ok(Partition { class_of, blocks })
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn class_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn blocks(&self) -> &[BTreeSet<usize>] {
        &self.blocks
    }

    /// Class labels `[x]`, where x is the least member's label.
    pub fn class_labels(&self, carrier: &Carrier) -> Vec<String> {
        self.blocks
            .iter()
            .map(|b| format!("[{}]", carrier.label(*b.iter().next().expect("nonempty block"))))
            .collect()
    }

    pub fn class_carrier(&self, carrier: &Carrier) -> Result<Carrier> {
        Carrier::new(self.class_labels(carrier))
    }

    /// The equivalence relation this partition induces on the carrier.
    pub fn to_equivalence(&self, carrier: Carrier) -> BinaryRelation {
        BinaryRelation::from_fn(carrier, |i, j| self.class_of[i] == self.class_of[j])
    }
}

/// Enumerates the restricted-growth strings of length `n` in lexicographic
/// order: the single-block partition comes first, the discrete partition
/// last.
pub fn restricted_growth_strings(n: usize) -> RgsIter {
    RgsIter {
        next: if n == 0 { None } else { Some(alloc::vec![0; n]) },
        emitted_empty: false,
        n,
    }
}

pub struct RgsIter {
    next: Option<Vec<usize>>,
    emitted_empty: bool,
    n: usize,
}

impl Iterator for RgsIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.n == 0 {
            if self.emitted_empty {
                return None;
            }
            self.emitted_empty = true;
            return Some(Vec::new());
        }
        let current = self.next.take()?;
        // Successor: bump the rightmost position that can grow, zero the rest.
        let mut succ = current.clone();
        let mut pos = self.n;
        loop {
            if pos <= 1 {
                break;
            }
            pos -= 1;
            let max_prefix = succ[..pos].iter().copied().max().unwrap_or(0);
            if succ[pos] <= max_prefix {
                succ[pos] += 1;
                for c in succ[pos + 1..].iter_mut() {
                    *c = 0;
                }
                self.next = Some(succ);
                return Some(current);
            }
        }
        self.next = None;
        Some(current)
    }
}
