//! Deterministic enumeration of the candidate universes the searches and
//! verification suites walk: permutations in lexicographic order, relation
//! incidence matrices in row-major lexicographic order, and all topologies
//! on a small labelled carrier.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::relation::{Carrier, RelView};
use crate::topology::FiniteTopology;

/// Cap for full topology enumeration; 2^(n²) relation masks are scanned.
pub const TOPOLOGY_ENUM_CAP: usize = 5;

/// A relation on up to 8 elements packed into a `u64`.
///
/// Bit layout: entry (i, j) sits at bit `n²−1−(i·n+j)`, so ascending mask
/// order is lexicographic order on the row-major entry string with (0, 0)
/// most significant and `false < true`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaskRel {
    pub mask: u64,
    pub n: usize,
}

impl MaskRel {
    pub fn new(mask: u64, n: usize) -> Self {
        debug_assert!(n * n <= 64);
        MaskRel { mask, n }
    }
}

impl RelView for MaskRel {
    fn size(&self) -> usize {
        self.n
    }

    fn rel(&self, i: usize, j: usize) -> bool {
        self.mask >> (self.n * self.n - 1 - (i * self.n + j)) & 1 == 1
    }
}

/// A relation of arbitrary size packed into 64-bit words, entry (i, j) at
/// flat position `i·n + j`. Used for sampled universes too big for `MaskRel`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordsRel {
    pub words: Vec<u64>,
    pub n: usize,
}

impl WordsRel {
    pub fn zeroed(n: usize) -> Self {
        WordsRel {
            words: alloc::vec![0; (n * n + 63) / 64],
            n,
        }
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        let pos = i * self.n + j;
        if value {
            self.words[pos / 64] |= 1 << (pos % 64);
        } else {
            self.words[pos / 64] &= !(1 << (pos % 64));
        }
    }
}

impl RelView for WordsRel {
    fn size(&self) -> usize {
        self.n
    }

    fn rel(&self, i: usize, j: usize) -> bool {
        let pos = i * self.n + j;
        self.words[pos / 64] >> (pos % 64) & 1 == 1
    }
}

/// Number of relations on an n-element carrier, i.e. 2^(n²).
pub fn relation_universe_size(n: usize) -> Result<u64> {
    if n * n > 63 {
        return Err(Error::CapExceeded {
            what: "relation universe",
            size: n,
            cap: 7,
        });
    }
    Ok(1u64 << (n * n))
}

/// All permutations of 0..n in lexicographic order.
pub fn permutations_lex(n: usize) -> PermutationIter {
    PermutationIter {
        next: Some((0..n).collect()),
    }
}

pub struct PermutationIter {
    next: Option<Vec<usize>>,
}

impl Iterator for PermutationIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let n = succ.len();
        // Standard next-permutation step.
        if n >= 2 {
            let mut i = n - 1;
            while i > 0 && succ[i - 1] >= succ[i] {
                i -= 1;
            }
            if i > 0 {
                let mut j = n - 1;
                while succ[j] <= succ[i - 1] {
                    j -= 1;
                }
                succ.swap(i - 1, j);
                succ[i..].reverse();
                self.next = Some(succ);
            }
        }
        Some(current)
    }
}

/// Enumerates every topology on the given carrier, in ascending order of the
/// reflexive–transitive relation mask whose rows are the minimal
/// neighborhoods (`U(x) = {y : x relates to y}`). Finite topologies
/// correspond exactly to preorders this way.
pub fn all_topologies(carrier: &Carrier) -> Result<Vec<FiniteTopology>> {
    let n = carrier.len();
    if n > TOPOLOGY_ENUM_CAP {
        return Err(Error::CapExceeded {
            what: "topology enumeration carrier",
            size: n,
            cap: TOPOLOGY_ENUM_CAP,
        });
    }
    let total = relation_universe_size(n)?;
    let mut out = Vec::new();
    for mask in 0..total {
        let rel = MaskRel::new(mask, n);
        if crate::relation::reflexive_violation(&rel).is_some()
            || crate::relation::transitive_violation(&rel).is_some()
        {
            continue;
        }
        let min_nbhd: Vec<BTreeSet<usize>> = (0..n)
            .map(|x| (0..n).filter(|&y| rel.rel(x, y)).collect())
            .collect();
        out.push(FiniteTopology::from_min_nbhds(carrier.clone(), min_nbhd)?);
    }
    Ok(out)
}

/// Convenience carrier with labels x0..x(n-1).
pub fn default_carrier(n: usize) -> Carrier {
    Carrier::new((0..n).map(|i| alloc::format!("x{i}"))).expect("distinct labels")
}
