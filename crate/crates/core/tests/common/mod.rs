#![allow(dead_code)]

//! Shared helpers for the invariant suites: bitmask-based topology oracles
//! kept independent of the library's own set machinery.

use std::collections::BTreeSet;

use ordcheck_core::enumerate::{all_topologies, default_carrier};
use ordcheck_core::topology::FiniteTopology;

pub fn topologies_of_size(n: usize) -> Vec<FiniteTopology> {
    all_topologies(&default_carrier(n)).unwrap()
}

pub fn mask_to_set(mask: u32, n: usize) -> BTreeSet<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

pub fn set_to_mask(set: &BTreeSet<usize>) -> u32 {
    set.iter().fold(0u32, |m, &i| m | 1 << i)
}

/// Every open subset of the space, as bit masks.
pub fn open_masks(top: &FiniteTopology) -> BTreeSet<u32> {
    let n = top.len();
    (0u32..(1 << n))
        .filter(|&mask| top.is_open(&mask_to_set(mask, n)))
        .collect()
}

/// Clopen-separation oracle for components: two points belong to the same
/// block iff no clopen set contains one but not the other; a set is a
/// component iff it is such a block.
pub fn clopen_components(top: &FiniteTopology) -> Vec<BTreeSet<usize>> {
    let n = top.len();
    let full = (1u32 << n) - 1;
    let opens = open_masks(top);
    let clopens: Vec<u32> = opens
        .iter()
        .copied()
        .filter(|&m| opens.contains(&(!m & full)))
        .collect();
    let mut blocks: Vec<BTreeSet<usize>> = Vec::new();
    let mut assigned = vec![false; n];
    for x in 0..n {
        if assigned[x] {
            continue;
        }
        let mut block = BTreeSet::new();
        for y in 0..n {
            let separated = clopens
                .iter()
                .any(|&c| (c >> x & 1) != (c >> y & 1));
            if !separated {
                block.insert(y);
                assigned[y] = true;
            }
        }
        blocks.push(block);
    }
    blocks
}
