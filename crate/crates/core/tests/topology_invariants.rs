//! Exhaustive structural checks over every topology on small carriers.

mod common;

use std::collections::BTreeSet;

use common::{clopen_components, open_masks, topologies_of_size};
use ordcheck_core::relation::BinaryRelation;

/// The adjacency-based component computation agrees with the
/// clopen-separation oracle on every topology with at most 4 points.
#[test]
fn components_agree_with_clopen_oracle() {
    for n in 0..=4usize {
        for top in topologies_of_size(n) {
            let blocks = top.components().blocks;
            let oracle = clopen_components(&top);
            assert_eq!(blocks, oracle, "n = {n}, top = {top:?}");
        }
    }
}

/// Every finite space is locally connected: minimal neighborhoods are
/// connected.
#[test]
fn every_finite_space_is_locally_connected() {
    for n in 0..=4usize {
        for top in topologies_of_size(n) {
            assert!(top.is_locally_connected(), "n = {n}, top = {top:?}");
        }
    }
}

/// Components are connected subspaces, and no component unions with an
/// intersecting connected set into something strictly larger (maximality,
/// checked against all connected subsets).
#[test]
fn components_are_maximal_connected_sets() {
    for n in 1..=4usize {
        for top in topologies_of_size(n) {
            let blocks = top.components().blocks;
            let connected_subsets: Vec<BTreeSet<usize>> = (1u32..(1 << n))
                .map(|m| common::mask_to_set(m, n))
                .filter(|s| top.subspace(s).is_connected())
                .collect();
            for block in &blocks {
                assert!(top.subspace(block).is_connected());
                for s in &connected_subsets {
                    if !s.is_disjoint(block) {
                        let union: BTreeSet<usize> = s.union(block).copied().collect();
                        assert!(
                            union.len() <= block.len(),
                            "component {block:?} extends by {s:?}"
                        );
                    }
                }
            }
        }
    }
}

/// The subspace of a product on the full pair set is the product itself.
#[test]
fn full_subspace_of_product_is_identity() {
    for n in 1..=3usize {
        for top in topologies_of_size(n) {
            let product = top.product(&top).unwrap();
            let full: BTreeSet<usize> = (0..product.len()).collect();
            assert_eq!(product.subspace(&full), product);
        }
    }
}

/// Quotienting by equality preserves the number of open sets.
#[test]
fn quotient_by_equality_preserves_open_count() {
    for n in 1..=4usize {
        for top in topologies_of_size(n) {
            let eq = BinaryRelation::identity(top.carrier().clone());
            let q = top.quotient(&eq).unwrap();
            assert_eq!(
                q.open_sets().unwrap().len(),
                top.open_sets().unwrap().len()
            );
        }
    }
}

/// A finite space with at least two points is never both connected and
/// Hausdorff: distinct points with disjoint open neighborhoods have
/// disjoint minimal neighborhoods, and that splits the space.
#[test]
fn no_connected_hausdorff_space_with_two_points() {
    for n in 2..=4usize {
        for top in topologies_of_size(n) {
            let hausdorff = (0..n).all(|x| {
                (0..n).all(|y| {
                    x == y || top.min_nbhd(x).is_disjoint(top.min_nbhd(y))
                })
            });
            if hausdorff {
                assert!(!top.is_connected(), "n = {n}, top = {top:?}");
            }
        }
    }
}

/// Open families derived from min-neighborhood storage really are
/// topologies: closed under union and intersection with ∅ and X present.
#[test]
fn open_families_are_closed_under_union_and_intersection() {
    for n in 0..=3usize {
        for top in topologies_of_size(n) {
            let full = ((1u64 << n) - 1) as u32;
            let opens = open_masks(&top);
            assert!(opens.contains(&0));
            assert!(opens.contains(&full));
            for &a in &opens {
                for &b in &opens {
                    assert!(opens.contains(&(a | b)));
                    assert!(opens.contains(&(a & b)));
                }
            }
        }
    }
}
