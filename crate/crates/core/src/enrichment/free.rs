//! The identity map closed over every coordinate of the base, universal
//! among one-generator extensions: each element is a one-variable
//! polynomial, and evaluating its provenance at a point recovers its value
//! there.

use std::sync::Arc;

use super::{build_power_closure, EnrichedAlgebra};
use crate::algebra::{FiniteHeytingAlgebra, Homomorphism};
use crate::error::Result;

/// Closes the identity map and all constants inside the power of `h` with
/// one coordinate per element.
pub fn free_one_generator(h: &Arc<FiniteHeytingAlgebra>, cap: usize) -> Result<EnrichedAlgebra> {
    let index_set: Vec<usize> = (0..h.size()).collect();
    let distinguished: Vec<u8> = index_set.iter().map(|&x| x as u8).collect();
    build_power_closure(h, None, index_set, distinguished, cap)
}

/// Evaluation at one coordinate slot, as a homomorphism onto the base.
/// Projections of a pointwise subalgebra always preserve the operations;
/// the constants make the image everything.
pub fn point_evaluation(e: &EnrichedAlgebra, slot: usize) -> Result<Homomorphism> {
    let map: Vec<usize> = e.maps.iter().map(|m| m[slot] as usize).collect();
    Homomorphism::verified(e.algebra.clone(), e.base.clone(), map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::eval_in;

    #[test]
    fn free_algebra_over_the_two_chain_has_four_elements() {
        let h = FiniteHeytingAlgebra::chain(2);
        let e = free_one_generator(&h, 64).unwrap();
        assert_eq!(e.len(), 4);
        let mut maps = e.maps.clone();
        maps.sort();
        assert_eq!(maps, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(e.map_of(e.iota), &[0, 1]);
        assert_eq!(e.anchor, None);
    }

    #[test]
    fn free_algebra_over_the_degenerate_base_is_degenerate() {
        let h = FiniteHeytingAlgebra::chain(1);
        let e = free_one_generator(&h, 8).unwrap();
        assert_eq!(e.len(), 1);
    }

    #[test]
    fn free_algebra_over_the_three_chain_contains_the_generator_tower() {
        let h = FiniteHeytingAlgebra::chain(3);
        let e = free_one_generator(&h, 1024).unwrap();
        // i, i=>m, (i=>m)=>m, and the negation of i must all show up.
        assert!(e.id_of_map(&[0, 1, 2]).is_some());
        assert!(e.id_of_map(&[2, 1, 1]).is_some());
        assert!(e.id_of_map(&[1, 2, 2]).is_some());
        assert!(e.id_of_map(&[2, 0, 0]).is_some());
        assert!(e.len() >= 7);
    }

    #[test]
    fn point_evaluations_are_homomorphisms_matching_the_maps() {
        let h = FiniteHeytingAlgebra::chain(3);
        let e = free_one_generator(&h, 1024).unwrap();
        for slot in 0..e.index_set.len() {
            let ev = point_evaluation(&e, slot).unwrap();
            assert!(ev.is_surjective());
            assert_eq!(ev.apply(e.iota), e.index_set[slot]);
        }
    }

    #[test]
    fn provenance_evaluates_to_the_map_at_every_point() {
        let h = FiniteHeytingAlgebra::chain(3);
        let e = free_one_generator(&h, 1024).unwrap();
        let n = h.size();
        for x in 0..e.len() {
            for p in 0..n {
                let mut assignment: Vec<usize> = Vec::with_capacity(n + 1);
                assignment.push(p);
                assignment.extend(0..n);
                let v = eval_in(&e.provenance[x], &h, &assignment).unwrap();
                assert_eq!(v, e.maps[x][p] as usize);
            }
        }
    }
}
