//! The standing test corpus: up-set algebras of small posets plus chains,
//! deduplicated up to isomorphism.

use std::sync::Arc;

use super::{is_isomorphic, posets_up_to_iso, FiniteHeytingAlgebra};

/// A catalog algebra together with the label the verification suites report
/// it under.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub label: String,
    pub algebra: Arc<FiniteHeytingAlgebra>,
}

/// Builds the corpus: one up-set algebra per isomorphism class of nonempty
/// posets with at most `max_poset_points` points (capped at 5, where the
/// class census is 1, 2, 5, 16, 63), plus every chain with between 2 and
/// `max_chain` elements. Duplicates are removed by isomorphism search (short
/// chains coincide with chain-poset algebras), keeping the first occurrence.
/// The result is sorted by size, ties kept in construction order, so the
/// sequence is the same on every run.
pub fn catalog(max_poset_points: usize, max_chain: usize) -> Vec<CatalogEntry> {
    let mut entries: Vec<CatalogEntry> = Vec::new();
    let mut push_unique = |label: String, algebra: Arc<FiniteHeytingAlgebra>| {
        let duplicate = entries
            .iter()
            .any(|e| is_isomorphic(&e.algebra, &algebra).is_some());
        if !duplicate {
            entries.push(CatalogEntry { label, algebra });
        }
    };

    for points in 1..=max_poset_points.min(5) {
        for (i, poset) in posets_up_to_iso(points).into_iter().enumerate() {
            let algebra = FiniteHeytingAlgebra::from_poset(&poset)
                .expect("up-set tables always satisfy the axioms");
            push_unique(format!("up(p{points}.{i})"), algebra);
        }
    }
    for k in 2..=max_chain.max(1) {
        push_unique(format!("C{k}"), FiniteHeytingAlgebra::chain(k));
    }

    entries.sort_by_key(|e| e.algebra.size());
    entries
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_bounds_give_empty_catalog() {
        assert!(catalog(0, 1).is_empty());
    }

    #[test]
    fn one_point_poset_and_two_chain_collapse() {
        let cat = catalog(1, 2);
        assert_eq!(cat.len(), 1);
        assert_eq!(cat[0].label, "up(p1.0)");
        assert_eq!(cat[0].algebra.size(), 2);
    }

    #[test]
    fn two_point_posets_give_the_three_small_algebras() {
        let cat = catalog(2, 3);
        let sizes: Vec<usize> = cat.iter().map(|e| e.algebra.size()).collect();
        assert_eq!(sizes, vec![2, 3, 4]);
    }

    #[test]
    fn full_catalog_census() {
        // 1 + 2 + 5 + 16 + 63 poset classes, plus the 7- and 8-chains which
        // no poset of <= 5 points produces.
        let cat = catalog(5, 8);
        assert_eq!(cat.len(), 89);
        assert_eq!(cat.iter().map(|e| e.algebra.size()).max(), Some(32));
        assert!(cat.windows(2).all(|w| w[0].algebra.size() <= w[1].algebra.size()));
        assert!(cat.iter().any(|e| e.label == "C7"));
        assert!(cat.iter().any(|e| e.label == "C8"));
        assert!(!cat.iter().any(|e| e.label == "C5"));
    }

    #[test]
    fn labels_are_unique() {
        let cat = catalog(4, 6);
        let mut labels: Vec<&str> = cat.iter().map(|e| e.label.as_str()).collect();
        labels.sort_unstable();
        labels.dedup();
        assert_eq!(labels.len(), cat.len());
    }
}
