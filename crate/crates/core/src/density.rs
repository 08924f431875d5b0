//! Elements dense over a point, the least such element, and the Δ table
//! that turns a finite Heyting algebra into a KM-algebra.

use std::sync::Arc;

use crate::algebra::{filter_generated, Filter, FiniteHeytingAlgebra, Homomorphism};
use crate::error::{Error, Result};

/// The filter of elements dense over `a`: all d with a ≤ d and d⇒a = a.
pub fn dense_over(h: &FiniteHeytingAlgebra, a: usize) -> Filter {
    let members: Vec<usize> = (0..h.size())
        .filter(|&d| h.leq(a, d) && h.imp(d, a) == a)
        .collect();
    // Regenerating from the member set recomputes the minimal basis and
    // keeps the filter laws in one place.
    filter_generated(h, &members)
}

/// The three equivalent descriptions of "d is dense over a", evaluated
/// independently: the defining pair a ≤ d, d⇒a = a; the inequality
/// d⇒a ≤ d; and the existence of an h with d = h ∨ (h⇒a). They must agree
/// on every input; a disagreement is an implementation bug, so callers
/// assert it rather than branch on it.
pub fn dense_characterizations(
    h: &FiniteHeytingAlgebra,
    a: usize,
    d: usize,
) -> (bool, bool, bool) {
    let defining = h.leq(a, d) && h.imp(d, a) == a;
    let residual = h.leq(h.imp(d, a), d);
    let join_form = (0..h.size()).any(|x| h.join(x, h.imp(x, a)) == d);
    (defining, residual, join_form)
}

/// Least element dense over `a`. A filter of a finite lattice contains the
/// meet of its members, so the minimum always exists here.
pub fn delta_min(h: &FiniteHeytingAlgebra, a: usize) -> usize {
    dense_over(h, a)
        .min()
        .expect("finite dense filters are principal")
}

/// A Heyting algebra together with a total Δ table satisfying the three
/// KM identities: x ≤ Δx, Δx⇒x = x, and Δx ≤ y ∨ (y⇒x).
#[derive(Clone, Debug)]
pub struct KMAlgebra {
    pub base: Arc<FiniteHeytingAlgebra>,
    pub delta: Vec<usize>,
}

impl KMAlgebra {
    #[inline]
    pub fn delta(&self, x: usize) -> usize {
        self.delta[x]
    }

    /// Accepts a caller-supplied Δ table after checking the KM identities
    /// and then the minimality they force: a table that satisfies the
    /// identities always picks the least dense element, so any mismatch
    /// with `delta_min` means the identity check itself is broken.
    pub fn verify_table(
        base: &Arc<FiniteHeytingAlgebra>,
        delta: Vec<usize>,
    ) -> Result<KMAlgebra> {
        if delta.len() != base.size() || delta.iter().any(|&d| d >= base.size()) {
            return Err(Error::Validation(format!(
                "delta table must list one element per element, got {} entries",
                delta.len()
            )));
        }
        check_km_identities(base, &delta)?;
        for a in 0..base.size() {
            let expected = delta_min(base, a);
            if delta[a] != expected {
                return Err(Error::DeltaMismatch {
                    expected,
                    given: delta[a],
                });
            }
        }
        Ok(KMAlgebra {
            base: base.clone(),
            delta,
        })
    }
}

fn check_km_identities(h: &FiniteHeytingAlgebra, delta: &[usize]) -> Result<()> {
    let n = h.size();
    for x in 0..n {
        if !h.leq(x, delta[x]) {
            return Err(Error::AxiomViolation(format!(
                "x <= Δx fails at x = {}",
                h.name_of(x)
            )));
        }
        if h.imp(delta[x], x) != x {
            return Err(Error::AxiomViolation(format!(
                "Δx -> x = x fails at x = {}",
                h.name_of(x)
            )));
        }
        for y in 0..n {
            if !h.leq(delta[x], h.join(y, h.imp(y, x))) {
                return Err(Error::AxiomViolation(format!(
                    "Δx <= y | (y -> x) fails at x = {}, y = {}",
                    h.name_of(x),
                    h.name_of(y)
                )));
            }
        }
    }
    Ok(())
}

/// Equips a finite algebra with Δa = least element dense over a, then
/// verifies the KM identities. Failure would contradict the fact that
/// finite dense filters are principal, so it signals a bug.
pub fn km_from_heyting(h: &Arc<FiniteHeytingAlgebra>) -> Result<KMAlgebra> {
    let delta: Vec<usize> = (0..h.size()).map(|a| delta_min(h, a)).collect();
    check_km_identities(h, &delta)?;
    Ok(KMAlgebra {
        base: h.clone(),
        delta,
    })
}

/// Decides whether (a⇒h) ∧ ((h⇒a)⇒a) = a′⇒h holds for every h. This
/// single equation pins a′ down to the least element dense over a, in both
/// directions.
pub fn check_delta_identity(
    h: &FiniteHeytingAlgebra,
    a: usize,
    a_prime: usize,
) -> bool {
    (0..h.size()).all(|hh| {
        h.meet(h.imp(a, hh), h.imp(h.imp(hh, a), a)) == h.imp(a_prime, hh)
    })
}

/// The filter of the target generated by the image of `filter`. A principal
/// input stays principal, with minimum the image of the minimum.
pub fn push_filter(f: &Homomorphism, filter: &Filter) -> Filter {
    let image: Vec<usize> = filter.members.iter().map(|&x| f.apply(x)).collect();
    filter_generated(&f.target, &image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FinitePoset, filter_satisfies_invariants};

    fn b4() -> Arc<FiniteHeytingAlgebra> {
        FiniteHeytingAlgebra::from_poset(&FinitePoset::antichain(2)).unwrap()
    }

    #[test]
    fn dense_filter_of_the_three_chain() {
        let c3 = FiniteHeytingAlgebra::chain(3);
        let f = dense_over(&c3, 0);
        assert_eq!(f.members, vec![1, 2]);
        assert_eq!(f.basis, vec![1]);
        assert!(filter_satisfies_invariants(&c3, &f));
    }

    #[test]
    fn boolean_algebras_have_trivial_dense_filters() {
        let b = b4();
        for a in 0..b.size() {
            assert_eq!(dense_over(&b, a).members, vec![b.top()]);
        }
    }

    #[test]
    fn dense_over_top_is_trivial() {
        for k in 2..=6 {
            let c = FiniteHeytingAlgebra::chain(k);
            assert_eq!(dense_over(&c, c.top()).members, vec![c.top()]);
        }
    }

    #[test]
    fn characterizations_on_the_three_chain() {
        let c3 = FiniteHeytingAlgebra::chain(3);
        assert_eq!(dense_characterizations(&c3, 0, 1), (true, true, true));
        assert_eq!(dense_characterizations(&c3, 0, 0), (false, false, false));
        assert_eq!(
            dense_characterizations(&c3, c3.top(), c3.top()),
            (true, true, true)
        );
    }

    #[test]
    fn delta_tables_of_the_small_algebras() {
        let c3 = FiniteHeytingAlgebra::chain(3);
        assert_eq!(
            (0..3).map(|a| delta_min(&c3, a)).collect::<Vec<_>>(),
            vec![1, 2, 2]
        );
        let c2 = FiniteHeytingAlgebra::chain(2);
        assert_eq!(
            (0..2).map(|a| delta_min(&c2, a)).collect::<Vec<_>>(),
            vec![1, 1]
        );
        let b = b4();
        assert!((0..4).all(|a| delta_min(&b, a) == b.top()));
    }

    #[test]
    fn km_structure_of_the_three_chain() {
        let c3 = FiniteHeytingAlgebra::chain(3);
        let km = km_from_heyting(&c3).unwrap();
        assert_eq!(km.delta, vec![1, 2, 2]);
    }

    #[test]
    fn km_structure_of_the_degenerate_algebra() {
        let one = FiniteHeytingAlgebra::chain(1);
        let km = km_from_heyting(&one).unwrap();
        assert_eq!(km.delta, vec![0]);
    }

    #[test]
    fn oversized_delta_breaks_the_third_identity() {
        // Taking Δ0 = 1 on the 3-chain skips the least dense element m;
        // the y | (y -> x) bound at y = m catches it.
        let c3 = FiniteHeytingAlgebra::chain(3);
        let err = KMAlgebra::verify_table(&c3, vec![2, 2, 2]).unwrap_err();
        assert!(matches!(err, Error::AxiomViolation(_)));
    }

    #[test]
    fn verify_table_accepts_the_computed_table() {
        let c4 = FiniteHeytingAlgebra::chain(4);
        let delta: Vec<usize> = (0..4).map(|a| delta_min(&c4, a)).collect();
        assert!(KMAlgebra::verify_table(&c4, delta).is_ok());
    }

    #[test]
    fn delta_identity_pins_down_the_minimum() {
        let c3 = FiniteHeytingAlgebra::chain(3);
        assert!(check_delta_identity(&c3, 0, 1));
        assert!(!check_delta_identity(&c3, 0, 2));
        assert!(check_delta_identity(&c3, 2, 2));
        for a in 0..3 {
            for ap in 0..3 {
                assert_eq!(
                    check_delta_identity(&c3, a, ap),
                    ap == delta_min(&c3, a)
                );
            }
        }
    }

    #[test]
    fn pushed_filters_keep_their_minima() {
        let c3 = FiniteHeytingAlgebra::chain(3);
        let c2 = FiniteHeytingAlgebra::chain(2);
        let dense0 = dense_over(&c3, 0);

        let id = Homomorphism::identity(&c3);
        assert_eq!(push_filter(&id, &dense0).members, vec![1, 2]);

        let collapse =
            Homomorphism::verified(c3.clone(), c2.clone(), vec![0, 1, 1]).unwrap();
        let pushed = push_filter(&collapse, &dense0);
        assert_eq!(pushed.members, vec![1]);
        assert_eq!(pushed.min(), Some(1));

        let trivial = filter_generated(&c3, &[c3.top()]);
        assert_eq!(push_filter(&collapse, &trivial).members, vec![1]);
    }
}
