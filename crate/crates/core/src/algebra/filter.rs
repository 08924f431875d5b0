//! Filters and filter quotients.
//!
//! A filter stores both its full member set and its minimal-element basis;
//! principality tests and least-element lookups then cost nothing. Members
//! are element indices of whichever carrier the filter was built over, so the
//! same type serves plain algebras and enriched map algebras.

use crate::error::{Error, Result};
use serde::Serialize;
use std::sync::Arc;

use super::{FiniteHeytingAlgebra, Homomorphism};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Filter {
    /// Sorted member indices.
    pub members: Vec<usize>,
    /// Sorted minimal members; every member sits above one of these.
    pub basis: Vec<usize>,
}

impl Filter {
    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// A filter in a finite lattice always has a least element exactly when
    /// its basis is a singleton.
    pub fn is_principal(&self) -> bool {
        self.basis.len() == 1
    }

    pub fn min(&self) -> Option<usize> {
        if self.is_principal() {
            Some(self.basis[0])
        } else {
            None
        }
    }
}

/// Filter of `carrier_size` elements generated by `gens`, with order and meet
/// supplied as closures. The empty generator set yields the trivial filter
/// around `top`.
pub fn filter_generated_by(
    carrier_size: usize,
    top: usize,
    leq: impl Fn(usize, usize) -> bool,
    meet: impl Fn(usize, usize) -> usize,
    gens: &[usize],
) -> Filter {
    // Close the generators under meet, then take the upward closure.
    let mut meets: Vec<usize> = vec![top];
    for &g in gens {
        let snapshot = meets.clone();
        for m in snapshot {
            let x = meet(m, g);
            if !meets.contains(&x) {
                meets.push(x);
            }
        }
    }
    let mut members: Vec<usize> = (0..carrier_size)
        .filter(|&x| meets.iter().any(|&m| leq(m, x)))
        .collect();
    members.sort_unstable();
    let basis: Vec<usize> = members
        .iter()
        .copied()
        .filter(|&m| !members.iter().any(|&o| o != m && leq(o, m)))
        .collect();
    Filter { members, basis }
}

pub fn filter_generated(h: &FiniteHeytingAlgebra, gens: &[usize]) -> Filter {
    filter_generated_by(h.size(), h.top(), |x, y| h.leq(x, y), |x, y| h.meet(x, y), gens)
}

/// Checks the filter laws directly: top is in, members are upward closed,
/// and members are closed under meet.
pub fn filter_satisfies_invariants(h: &FiniteHeytingAlgebra, f: &Filter) -> bool {
    if !f.contains(h.top()) {
        return false;
    }
    for &x in &f.members {
        for y in 0..h.size() {
            if h.leq(x, y) && !f.contains(y) {
                return false;
            }
        }
        for &y in &f.members {
            if !f.contains(h.meet(x, y)) {
                return false;
            }
        }
    }
    // Basis is sound: minimal, and every member dominates a basis element.
    f.members
        .iter()
        .all(|&m| f.basis.iter().any(|&b| h.leq(b, m)))
        && f.basis.iter().all(|&b| f.contains(b))
}

/// A quotient by a filter together with the projection data.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: Arc<FiniteHeytingAlgebra>,
    /// Class index of every source element.
    pub class_of: Vec<usize>,
    /// Members of each class, sorted; class order follows least members.
    pub classes: Vec<Vec<usize>>,
    pub projection: Homomorphism,
}

/// Quotients `h` by the congruence `x ~ y iff (x <-> y) in f`.
///
/// Classes are numbered by their least member, so the projection is
/// deterministic. The class of top is exactly the filter, which the
/// construction asserts.
pub fn quotient_by_filter(h: &Arc<FiniteHeytingAlgebra>, f: &Filter) -> Result<Quotient> {
    let n = h.size();
    let equiv = |x: usize, y: usize| f.contains(h.biimp(x, y));
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let c = classes.len();
        let mut members = vec![x];
        class_of[x] = c;
        for y in (x + 1)..n {
            if class_of[y] == usize::MAX && equiv(x, y) {
                class_of[y] = c;
                members.push(y);
            }
        }
        classes.push(members);
    }
    let q = classes.len();
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let mut leq = vec![false; q * q];
    let mut meet = vec![0usize; q * q];
    let mut join = vec![0usize; q * q];
    let mut imp = vec![0usize; q * q];
    for a in 0..q {
        for b in 0..q {
            // [x] <= [y] iff x -> y lands in the filter.
            leq[a * q + b] = f.contains(h.imp(reps[a], reps[b]));
            meet[a * q + b] = class_of[h.meet(reps[a], reps[b])];
            join[a * q + b] = class_of[h.join(reps[a], reps[b])];
            imp[a * q + b] = class_of[h.imp(reps[a], reps[b])];
        }
    }
    let names = reps
        .iter()
        .map(|&r| format!("[{}]", h.name_of(r)))
        .collect();
    let algebra = Arc::new(FiniteHeytingAlgebra::from_tables(
        super::RawTables {
            n: q,
            leq,
            meet,
            join,
            imp,
            bot: class_of[h.bot()],
            top: class_of[h.top()],
        },
        Some(names),
    )?);
    let projection = Homomorphism::verified(h.clone(), algebra.clone(), class_of.clone())?;
    let top_class: Vec<usize> = classes[class_of[h.top()]].clone();
    if top_class != f.members {
        return Err(Error::ContractViolation(format!(
            "class of top {:?} differs from the filter {:?}",
            top_class, f.members
        )));
    }
    Ok(Quotient { algebra, class_of, classes, projection })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_generators_give_trivial_filter() {
        let c3 = FiniteHeytingAlgebra::chain(3);
        let f = filter_generated(&c3, &[]);
        assert_eq!(f.members, vec![2]);
        assert_eq!(f.basis, vec![2]);
        assert!(f.is_principal());
        assert!(filter_satisfies_invariants(&c3, &f));
    }

    #[test]
    fn principal_filter_of_middle_element() {
        let c3 = FiniteHeytingAlgebra::chain(3);
        let f = filter_generated(&c3, &[1]);
        assert_eq!(f.members, vec![1, 2]);
        assert_eq!(f.min(), Some(1));
        assert!(filter_satisfies_invariants(&c3, &f));
    }

    #[test]
    fn boolean_atoms_generate_improper_filter() {
        let b4 = FiniteHeytingAlgebra::from_poset(&crate::algebra::FinitePoset::antichain(2))
            .unwrap();
        let f = filter_generated(&b4, &[1, 2]);
        // meet of the two atoms is bot, so everything is in.
        assert_eq!(f.members, vec![0, 1, 2, 3]);
        assert_eq!(f.basis, vec![0]);
    }

    #[test]
    fn quotient_by_trivial_filter_is_identity() {
        let c3 = FiniteHeytingAlgebra::chain(3);
        let f = filter_generated(&c3, &[]);
        let q = quotient_by_filter(&c3, &f).unwrap();
        assert_eq!(q.algebra.size(), 3);
        assert_eq!(q.class_of, vec![0, 1, 2]);
    }

    #[test]
    fn quotient_collapses_filter_to_top() {
        let c4 = FiniteHeytingAlgebra::chain(4);
        let f = filter_generated(&c4, &[2]);
        let q = quotient_by_filter(&c4, &f).unwrap();
        assert_eq!(q.algebra.size(), 3);
        assert_eq!(q.class_of[2], q.class_of[3]);
        assert_eq!(q.class_of[3], q.algebra.top());
    }

    #[test]
    fn every_finite_filter_is_principal() {
        // Cross-check of the basis design: enumerate all meet-closed up-sets
        // containing top and compare against principal up-sets.
        let h = FiniteHeytingAlgebra::from_poset(&crate::algebra::FinitePoset::antichain(3))
            .unwrap();
        let n = h.size();
        let mut filters = Vec::new();
        'subset: for mask in 1u32..(1 << n) {
            let members: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            if !members.contains(&h.top()) {
                continue;
            }
            for &x in &members {
                for y in 0..n {
                    if h.leq(x, y) && mask & (1 << y) == 0 {
                        continue 'subset;
                    }
                }
                for &y in &members {
                    if mask & (1 << h.meet(x, y)) == 0 {
                        continue 'subset;
                    }
                }
            }
            filters.push(members);
        }
        let principal: Vec<Vec<usize>> = (0..n)
            .map(|x| (0..n).filter(|&y| h.leq(x, y)).collect())
            .collect();
        for f in &filters {
            assert!(principal.contains(f), "non-principal filter {f:?}");
        }
        assert_eq!(filters.len(), principal.len());
    }
}
