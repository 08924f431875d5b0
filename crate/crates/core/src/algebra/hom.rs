//! Homomorphisms between finite Heyting algebras and deterministic
//! isomorphism search.

use crate::error::{Error, Result};
use std::sync::Arc;

use super::{BinOp, FiniteHeytingAlgebra, BIN_OPS};

/// A verified homomorphism: preserves bounds and all three operations.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    pub source: Arc<FiniteHeytingAlgebra>,
    pub target: Arc<FiniteHeytingAlgebra>,
    pub map: Vec<usize>,
}

impl Homomorphism {
    /// Wraps a raw map after checking it preserves bot, top, and every
    /// operation on every pair.
    pub fn verified(
        source: Arc<FiniteHeytingAlgebra>,
        target: Arc<FiniteHeytingAlgebra>,
        map: Vec<usize>,
    ) -> Result<Self> {
        if map.len() != source.size() {
            return Err(Error::ContractViolation("map length mismatch".into()));
        }
        if let Some((op, x, y)) = preservation_failure(&source, &target, &map) {
            return Err(Error::ContractViolation(format!(
                "map fails to preserve {op:?} at ({x}, {y})"
            )));
        }
        Ok(Homomorphism { source, target, map })
    }

    pub fn identity(h: &Arc<FiniteHeytingAlgebra>) -> Self {
        Homomorphism {
            source: h.clone(),
            target: h.clone(),
            map: (0..h.size()).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Homomorphism) -> Result<Homomorphism> {
        if self.target.size() != next.source.size() {
            return Err(Error::ContractViolation(
                "composition endpoints do not match".into(),
            ));
        }
        Homomorphism::verified(
            self.source.clone(),
            next.target.clone(),
            self.map.iter().map(|&x| next.map[x]).collect(),
        )
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.size()];
        for &y in &self.map {
            if seen[y] {
                return false;
            }
            seen[y] = true;
        }
        true
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.size()];
        for &y in &self.map {
            seen[y] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_bijective(&self) -> bool {
        self.source.size() == self.target.size() && self.is_injective()
    }
}

/// Whether two handles denote the same algebra: either literally shared or
/// with identical tables. Names are allowed to differ.
pub fn same_algebra(x: &Arc<FiniteHeytingAlgebra>, y: &Arc<FiniteHeytingAlgebra>) -> bool {
    Arc::ptr_eq(x, y) || x.raw_tables() == y.raw_tables()
}

fn preservation_failure(
    source: &FiniteHeytingAlgebra,
    target: &FiniteHeytingAlgebra,
    map: &[usize],
) -> Option<(BinOp, usize, usize)> {
    for &v in map {
        if v >= target.size() {
            return Some((BinOp::Meet, v, v));
        }
    }
    if map[source.bot()] != target.bot() || map[source.top()] != target.top() {
        return Some((BinOp::Join, source.bot(), source.top()));
    }
    let n = source.size();
    for x in 0..n {
        for y in 0..n {
            for op in BIN_OPS {
                if map[source.apply(op, x, y)] != target.apply(op, map[x], map[y]) {
                    return Some((op, x, y));
                }
            }
        }
    }
    None
}

/// Deterministic isomorphism search. Elements are matched by order profile
/// first, then extended by backtracking with operation consistency checks;
/// candidate images are tried in ascending index order, so the result is
/// reproducible.
pub fn is_isomorphic(
    a: &Arc<FiniteHeytingAlgebra>,
    b: &Arc<FiniteHeytingAlgebra>,
) -> Option<Homomorphism> {
    if a.size() != b.size() {
        return None;
    }
    let n = a.size();
    let prof_a: Vec<_> = (0..n).map(|x| a.profile(x)).collect();
    let prof_b: Vec<_> = (0..n).map(|x| b.profile(x)).collect();
    {
        let mut sa = prof_a.clone();
        let mut sb = prof_b.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return None;
        }
    }
    // Most constrained elements first.
    let mut order: Vec<usize> = (0..n).collect();
    let candidate_count =
        |x: usize| prof_b.iter().filter(|&&p| p == prof_a[x]).count();
    order.sort_by_key(|&x| (candidate_count(x), x));

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if assign(a, b, &prof_a, &prof_b, &order, 0, &mut map, &mut used) {
        Homomorphism::verified(a.clone(), b.clone(), map).ok()
    } else {
        None
    }
}

fn assign(
    a: &FiniteHeytingAlgebra,
    b: &FiniteHeytingAlgebra,
    prof_a: &[(usize, usize, usize, usize)],
    prof_b: &[(usize, usize, usize, usize)],
    order: &[usize],
    pos: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if pos == order.len() {
        return preservation_failure(a, b, map).is_none();
    }
    let x = order[pos];
    'cand: for y in 0..b.size() {
        if used[y] || prof_b[y] != prof_a[x] {
            continue;
        }
        for &z in &order[..pos] {
            if a.leq(x, z) != b.leq(y, map[z]) || a.leq(z, x) != b.leq(map[z], y) {
                continue 'cand;
            }
            for op in BIN_OPS {
                let r = a.apply(op, x, z);
                if map[r] != usize::MAX && map[r] != b.apply(op, y, map[z]) {
                    continue 'cand;
                }
                let r = a.apply(op, z, x);
                if map[r] != usize::MAX && map[r] != b.apply(op, map[z], y) {
                    continue 'cand;
                }
            }
        }
        map[x] = y;
        used[y] = true;
        if assign(a, b, prof_a, prof_b, order, pos + 1, map, used) {
            return true;
        }
        map[x] = usize::MAX;
        used[y] = false;
    }
    false
}

/// Every homomorphism from `a` to `b`, found by backtracking over images in
/// ascending order. Exhaustive and deterministic; meant for small algebras.
pub fn all_homomorphisms(
    a: &Arc<FiniteHeytingAlgebra>,
    b: &Arc<FiniteHeytingAlgebra>,
) -> Vec<Homomorphism> {
    let n = a.size();
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; n];
    search_homs(a, b, 0, &mut map, &mut out);
    out
}

fn search_homs(
    a: &Arc<FiniteHeytingAlgebra>,
    b: &Arc<FiniteHeytingAlgebra>,
    x: usize,
    map: &mut Vec<usize>,
    out: &mut Vec<Homomorphism>,
) {
    let n = a.size();
    if x == n {
        if preservation_failure(a, b, map).is_none() {
            out.push(Homomorphism {
                source: a.clone(),
                target: b.clone(),
                map: map.clone(),
            });
        }
        return;
    }
    'cand: for y in 0..b.size() {
        if x == a.bot() && y != b.bot() {
            continue;
        }
        if x == a.top() && y != b.top() {
            continue;
        }
        for z in 0..x {
            if a.leq(x, z) && !b.leq(y, map[z]) {
                continue 'cand;
            }
            if a.leq(z, x) && !b.leq(map[z], y) {
                continue 'cand;
            }
            for op in BIN_OPS {
                let r = a.apply(op, x, z);
                if r < x && map[r] != b.apply(op, y, map[z]) {
                    continue 'cand;
                }
                let r = a.apply(op, z, x);
                if r < x && map[r] != b.apply(op, map[z], y) {
                    continue 'cand;
                }
            }
        }
        map[x] = y;
        search_homs(a, b, x + 1, map, out);
        map[x] = usize::MAX;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FinitePoset;

    #[test]
    fn identity_is_a_homomorphism() {
        let c3 = FiniteHeytingAlgebra::chain(3);
        let id = Homomorphism::identity(&c3);
        assert!(id.is_bijective());
        assert!(Homomorphism::verified(c3.clone(), c3.clone(), id.map.clone()).is_ok());
    }

    #[test]
    fn collapse_map_is_a_homomorphism() {
        // 3-chain onto 2-chain, middle to top.
        let c3 = FiniteHeytingAlgebra::chain(3);
        let c2 = FiniteHeytingAlgebra::chain(2);
        let h = Homomorphism::verified(c3, c2, vec![0, 1, 1]).unwrap();
        assert!(h.is_surjective());
        assert!(!h.is_injective());
    }

    #[test]
    fn middle_to_bottom_is_not_a_homomorphism() {
        // imp(m, 0) = 0 in the 3-chain but imp(0, 0) = 1 in the 2-chain.
        let c3 = FiniteHeytingAlgebra::chain(3);
        let c2 = FiniteHeytingAlgebra::chain(2);
        assert!(Homomorphism::verified(c3, c2, vec![0, 0, 1]).is_err());
    }

    #[test]
    fn chains_of_equal_length_are_isomorphic() {
        let a = FiniteHeytingAlgebra::chain(4);
        let b = FiniteHeytingAlgebra::from_poset(&FinitePoset::chain(3)).unwrap();
        let iso = is_isomorphic(&a, &b).unwrap();
        assert!(iso.is_bijective());
    }

    #[test]
    fn boolean_four_is_not_a_four_chain() {
        let a = FiniteHeytingAlgebra::chain(4);
        let b = FiniteHeytingAlgebra::from_poset(&FinitePoset::antichain(2)).unwrap();
        assert!(is_isomorphic(&a, &b).is_none());
    }

    #[test]
    fn hom_count_between_small_chains() {
        // 3-chain to 2-chain: m can land on 0 or 1, but only m -> 1 respects
        // implication, plus nothing else moves. Exactly one hom exists beyond
        // that choice being forced.
        let c3 = FiniteHeytingAlgebra::chain(3);
        let c2 = FiniteHeytingAlgebra::chain(2);
        let homs = all_homomorphisms(&c3, &c2);
        assert_eq!(homs.len(), 1);
        assert_eq!(homs[0].map, vec![0, 1, 1]);

        // 2-chain into 3-chain: bounds are pinned, so exactly one.
        let homs = all_homomorphisms(&c2, &FiniteHeytingAlgebra::chain(3));
        assert_eq!(homs.len(), 1);
        assert_eq!(homs[0].map, vec![0, 2]);
    }
}
