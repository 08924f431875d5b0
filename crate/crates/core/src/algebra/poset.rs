//! Finite posets: validation, up-set enumeration, and enumeration of all
//! posets on a small point count up to isomorphism.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A finite poset on points `0..points`, order stored as a dense matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinitePoset {
    pub points: usize,
    /// Row-major: `leq[i * points + j]` holds iff `i <= j`.
    pub leq: Vec<bool>,
}

impl FinitePoset {
    pub fn new(points: usize, leq: Vec<bool>) -> Result<Self> {
        let p = FinitePoset { points, leq };
        p.check()?;
        Ok(p)
    }

    /// Chain poset 0 < 1 < ... < points-1.
    pub fn chain(points: usize) -> Self {
        let mut leq = vec![false; points * points];
        for i in 0..points {
            for j in i..points {
                leq[i * points + j] = true;
            }
        }
        FinitePoset { points, leq }
    }

    /// Antichain: no two distinct points comparable.
    pub fn antichain(points: usize) -> Self {
        let mut leq = vec![false; points * points];
        for i in 0..points {
            leq[i * points + i] = true;
        }
        FinitePoset { points, leq }
    }

    #[inline]
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.points + j]
    }

    pub fn check(&self) -> Result<()> {
        let n = self.points;
        if self.leq.len() != n * n {
            return Err(Error::Validation(format!(
                "order matrix has {} entries, expected {}",
                self.leq.len(),
                n * n
            )));
        }
        for i in 0..n {
            if !self.le(i, i) {
                return Err(Error::Validation(format!("not reflexive at {i}")));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && self.le(i, j) && self.le(j, i) {
                    return Err(Error::Validation(format!("not antisymmetric at ({i},{j})")));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !self.le(i, j) {
                    continue;
                }
                for k in 0..n {
                    if self.le(j, k) && !self.le(i, k) {
                        return Err(Error::Validation(format!(
                            "not transitive at ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// All up-closed point sets as bitmasks, ascending. Needs `points <= 20`.
    pub fn up_sets(&self) -> Vec<u32> {
        assert!(self.points <= 20, "up-set enumeration is for small posets");
        let n = self.points;
        let mut out = Vec::new();
        'mask: for mask in 0u32..(1 << n) {
            for i in 0..n {
                if mask & (1 << i) == 0 {
                    continue;
                }
                for j in 0..n {
                    if self.le(i, j) && mask & (1 << j) == 0 {
                        continue 'mask;
                    }
                }
            }
            out.push(mask);
        }
        out
    }

    /// Maximal points of the sub-poset induced by `mask`.
    pub fn maximal_in(&self, mask: u32) -> u32 {
        let mut out = 0u32;
        for i in 0..self.points {
            if mask & (1 << i) == 0 {
                continue;
            }
            let dominated = (0..self.points)
                .any(|j| j != i && mask & (1 << j) != 0 && self.le(i, j));
            if !dominated {
                out |= 1 << i;
            }
        }
        out
    }
}

/// Searches for an order isomorphism by brute force over permutations.
/// Intended for the desk-scale posets this crate works with (<= 8 points).
pub fn poset_isomorphic(a: &FinitePoset, b: &FinitePoset) -> Option<Vec<usize>> {
    if a.points != b.points {
        return None;
    }
    let n = a.points;
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let ok = (0..n).all(|i| (0..n).all(|j| a.le(i, j) == b.le(perm[i], perm[j])));
        if ok {
            return Some(perm);
        }
        if !next_permutation(&mut perm) {
            return None;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// All posets on `points` labeled points, one representative per isomorphism
/// class, sorted by canonical relation mask. `points <= 5` keeps the scan
/// (2^20 candidate relations, 120 permutations each) immediate.
pub fn posets_up_to_iso(points: usize) -> Vec<FinitePoset> {
    assert!(points >= 1 && points <= 5);
    let n = points;
    let strict_pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let bits = strict_pairs.len();
    let mut canon_seen: Vec<u32> = Vec::new();
    'cand: for mask in 0u32..(1 << bits) {
        // row[i] = up-mask of i, diagonal included.
        let mut row = [0u32; 5];
        for i in 0..n {
            row[i] |= 1 << i;
        }
        for (b, &(i, j)) in strict_pairs.iter().enumerate() {
            if mask & (1 << b) != 0 {
                row[i] |= 1 << j;
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i == j || row[i] & (1 << j) == 0 {
                    continue;
                }
                if row[j] & (1 << i) != 0 {
                    continue 'cand; // antisymmetry
                }
                if row[j] & !row[i] != 0 {
                    continue 'cand; // transitivity: j's up-set must sit inside i's
                }
            }
        }
        let key = canonical_key(n, &row);
        if let Err(pos) = canon_seen.binary_search(&key) {
            canon_seen.insert(pos, key);
        }
    }
    canon_seen
        .into_iter()
        .map(|key| {
            let mut leq = vec![false; n * n];
            for i in 0..n {
                for j in 0..n {
                    leq[i * n + j] = key & (1 << (i * n + j)) != 0;
                }
            }
            FinitePoset { points: n, leq }
        })
        .collect()
}

/// Least relation bitmask over all relabelings; n*n <= 25 bits.
fn canonical_key(n: usize, row: &[u32; 5]) -> u32 {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u32::MAX;
    loop {
        let mut key = 0u32;
        for i in 0..n {
            for j in 0..n {
                if row[i] & (1 << j) != 0 {
                    key |= 1 << (perm[i] * n + perm[j]);
                }
            }
        }
        best = best.min(key);
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_and_antichain_are_posets() {
        FinitePoset::chain(4).check().unwrap();
        FinitePoset::antichain(4).check().unwrap();
    }

    #[test]
    fn rejects_cycle() {
        // 0 <= 1 and 1 <= 0 on distinct points.
        let leq = vec![true, true, true, true];
        assert!(FinitePoset::new(2, leq).is_err());
    }

    #[test]
    fn rejects_missing_transitivity() {
        let mut p = FinitePoset::chain(3);
        p.leq[0 * 3 + 2] = false;
        assert!(p.check().is_err());
    }

    #[test]
    fn up_sets_of_two_chain() {
        // Points 0 < 1; up-sets are {}, {1}, {0,1}.
        let p = FinitePoset::chain(2);
        assert_eq!(p.up_sets(), vec![0b00, 0b10, 0b11]);
    }

    #[test]
    fn iso_class_counts_match_known_enumeration() {
        // Unlabeled posets on 1..5 points.
        let expect = [1usize, 2, 5, 16, 63];
        for (i, &want) in expect.iter().enumerate() {
            assert_eq!(posets_up_to_iso(i + 1).len(), want, "points = {}", i + 1);
        }
    }

    #[test]
    fn chain_not_isomorphic_to_antichain() {
        assert!(poset_isomorphic(&FinitePoset::chain(3), &FinitePoset::antichain(3)).is_none());
        assert!(poset_isomorphic(&FinitePoset::chain(3), &FinitePoset::chain(3)).is_some());
    }
}
