//! Finite Heyting algebras with dense element indices and materialized
//! operation tables.
//!
//! An algebra is immutable once built, so the rest of the crate shares it via
//! `Arc` and works with plain element indices. Powers of an algebra are never
//! materialized; modules that need them (enrichment, duality) work through
//! operation oracles instead.

mod catalog;
mod closure;
mod filter;
mod hom;
mod poset;
mod validate;

pub use catalog::{catalog, CatalogEntry};
pub use closure::{
    generated_subalgebra, subalgebra_of, BinOp, GeneratedSubalgebra, OpsOracle, BIN_OPS,
};
pub use filter::{
    filter_generated, filter_generated_by, filter_satisfies_invariants, quotient_by_filter,
    Filter, Quotient,
};
pub use hom::{all_homomorphisms, is_isomorphic, same_algebra, Homomorphism};
pub use poset::{poset_isomorphic, posets_up_to_iso, FinitePoset};
pub use validate::{validate, AxiomGroup, GroupReport, RawTables, ValidationReport, AXIOM_GROUPS};

use crate::error::{Error, Result};
use std::sync::Arc;

/// A finite Heyting algebra: bounded distributive lattice with relative
/// pseudocomplement, all five tables materialized.
///
/// Elements are `0..size()`. The one-element algebra is a legal value;
/// operations that need `bot != top` check [`is_degenerate`](Self::is_degenerate)
/// and fail with [`Error::Degenerate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteHeytingAlgebra {
    n: usize,
    names: Option<Vec<String>>,
    leq: Vec<bool>,
    meet: Vec<usize>,
    join: Vec<usize>,
    imp: Vec<usize>,
    bot: usize,
    top: usize,
}

impl FiniteHeytingAlgebra {
    /// Builds from candidate tables, accepting only inputs that pass every
    /// axiom group.
    pub fn from_tables(raw: RawTables, names: Option<Vec<String>>) -> Result<Self> {
        let report = validate(&raw);
        if let Some(fail) = report.first_failure() {
            return Err(Error::Validation(format!(
                "{:?} axioms fail at {:?}: {}",
                fail.group,
                fail.evidence.unwrap_or((0, 0, 0)),
                fail.detail.clone().unwrap_or_default()
            )));
        }
        if let Some(ref ns) = names {
            if ns.len() != raw.n {
                return Err(Error::Validation("name list length mismatch".into()));
            }
        }
        Ok(FiniteHeytingAlgebra {
            n: raw.n,
            names,
            leq: raw.leq,
            meet: raw.meet,
            join: raw.join,
            imp: raw.imp,
            bot: raw.bot,
            top: raw.top,
        })
    }

    /// Builds from an order matrix alone. All operation tables are computed
    /// from the order, never trusted from input; fails if some pair lacks a
    /// greatest lower bound or least upper bound, if the lattice is not
    /// distributive, or if residuation cannot hold.
    pub fn from_order(n: usize, leq: Vec<bool>, names: Option<Vec<String>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Validation("empty carrier".into()));
        }
        if leq.len() != n * n {
            return Err(Error::Validation("order matrix size mismatch".into()));
        }
        let le = |x: usize, y: usize| leq[x * n + y];
        let mut meet = vec![0usize; n * n];
        let mut join = vec![0usize; n * n];
        for x in 0..n {
            for y in 0..n {
                let mut glb = None;
                let mut lub = None;
                for z in 0..n {
                    if le(z, x) && le(z, y) && (0..n).all(|w| !(le(w, x) && le(w, y)) || le(w, z)) {
                        glb = Some(z);
                    }
                    if le(x, z) && le(y, z) && (0..n).all(|w| !(le(x, w) && le(y, w)) || le(z, w)) {
                        lub = Some(z);
                    }
                }
                match (glb, lub) {
                    (Some(m), Some(j)) => {
                        meet[x * n + y] = m;
                        join[x * n + y] = j;
                    }
                    _ => {
                        return Err(Error::Validation(format!(
                            "elements {x} and {y} lack a meet or join"
                        )))
                    }
                }
            }
        }
        // Relative pseudocomplement: y -> z is the largest x with x /\ y <= z.
        let mut imp = vec![0usize; n * n];
        for y in 0..n {
            for z in 0..n {
                let mut best = None;
                for x in 0..n {
                    if !le(meet[x * n + y], z) {
                        continue;
                    }
                    best = Some(match best {
                        None => x,
                        Some(b) => join[x * n + b],
                    });
                }
                let r = best.ok_or_else(|| {
                    Error::Validation(format!("no candidate for {y} -> {z}"))
                })?;
                imp[y * n + z] = r;
            }
        }
        let bot = (0..n)
            .find(|&b| (0..n).all(|x| le(b, x)))
            .ok_or_else(|| Error::Validation("no bottom element".into()))?;
        let top = (0..n)
            .find(|&t| (0..n).all(|x| le(x, t)))
            .ok_or_else(|| Error::Validation("no top element".into()))?;
        Self::from_tables(RawTables { n, leq, meet, join, imp, bot, top }, names)
    }

    /// Up-set algebra of a poset: elements are the up-closed point sets in
    /// ascending bitmask order, meet is intersection, join is union, and
    /// `U -> V` is the complement of the down-closure of `U \ V`.
    pub fn from_poset(p: &FinitePoset) -> Result<Arc<Self>> {
        p.check()?;
        let masks = p.up_sets();
        let n = masks.len();
        let pos = |m: u32| masks.binary_search(&m).expect("ops stay inside the up-sets");
        let full: u32 = masks[n - 1];
        let down_closure = |m: u32| -> u32 {
            let mut out = 0u32;
            for i in 0..p.points {
                if (0..p.points).any(|j| m & (1 << j) != 0 && p.le(i, j)) {
                    out |= 1 << i;
                }
            }
            out
        };
        let mut leq = vec![false; n * n];
        let mut meet = vec![0usize; n * n];
        let mut join = vec![0usize; n * n];
        let mut imp = vec![0usize; n * n];
        for x in 0..n {
            for y in 0..n {
                leq[x * n + y] = masks[x] & !masks[y] == 0;
                meet[x * n + y] = pos(masks[x] & masks[y]);
                join[x * n + y] = pos(masks[x] | masks[y]);
                imp[x * n + y] = pos(full & !down_closure(masks[x] & !masks[y]));
            }
        }
        let names = masks.iter().map(|&m| mask_name(p.points, m)).collect();
        let alg = Self::from_tables(
            RawTables { n, leq, meet, join, imp, bot: 0, top: n - 1 },
            Some(names),
        )?;
        Ok(Arc::new(alg))
    }

    /// The k-element chain.
    pub fn chain(k: usize) -> Arc<Self> {
        assert!(k >= 1);
        let mut leq = vec![false; k * k];
        let mut meet = vec![0usize; k * k];
        let mut join = vec![0usize; k * k];
        let mut imp = vec![0usize; k * k];
        for x in 0..k {
            for y in 0..k {
                leq[x * k + y] = x <= y;
                meet[x * k + y] = x.min(y);
                join[x * k + y] = x.max(y);
                imp[x * k + y] = if x <= y { k - 1 } else { y };
            }
        }
        Arc::new(FiniteHeytingAlgebra {
            n: k,
            names: None,
            leq,
            meet,
            join,
            imp,
            bot: 0,
            top: k - 1,
        })
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.n + y]
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.n + y]
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.n + y]
    }

    #[inline]
    pub fn imp(&self, x: usize, y: usize) -> usize {
        self.imp[x * self.n + y]
    }

    /// `(x -> y) /\ (y -> x)`; the largest element whose meet with x and
    /// with y agree.
    #[inline]
    pub fn biimp(&self, x: usize, y: usize) -> usize {
        self.meet(self.imp(x, y), self.imp(y, x))
    }

    #[inline]
    pub fn bot(&self) -> usize {
        self.bot
    }

    #[inline]
    pub fn top(&self) -> usize {
        self.top
    }

    pub fn is_degenerate(&self) -> bool {
        self.n == 1
    }

    pub fn apply(&self, op: BinOp, x: usize, y: usize) -> usize {
        match op {
            BinOp::Meet => self.meet(x, y),
            BinOp::Join => self.join(x, y),
            BinOp::Impl => self.imp(x, y),
        }
    }

    /// Display name of an element; falls back to `e{i}`.
    pub fn name_of(&self, x: usize) -> String {
        match &self.names {
            Some(ns) => ns[x].clone(),
            None => format!("e{x}"),
        }
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Resolves an element by name, falling back to a numeric index.
    pub fn element_by_name(&self, s: &str) -> Option<usize> {
        if let Some(ns) = &self.names {
            if let Some(i) = ns.iter().position(|n| n == s) {
                return Some(i);
            }
        }
        match s.parse::<usize>() {
            Ok(i) if i < self.n => Some(i),
            _ => None,
        }
    }

    /// Covering pairs `(x, y)` with x < y and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                if x == y || !self.leq(x, y) {
                    continue;
                }
                let strict_between = (0..self.n)
                    .any(|z| z != x && z != y && self.leq(x, z) && self.leq(z, y));
                if !strict_between {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn raw_tables(&self) -> RawTables {
        RawTables {
            n: self.n,
            leq: self.leq.clone(),
            meet: self.meet.clone(),
            join: self.join.clone(),
            imp: self.imp.clone(),
            bot: self.bot,
            top: self.top,
        }
    }

    /// Per-element order profile used to prune isomorphism search:
    /// (down-set size, up-set size, covers above, covers below).
    pub(crate) fn profile(&self, x: usize) -> (usize, usize, usize, usize) {
        let down = (0..self.n).filter(|&z| self.leq(z, x)).count();
        let up = (0..self.n).filter(|&z| self.leq(x, z)).count();
        let covers = self.covers();
        let above = covers.iter().filter(|&&(a, _)| a == x).count();
        let below = covers.iter().filter(|&&(_, b)| b == x).count();
        (down, up, above, below)
    }
}

fn mask_name(points: usize, mask: u32) -> String {
    if mask == 0 {
        return "{}".to_string();
    }
    let mut parts = Vec::new();
    for i in 0..points {
        if mask & (1 << i) != 0 {
            parts.push(i.to_string());
        }
    }
    format!("{{{}}}", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The five-element nondistributive diamond: 0 below atoms a, b, c below 1.
    fn m3_tables() -> RawTables {
        let n = 5;
        let (bot, top) = (0usize, 4usize);
        let atoms = [1usize, 2, 3];
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
            leq[bot * n + i] = true;
            leq[i * n + top] = true;
        }
        let mut meet = vec![0usize; n * n];
        let mut join = vec![0usize; n * n];
        for x in 0..n {
            for y in 0..n {
                meet[x * n + y] = if leq[x * n + y] {
                    x
                } else if leq[y * n + x] {
                    y
                } else {
                    bot
                };
                join[x * n + y] = if leq[x * n + y] {
                    y
                } else if leq[y * n + x] {
                    x
                } else {
                    top
                };
            }
        }
        // Candidate residual; the lattice is not distributive, so no choice
        // of table can make residuation hold.
        let mut imp = vec![0usize; n * n];
        for y in 0..n {
            for z in 0..n {
                let mut best = bot;
                for x in 0..n {
                    if leq[meet[x * n + y] * n + z] {
                        best = join[best * n + x];
                    }
                }
                imp[y * n + z] = best;
            }
        }
        let _ = atoms;
        RawTables { n, leq, meet, join, imp, bot, top }
    }

    #[test]
    fn m3_fails_distributivity() {
        let report = validate(&m3_tables());
        let dist = report
            .groups
            .iter()
            .find(|g| g.group == AxiomGroup::Distributivity)
            .unwrap();
        assert!(!dist.pass);
        assert!(dist.evidence.is_some());
        assert!(!report.ok());
    }

    #[test]
    fn broken_implication_is_flagged() {
        // 3-chain with imp(m, 0) altered from 0 to m.
        let c3 = FiniteHeytingAlgebra::chain(3);
        let mut raw = c3.raw_tables();
        raw.imp[1 * 3 + 0] = 1;
        let report = validate(&raw);
        let res = report
            .groups
            .iter()
            .find(|g| g.group == AxiomGroup::Residuation)
            .unwrap();
        assert!(!res.pass);
    }

    #[test]
    fn chain_tables_validate() {
        for k in 1..=6 {
            let c = FiniteHeytingAlgebra::chain(k);
            assert!(validate(&c.raw_tables()).ok(), "chain {k}");
        }
    }

    #[test]
    fn up_set_algebra_of_two_antichain_is_boolean_four() {
        let b4 = FiniteHeytingAlgebra::from_poset(&FinitePoset::antichain(2)).unwrap();
        assert_eq!(b4.size(), 4);
        // Complement of each atom is the other atom.
        let a = 1;
        let b = 2;
        assert_eq!(b4.imp(a, b4.bot()), b);
        assert_eq!(b4.imp(b, b4.bot()), a);
        assert_eq!(b4.join(a, b), b4.top());
        assert_eq!(b4.meet(a, b), b4.bot());
    }

    #[test]
    fn up_set_algebra_of_one_point_is_two_chain() {
        let h = FiniteHeytingAlgebra::from_poset(&FinitePoset::antichain(1)).unwrap();
        assert_eq!(h.size(), 2);
        assert_eq!(h.bot(), 0);
        assert_eq!(h.top(), 1);
    }

    #[test]
    fn from_order_recomputes_tables() {
        let c3 = FiniteHeytingAlgebra::chain(3);
        let h = FiniteHeytingAlgebra::from_order(3, c3.raw_tables().leq, None).unwrap();
        assert_eq!(h.raw_tables().imp, c3.raw_tables().imp);
    }

    #[test]
    fn degenerate_algebra_is_legal() {
        let one = FiniteHeytingAlgebra::chain(1);
        assert!(one.is_degenerate());
        assert_eq!(one.bot(), one.top());
    }

    #[test]
    fn covers_of_boolean_four() {
        let b4 = FiniteHeytingAlgebra::from_poset(&FinitePoset::antichain(2)).unwrap();
        assert_eq!(b4.covers(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }
}
