//! Worklist closure of a generator set under the lattice operations, generic
//! over the carrier so that powers of an algebra never have to be
//! materialized.

use crate::error::{Error, Result};
use crate::terms::Formula;
use std::collections::HashMap;
use std::hash::Hash;

use super::FiniteHeytingAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BinOp {
    Meet,
    Join,
    Impl,
}

pub const BIN_OPS: [BinOp; 3] = [BinOp::Meet, BinOp::Join, BinOp::Impl];

/// Operations of an ambient algebra, addressed by value rather than by index.
/// Implementations exist for plain algebras and for pointwise map spaces.
pub trait OpsOracle {
    type Elem: Clone + Eq + Hash + Ord;

    fn bot(&self) -> Self::Elem;
    fn top(&self) -> Self::Elem;
    fn apply(&self, op: BinOp, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
}

/// A finite subalgebra produced by closure, with one generating formula per
/// element.
///
/// Provenance formulas are first-found, not minimal: variable `i` stands for
/// generator `i`, and `Bot`/`Top` leaves stand for the ambient bounds.
#[derive(Clone, Debug)]
pub struct GeneratedSubalgebra<E: Clone + Eq + Hash> {
    pub elements: Vec<E>,
    pub provenance: Vec<Formula>,
    index: HashMap<E, usize>,
}

impl<E: Clone + Eq + Hash> GeneratedSubalgebra<E> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }
}

/// Closes `generators` under meet, join, implication, bot, and top.
///
/// Deterministic: elements are discovered in worklist order (bot, top,
/// generators, then operation results in a fixed sweep), so two runs produce
/// identical element numbering. Fails with `CapExceeded` as soon as the
/// closure grows past `cap`.
pub fn generated_subalgebra<O: OpsOracle>(
    oracle: &O,
    generators: &[O::Elem],
    cap: usize,
) -> Result<GeneratedSubalgebra<O::Elem>> {
    let mut elements: Vec<O::Elem> = Vec::new();
    let mut provenance: Vec<Formula> = Vec::new();
    let mut index: HashMap<O::Elem, usize> = HashMap::new();

    let push = |e: O::Elem,
                    f: Formula,
                    elements: &mut Vec<O::Elem>,
                    provenance: &mut Vec<Formula>,
                    index: &mut HashMap<O::Elem, usize>|
     -> Result<bool> {
        if index.contains_key(&e) {
            return Ok(false);
        }
        if elements.len() >= cap {
            return Err(Error::CapExceeded(cap));
        }
        index.insert(e.clone(), elements.len());
        elements.push(e);
        provenance.push(f);
        Ok(true)
    };

    push(oracle.bot(), Formula::Bot, &mut elements, &mut provenance, &mut index)?;
    push(oracle.top(), Formula::Top, &mut elements, &mut provenance, &mut index)?;
    for (i, g) in generators.iter().enumerate() {
        push(
            g.clone(),
            Formula::Var(i as u32),
            &mut elements,
            &mut provenance,
            &mut index,
        )?;
    }

    // Sweep all pairs with at least one operand at or past the previous
    // boundary; repeats until a full sweep adds nothing.
    let mut boundary = 0usize;
    loop {
        let len = elements.len();
        if boundary == len {
            break;
        }
        for i in 0..len {
            for j in 0..len {
                if i < boundary && j < boundary {
                    continue;
                }
                for op in BIN_OPS {
                    let e = oracle.apply(op, &elements[i], &elements[j]);
                    if !index.contains_key(&e) {
                        let f = Formula::op(op, provenance[i].clone(), provenance[j].clone());
                        push(e, f, &mut elements, &mut provenance, &mut index)?;
                    }
                }
            }
        }
        boundary = len;
    }

    Ok(GeneratedSubalgebra { elements, provenance, index })
}

impl OpsOracle for FiniteHeytingAlgebra {
    type Elem = usize;

    fn bot(&self) -> usize {
        FiniteHeytingAlgebra::bot(self)
    }

    fn top(&self) -> usize {
        FiniteHeytingAlgebra::top(self)
    }

    fn apply(&self, op: BinOp, x: &usize, y: &usize) -> usize {
        FiniteHeytingAlgebra::apply(self, op, *x, *y)
    }
}

/// Subalgebra of `h` generated by the given elements.
pub fn subalgebra_of(
    h: &FiniteHeytingAlgebra,
    generators: &[usize],
    cap: usize,
) -> Result<GeneratedSubalgebra<usize>> {
    generated_subalgebra(h, generators, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FinitePoset, FiniteHeytingAlgebra};

    #[test]
    fn whole_algebra_from_atoms() {
        let b4 = FiniteHeytingAlgebra::from_poset(&FinitePoset::antichain(2)).unwrap();
        let sub = subalgebra_of(&b4, &[1, 2], 16).unwrap();
        assert_eq!(sub.len(), 4);
    }

    #[test]
    fn bounds_only_without_generators() {
        let c3 = FiniteHeytingAlgebra::chain(3);
        let sub = subalgebra_of(&c3, &[], 16).unwrap();
        assert_eq!(sub.elements, vec![0, 2]);
        assert_eq!(sub.provenance, vec![Formula::Bot, Formula::Top]);
    }

    #[test]
    fn cap_is_enforced() {
        let b4 = FiniteHeytingAlgebra::from_poset(&FinitePoset::antichain(2)).unwrap();
        match subalgebra_of(&b4, &[1, 2], 3) {
            Err(Error::CapExceeded(3)) => {}
            other => panic!("expected CapExceeded, got {other:?}"),
        }
    }

    #[test]
    fn closure_is_closed() {
        let h = FiniteHeytingAlgebra::from_poset(&FinitePoset::chain(3)).unwrap();
        let sub = subalgebra_of(&h, &[1], 64).unwrap();
        for &x in &sub.elements {
            for &y in &sub.elements {
                for op in BIN_OPS {
                    let z = h.apply(op, x, y);
                    assert!(sub.index_of(&z).is_some());
                }
            }
        }
    }

    /// Pairs of 3-chain elements with componentwise operations; the closure
    /// of the diagonal plus (m, 1) must be the five maps checked by hand.
    struct PairOracle {
        h: std::sync::Arc<FiniteHeytingAlgebra>,
    }

    impl OpsOracle for PairOracle {
        type Elem = (usize, usize);

        fn bot(&self) -> (usize, usize) {
            (self.h.bot(), self.h.bot())
        }

        fn top(&self) -> (usize, usize) {
            (self.h.top(), self.h.top())
        }

        fn apply(&self, op: BinOp, x: &(usize, usize), y: &(usize, usize)) -> (usize, usize) {
            (self.h.apply(op, x.0, y.0), self.h.apply(op, x.1, y.1))
        }
    }

    #[test]
    fn pair_closure_over_three_chain() {
        let oracle = PairOracle { h: FiniteHeytingAlgebra::chain(3) };
        let gens = vec![(0, 0), (1, 1), (2, 2), (1, 2)];
        let sub = generated_subalgebra(&oracle, &gens, 64).unwrap();
        let mut got = sub.elements.clone();
        got.sort();
        assert_eq!(got, vec![(0, 0), (1, 1), (1, 2), (2, 1), (2, 2)]);

        // Independent fixpoint loop over the 9-element pair space.
        let mut set: Vec<(usize, usize)> = gens.clone();
        set.push((0, 0));
        set.push((2, 2));
        set.sort();
        set.dedup();
        loop {
            let mut grew = false;
            let snapshot = set.clone();
            for &x in &snapshot {
                for &y in &snapshot {
                    for op in BIN_OPS {
                        let z = oracle.apply(op, &x, &y);
                        if !set.contains(&z) {
                            set.push(z);
                            grew = true;
                        }
                    }
                }
            }
            if !grew {
                break;
            }
        }
        set.sort();
        assert_eq!(set, got);
    }
}
