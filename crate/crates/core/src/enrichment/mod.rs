//! One-step enrichment of a finite Heyting algebra at an anchor element.
//!
//! The construction runs in three moves. First close the identity map on the
//! dense-over-`a` coordinates, together with all constant maps, under the
//! pointwise operations inside the finite power; the result is a subalgebra
//! with one generating formula per element. Second, generate a filter from
//! the implications of the identity map into the dense elements. Third,
//! divide by that filter. The quotient contains an isomorphic copy of the
//! original algebra in which the class of the identity map is the least
//! element dense over the anchor's image.
//!
//! Every theorem-shaped property of the construction is asserted at build
//! time, so a successfully returned value has already survived the full
//! check battery on its own tables.

mod extend;
mod free;
mod witness;

pub use extend::{commute_iso, extend_hom};
pub use free::{free_one_generator, point_evaluation};
pub use witness::{compose_witnesses, witness_for_onestep, PowerPoint, Witness};

use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::{
    filter_generated, generated_subalgebra, quotient_by_filter, BinOp, FiniteHeytingAlgebra,
    Filter, Homomorphism, OpsOracle, Quotient, RawTables,
};
use crate::density::{delta_min, dense_over, km_from_heyting, KMAlgebra};
use crate::error::{Error, Result};
use crate::terms::{eval_in, Formula};

/// Maps out of a fixed coordinate list, with the operations of the base
/// algebra applied slotwise. Elements are never materialized beyond the
/// ones the closure actually reaches.
struct PointwisePower<'a> {
    base: &'a FiniteHeytingAlgebra,
    coords: usize,
}

impl OpsOracle for PointwisePower<'_> {
    type Elem = Vec<u8>;

    fn bot(&self) -> Vec<u8> {
        vec![self.base.bot() as u8; self.coords]
    }

    fn top(&self) -> Vec<u8> {
        vec![self.base.top() as u8; self.coords]
    }

    fn apply(&self, op: BinOp, x: &Vec<u8>, y: &Vec<u8>) -> Vec<u8> {
        x.iter()
            .zip(y)
            .map(|(&a, &b)| self.base.apply(op, a as usize, b as usize) as u8)
            .collect()
    }
}

/// A subalgebra of a finite power of the base, carried as explicit map
/// tables over an ordered coordinate list, together with materialized
/// operation tables over the element ids.
///
/// Invariants, all enforced at construction time:
/// - closed under pointwise meet, join, and implication, and contains the
///   constant map of every base element;
/// - the distinguished element `iota` sends each coordinate to itself;
/// - every element's map equals the pointwise evaluation of its provenance
///   formula, where variable 0 stands for `iota` and variable `i + 1` for
///   the constant map of base element `i`.
#[derive(Clone, Debug)]
pub struct EnrichedAlgebra {
    pub base: Arc<FiniteHeytingAlgebra>,
    /// Element the coordinate list is dense over; `None` when the
    /// coordinates range over the whole base.
    pub anchor: Option<usize>,
    /// Coordinates of the ambient power, as ascending base element ids.
    pub index_set: Vec<usize>,
    /// One value table per element; `maps[x][p]` is the value of element
    /// `x` at the coordinate `index_set[p]`.
    pub maps: Vec<Vec<u8>>,
    /// Generating formula per element, first-found rather than minimal.
    pub provenance: Vec<Formula>,
    /// Element id of the identity map on the coordinate list.
    pub iota: usize,
    /// The same subalgebra with its tables spelled out, for reuse by
    /// filters, quotients, and homomorphism checks.
    pub algebra: Arc<FiniteHeytingAlgebra>,
    /// Element id of each base element's constant map.
    constants: Vec<usize>,
    lookup: HashMap<Vec<u8>, usize>,
}

impl EnrichedAlgebra {
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn map_of(&self, x: usize) -> &[u8] {
        &self.maps[x]
    }

    pub fn id_of_map(&self, m: &[u8]) -> Option<usize> {
        self.lookup.get(m).copied()
    }

    /// Element id of the constant map at base element `h`.
    pub fn constant(&self, h: usize) -> usize {
        self.constants[h]
    }

    /// Position of a base element inside the coordinate list.
    pub fn coord_of(&self, base_elem: usize) -> Option<usize> {
        self.index_set.binary_search(&base_elem).ok()
    }

    /// Slot of the base's top element; always present because top is dense
    /// over everything.
    pub fn top_slot(&self) -> usize {
        self.coord_of(self.base.top())
            .expect("the coordinate list always holds top")
    }

    /// Pointwise operation on raw map tables.
    fn pointwise(&self, op: BinOp, x: &[u8], y: &[u8]) -> Vec<u8> {
        x.iter()
            .zip(y)
            .map(|(&a, &b)| self.base.apply(op, a as usize, b as usize) as u8)
            .collect()
    }
}

/// Closes the distinguished map and all constants under the pointwise
/// operations and materializes the result. Shared by the anchored and the
/// free construction; `index_set` must be ascending and end at top.
pub(crate) fn build_power_closure(
    base: &Arc<FiniteHeytingAlgebra>,
    anchor: Option<usize>,
    index_set: Vec<usize>,
    distinguished: Vec<u8>,
    cap: usize,
) -> Result<EnrichedAlgebra> {
    let n = base.size();
    assert!(n <= u8::MAX as usize, "map tables hold element ids as bytes");
    debug_assert!(index_set.contains(&base.top()));
    let k = index_set.len();

    let oracle = PointwisePower { base, coords: k };
    let mut gens: Vec<Vec<u8>> = Vec::with_capacity(n + 1);
    gens.push(distinguished.clone());
    for h in 0..n {
        gens.push(vec![h as u8; k]);
    }
    let closure = generated_subalgebra(&oracle, &gens, cap)?;

    let maps = closure.elements.clone();
    let provenance = closure.provenance.clone();
    let ne = maps.len();
    let iota = closure
        .index_of(&distinguished)
        .expect("the distinguished generator survives closure");
    let constants: Vec<usize> = (0..n)
        .map(|h| {
            closure
                .index_of(&vec![h as u8; k])
                .expect("constant generators survive closure")
        })
        .collect();

    // Spell out the quotientable tables once; every pointwise result must
    // already be a known element, otherwise the closure missed something.
    let id_of = |m: &Vec<u8>| closure.index_of(m).expect("closure is closed under the operations");
    let mut leq = vec![false; ne * ne];
    let mut meet = vec![0usize; ne * ne];
    let mut join = vec![0usize; ne * ne];
    let mut imp = vec![0usize; ne * ne];
    for x in 0..ne {
        for y in 0..ne {
            leq[x * ne + y] = maps[x]
                .iter()
                .zip(&maps[y])
                .all(|(&a, &b)| base.leq(a as usize, b as usize));
            for (op, table) in [
                (BinOp::Meet, &mut meet),
                (BinOp::Join, &mut join),
                (BinOp::Impl, &mut imp),
            ] {
                table[x * ne + y] = id_of(&oracle.apply(op, &maps[x], &maps[y]));
            }
        }
    }
    let names: Vec<String> = maps
        .iter()
        .map(|m| {
            let parts: Vec<String> = m.iter().map(|&v| base.name_of(v as usize)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let algebra = Arc::new(FiniteHeytingAlgebra::from_tables(
        RawTables {
            n: ne,
            leq,
            meet,
            join,
            imp,
            bot: id_of(&oracle.bot()),
            top: id_of(&oracle.top()),
        },
        Some(names),
    )?);

    let mut lookup = HashMap::with_capacity(ne);
    for (i, m) in maps.iter().enumerate() {
        lookup.insert(m.clone(), i);
    }

    let out = EnrichedAlgebra {
        base: base.clone(),
        anchor,
        index_set,
        maps,
        provenance,
        iota,
        algebra,
        constants,
        lookup,
    };
    verify_provenance(&out)?;
    verify_meet_transport(&out)?;
    verify_implication_collapse(&out)?;
    Ok(out)
}

/// Every element's map must equal its provenance formula evaluated
/// slotwise, with variable 0 reading the distinguished map's value at the
/// slot and variable `i + 1` reading base element `i`.
fn verify_provenance(e: &EnrichedAlgebra) -> Result<()> {
    let n = e.base.size();
    let mut assignment: Vec<usize> = Vec::with_capacity(n + 1);
    assignment.push(0);
    assignment.extend(0..n);
    for (x, f) in e.provenance.iter().enumerate() {
        for (p, _) in e.index_set.iter().enumerate() {
            assignment[0] = e.maps[e.iota][p] as usize;
            let v = eval_in(f, &e.base, &assignment)?;
            if v != e.maps[x][p] as usize {
                return Err(Error::ContractViolation(format!(
                    "provenance of element {x} evaluates to {} at coordinate {} but the map holds {}",
                    e.base.name_of(v),
                    e.base.name_of(e.index_set[p]),
                    e.base.name_of(e.maps[x][p] as usize)
                )));
            }
        }
    }
    Ok(())
}

/// Meets transport through every element: if h∧x = h∧y for coordinates x, y
/// then h∧η(x) = h∧η(y). Each element is a one-variable polynomial of the
/// distinguished map, which is exactly why this holds.
fn verify_meet_transport(e: &EnrichedAlgebra) -> Result<()> {
    let b = &e.base;
    let k = e.index_set.len();
    for (id, m) in e.maps.iter().enumerate() {
        for xp in 0..k {
            for yp in 0..k {
                let x = e.index_set[xp];
                let y = e.index_set[yp];
                for h in 0..b.size() {
                    if b.meet(h, x) != b.meet(h, y) {
                        continue;
                    }
                    if b.meet(h, m[xp] as usize) != b.meet(h, m[yp] as usize) {
                        return Err(Error::TheoremViolation {
                            part: "meet-transport",
                            detail: format!(
                                "element {} at h = {}, x = {}, y = {}",
                                e.algebra.name_of(id),
                                b.name_of(h),
                                b.name_of(x),
                                b.name_of(y)
                            ),
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Implication out of the distinguished map sees only the top slot of its
/// argument: ι⇒η equals ι⇒c where c is the constant at η's value on the
/// top coordinate.
fn verify_implication_collapse(e: &EnrichedAlgebra) -> Result<()> {
    let iota = e.maps[e.iota].clone();
    let top_slot = e.top_slot();
    for (id, m) in e.maps.iter().enumerate() {
        let collapsed = vec![m[top_slot]; e.index_set.len()];
        let lhs = e.pointwise(BinOp::Impl, &iota, m);
        let rhs = e.pointwise(BinOp::Impl, &iota, &collapsed);
        if lhs != rhs {
            return Err(Error::TheoremViolation {
                part: "implication-collapse",
                detail: format!(
                    "ι⇒{} differs from ι⇒{}",
                    e.algebra.name_of(id),
                    e.base.name_of(m[top_slot] as usize)
                ),
            });
        }
    }
    Ok(())
}

/// Closes the identity map on the coordinates dense over `a`, together with
/// all constants, inside the corresponding power of `h`.
pub fn build_iota_algebra(
    h: &Arc<FiniteHeytingAlgebra>,
    a: usize,
    cap: usize,
) -> Result<EnrichedAlgebra> {
    if a >= h.size() {
        return Err(Error::DomainError(format!(
            "anchor {a} out of range for a {}-element algebra",
            h.size()
        )));
    }
    let dense = dense_over(h, a);
    let index_set = dense.members;
    let distinguished: Vec<u8> = index_set.iter().map(|&d| d as u8).collect();
    build_power_closure(h, Some(a), index_set, distinguished, cap)
}

/// Elements whose map lands pointwise inside the coordinate list. For an
/// anchored enrichment these are exactly the elements dense over the
/// anchor's constant inside the subalgebra.
pub fn dense_in_iota(e: &EnrichedAlgebra) -> Vec<usize> {
    (0..e.len())
        .filter(|&x| {
            e.maps[x]
                .iter()
                .all(|&v| e.index_set.binary_search(&(v as usize)).is_ok())
        })
        .collect()
}

/// Filter generated by the implications of the identity map into the dense
/// elements. Computed twice, once from all dense elements and once from the
/// constant ones only, and the two runs must agree; the generating subset
/// must also be closed under pairwise meets.
pub fn build_fa(e: &EnrichedAlgebra) -> Result<Filter> {
    let iota = e.maps[e.iota].clone();
    let dense = dense_in_iota(e);

    let full_maps: Vec<Vec<u8>> = dense
        .iter()
        .map(|&d| e.pointwise(BinOp::Impl, &iota, &e.maps[d]))
        .collect();
    let gen_set: std::collections::HashSet<&Vec<u8>> = full_maps.iter().collect();
    for x in &full_maps {
        for y in &full_maps {
            let m = e.pointwise(BinOp::Meet, x, y);
            if !gen_set.contains(&m) {
                return Err(Error::GeneratorMismatch(format!(
                    "meet of two generators escapes the generating set at {m:?}"
                )));
            }
        }
    }

    let full_ids: Vec<usize> = full_maps
        .iter()
        .map(|m| e.id_of_map(m).expect("the subalgebra is closed under implication"))
        .collect();
    let constant_ids: Vec<usize> = e
        .index_set
        .iter()
        .map(|&d| {
            let m = e.pointwise(BinOp::Impl, &iota, &vec![d as u8; e.index_set.len()]);
            e.id_of_map(&m).expect("the subalgebra is closed under implication")
        })
        .collect();

    let full = filter_generated(&e.algebra, &full_ids);
    let constant = filter_generated(&e.algebra, &constant_ids);
    if full.members != constant.members {
        return Err(Error::GeneratorMismatch(format!(
            "dense generators give {:?}, constant generators give {:?}",
            full.members, constant.members
        )));
    }
    Ok(full)
}

/// Everything the one-step construction produces, checked and ready:
/// the enriched subalgebra, the filter on it, the quotient with its class
/// partition and projection, the embedding of the base, and the class of
/// the identity map.
#[derive(Clone, Debug)]
pub struct OneStepResult {
    pub enriched: EnrichedAlgebra,
    pub fa: Filter,
    pub quotient: Quotient,
    /// Composite of the base into the quotient through the constant maps.
    pub embedding: Homomorphism,
    /// Class of the identity map; the least element dense over the
    /// anchor's image.
    pub delta_class: usize,
}

impl OneStepResult {
    pub fn algebra(&self) -> &Arc<FiniteHeytingAlgebra> {
        &self.quotient.algebra
    }

    /// Projection of the enriched subalgebra onto the quotient.
    pub fn pi(&self) -> &Homomorphism {
        &self.quotient.projection
    }

    pub fn anchor(&self) -> usize {
        self.enriched.anchor.expect("a one-step result always carries its anchor")
    }
}

/// Runs the full construction at anchor `a` and proves out every claimed
/// property of the result before returning it:
///
/// - the class of the identity map is the least element dense over the
///   image of `a`;
/// - the embedding of the base is injective, and a constant lands in the
///   class of top only when it is top;
/// - the least dense element over every image is the image of the least
///   dense element, so the whole density structure transports;
/// - the self-application bound holds for every dense element of the
///   subalgebra.
pub fn one_step(h: &Arc<FiniteHeytingAlgebra>, a: usize, cap: usize) -> Result<OneStepResult> {
    let enriched = build_iota_algebra(h, a, cap)?;
    let fa = build_fa(&enriched)?;

    // Self-application bound: a dense element evaluated at top lands in
    // the coordinate list, and evaluating again at that slot can only go up.
    let top_slot = enriched.top_slot();
    for d in dense_in_iota(&enriched) {
        let at_top = enriched.maps[d][top_slot] as usize;
        let slot = enriched
            .coord_of(at_top)
            .expect("dense elements take values inside the coordinate list");
        let again = enriched.maps[d][slot] as usize;
        if !h.leq(at_top, again) {
            return Err(Error::TheoremViolation {
                part: "dense-self-bound",
                detail: format!(
                    "element {} evaluates to {} at top but to {} at that slot",
                    enriched.algebra.name_of(d),
                    h.name_of(at_top),
                    h.name_of(again)
                ),
            });
        }
    }

    let quotient = quotient_by_filter(&enriched.algebra, &fa)?;
    if !quotient.projection.is_surjective() {
        return Err(Error::ContractViolation("quotient projection must be onto".into()));
    }

    let map: Vec<usize> = (0..h.size())
        .map(|x| quotient.class_of[enriched.constant(x)])
        .collect();
    let embedding = Homomorphism::verified(h.clone(), quotient.algebra.clone(), map)?;
    if !embedding.is_injective() {
        return Err(Error::TheoremViolation {
            part: "b",
            detail: "two constants fall into one class".into(),
        });
    }
    let top_class = quotient.class_of[enriched.constant(h.top())];
    for x in 0..h.size() {
        let in_top = quotient.class_of[enriched.constant(x)] == top_class;
        if in_top != (x == h.top()) {
            return Err(Error::TheoremViolation {
                part: "b",
                detail: format!("constant {} sits in the class of top", h.name_of(x)),
            });
        }
    }

    let delta_class = quotient.class_of[enriched.iota];
    let q = &quotient.algebra;
    if dense_over(q, embedding.apply(a)).min() != Some(delta_class) {
        return Err(Error::TheoremViolation {
            part: "a",
            detail: format!(
                "class of the identity map is not the least element dense over {}",
                h.name_of(a)
            ),
        });
    }
    for b in 0..h.size() {
        let expected = embedding.apply(delta_min(h, b));
        if dense_over(q, embedding.apply(b)).min() != Some(expected) {
            return Err(Error::TheoremViolation {
                part: "c",
                detail: format!(
                    "least dense element over {} does not transport through the embedding",
                    h.name_of(b)
                ),
            });
        }
    }

    Ok(OneStepResult {
        enriched,
        fa,
        quotient,
        embedding,
        delta_class,
    })
}

/// Enriches at every element in ascending order, round after round, until a
/// round preserves every least dense element; the stabilized algebra then
/// carries a verified least-dense table and the composite embedding is the
/// isomorphism onto it.
///
/// A finite algebra stabilizes in the first round because each step's
/// embedding is already onto.
pub fn km_completion(
    h: &Arc<FiniteHeytingAlgebra>,
    round_cap: usize,
    cap: usize,
) -> Result<(KMAlgebra, Homomorphism)> {
    let mut current = h.clone();
    let mut total = Homomorphism::identity(h);
    for _ in 0..round_cap {
        let round_start = current.clone();
        let mut round = Homomorphism::identity(&round_start);
        for a in 0..round_start.size() {
            let step = one_step(&current, round.apply(a), cap)?;
            round = round.then(&step.embedding)?;
            current = step.algebra().clone();
        }
        total = total.then(&round)?;

        let stable = (0..round_start.size()).all(|b| {
            round.apply(delta_min(&round_start, b)) == delta_min(&current, round.apply(b))
        });
        if stable {
            let km = km_from_heyting(&current)?;
            if !total.is_bijective() {
                return Err(Error::ContractViolation(
                    "stabilized completion of a finite algebra must be a bijective image".into(),
                ));
            }
            for b in 0..h.size() {
                if total.apply(delta_min(h, b)) != km.delta[total.apply(b)] {
                    return Err(Error::ContractViolation(format!(
                        "least dense element over {} does not transport to the completion",
                        h.name_of(b)
                    )));
                }
            }
            return Ok((km, total));
        }
    }
    Err(Error::RoundCapExceeded(round_cap))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::is_isomorphic;

    fn chain3() -> Arc<FiniteHeytingAlgebra> {
        FiniteHeytingAlgebra::chain(3)
    }

    fn boolean4() -> Arc<FiniteHeytingAlgebra> {
        let p = crate::algebra::FinitePoset::antichain(2);
        FiniteHeytingAlgebra::from_poset(&p).unwrap()
    }

    #[test]
    fn three_chain_iota_algebra_has_five_maps() {
        let h = chain3();
        let e = build_iota_algebra(&h, 0, 64).unwrap();
        assert_eq!(e.index_set, vec![1, 2]);
        assert_eq!(e.len(), 5);
        let mut maps = e.maps.clone();
        maps.sort();
        assert_eq!(
            maps,
            vec![vec![0, 0], vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]
        );
        assert_eq!(e.map_of(e.iota), &[1, 2]);
        assert_eq!(e.map_of(e.constant(1)), &[1, 1]);
        assert_eq!(e.anchor, Some(0));
    }

    #[test]
    fn closure_ids_and_provenance_follow_seeding_order() {
        let h = chain3();
        let e = build_iota_algebra(&h, 0, 64).unwrap();
        // Bot and top seed first, then the identity map, then the one
        // constant that is neither bound; the single product comes last.
        assert_eq!(e.maps[0], vec![0, 0]);
        assert_eq!(e.maps[1], vec![2, 2]);
        assert_eq!(e.maps[2], vec![1, 2]);
        assert_eq!(e.maps[3], vec![1, 1]);
        assert_eq!(e.maps[4], vec![2, 1]);
        assert_eq!(e.provenance[0], Formula::Bot);
        assert_eq!(e.provenance[1], Formula::Top);
        assert_eq!(e.provenance[2], Formula::Var(0));
        assert_eq!(e.provenance[3], Formula::Var(2));
    }

    #[test]
    fn one_coordinate_enrichments_collapse_to_the_base() {
        for h in [FiniteHeytingAlgebra::chain(2), boolean4()] {
            let e = build_iota_algebra(&h, 0, 64).unwrap();
            assert_eq!(e.index_set, vec![h.top()]);
            assert_eq!(e.len(), h.size());
            assert!(is_isomorphic(&e.algebra, &h).is_some());
        }
    }

    #[test]
    fn dense_elements_of_the_three_chain_subalgebra() {
        let h = chain3();
        let e = build_iota_algebra(&h, 0, 64).unwrap();
        let dense = dense_in_iota(&e);
        assert_eq!(dense, vec![1, 2, 3, 4]);
        assert!(dense.contains(&e.iota));
        assert!(!dense.contains(&e.constant(0)));
    }

    #[test]
    fn filter_of_the_three_chain_has_singleton_basis() {
        let h = chain3();
        let e = build_iota_algebra(&h, 0, 64).unwrap();
        let fa = build_fa(&e).unwrap();
        assert_eq!(fa.basis, vec![4]);
        assert_eq!(fa.members, vec![1, 4]);
        assert_eq!(fa.min(), Some(4));
    }

    #[test]
    fn one_step_on_the_three_chain_matches_the_hand_computation() {
        let h = chain3();
        let step = one_step(&h, 0, 64).unwrap();
        assert_eq!(step.quotient.classes, vec![vec![0], vec![1, 4], vec![2, 3]]);
        assert_eq!(step.delta_class, 2);
        assert_eq!(step.embedding.map, vec![0, 2, 1]);
        assert!(step.embedding.is_bijective());
        assert!(is_isomorphic(step.algebra(), &h).is_some());
        assert_eq!(step.embedding.apply(delta_min(&h, 0)), step.delta_class);
        assert!(step.pi().is_surjective());
    }

    #[test]
    fn one_step_on_the_two_chain() {
        let h = FiniteHeytingAlgebra::chain(2);
        let step = one_step(&h, 0, 64).unwrap();
        assert_eq!(step.algebra().size(), 2);
        assert_eq!(step.delta_class, step.embedding.apply(1));
    }

    #[test]
    fn top_anchor_gives_an_identity_step() {
        for h in [chain3(), boolean4()] {
            let step = one_step(&h, h.top(), 64).unwrap();
            assert_eq!(step.enriched.index_set, vec![h.top()]);
            assert_eq!(step.algebra().size(), h.size());
            assert!(step.embedding.is_bijective());
            assert_eq!(step.delta_class, step.embedding.apply(h.top()));
        }
    }

    #[test]
    fn small_catalog_steps_collapse_onto_the_base() {
        for entry in crate::algebra::catalog(2, 4) {
            let h = &entry.algebra;
            for a in 0..h.size() {
                let step = one_step(h, a, 4096).unwrap();
                assert!(step.embedding.is_bijective(), "{} at {a}", entry.label);
                assert_eq!(
                    step.embedding.apply(delta_min(h, a)),
                    step.delta_class,
                    "{} at {a}",
                    entry.label
                );
            }
        }
    }

    #[test]
    fn tight_cap_reports_cap_exceeded() {
        let h = chain3();
        match build_iota_algebra(&h, 0, 3) {
            Err(Error::CapExceeded(3)) => {}
            other => panic!("expected the cap to trip, got {other:?}"),
        }
    }

    #[test]
    fn completion_of_the_three_chain_stabilizes_onto_itself() {
        let h = chain3();
        let (km, emb) = km_completion(&h, 4, 4096).unwrap();
        assert!(emb.is_bijective());
        assert_eq!(km.base.size(), 3);
        let base_delta = [1, 2, 2];
        for b in 0..3 {
            assert_eq!(km.delta[emb.apply(b)], emb.apply(base_delta[b]));
        }
    }

    #[test]
    fn completion_of_boolean_four_has_constant_top_delta() {
        let h = boolean4();
        let (km, emb) = km_completion(&h, 4, 4096).unwrap();
        assert!(emb.is_bijective());
        assert!(km.delta.iter().all(|&d| d == km.base.top()));
    }

    #[test]
    fn completion_of_the_degenerate_algebra_is_itself() {
        let h = FiniteHeytingAlgebra::chain(1);
        let (km, emb) = km_completion(&h, 4, 64).unwrap();
        assert_eq!(km.base.size(), 1);
        assert_eq!(emb.map, vec![0]);
    }
}
