//! Extending a homomorphism through a one-step quotient, and the
//! order-independence of enriching at two anchors.
//!
//! The extension sends the class of an element to its provenance formula
//! evaluated in the target, with the distinguished variable reading the
//! chosen least dense element. Well-definedness has to be earned: every
//! member of a class must evaluate to the same value, and the induced map
//! must pass a full homomorphism check.

use super::witness::witnesses_same_hom;
use super::{one_step, witness_for_onestep, OneStepResult};
use crate::algebra::{same_algebra, FiniteHeytingAlgebra, Homomorphism};
use crate::density::delta_min;
use crate::enrichment::{compose_witnesses, Witness};
use crate::error::{Error, Result};
use crate::terms::eval_in;
use std::sync::Arc;

/// Extends `f` from the base of `step` to the step's quotient, sending the
/// class of the identity map to `target_delta`.
///
/// `target_delta` must be the least element of the target dense over the
/// image of the anchor, and `witness` must vouch for `f` itself; together
/// these are exactly the hypotheses that make the formula-evaluation map
/// well defined. The returned homomorphism restricts to `f` on the
/// embedded base.
pub fn extend_hom(
    step: &OneStepResult,
    f: &Homomorphism,
    witness: &Witness,
    target_delta: usize,
) -> Result<Homomorphism> {
    if !same_algebra(&f.source, &step.enriched.base) {
        return Err(Error::DomainError(
            "the homomorphism to extend must start at the step's base".into(),
        ));
    }
    if !witnesses_same_hom(witness, f) {
        return Err(Error::DomainError(
            "the witness must vouch for the homomorphism being extended".into(),
        ));
    }
    witness.verify()?;

    let a = step.anchor();
    let expected = delta_min(&f.target, f.apply(a));
    if target_delta != expected {
        return Err(Error::DeltaMismatch { expected, given: target_delta });
    }

    let n = f.source.size();
    let mut assignment: Vec<usize> = Vec::with_capacity(n + 1);
    assignment.push(target_delta);
    assignment.extend((0..n).map(|x| f.apply(x)));

    let classes = step.quotient.classes.len();
    let mut image: Vec<Option<usize>> = vec![None; classes];
    for (x, formula) in step.enriched.provenance.iter().enumerate() {
        let v = eval_in(formula, &f.target, &assignment)?;
        let c = step.quotient.class_of[x];
        match image[c] {
            None => image[c] = Some(v),
            Some(prev) if prev == v => {}
            Some(prev) => {
                return Err(Error::NotWellDefined(format!(
                    "class {} evaluates both to {} and to {}",
                    step.quotient.algebra.name_of(c),
                    f.target.name_of(prev),
                    f.target.name_of(v)
                )));
            }
        }
    }
    let map: Vec<usize> = image
        .into_iter()
        .map(|v| v.expect("every class holds at least one element"))
        .collect();

    let extension =
        Homomorphism::verified(step.quotient.algebra.clone(), f.target.clone(), map)
            .map_err(|e| Error::NotWellDefined(format!("the induced map is not a homomorphism: {e}")))?;

    for x in 0..n {
        if extension.apply(step.embedding.apply(x)) != f.apply(x) {
            return Err(Error::ContractViolation(format!(
                "the extension does not restrict to the original map at {}",
                f.source.name_of(x)
            )));
        }
    }
    if extension.apply(step.delta_class) != target_delta {
        return Err(Error::ContractViolation(
            "the extension misses the chosen least dense element".into(),
        ));
    }
    Ok(extension)
}

/// Enriches at `a` then `b` and at `b` then `a`, extends each tower's
/// composite embedding through the other, and checks that the two
/// extensions invert each other. Returns the isomorphism from the
/// `a`-first tower to the `b`-first tower; it fixes the embedded base and
/// carries the one tower's least dense elements onto the other's.
pub fn commute_iso(
    h: &Arc<FiniteHeytingAlgebra>,
    a: usize,
    b: usize,
    cap: usize,
) -> Result<Homomorphism> {
    let s_a = one_step(h, a, cap)?;
    let s_b = one_step(h, b, cap)?;
    let s_ab = one_step(s_a.algebra(), s_a.embedding.apply(b), cap)?;
    let s_ba = one_step(s_b.algebra(), s_b.embedding.apply(a), cap)?;

    // Tower maps of the base into the two double quotients.
    let f = s_b.embedding.then(&s_ba.embedding)?;
    let g = s_a.embedding.then(&s_ab.embedding)?;
    let w_f = compose_witnesses(witness_for_onestep(&s_b)?, witness_for_onestep(&s_ba)?)?;
    let w_g = compose_witnesses(witness_for_onestep(&s_a)?, witness_for_onestep(&s_ab)?)?;

    // First lift each tower map one level; the surviving one-step results
    // pin the target's least dense elements down.
    let f_tilde = extend_hom(&s_a, &f, &w_f, s_ba.delta_class)?;
    let g_tilde = extend_hom(&s_b, &g, &w_g, s_ab.delta_class)?;

    // A bijective lift is its own witness, which lets the second level go
    // through the other tower's top step.
    let forward = extend_hom(
        &s_ab,
        &f_tilde,
        &Witness::surjection(f_tilde.clone())?,
        delta_min(s_ba.algebra(), f_tilde.apply(s_ab.anchor())),
    )?;
    let backward = extend_hom(
        &s_ba,
        &g_tilde,
        &Witness::surjection(g_tilde.clone())?,
        delta_min(s_ab.algebra(), g_tilde.apply(s_ba.anchor())),
    )?;

    let there_and_back = forward.then(&backward)?;
    let back_and_there = backward.then(&forward)?;
    if there_and_back.map != Homomorphism::identity(s_ab.algebra()).map
        || back_and_there.map != Homomorphism::identity(s_ba.algebra()).map
    {
        return Err(Error::ContractViolation(
            "the two tower extensions are not mutually inverse".into(),
        ));
    }
    for x in 0..h.size() {
        if forward.apply(g.apply(x)) != f.apply(x) {
            return Err(Error::ContractViolation(format!(
                "the isomorphism moves the embedded base element {}",
                h.name_of(x)
            )));
        }
    }
    Ok(forward)
}
