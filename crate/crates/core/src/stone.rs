//! Prime spectra of finite algebras and the dual-side extension.
//!
//! The evaluation map sends an element to the set of prime filters
//! containing it; for a finite algebra this is an isomorphism onto the
//! up-set algebra of the spectrum. On the dual side, one more up-set is
//! adjoined: the image of the anchor together with the maximal points
//! outside it. The module compares the subalgebra that generates against
//! the quotient construction, and sweeps a bounded formula space for the
//! inclusion statement whose general status is unknown.

use serde::Serialize;
use std::sync::Arc;

use crate::algebra::{
    generated_subalgebra, FinitePoset, FiniteHeytingAlgebra, Homomorphism, RawTables,
};
use crate::density::delta_min;
use crate::enrichment::one_step;
use crate::error::{Error, Result};
use crate::terms::{eval_in, table_closure, Formula};

/// All prime filters of a finite algebra, ordered by inclusion.
#[derive(Clone, Debug, Serialize)]
pub struct Spectrum {
    /// Each prime filter as its sorted member set.
    pub primes: Vec<Vec<usize>>,
    /// Row-major inclusion: entry `i * primes.len() + j` holds iff
    /// `primes[i]` is a subset of `primes[j]`.
    pub order: Vec<bool>,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn below(&self, i: usize, j: usize) -> bool {
        self.order[i * self.primes.len() + j]
    }

    /// The spectrum as a poset under inclusion.
    pub fn poset(&self) -> FinitePoset {
        FinitePoset::new(self.primes.len(), self.order.clone())
            .expect("inclusion is a partial order")
    }
}

/// Enumerates the prime filters. Every filter of a finite lattice is the
/// up-set of its least member, so scanning principal filters is the
/// exhaustive enumeration; primality of the generator is join-primality.
pub fn spectrum(h: &Arc<FiniteHeytingAlgebra>) -> Result<Spectrum> {
    let n = h.size();
    if n == 1 {
        return Err(Error::Degenerate);
    }
    let mut primes: Vec<Vec<usize>> = Vec::new();
    for g in 0..n {
        if g == h.bot() {
            continue; // the improper filter
        }
        let prime = (0..n).all(|y| {
            (0..n).all(|z| !h.leq(g, h.join(y, z)) || h.leq(g, y) || h.leq(g, z))
        });
        if prime {
            primes.push((0..n).filter(|&y| h.leq(g, y)).collect());
        }
    }
    assert!(
        primes.len() <= 20,
        "spectra are represented with bitmask up-sets"
    );
    let k = primes.len();
    let mut order = vec![false; k * k];
    for i in 0..k {
        for j in 0..k {
            order[i * k + j] = primes[i].iter().all(|x| primes[j].binary_search(x).is_ok());
        }
    }
    Ok(Spectrum { primes, order })
}

/// Spectrum, its up-set algebra, and the evaluation map, shared by the
/// operations below. `masks[e]` is the up-set bitmask of dual element `e`;
/// `sigma_ids[x]` is the dual element representing source element `x`.
struct DualSetup {
    spectrum: Spectrum,
    poset: FinitePoset,
    masks: Vec<u32>,
    dual: Arc<FiniteHeytingAlgebra>,
    sigma_ids: Vec<usize>,
}

impl DualSetup {
    fn element_of_mask(&self, mask: u32) -> usize {
        self.masks
            .binary_search(&mask)
            .expect("every up-set of the spectrum is a dual element")
    }

    fn build(h: &Arc<FiniteHeytingAlgebra>) -> Result<DualSetup> {
        let spec = spectrum(h)?;
        let poset = spec.poset();
        let masks = poset.up_sets();
        let dual = FiniteHeytingAlgebra::from_poset(&poset)?;
        debug_assert_eq!(dual.size(), masks.len());
        let sigma_ids = (0..h.size())
            .map(|x| {
                let mut mask = 0u32;
                for (i, p) in spec.primes.iter().enumerate() {
                    if p.binary_search(&x).is_ok() {
                        mask |= 1 << i;
                    }
                }
                masks
                    .binary_search(&mask)
                    .expect("element hulls are up-sets of the spectrum")
            })
            .collect();
        Ok(DualSetup { spectrum: spec, poset, masks, dual, sigma_ids })
    }

    /// Prime-index set of the adjoined up-set for anchor `a`: the primes
    /// containing `a` plus the maximal primes among those that do not.
    fn sigma_plus_mask(&self, a: usize) -> u32 {
        let k = self.spectrum.len();
        let full: u32 = if k == 32 { u32::MAX } else { (1 << k) - 1 };
        let mut in_mask = 0u32;
        for (i, p) in self.spectrum.primes.iter().enumerate() {
            if p.binary_search(&a).is_ok() {
                in_mask |= 1 << i;
            }
        }
        in_mask | self.poset.maximal_in(full & !in_mask)
    }
}

/// The evaluation map onto the up-set algebra of the spectrum, verified,
/// and checked to be the isomorphism finite duality promises.
pub fn sigma(h: &Arc<FiniteHeytingAlgebra>) -> Result<Homomorphism> {
    let setup = DualSetup::build(h)?;
    let hom = Homomorphism::verified(h.clone(), setup.dual.clone(), setup.sigma_ids.clone())?;
    if !hom.is_bijective() {
        return Err(Error::ContractViolation(
            "the evaluation map of a finite algebra must be an isomorphism".into(),
        ));
    }
    Ok(hom)
}

/// The adjoined up-set for anchor `a`, as sorted prime indices: the primes
/// containing `a` together with the maximal points of the complement.
pub fn sigma_plus(h: &Arc<FiniteHeytingAlgebra>, a: usize) -> Result<Vec<usize>> {
    if a >= h.size() {
        return Err(Error::DomainError(format!("element {a} is out of range")));
    }
    let setup = DualSetup::build(h)?;
    let mask = setup.sigma_plus_mask(a);
    let k = setup.spectrum.len();
    for i in 0..k {
        for j in 0..k {
            if mask & (1 << i) != 0 && setup.spectrum.below(i, j) && mask & (1 << j) == 0 {
                return Err(Error::ContractViolation(
                    "the adjoined set must be up-closed in the spectrum".into(),
                ));
            }
        }
    }
    Ok((0..k).filter(|&i| mask & (1 << i) != 0).collect())
}

/// The subalgebra of spectrum up-sets generated by the image of the source
/// algebra plus the adjoined up-set, materialized with its tables.
#[derive(Clone, Debug)]
pub struct DeltaSubalgebra {
    pub spectrum: Spectrum,
    /// The ambient up-set algebra of the spectrum.
    pub dual: Arc<FiniteHeytingAlgebra>,
    /// The generated subalgebra, with inherited operations.
    pub algebra: Arc<FiniteHeytingAlgebra>,
    /// Member ids within the ambient dual, ascending; position = id in
    /// `algebra`.
    pub dual_ids: Vec<usize>,
    /// Source algebra into the subalgebra, along the evaluation map.
    pub embedding: Homomorphism,
    /// Id of the adjoined up-set within `algebra`.
    pub adjoined: usize,
}

pub fn delta_subalgebra(
    h: &Arc<FiniteHeytingAlgebra>,
    a: usize,
    cap: usize,
) -> Result<DeltaSubalgebra> {
    if a >= h.size() {
        return Err(Error::DomainError(format!("element {a} is out of range")));
    }
    let setup = DualSetup::build(h)?;
    let plus = setup.element_of_mask(setup.sigma_plus_mask(a));
    let mut gens = setup.sigma_ids.clone();
    gens.push(plus);
    let closure = generated_subalgebra(setup.dual.as_ref(), &gens, cap)?;

    let mut dual_ids = closure.elements.clone();
    dual_ids.sort_unstable();
    let pos = |e: usize| dual_ids.binary_search(&e).expect("closure members");
    let m = dual_ids.len();
    let mut leq = vec![false; m * m];
    let mut meet = vec![0usize; m * m];
    let mut join = vec![0usize; m * m];
    let mut imp = vec![0usize; m * m];
    for x in 0..m {
        for y in 0..m {
            leq[x * m + y] = setup.dual.leq(dual_ids[x], dual_ids[y]);
            meet[x * m + y] = pos(setup.dual.meet(dual_ids[x], dual_ids[y]));
            join[x * m + y] = pos(setup.dual.join(dual_ids[x], dual_ids[y]));
            imp[x * m + y] = pos(setup.dual.imp(dual_ids[x], dual_ids[y]));
        }
    }
    let names = dual_ids
        .iter()
        .map(|&e| setup.dual.name_of(e).to_string())
        .collect();
    let algebra = Arc::new(FiniteHeytingAlgebra::from_tables(
        RawTables {
            n: m,
            leq,
            meet,
            join,
            imp,
            bot: pos(setup.dual.bot()),
            top: pos(setup.dual.top()),
        },
        Some(names),
    )?);
    let embedding_map: Vec<usize> = setup.sigma_ids.iter().map(|&e| pos(e)).collect();
    let adjoined = pos(plus);
    let embedding = Homomorphism::verified(h.clone(), algebra.clone(), embedding_map)?;
    if !embedding.is_injective() {
        return Err(Error::ContractViolation(
            "the evaluation map must embed the source algebra".into(),
        ));
    }
    Ok(DeltaSubalgebra {
        spectrum: setup.spectrum,
        dual: setup.dual,
        algebra,
        dual_ids,
        embedding,
        adjoined,
    })
}

/// Side-by-side outcome of the quotient construction and the dual-side
/// subalgebra on one instance. Disagreement is a finding, not an error.
#[derive(Clone, Debug, Serialize)]
pub struct CompareReport {
    pub algebra: String,
    pub anchor: String,
    pub onestep_size: usize,
    pub dual_side_size: usize,
    /// The provenance evaluation respects the quotient's classes.
    pub well_defined: bool,
    pub injective: bool,
    pub surjective: bool,
    /// The quotient's distinguished class lands on the adjoined up-set.
    pub delta_corresponds: bool,
    /// The adjoined up-set equals the image of the least dense element.
    pub adjoined_is_image_of_delta: bool,
    /// All of the above: the two constructions agree on this instance.
    pub agrees: bool,
}

/// Attempts the map from the quotient extension onto the dual-side
/// subalgebra: embedded elements go along the evaluation map and the
/// distinguished class goes to the adjoined up-set, extended over each
/// element's generating formula.
pub fn compare_with_onestep(
    h: &Arc<FiniteHeytingAlgebra>,
    a: usize,
    cap: usize,
) -> Result<CompareReport> {
    let step = one_step(h, a, cap)?;
    let ds = delta_subalgebra(h, a, cap)?;
    let quotient = step.algebra().clone();

    // Assignment matching the enriched provenance convention: variable 0 is
    // the fresh generator, variable i+1 the constant at source element i.
    let mut assignment = vec![ds.adjoined];
    assignment.extend(ds.embedding.map.iter().copied());

    let mut class_value: Vec<Option<usize>> = vec![None; quotient.size()];
    let mut well_defined = true;
    for (e, formula) in step.enriched.provenance.iter().enumerate() {
        let v = eval_in(formula, ds.algebra.as_ref(), &assignment)?;
        let class = step.quotient.class_of[e];
        match class_value[class] {
            None => class_value[class] = Some(v),
            Some(prev) if prev == v => {}
            Some(_) => {
                well_defined = false;
            }
        }
    }

    let (injective, surjective, delta_corresponds) = if well_defined {
        let map: Vec<usize> = class_value
            .iter()
            .map(|v| v.expect("every class has a representative"))
            .collect();
        let delta_ok = map[step.delta_class] == ds.adjoined;
        let hom = Homomorphism::verified(quotient, ds.algebra.clone(), map)
            .expect("formula evaluation respects the operations");
        (hom.is_injective(), hom.is_surjective(), delta_ok)
    } else {
        (false, false, false)
    };

    let adjoined_is_image_of_delta =
        ds.embedding.apply(delta_min(h, a)) == ds.adjoined;

    Ok(CompareReport {
        algebra: format!("{}-element algebra", h.size()),
        anchor: h.name_of(a).to_string(),
        onestep_size: step.algebra().size(),
        dual_side_size: ds.algebra.size(),
        well_defined,
        injective,
        surjective,
        delta_corresponds,
        adjoined_is_image_of_delta,
        agrees: well_defined && injective && surjective && delta_corresponds,
    })
}

/// Outcome of the bounded sweep for the inclusion statement: whenever a
/// formula instance at the adjoined up-set misses the full spectrum, some
/// element above it must miss too.
#[derive(Clone, Debug, Serialize)]
pub struct OpenStatementReport {
    pub algebra: String,
    pub anchor: String,
    pub depth: usize,
    /// Two formula variables: the substituted position and one parameter.
    pub vars: u32,
    pub distinct_tables: usize,
    /// (table, parameter) pairs examined.
    pub instances: u64,
    /// Instances whose value at the adjoined up-set missed the top.
    pub nontrivial_instances: u64,
    pub counterexamples: Vec<String>,
}

impl OpenStatementReport {
    pub fn ok(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Sweeps all formulas up to `depth` in the substituted variable and one
/// parameter, deduplicated by induced table. For each instance whose value
/// at the adjoined up-set is not the whole spectrum, searches for an
/// element whose image contains the adjoined up-set and whose substitution
/// also misses the whole spectrum. Finding none is a counterexample and a
/// headline result, not an error.
pub fn open_statement_check(
    h: &Arc<FiniteHeytingAlgebra>,
    a: usize,
    depth: usize,
) -> Result<OpenStatementReport> {
    if a >= h.size() {
        return Err(Error::DomainError(format!("element {a} is out of range")));
    }
    let setup = DualSetup::build(h)?;
    let dual = setup.dual.as_ref();
    assert!(dual.size() <= 255, "table entries are bytes");
    let plus = setup.element_of_mask(setup.sigma_plus_mask(a));

    // Substitution slots: the adjoined up-set first, then every element
    // image that contains it.
    let mut slot_elems = vec![plus];
    let mut slot_names = vec!["(adjoined)".to_string()];
    for (x, &sx) in setup.sigma_ids.iter().enumerate() {
        if dual.leq(plus, sx) {
            slot_elems.push(sx);
            slot_names.push(h.name_of(x).to_string());
        }
    }
    let params = &setup.sigma_ids;
    let cols = params.len();
    let rows = slot_elems.len();

    let tabulate = |f: &dyn Fn(usize, usize) -> usize| -> Vec<u8> {
        let mut t = vec![0u8; rows * cols];
        for r in 0..rows {
            for c in 0..cols {
                t[r * cols + c] = f(r, c) as u8;
            }
        }
        t
    };
    let atoms = vec![
        (tabulate(&|r, _| slot_elems[r]), Formula::Var(0)),
        (tabulate(&|_, c| params[c]), Formula::Var(1)),
        (tabulate(&|_, _| dual.bot()), Formula::Bot),
        (tabulate(&|_, _| dual.top()), Formula::Top),
    ];
    let closure = table_closure(atoms, depth, |op, x, y| {
        x.iter()
            .zip(y)
            .map(|(&p, &q)| dual.apply(op, p as usize, q as usize) as u8)
            .collect()
    });

    let top = dual.top() as u8;
    let mut instances = 0u64;
    let mut nontrivial = 0u64;
    let mut counterexamples = Vec::new();
    for (t, formula) in closure.tables.iter().zip(&closure.provenance) {
        for c in 0..cols {
            instances += 1;
            if t[c] == top {
                continue;
            }
            nontrivial += 1;
            let rescued = (1..rows).any(|r| t[r * cols + c] != top);
            if !rescued {
                counterexamples.push(format!(
                    "{} with parameter {} misses the full spectrum only at the adjoined set",
                    formula,
                    h.name_of(c),
                ));
            }
        }
    }

    Ok(OpenStatementReport {
        algebra: format!("{}-element algebra", h.size()),
        anchor: h.name_of(a).to_string(),
        depth,
        vars: 2,
        distinct_tables: closure.tables.len(),
        instances,
        nontrivial_instances: nontrivial,
        counterexamples,
    })
}
