//! The acceptance gate: twelve numbered checks, each printing one line with
//! its verdict, elapsed time, and instance count (run with `--nocapture` to
//! see the lines; the harness prints its own ok/FAILED verdict per check).
//!
//! Each check sweeps a pinned corpus. The corpora and depths are part of the
//! contract and are not scaled down here; expect the full run to take a few
//! minutes.

use std::sync::Arc;
use std::time::Instant;

use km_forge::suites::{self, SuiteOutcome};
use km_forge::{
    catalog, compare_with_onestep, free_one_generator, one_step, open_statement_check,
    remark_counterexample, verify_onestep_omega, FiniteHeytingAlgebra, OmegaElement,
};
use km_forge::terms::eval_in;

const CAP: usize = 100_000;

fn finish(criterion: &str, started: Instant, outcomes: &[&SuiteOutcome]) {
    let elapsed = started.elapsed().as_secs_f64();
    let instances: u64 = outcomes.iter().map(|o| o.instances).sum();
    let failing: Vec<&str> = outcomes
        .iter()
        .flat_map(|o| o.failures.iter().map(String::as_str))
        .collect();
    let verdict = if failing.is_empty() { "pass" } else { "FAIL" };
    println!("criterion {criterion}: {verdict} in {elapsed:.1}s over {instances} instances");
    for o in outcomes {
        for note in &o.notes {
            println!("  [{}] {note}", o.name);
        }
    }
    assert!(
        failing.is_empty(),
        "criterion {criterion} failed: {failing:#?}"
    );
}

fn chain(k: usize) -> Arc<FiniteHeytingAlgebra> {
    FiniteHeytingAlgebra::chain(k)
}

#[test]
fn c01_axioms_and_schemas_hold_across_the_catalog() {
    let started = Instant::now();
    let corpus = catalog(5, 8);
    let valid = suites::validate_catalog(&corpus);
    let schemas = suites::schema_sweep(&corpus, 3);
    finish("1", started, &[&valid, &schemas]);
}

#[test]
fn c02_dense_characterizations_agree_across_the_catalog() {
    let started = Instant::now();
    let corpus = catalog(5, 8);
    let out = suites::dense_characterizations_agree(&corpus);
    finish("2", started, &[&out]);
}

#[test]
fn c03_least_dense_identity_pins_delta_exactly() {
    let started = Instant::now();
    let corpus = catalog(4, 6);
    let out = suites::delta_identity_characterization(&corpus);
    finish("3", started, &[&out]);
}

#[test]
fn c04_one_step_clauses_and_collapse_hold_end_to_end() {
    let started = Instant::now();
    let corpus = catalog(4, 6);
    let clauses = suites::one_step_theorem(&corpus, CAP);
    let collapse = suites::finite_collapse(&corpus, CAP);
    finish("4", started, &[&clauses, &collapse]);
}

#[test]
fn c05_three_chain_step_matches_the_hand_tables() {
    let started = Instant::now();
    let h = chain(3);
    let step = one_step(&h, 0, CAP).expect("the three-chain step succeeds");

    assert_eq!(step.enriched.index_set, vec![1, 2]);
    assert_eq!(step.enriched.len(), 5, "five maps in the subalgebra");
    assert_eq!(step.fa.basis.len(), 1, "the step filter is principal");
    assert_eq!(
        step.enriched.map_of(step.fa.basis[0]),
        &[2, 1],
        "the filter bottoms out at the map (m, 1) -> (1, m)"
    );
    assert_eq!(step.quotient.classes.len(), 3, "three classes");
    assert_eq!(
        step.embedding.apply(1),
        step.delta_class,
        "the adjoined class is the image of the middle element"
    );

    let elapsed = started.elapsed().as_secs_f64();
    println!("criterion 5: pass in {elapsed:.1}s over 5 instances");
}

#[test]
fn c06_free_algebra_evaluations_are_homomorphisms() {
    let started = Instant::now();

    let two = chain(2);
    let free = free_one_generator(&two, CAP).expect("the free closure stays small");
    assert_eq!(free.len(), 4, "four maps over the two-element chain");
    let mut direct: u64 = 0;
    for x in 0..free.len() {
        for (slot, &coord) in free.index_set.iter().enumerate() {
            let mut assignment = vec![coord];
            assignment.extend(0..two.size());
            let value = eval_in(&free.provenance[x], &two, &assignment)
                .expect("provenance formulas close over the generator and constants");
            assert_eq!(
                value,
                free.map_of(x)[slot] as usize,
                "element {x} disagrees with its formula at coordinate {coord}"
            );
            direct += 1;
        }
    }

    let mut sweep = suites::free_evaluations(&catalog(3, 4), CAP);
    sweep.instances += direct;
    finish("6", started, &[&sweep]);
}

#[test]
fn c07_enrichment_order_commutes_up_to_isomorphism() {
    let started = Instant::now();
    let out = suites::double_step_commutation(&catalog(3, 4), CAP);
    finish("7", started, &[&out]);
}

#[test]
fn c08_witnesses_verify_and_compose() {
    let started = Instant::now();
    let out = suites::witness_checks(&catalog(4, 6), CAP);
    finish("8", started, &[&out]);
}

#[test]
fn c09_completion_stabilizes_in_one_round() {
    let started = Instant::now();
    let out = suites::km_completion_stabilizes(&catalog(4, 6), CAP);
    finish("9", started, &[&out]);
}

#[test]
fn c10_quotients_preserve_two_variable_identities() {
    let started = Instant::now();
    let out = suites::variety_preservation(&catalog(3, 4), 3, CAP);
    finish("10", started, &[&out]);
}

#[test]
fn c11_symbolic_chain_checks_pass() {
    let started = Instant::now();

    let report = verify_onestep_omega(2, &[]);
    assert_eq!(report.checks.len(), 4, "four check groups");
    let mut instances: u64 = 0;
    for check in &report.checks {
        instances += check.instances;
        assert!(
            check.violations.is_empty(),
            "{}: {:?}",
            check.name,
            check.violations
        );
    }

    let remark = remark_counterexample(2).expect("the denominator is positive");
    assert!(remark.implication_is_fixed);
    assert_eq!(
        remark.collapsed_pair,
        (OmegaElement::Frac(2), OmegaElement::Frac(1)),
        "adjoining the shifted map collapses 1/2 with top"
    );
    instances += 1;

    let elapsed = started.elapsed().as_secs_f64();
    println!("criterion 11: pass in {elapsed:.1}s over {instances} instances");
    for check in &report.checks {
        println!("  [omega] {}: {} instances", check.name, check.instances);
    }
}

#[test]
fn c12_duality_round_trips_and_both_comparisons_agree() {
    let started = Instant::now();

    let roundtrip = suites::spectrum_roundtrip(5);

    let corpus = catalog(4, 6);
    let mut instances: u64 = 0;
    let mut counterexamples: usize = 0;
    for e in &corpus {
        for a in 0..e.algebra.size() {
            let report = open_statement_check(&e.algebra, a, 3)
                .expect("the substitution sweep runs on every anchor");
            instances += report.instances;
            counterexamples += report.counterexamples.len();
        }
    }

    let mut agreements: u64 = 0;
    let mut compared: u64 = 0;
    for e in &corpus {
        for a in 0..e.algebra.size() {
            let report = compare_with_onestep(&e.algebra, a, CAP)
                .expect("the dual-side construction runs on every anchor");
            compared += 1;
            assert!(
                report.agrees,
                "{} at anchor {a}: the dual-side construction disagrees",
                e.label
            );
        }
        agreements += e.algebra.size() as u64;
    }

    let elapsed = started.elapsed().as_secs_f64();
    println!(
        "criterion 12: pass in {elapsed:.1}s over {} instances",
        roundtrip.instances + instances + compared
    );
    println!(
        "  finding: no substitution counterexample; bounds: catalog(4, 6), \
         two variables, depth 3 ({instances} instances)"
    );
    println!(
        "  finding: the dual-side and direct constructions agree on \
         {agreements} of {compared} anchors; bounds: catalog(4, 6)"
    );
    assert_eq!(counterexamples, 0);
    assert_eq!(agreements, compared);
    assert!(roundtrip.ok(), "{:?}", roundtrip.failures);
}
