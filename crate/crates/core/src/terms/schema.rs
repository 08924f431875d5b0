//! Equational schema checks over a finite Heyting algebra.
//!
//! Two of the four schemas quantify over all formulas up to a depth bound.
//! Enumerating trees is hopeless (nearly 2·10^8 two-variable formulas at
//! depth 3), but every check here depends only on the function a formula
//! induces on the algebra, and the induced-function sets are tiny and closed
//! under the three operations applied pointwise. So the sweep runs over
//! value tables: seed with the atoms' tables, close under pointwise
//! operations level by level, and check each distinct table once. Level d of
//! the closure is exactly the set of tables of depth-d formulas, so the
//! bounded-depth quantifier is covered without approximation.

use serde::Serialize;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::algebra::{BinOp, FiniteHeytingAlgebra, BIN_OPS};
use crate::error::Error;

use super::Formula;

/// The checkable schemas.
///
/// * `maintool`: h∧x = h∧x′ forces h∧φ(x,params) = h∧φ(x′,params).
/// * `eqlemma`: x⇒((h⇒a)⇒h) = ((x⇒h)⇒a)⇒(x⇒h).
/// * `eqD`: x⇒h is dense over a exactly when x ≤ (h⇒a)⇒h.
/// * `congruence`: (x↔x′) ≤ φ(x,params)↔φ(x′,params).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SchemaId {
    #[serde(rename = "maintool")]
    Maintool,
    #[serde(rename = "eqlemma")]
    Eqlemma,
    #[serde(rename = "eqD")]
    EqD,
    #[serde(rename = "congruence")]
    Congruence,
}

impl fmt::Display for SchemaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SchemaId::Maintool => "maintool",
            SchemaId::Eqlemma => "eqlemma",
            SchemaId::EqD => "eqD",
            SchemaId::Congruence => "congruence",
        })
    }
}

impl FromStr for SchemaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "maintool" => Ok(SchemaId::Maintool),
            "eqlemma" => Ok(SchemaId::Eqlemma),
            "eqD" => Ok(SchemaId::EqD),
            "congruence" => Ok(SchemaId::Congruence),
            other => Err(Error::Validation(format!(
                "unknown schema '{other}' (expected maintool, eqlemma, eqD, or congruence)"
            ))),
        }
    }
}

/// Formula bounds for the schemas that quantify over φ. `vars` counts all of
/// φ's variables: the substituted position plus `vars - 1` parameters. The
/// two triple schemas ignore the bounds.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SchemaBounds {
    pub depth: usize,
    pub vars: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct SchemaViolation {
    /// A witnessing formula, for the φ-quantified schemas.
    pub formula: Option<String>,
    /// The element tuple, by name.
    pub elements: Vec<String>,
    pub detail: String,
}

/// Outcome of one schema on one algebra. `instances` counts performed
/// elementary checks: element triples for the triple schemas, distinct
/// (table, tuple) pairs for the φ-quantified ones. Violations are collected,
/// not raised, because each schema is a theorem and a violation means the
/// implementation is wrong.
#[derive(Clone, Debug, Serialize)]
pub struct SchemaReport {
    pub schema: SchemaId,
    pub algebra: String,
    pub bound: SchemaBounds,
    pub instances: u64,
    pub violations: Vec<SchemaViolation>,
}

impl SchemaReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Value tables closed under the pointwise operations, by level, with one
/// witnessing formula per table.
pub struct TableClosure {
    pub tables: Vec<Vec<u8>>,
    pub provenance: Vec<Formula>,
    /// True when the last level added nothing, i.e. the set is closed at
    /// every depth beyond the bound as well.
    pub saturated: bool,
}

/// Closes `atoms` under `apply` for `max_depth` rounds. Tables are compared
/// by value, so each function is kept once with its first witness. The
/// caller chooses the table encoding; `apply` must act pointwise for the
/// level-equals-depth property to hold.
pub fn table_closure<F>(
    atoms: Vec<(Vec<u8>, Formula)>,
    max_depth: usize,
    mut apply: F,
) -> TableClosure
where
    F: FnMut(BinOp, &[u8], &[u8]) -> Vec<u8>,
{
    let mut tables: Vec<Vec<u8>> = Vec::new();
    let mut provenance: Vec<Formula> = Vec::new();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    for (t, f) in atoms {
        if seen.insert(t.clone()) {
            tables.push(t);
            provenance.push(f);
        }
    }

    let mut frontier_start = 0;
    let mut saturated = false;
    for _ in 0..max_depth {
        let len = tables.len();
        if frontier_start == len {
            saturated = true;
            break;
        }
        for i in 0..len {
            for j in 0..len {
                if i < frontier_start && j < frontier_start {
                    continue;
                }
                for op in BIN_OPS {
                    let t = apply(op, &tables[i], &tables[j]);
                    if !seen.contains(&t) {
                        let prov =
                            Formula::op(op, provenance[i].clone(), provenance[j].clone());
                        seen.insert(t.clone());
                        tables.push(t);
                        provenance.push(prov);
                    }
                }
            }
        }
        frontier_start = len;
    }
    if frontier_start == tables.len() {
        saturated = true;
    }

    TableClosure {
        tables,
        provenance,
        saturated,
    }
}

/// Runs one schema exhaustively and reports. The algebra label is only
/// echoed into the report.
pub fn check_schema(
    schema: SchemaId,
    h: &FiniteHeytingAlgebra,
    label: &str,
    bounds: SchemaBounds,
) -> SchemaReport {
    let mut report = SchemaReport {
        schema,
        algebra: label.to_string(),
        bound: bounds,
        instances: 0,
        violations: Vec::new(),
    };
    match schema {
        SchemaId::Eqlemma => check_eqlemma(h, &mut report),
        SchemaId::EqD => check_eqd(h, &mut report),
        SchemaId::Maintool | SchemaId::Congruence => check_quantified(schema, h, bounds, &mut report),
    }
    report
}

fn note_violation(report: &mut SchemaReport, v: SchemaViolation) {
    // A genuine bug could flood the report; the count in `detail` of the
    // last entry is not tracked, the first hundred witnesses are plenty.
    if report.violations.len() < 100 {
        report.violations.push(v);
    }
}

fn check_eqlemma(h: &FiniteHeytingAlgebra, report: &mut SchemaReport) {
    let n = h.size();
    for x in 0..n {
        for hh in 0..n {
            for a in 0..n {
                report.instances += 1;
                let lhs = h.imp(x, h.imp(h.imp(hh, a), hh));
                let rhs = h.imp(h.imp(h.imp(x, hh), a), h.imp(x, hh));
                if lhs != rhs {
                    note_violation(
                        report,
                        SchemaViolation {
                            formula: None,
                            elements: vec![h.name_of(x), h.name_of(hh), h.name_of(a)],
                            detail: format!(
                                "sides evaluate to {} and {}",
                                h.name_of(lhs),
                                h.name_of(rhs)
                            ),
                        },
                    );
                }
            }
        }
    }
}

fn check_eqd(h: &FiniteHeytingAlgebra, report: &mut SchemaReport) {
    let n = h.size();
    for x in 0..n {
        for hh in 0..n {
            for a in 0..n {
                report.instances += 1;
                let d = h.imp(x, hh);
                let dense = h.leq(a, d) && h.imp(d, a) == a;
                let bound = h.leq(x, h.imp(h.imp(hh, a), hh));
                if dense != bound {
                    note_violation(
                        report,
                        SchemaViolation {
                            formula: None,
                            elements: vec![h.name_of(x), h.name_of(hh), h.name_of(a)],
                            detail: format!(
                                "x->h dense over a: {dense}, x <= (h->a)->h: {bound}"
                            ),
                        },
                    );
                }
            }
        }
    }
}

/// The φ-quantified schemas. For each value tuple of the parameters, the
/// unary functions x ↦ φ(x, params) over all φ within bounds are exactly the
/// pointwise closure of {identity, the parameter constants, bot, top}, since
/// fixing parameters commutes with every connective. Tables already checked
/// under an earlier tuple are skipped; the check reads nothing but the
/// table.
fn check_quantified(
    schema: SchemaId,
    h: &FiniteHeytingAlgebra,
    bounds: SchemaBounds,
    report: &mut SchemaReport,
) {
    let n = h.size();
    assert!(n <= u8::MAX as usize, "table encoding holds elements in u8");

    // Hypothesis triples for maintool; biimp matrix for congruence.
    let mut triples: Vec<(usize, usize, usize)> = Vec::new();
    if schema == SchemaId::Maintool {
        for hh in 0..n {
            for x in 0..n {
                for xp in 0..n {
                    if h.meet(hh, x) == h.meet(hh, xp) {
                        triples.push((hh, x, xp));
                    }
                }
            }
        }
    }

    let identity: Vec<u8> = (0..n as u8).collect();
    let constant = |c: usize| vec![c as u8; n];
    let params = bounds.vars.saturating_sub(1) as usize;

    let mut checked: HashSet<Vec<u8>> = HashSet::new();
    let mut tuple = vec![0usize; params];
    loop {
        let mut atoms: Vec<(Vec<u8>, Formula)> = Vec::with_capacity(params + 3);
        if bounds.vars >= 1 {
            atoms.push((identity.clone(), Formula::Var(0)));
        }
        for (k, &c) in tuple.iter().enumerate() {
            atoms.push((constant(c), Formula::Var(k as u32 + 1)));
        }
        atoms.push((constant(h.bot()), Formula::Bot));
        atoms.push((constant(h.top()), Formula::Top));

        let closure = table_closure(atoms, bounds.depth, |op, a, b| {
            (0..n).map(|i| h.apply(op, a[i] as usize, b[i] as usize) as u8).collect()
        });

        for (t, prov) in closure.tables.iter().zip(&closure.provenance) {
            if !checked.insert(t.clone()) {
                continue;
            }
            match schema {
                SchemaId::Maintool => {
                    for &(hh, x, xp) in &triples {
                        report.instances += 1;
                        if h.meet(hh, t[x] as usize) != h.meet(hh, t[xp] as usize) {
                            note_violation(
                                report,
                                SchemaViolation {
                                    formula: Some(prov.to_string()),
                                    elements: vec![
                                        h.name_of(hh),
                                        h.name_of(x),
                                        h.name_of(xp),
                                    ],
                                    detail: "h&x = h&x' but the φ-images differ under h&"
                                        .into(),
                                },
                            );
                        }
                    }
                }
                SchemaId::Congruence => {
                    for x in 0..n {
                        for xp in 0..n {
                            report.instances += 1;
                            let hyp = h.biimp(x, xp);
                            let img = h.biimp(t[x] as usize, t[xp] as usize);
                            if !h.leq(hyp, img) {
                                note_violation(
                                    report,
                                    SchemaViolation {
                                        formula: Some(prov.to_string()),
                                        elements: vec![h.name_of(x), h.name_of(xp)],
                                        detail: "x<->x' not below φ(x)<->φ(x')".into(),
                                    },
                                );
                            }
                        }
                    }
                }
                _ => unreachable!(),
            }
        }

        // Odometer over the parameter tuple.
        let mut pos = params;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < n {
                break;
            }
            tuple[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FinitePoset;

    fn bounds(depth: usize, vars: u32) -> SchemaBounds {
        SchemaBounds { depth, vars }
    }

    #[test]
    fn eqlemma_passes_all_triples_on_the_three_chain() {
        let c3 = FiniteHeytingAlgebra::chain(3);
        let r = check_schema(SchemaId::Eqlemma, &c3, "C3", bounds(0, 0));
        assert!(r.ok());
        assert_eq!(r.instances, 27);
    }

    #[test]
    fn eqd_passes_all_triples_on_boolean_four() {
        let b4 =
            FiniteHeytingAlgebra::from_poset(&FinitePoset::antichain(2)).unwrap();
        let r = check_schema(SchemaId::EqD, &b4, "B4", bounds(0, 0));
        assert!(r.ok());
        assert_eq!(r.instances, 64);
    }

    #[test]
    fn maintool_passes_on_the_two_chain() {
        let c2 = FiniteHeytingAlgebra::chain(2);
        let r = check_schema(SchemaId::Maintool, &c2, "C2", bounds(2, 2));
        assert!(r.ok());
        assert!(r.instances > 0);
    }

    #[test]
    fn congruence_passes_on_the_three_chain() {
        let c3 = FiniteHeytingAlgebra::chain(3);
        let r = check_schema(SchemaId::Congruence, &c3, "C3", bounds(3, 2));
        assert!(r.ok());
    }

    #[test]
    fn closure_levels_match_enumerated_formula_tables() {
        // Oracle: evaluate every enumerated 1-variable formula of depth <= 2
        // on the 4-chain and collect the distinct unary tables; the closure
        // must produce exactly that set.
        let c4 = FiniteHeytingAlgebra::chain(4);
        let n = c4.size();
        let mut expected: Vec<Vec<u8>> = Vec::new();
        for f in crate::terms::enumerate_terms(1, 2) {
            let t: Vec<u8> = (0..n)
                .map(|x| crate::terms::eval_in(&f, &c4, &[x]).unwrap() as u8)
                .collect();
            if !expected.contains(&t) {
                expected.push(t);
            }
        }
        let atoms = vec![
            ((0..n as u8).collect(), Formula::Var(0)),
            (vec![0; n], Formula::Bot),
            (vec![n as u8 - 1; n], Formula::Top),
        ];
        let closure = table_closure(atoms, 2, |op, a, b| {
            (0..n)
                .map(|i| c4.apply(op, a[i] as usize, b[i] as usize) as u8)
                .collect()
        });
        let mut got = closure.tables.clone();
        let mut want = expected;
        got.sort();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn saturation_is_detected() {
        // On the 2-chain the unary tables saturate almost immediately.
        let c2 = FiniteHeytingAlgebra::chain(2);
        let atoms = vec![
            (vec![0u8, 1], Formula::Var(0)),
            (vec![0u8, 0], Formula::Bot),
            (vec![1u8, 1], Formula::Top),
        ];
        let closure = table_closure(atoms, 5, |op, a, b| {
            (0..2)
                .map(|i| c2.apply(op, a[i] as usize, b[i] as usize) as u8)
                .collect()
        });
        assert!(closure.saturated);
        assert_eq!(closure.tables.len(), 4);
    }

    #[test]
    fn schema_ids_round_trip_through_strings() {
        for (s, id) in [
            ("maintool", SchemaId::Maintool),
            ("eqlemma", SchemaId::Eqlemma),
            ("eqD", SchemaId::EqD),
            ("congruence", SchemaId::Congruence),
        ] {
            assert_eq!(s.parse::<SchemaId>().unwrap(), id);
            assert_eq!(id.to_string(), s);
        }
        assert!("eqd".parse::<SchemaId>().is_err());
    }
}
