//! Bounded exhaustive formula streams.

use crate::algebra::BIN_OPS;

use super::Formula;

/// Every formula over `nvars` variables (plus the constants) of depth at
/// most `max_depth`, each exactly once, sorted by depth, then size, then
/// structural order. The count grows as roughly the square of the previous
/// level per depth step, so callers keep `max_depth` small.
pub fn enumerate_terms(nvars: u32, max_depth: usize) -> Vec<Formula> {
    let mut atoms: Vec<Formula> = (0..nvars).map(Formula::Var).collect();
    atoms.push(Formula::Bot);
    atoms.push(Formula::Top);

    // all = formulas of depth <= d; the slice [prev_start..] holds depth
    // exactly d. A compound has depth d+1 exactly when its deeper child has
    // depth d, so pairing against the last slice never rebuilds a formula.
    let mut all = atoms;
    let mut prev_start = 0;
    for _ in 0..max_depth {
        let len = all.len();
        let mut next = Vec::new();
        for i in 0..len {
            for j in 0..len {
                if i < prev_start && j < prev_start {
                    continue;
                }
                for op in BIN_OPS {
                    next.push(Formula::op(op, all[i].clone(), all[j].clone()));
                }
            }
        }
        prev_start = len;
        all.extend(next);
    }

    let mut keyed: Vec<(usize, usize, Formula)> = all
        .into_iter()
        .map(|f| (f.depth(), f.size(), f))
        .collect();
    keyed.sort();
    keyed.into_iter().map(|(_, _, f)| f).collect()
}
