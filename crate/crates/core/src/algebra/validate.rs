//! Axiom checking for candidate Heyting algebra tables.
//!
//! `validate` never trusts its input: every axiom group is swept exhaustively
//! and the first failing triple is kept as evidence.

use serde::Serialize;

/// Candidate tables as handed to `validate`. Operation tables are flat
/// row-major `n * n` vectors of element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawTables {
    pub n: usize,
    pub leq: Vec<bool>,
    pub meet: Vec<usize>,
    pub join: Vec<usize>,
    pub imp: Vec<usize>,
    pub bot: usize,
    pub top: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AxiomGroup {
    Order,
    Lattice,
    Distributivity,
    Residuation,
    Bounds,
}

pub const AXIOM_GROUPS: [AxiomGroup; 5] = [
    AxiomGroup::Order,
    AxiomGroup::Lattice,
    AxiomGroup::Distributivity,
    AxiomGroup::Residuation,
    AxiomGroup::Bounds,
];

#[derive(Clone, Debug, Serialize)]
pub struct GroupReport {
    pub group: AxiomGroup,
    pub pass: bool,
    /// First failing triple, if any; unused positions are repeated.
    pub evidence: Option<(usize, usize, usize)>,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub groups: Vec<GroupReport>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.groups.iter().all(|g| g.pass)
    }

    pub fn first_failure(&self) -> Option<&GroupReport> {
        self.groups.iter().find(|g| !g.pass)
    }
}

struct Failure {
    triple: (usize, usize, usize),
    detail: String,
}

pub fn validate(t: &RawTables) -> ValidationReport {
    let groups = AXIOM_GROUPS
        .iter()
        .map(|&group| {
            let failure = match group {
                AxiomGroup::Order => check_order(t),
                AxiomGroup::Lattice => check_lattice(t),
                AxiomGroup::Distributivity => check_distributivity(t),
                AxiomGroup::Residuation => check_residuation(t),
                AxiomGroup::Bounds => check_bounds(t),
            };
            match failure {
                None => GroupReport { group, pass: true, evidence: None, detail: None },
                Some(f) => GroupReport {
                    group,
                    pass: false,
                    evidence: Some(f.triple),
                    detail: Some(f.detail),
                },
            }
        })
        .collect();
    ValidationReport { groups }
}

fn le(t: &RawTables, x: usize, y: usize) -> bool {
    t.leq[x * t.n + y]
}

fn check_order(t: &RawTables) -> Option<Failure> {
    let n = t.n;
    if n == 0 {
        return Some(Failure { triple: (0, 0, 0), detail: "empty carrier".into() });
    }
    if t.leq.len() != n * n
        || t.meet.len() != n * n
        || t.join.len() != n * n
        || t.imp.len() != n * n
    {
        return Some(Failure { triple: (0, 0, 0), detail: "table size mismatch".into() });
    }
    for v in t.meet.iter().chain(&t.join).chain(&t.imp) {
        if *v >= n {
            return Some(Failure {
                triple: (*v, 0, 0),
                detail: format!("table entry {v} out of range"),
            });
        }
    }
    if t.bot >= n || t.top >= n {
        return Some(Failure { triple: (t.bot, t.top, 0), detail: "bounds out of range".into() });
    }
    for i in 0..n {
        if !le(t, i, i) {
            return Some(Failure { triple: (i, i, i), detail: "not reflexive".into() });
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && le(t, i, j) && le(t, j, i) {
                return Some(Failure { triple: (i, j, j), detail: "not antisymmetric".into() });
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if !le(t, i, j) {
                continue;
            }
            for k in 0..n {
                if le(t, j, k) && !le(t, i, k) {
                    return Some(Failure { triple: (i, j, k), detail: "not transitive".into() });
                }
            }
        }
    }
    None
}

fn check_lattice(t: &RawTables) -> Option<Failure> {
    let n = t.n;
    for x in 0..n {
        for y in 0..n {
            let m = t.meet[x * n + y];
            if !le(t, m, x) || !le(t, m, y) {
                return Some(Failure {
                    triple: (x, y, m),
                    detail: "meet is not a lower bound".into(),
                });
            }
            let j = t.join[x * n + y];
            if !le(t, x, j) || !le(t, y, j) {
                return Some(Failure {
                    triple: (x, y, j),
                    detail: "join is not an upper bound".into(),
                });
            }
            for z in 0..n {
                if le(t, z, x) && le(t, z, y) && !le(t, z, m) {
                    return Some(Failure {
                        triple: (x, y, z),
                        detail: "meet is not the greatest lower bound".into(),
                    });
                }
                if le(t, x, z) && le(t, y, z) && !le(t, j, z) {
                    return Some(Failure {
                        triple: (x, y, z),
                        detail: "join is not the least upper bound".into(),
                    });
                }
            }
        }
    }
    None
}

fn check_distributivity(t: &RawTables) -> Option<Failure> {
    let n = t.n;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = t.meet[x * n + t.join[y * n + z]];
                let rhs = t.join[t.meet[x * n + y] * n + t.meet[x * n + z]];
                if lhs != rhs {
                    return Some(Failure {
                        triple: (x, y, z),
                        detail: "meet does not distribute over join".into(),
                    });
                }
            }
        }
    }
    None
}

fn check_residuation(t: &RawTables) -> Option<Failure> {
    let n = t.n;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = le(t, t.meet[x * n + y], z);
                let rhs = le(t, x, t.imp[y * n + z]);
                if lhs != rhs {
                    return Some(Failure {
                        triple: (x, y, z),
                        detail: "x /\\ y <= z iff x <= y -> z fails".into(),
                    });
                }
            }
        }
    }
    None
}

fn check_bounds(t: &RawTables) -> Option<Failure> {
    let n = t.n;
    for x in 0..n {
        if !le(t, t.bot, x) {
            return Some(Failure { triple: (t.bot, x, x), detail: "bot not least".into() });
        }
        if !le(t, x, t.top) {
            return Some(Failure { triple: (x, t.top, t.top), detail: "top not greatest".into() });
        }
    }
    None
}
