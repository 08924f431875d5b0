//! The infinite chain 0 < ... < 1/3 < 1/2 < 1, where no least dense element
//! over 0 exists, together with a decidable fragment of the map algebra
//! over its dense coordinates.
//!
//! Maps are piecewise: finitely many pieces over the coordinate n (standing
//! for the point 1/n), each either a constant or a unit-slope shift
//! n to 1/(n+c), with the last piece running to infinity. Meet, join, and
//! implication of such maps are again such maps, so the fragment is closed
//! and every comparison the one-step construction needs is decidable.
//!
//! Canonical form is chosen so that pointwise-equal maps are structurally
//! equal: the tail piece starts as early as its values allow, and the finite
//! prefix is greedily split into slope runs of length at least two, then
//! constant runs.

use serde::{Serialize, Serializer};
use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// A point of the chain: `Frac(n)` is 1/n, `Zero` is the bottom. The order
/// reverses the index, so `Frac(1)` is the top.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OmegaElement {
    Zero,
    Frac(u64),
}

use OmegaElement::{Frac, Zero};

impl OmegaElement {
    pub fn top() -> Self {
        Frac(1)
    }

    pub fn leq(self, other: Self) -> bool {
        match (self, other) {
            (Zero, _) => true,
            (Frac(_), Zero) => false,
            (Frac(a), Frac(b)) => a >= b,
        }
    }

    pub fn meet(self, other: Self) -> Self {
        if self.leq(other) {
            self
        } else {
            other
        }
    }

    pub fn join(self, other: Self) -> Self {
        if self.leq(other) {
            other
        } else {
            self
        }
    }

    /// Chain implication: top when the antecedent is below, otherwise the
    /// consequent.
    pub fn imp(self, other: Self) -> Self {
        if self.leq(other) {
            Frac(1)
        } else {
            other
        }
    }

    /// Membership in the filter of elements dense over the bottom: on this
    /// chain, everything except the bottom itself.
    pub fn dense_over_zero(self) -> bool {
        matches!(self, Frac(_))
    }
}

impl PartialOrd for OmegaElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OmegaElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self, other) {
            (Zero, Zero) => std::cmp::Ordering::Equal,
            (Zero, Frac(_)) => std::cmp::Ordering::Less,
            (Frac(_), Zero) => std::cmp::Ordering::Greater,
            (Frac(a), Frac(b)) => b.cmp(a),
        }
    }
}

impl fmt::Display for OmegaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Zero => write!(f, "0"),
            Frac(1) => write!(f, "1"),
            Frac(n) => write!(f, "1/{n}"),
        }
    }
}

impl Serialize for OmegaElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// One piece of a map: a constant value, or the unit-slope map sending the
/// coordinate n to 1/(n+c).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PieceKind {
    Const(OmegaElement),
    Shift(i64),
}

impl PieceKind {
    fn value_at(self, n: u64) -> OmegaElement {
        match self {
            PieceKind::Const(x) => x,
            PieceKind::Shift(c) => {
                let idx = n as i64 + c;
                debug_assert!(idx >= 1, "shift pieces stay inside the chain");
                Frac(idx as u64)
            }
        }
    }
}

/// A map from the dense coordinates of the chain into the chain, in
/// canonical piecewise form. Structural equality decides pointwise
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PiecewiseMap {
    /// `(start, kind)` with strictly ascending starts beginning at 1; each
    /// piece runs up to the next start, the last one forever.
    pieces: Vec<(u64, PieceKind)>,
}

impl PiecewiseMap {
    pub fn constant(x: OmegaElement) -> Self {
        PiecewiseMap { pieces: vec![(1, PieceKind::Const(x))] }
    }

    /// The identity on the coordinates: n to 1/n.
    pub fn iota() -> Self {
        PiecewiseMap { pieces: vec![(1, PieceKind::Shift(0))] }
    }

    /// The total shift n to 1/(n+c); `c` must keep every coordinate inside
    /// the chain.
    pub fn shift(c: i64) -> Result<Self> {
        Self::from_parts(vec![(1, PieceKind::Shift(c))])
    }

    /// Builds and canonicalizes a map from raw pieces.
    pub fn from_parts(pieces: Vec<(u64, PieceKind)>) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::DomainError("a map needs at least one piece".into()));
        }
        if pieces[0].0 != 1 {
            return Err(Error::DomainError("the first piece must start at coordinate 1".into()));
        }
        for w in pieces.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(Error::DomainError("piece starts must strictly ascend".into()));
            }
        }
        for &(start, kind) in &pieces {
            if let PieceKind::Shift(c) = kind {
                if (start as i64) + c < 1 {
                    return Err(Error::DomainError(format!(
                        "shift by {c} leaves the chain at coordinate {start}"
                    )));
                }
            }
        }
        Ok(Self::canonicalize(&pieces))
    }

    fn eval_raw(pieces: &[(u64, PieceKind)], n: u64) -> OmegaElement {
        let mut current = pieces[0].1;
        for &(start, kind) in pieces {
            if start > n {
                break;
            }
            current = kind;
        }
        current.value_at(n)
    }

    /// Unique normal form. The tail piece is pulled leftward as far as its
    /// values agree with the map; the finite prefix is split greedily into
    /// unit-slope runs of length at least two, then constant runs.
    fn canonicalize(raw: &[(u64, PieceKind)]) -> Self {
        let (tail_start, tail_kind) = *raw.last().expect("validated nonempty");
        let mut m = tail_start;
        while m > 1 {
            let probe = m - 1;
            let tail_defined = match tail_kind {
                PieceKind::Shift(c) => probe as i64 + c >= 1,
                PieceKind::Const(_) => true,
            };
            if !tail_defined || Self::eval_raw(raw, probe) != tail_kind.value_at(probe) {
                break;
            }
            m = probe;
        }

        let prefix: Vec<OmegaElement> = (1..m).map(|n| Self::eval_raw(raw, n)).collect();
        let mut pieces: Vec<(u64, PieceKind)> = Vec::new();
        let mut i = 0usize;
        while i < prefix.len() {
            let n = i as u64 + 1;
            // Longest unit-slope run from here: finite values whose index
            // ascends by one per coordinate.
            let mut slope = 1usize;
            if let Frac(k) = prefix[i] {
                while i + slope < prefix.len() && prefix[i + slope] == Frac(k + slope as u64) {
                    slope += 1;
                }
            }
            if slope >= 2 {
                let Frac(k) = prefix[i] else { unreachable!() };
                pieces.push((n, PieceKind::Shift(k as i64 - n as i64)));
                i += slope;
                continue;
            }
            let mut run = 1usize;
            while i + run < prefix.len() && prefix[i + run] == prefix[i] {
                run += 1;
            }
            pieces.push((n, PieceKind::Const(prefix[i])));
            i += run;
        }
        pieces.push((m, tail_kind));
        PiecewiseMap { pieces }
    }

    pub fn pieces(&self) -> &[(u64, PieceKind)] {
        &self.pieces
    }

    pub fn apply(&self, n: u64) -> OmegaElement {
        assert!(n >= 1, "coordinates start at 1");
        Self::eval_raw(&self.pieces, n)
    }

    /// Splits the common refinement of two maps into ranges where both
    /// kinds combine into a single kind, applies `combine` per range, and
    /// renormalizes.
    fn zip_with(
        &self,
        other: &Self,
        combine: impl Fn(PieceKind, PieceKind, u64, Option<u64>) -> Vec<(u64, PieceKind)>,
    ) -> Self {
        let mut starts: Vec<u64> = self
            .pieces
            .iter()
            .chain(other.pieces.iter())
            .map(|&(s, _)| s)
            .collect();
        starts.sort_unstable();
        starts.dedup();
        let mut raw: Vec<(u64, PieceKind)> = Vec::new();
        for (i, &s) in starts.iter().enumerate() {
            let end = starts.get(i + 1).copied();
            let a = Self::kind_at(&self.pieces, s);
            let b = Self::kind_at(&other.pieces, s);
            raw.extend(combine(a, b, s, end));
        }
        Self::canonicalize(&raw)
    }

    fn kind_at(pieces: &[(u64, PieceKind)], n: u64) -> PieceKind {
        let mut current = pieces[0].1;
        for &(start, kind) in pieces {
            if start > n {
                break;
            }
            current = kind;
        }
        current
    }

    pub fn meet(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b, s, e| combine_pieces(OpSel::Meet, a, b, s, e))
    }

    pub fn join(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b, s, e| combine_pieces(OpSel::Join, a, b, s, e))
    }

    pub fn imp(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b, s, e| combine_pieces(OpSel::Imp, a, b, s, e))
    }

    pub fn leq(&self, other: &Self) -> bool {
        self.imp(other) == Self::constant(Frac(1))
    }

    /// Pointwise membership in the dense-over-zero filter: the map never
    /// takes the value 0.
    pub fn dense_over_zero(&self) -> bool {
        self.pieces
            .iter()
            .all(|&(_, k)| !matches!(k, PieceKind::Const(Zero)))
    }
}

impl fmt::Display for PiecewiseMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &(start, kind)) in self.pieces.iter().enumerate() {
            let range = match self.pieces.get(i + 1) {
                Some(&(next, _)) if next == start + 1 => format!("n={start}"),
                Some(&(next, _)) => format!("n={start}..{}", next - 1),
                None => format!("n>={start}"),
            };
            let value = match kind {
                PieceKind::Const(x) => x.to_string(),
                PieceKind::Shift(0) => "1/n".to_string(),
                PieceKind::Shift(c) if c > 0 => format!("1/(n+{c})"),
                PieceKind::Shift(c) => format!("1/(n-{})", -c),
            };
            parts.push(format!("{range}: {value}"));
        }
        write!(f, "[{}]", parts.join(", "))
    }
}

impl Serialize for PiecewiseMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy)]
enum OpSel {
    Meet,
    Join,
    Imp,
}

/// Combines two piece kinds over the range `[s, e)`. Mixed constant and
/// shift kinds cross at a single coordinate, so the output is at most two
/// subpieces with the split at the crossing.
fn combine_pieces(
    op: OpSel,
    a: PieceKind,
    b: PieceKind,
    s: u64,
    e: Option<u64>,
) -> Vec<(u64, PieceKind)> {
    use PieceKind::{Const, Shift};
    match (a, b) {
        (Const(x), Const(y)) => {
            let v = match op {
                OpSel::Meet => x.meet(y),
                OpSel::Join => x.join(y),
                OpSel::Imp => x.imp(y),
            };
            vec![(s, Const(v))]
        }
        (Shift(c1), Shift(c2)) => {
            // Pointwise index comparison is uniform: 1/(n+c1) <= 1/(n+c2)
            // exactly when c1 >= c2, at every coordinate of the range.
            let kind = match op {
                OpSel::Meet => Shift(c1.max(c2)),
                OpSel::Join => Shift(c1.min(c2)),
                OpSel::Imp => {
                    if c1 >= c2 {
                        Const(Frac(1))
                    } else {
                        Shift(c2)
                    }
                }
            };
            vec![(s, kind)]
        }
        (Const(Zero), Shift(c)) => {
            let kind = match op {
                OpSel::Meet => Const(Zero),
                OpSel::Join => Shift(c),
                OpSel::Imp => Const(Frac(1)),
            };
            vec![(s, kind)]
        }
        (Shift(c), Const(Zero)) => {
            // The shifted value is never zero, so the implication lands on
            // the consequent throughout.
            let kind = match op {
                OpSel::Meet => Const(Zero),
                OpSel::Join => Shift(c),
                OpSel::Imp => Const(Zero),
            };
            vec![(s, kind)]
        }
        (Const(Frac(k)), Shift(c)) | (Shift(c), Const(Frac(k))) => {
            let shift_first = matches!(a, Shift(_));
            // The shift sits below the constant exactly from n + c >= k,
            // so the comparison flips once, at the crossing coordinate.
            let crossing = k as i64 - c;
            let (split, low, high) = if shift_first {
                match op {
                    OpSel::Meet => (crossing, Const(Frac(k)), Shift(c)),
                    OpSel::Join => (crossing, Shift(c), Const(Frac(k))),
                    OpSel::Imp => (crossing, Const(Frac(k)), Const(Frac(1))),
                }
            } else {
                match op {
                    OpSel::Meet => (crossing, Const(Frac(k)), Shift(c)),
                    OpSel::Join => (crossing, Shift(c), Const(Frac(k))),
                    // The constant stays below through the crossing point
                    // itself, where the two sides agree.
                    OpSel::Imp => (crossing + 1, Const(Frac(1)), Shift(c)),
                }
            };
            if split <= s as i64 {
                vec![(s, high)]
            } else if e.is_some_and(|e| split >= e as i64) {
                vec![(s, low)]
            } else {
                vec![(s, low), (split as u64, high)]
            }
        }
    }
}

/// Witness that a map lies in the filter generated by the implications of
/// the identity into the dense constants: the least coordinate bound `m`
/// with the map equal to 1 from `m` on and at least 1/m before.
pub fn f0_member(f: &PiecewiseMap) -> Option<u64> {
    let &(tail_start, tail_kind) = f.pieces().last().expect("maps are total");
    if tail_kind != PieceKind::Const(Frac(1)) {
        return None;
    }
    let mut m = tail_start.max(1);
    for (i, &(start, kind)) in f.pieces().iter().enumerate() {
        if start == tail_start {
            break;
        }
        let last_point = f.pieces()[i + 1].0 - 1;
        match kind {
            PieceKind::Const(Zero) => return None,
            PieceKind::Const(Frac(k)) => m = m.max(k),
            PieceKind::Shift(c) => m = m.max((last_point as i64 + c) as u64),
        }
    }
    Some(m)
}

/// Equality in the quotient by the dense-implication filter at zero: the
/// bi-implication must eventually reach 1 and stay bounded by the witness.
pub fn quotient_equiv(f: &PiecewiseMap, g: &PiecewiseMap) -> bool {
    f0_member(&f.imp(g).meet(&g.imp(f))).is_some()
}

/// All maps reachable from the identity and a constant pool by at most
/// `depth` rounds of pointwise operations, deduplicated by canonical form.
pub fn enumerate_fragment(depth: usize, extra_constants: &[OmegaElement]) -> Vec<PiecewiseMap> {
    let mut pool: Vec<OmegaElement> = vec![Zero, Frac(1), Frac(2), Frac(3), Frac(5)];
    for &c in extra_constants {
        if !pool.contains(&c) {
            pool.push(c);
        }
    }
    let mut elements: Vec<PiecewiseMap> = vec![PiecewiseMap::iota()];
    let mut seen: HashSet<PiecewiseMap> = elements.iter().cloned().collect();
    for c in pool {
        let m = PiecewiseMap::constant(c);
        if seen.insert(m.clone()) {
            elements.push(m);
        }
    }
    for _ in 0..depth {
        let snapshot = elements.clone();
        for f in &snapshot {
            for g in &snapshot {
                for h in [f.meet(g), f.join(g), f.imp(g)] {
                    if seen.insert(h.clone()) {
                        elements.push(h);
                    }
                }
            }
        }
    }
    elements
}

/// One verified check group of the symbolic construction.
#[derive(Clone, Debug, Serialize)]
pub struct OmegaCheck {
    pub name: String,
    pub instances: u64,
    pub violations: Vec<String>,
}

/// Outcome of running the one-step checks over the enumerated fragment.
#[derive(Clone, Debug, Serialize)]
pub struct OmegaReport {
    pub depth: usize,
    pub constants: Vec<OmegaElement>,
    pub elements: usize,
    pub checks: Vec<OmegaCheck>,
}

impl OmegaReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.violations.is_empty())
    }
}

/// Checks the one-step construction on the symbolic chain over the
/// enumerated fragment: density over zero has no least element, distinct
/// constants stay distinct in the quotient, the identity's class is below
/// every dense class, and implication out of the identity only sees its
/// argument's top coordinate.
pub fn verify_onestep_omega(depth: usize, extra_constants: &[OmegaElement]) -> OmegaReport {
    let elements = enumerate_fragment(depth, extra_constants);
    let iota = PiecewiseMap::iota();
    let mut checks = Vec::new();

    // No candidate 1/m is least among the dense elements: 1/(m+1) is
    // dense and strictly below. Probe past every index the fragment
    // mentions.
    let mut max_idx = 10u64;
    for f in &elements {
        for &(start, kind) in f.pieces() {
            max_idx = max_idx.max(start);
            match kind {
                PieceKind::Const(Frac(k)) => max_idx = max_idx.max(k),
                PieceKind::Shift(c) => max_idx = max_idx.max((start as i64 + c).unsigned_abs()),
                PieceKind::Const(Zero) => {}
            }
        }
    }
    let mut violations = Vec::new();
    for m in 1..=max_idx {
        let below = Frac(m + 1);
        if !(below.dense_over_zero() && below.leq(Frac(m)) && below != Frac(m)) {
            violations.push(format!("no dense element strictly below 1/{m}"));
        }
    }
    checks.push(OmegaCheck {
        name: "no-least-dense-element".into(),
        instances: max_idx,
        violations,
    });

    let constants: Vec<OmegaElement> = {
        let mut pool: Vec<OmegaElement> = vec![Zero, Frac(1), Frac(2), Frac(3), Frac(5)];
        for &c in extra_constants {
            if !pool.contains(&c) {
                pool.push(c);
            }
        }
        pool
    };
    let mut violations = Vec::new();
    let mut instances = 0u64;
    for (i, &x) in constants.iter().enumerate() {
        for &y in &constants[i + 1..] {
            instances += 1;
            if quotient_equiv(&PiecewiseMap::constant(x), &PiecewiseMap::constant(y)) {
                violations.push(format!("constants {x} and {y} collapse in the quotient"));
            }
        }
    }
    checks.push(OmegaCheck {
        name: "distinct-constants-separate".into(),
        instances,
        violations,
    });

    let mut violations = Vec::new();
    let mut instances = 0u64;
    for f in &elements {
        if !f.dense_over_zero() {
            continue;
        }
        instances += 1;
        if f0_member(&iota.imp(f)).is_none() {
            violations.push(format!("class of {f} does not sit above the identity's class"));
        }
    }
    checks.push(OmegaCheck {
        name: "iota-class-least-dense".into(),
        instances,
        violations,
    });

    let mut violations = Vec::new();
    for f in &elements {
        let collapsed = PiecewiseMap::constant(f.apply(1));
        if iota.imp(f) != iota.imp(&collapsed) {
            violations.push(format!("implication from the identity into {f} is not collapsed"));
        }
    }
    checks.push(OmegaCheck {
        name: "implication-collapse".into(),
        instances: elements.len() as u64,
        violations,
    });

    OmegaReport {
        depth,
        constants,
        elements: elements.len(),
        checks,
    }
}

/// What goes wrong when the shifted map is admitted as a generator from
/// outside the closed fragment: its implication from the identity is
/// itself, it sits below the constant 1/n0, and so the filter it generates
/// collapses that constant onto the top.
#[derive(Clone, Debug, Serialize)]
pub struct RemarkReport {
    pub n0: u64,
    pub delta: PiecewiseMap,
    /// The identity's implication into delta equals delta itself.
    pub implication_is_fixed: bool,
    /// Constant bound the shifted map stays below.
    pub bound: OmegaElement,
    /// Pair identified by the enlarged filter; injectivity of the
    /// embedding fails unless the pair is trivial.
    pub collapsed_pair: (OmegaElement, OmegaElement),
}

/// Builds the outside shift by `n0` and verifies the collapse it forces.
pub fn remark_counterexample(n0: u64) -> Result<RemarkReport> {
    if n0 < 1 {
        return Err(Error::DomainError("the shift offset must be at least 1".into()));
    }
    let delta = PiecewiseMap::shift(n0 as i64)?;
    let iota = PiecewiseMap::iota();
    let fixed = iota.imp(&delta) == delta;
    let bound = Frac(n0);
    if !delta.leq(&PiecewiseMap::constant(bound)) {
        return Err(Error::ContractViolation(
            "the shifted map must sit below its bounding constant".into(),
        ));
    }
    if !fixed {
        return Err(Error::ContractViolation(
            "the identity's implication into the shifted map must fix it".into(),
        ));
    }
    // With delta admitted as a dense generator, the filter contains
    // iota=>delta = delta, hence everything above it, hence the constant
    // bound; the bound's class then equals the class of top.
    let biimp = PiecewiseMap::constant(bound)
        .imp(&PiecewiseMap::constant(Frac(1)))
        .meet(&PiecewiseMap::constant(Frac(1)).imp(&PiecewiseMap::constant(bound)));
    if !delta.leq(&biimp) {
        return Err(Error::ContractViolation(
            "the enlarged filter must identify the bound with top".into(),
        ));
    }
    Ok(RemarkReport {
        n0,
        delta,
        implication_is_fixed: fixed,
        bound,
        collapsed_pair: (bound, Frac(1)),
    })
}

#[cfg(test)]
mod tests {
    use super::PieceKind::{Const, Shift};
    use super::*;

    #[test]
    fn element_operations_follow_the_chain_rules() {
        assert_eq!(Frac(3).imp(Frac(5)), Frac(5));
        assert_eq!(Frac(5).imp(Frac(3)), Frac(1));
        assert_eq!(Frac(2).meet(Zero), Zero);
        assert_eq!(Frac(2).imp(Zero), Zero);
        assert_eq!(Zero.imp(Frac(7)), Frac(1));
        let pool = [Zero, Frac(9), Frac(5), Frac(3), Frac(2), Frac(1)];
        for x in pool {
            for y in pool {
                for z in pool {
                    assert_eq!(x.meet(y).leq(z), x.leq(y.imp(z)), "{x} {y} {z}");
                }
            }
        }
    }

    #[test]
    fn element_order_sorts_by_value() {
        let mut v = vec![Frac(1), Zero, Frac(3), Frac(2)];
        v.sort();
        assert_eq!(v, vec![Zero, Frac(3), Frac(2), Frac(1)]);
    }

    #[test]
    fn canonical_forms_are_unique_for_equal_functions() {
        // The same function written with a late shift start and an early
        // one: values 1, 1, 1/2, 1/3, ...
        let f1 = PiecewiseMap::from_parts(vec![(1, Const(Frac(1))), (2, Shift(-1))]).unwrap();
        let f2 = PiecewiseMap::from_parts(vec![(1, Const(Frac(1))), (3, Shift(-1))]).unwrap();
        assert_eq!(f1, f2);
        for n in 1..=10 {
            assert_eq!(f1.apply(n), f2.apply(n));
        }
        // Re-normalizing a canonical form changes nothing.
        let again = PiecewiseMap::from_parts(f1.pieces().to_vec()).unwrap();
        assert_eq!(again, f1);
    }

    #[test]
    fn slope_runs_hiding_among_constants_are_recognized() {
        let f = PiecewiseMap::from_parts(vec![
            (1, Const(Frac(4))),
            (2, Const(Frac(5))),
            (3, Const(Frac(9))),
        ])
        .unwrap();
        assert_eq!(f.pieces(), &[(1, Shift(3)), (3, Const(Frac(9)))]);
    }

    #[test]
    fn single_point_shift_pieces_become_constants() {
        let f = PiecewiseMap::from_parts(vec![(1, Shift(0)), (2, Const(Zero))]).unwrap();
        assert_eq!(f.pieces(), &[(1, Const(Frac(1))), (2, Const(Zero))]);
    }

    #[test]
    fn invalid_piece_lists_are_rejected() {
        assert!(PiecewiseMap::from_parts(vec![]).is_err());
        assert!(PiecewiseMap::from_parts(vec![(2, Const(Zero))]).is_err());
        assert!(PiecewiseMap::from_parts(vec![(1, Shift(-1))]).is_err());
        assert!(
            PiecewiseMap::from_parts(vec![(1, Const(Zero)), (1, Const(Frac(1)))]).is_err()
        );
        // A shift valid on its own range is fine even with a negative
        // offset.
        assert!(PiecewiseMap::from_parts(vec![(1, Const(Frac(1))), (4, Shift(-3))]).is_ok());
    }

    #[test]
    fn implication_into_a_constant_splits_at_the_crossing() {
        let f = PiecewiseMap::iota().imp(&PiecewiseMap::constant(Frac(3)));
        assert_eq!(f.pieces(), &[(1, Const(Frac(3))), (3, Const(Frac(1)))]);
        assert_eq!(f0_member(&f), Some(3));
    }

    #[test]
    fn shifts_absorb_implication_from_the_identity() {
        for c in 1..=5 {
            let delta = PiecewiseMap::shift(c).unwrap();
            assert_eq!(PiecewiseMap::iota().imp(&delta), delta);
        }
        // Shift by zero is the identity itself, so the implication is top.
        assert_eq!(
            PiecewiseMap::iota().imp(&PiecewiseMap::iota()),
            PiecewiseMap::constant(Frac(1))
        );
    }

    #[test]
    fn pointwise_soundness_up_to_a_thousand() {
        let pool = vec![
            PiecewiseMap::iota(),
            PiecewiseMap::constant(Zero),
            PiecewiseMap::constant(Frac(1)),
            PiecewiseMap::constant(Frac(2)),
            PiecewiseMap::constant(Frac(3)),
            PiecewiseMap::shift(1).unwrap(),
            PiecewiseMap::shift(4).unwrap(),
            PiecewiseMap::iota().imp(&PiecewiseMap::constant(Frac(3))),
            PiecewiseMap::from_parts(vec![(1, Const(Frac(1))), (3, Shift(-2))]).unwrap(),
        ];
        for f in &pool {
            for g in &pool {
                let m = f.meet(g);
                let j = f.join(g);
                let i = f.imp(g);
                for n in 1..=1000 {
                    assert_eq!(m.apply(n), f.apply(n).meet(g.apply(n)));
                    assert_eq!(j.apply(n), f.apply(n).join(g.apply(n)));
                    assert_eq!(i.apply(n), f.apply(n).imp(g.apply(n)));
                }
            }
        }
    }

    #[test]
    fn density_over_zero_is_pointwise_positivity() {
        assert!(Frac(7).dense_over_zero());
        assert!(!Zero.dense_over_zero());
        assert!(PiecewiseMap::iota().dense_over_zero());
        assert!(!PiecewiseMap::constant(Zero).dense_over_zero());
        let dips = PiecewiseMap::from_parts(vec![(1, Shift(0)), (4, Const(Zero))]).unwrap();
        assert!(!dips.dense_over_zero());
    }

    #[test]
    fn filter_membership_witnesses() {
        assert_eq!(f0_member(&PiecewiseMap::constant(Frac(1))), Some(1));
        assert_eq!(f0_member(&PiecewiseMap::iota()), None);
        assert_eq!(f0_member(&PiecewiseMap::constant(Frac(2))), None);
        assert_eq!(f0_member(&PiecewiseMap::constant(Zero)), None);
    }

    #[test]
    fn quotient_equivalence_examples() {
        let iota = PiecewiseMap::iota();
        assert!(quotient_equiv(&iota, &iota));
        assert!(!quotient_equiv(
            &PiecewiseMap::constant(Frac(2)),
            &PiecewiseMap::constant(Frac(3))
        ));
        // Disturbing the identity at the first coordinate only is
        // invisible to the quotient.
        let dented = PiecewiseMap::from_parts(vec![(1, Const(Frac(2))), (2, Shift(0))]).unwrap();
        assert!(quotient_equiv(&iota, &dented));
    }

    #[test]
    fn enumerated_fragment_has_closed_tails() {
        for f in enumerate_fragment(2, &[]) {
            let &(_, tail) = f.pieces().last().unwrap();
            match tail {
                Const(_) | Shift(0) => {}
                other => panic!("tail {other:?} reached from inside the fragment in {f}"),
            }
        }
    }

    #[test]
    fn depth_two_verification_passes() {
        let report = verify_onestep_omega(2, &[]);
        assert!(report.ok(), "{:?}", report.checks);
        assert_eq!(report.checks.len(), 4);
        assert!(report.elements > 20);
        for check in &report.checks {
            assert!(check.instances > 0, "{} never ran", check.name);
        }
    }

    #[test]
    fn counterexample_reports_the_collapsed_pair() {
        let r = remark_counterexample(2).unwrap();
        assert!(r.implication_is_fixed);
        assert_eq!(r.collapsed_pair, (Frac(2), Frac(1)));
        assert_eq!(r.bound, Frac(2));
        let r1 = remark_counterexample(1).unwrap();
        assert_eq!(r1.collapsed_pair, (Frac(1), Frac(1)));
        let r5 = remark_counterexample(5).unwrap();
        assert_eq!(r5.collapsed_pair, (Frac(5), Frac(1)));
        assert!(remark_counterexample(0).is_err());
    }

    #[test]
    fn display_forms_are_stable() {
        assert_eq!(PiecewiseMap::iota().to_string(), "[n>=1: 1/n]");
        assert_eq!(PiecewiseMap::constant(Zero).to_string(), "[n>=1: 0]");
        let f = PiecewiseMap::iota().imp(&PiecewiseMap::constant(Frac(3)));
        assert_eq!(f.to_string(), "[n=1..2: 1/3, n>=3: 1]");
        assert_eq!(PiecewiseMap::shift(2).unwrap().to_string(), "[n>=1: 1/(n+2)]");
    }
}
