//! Propositional formula trees over the signature (meet, join, implication,
//! bottom, top), their evaluation in a finite Heyting algebra, and exhaustive
//! identity checking.

pub mod enumerate;
pub mod parse;
pub mod schema;

pub use enumerate::enumerate_terms;
pub use parse::{parse, parse_with};
pub use schema::{
    check_schema, table_closure, SchemaBounds, SchemaId, SchemaReport, SchemaViolation,
    TableClosure,
};

use std::fmt;

use crate::algebra::{BinOp, FiniteHeytingAlgebra};
use crate::error::{Error, Result};

/// A formula tree. Negation and bi-implication are not constructors; parsing
/// expands them, so every consumer inducts over exactly these six cases.
///
/// The derived `Ord` is structural with constructors compared in declaration
/// order; the enumerator relies on it for a reproducible stream.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Var(u32),
    Bot,
    Top,
    Meet(Box<Formula>, Box<Formula>),
    Join(Box<Formula>, Box<Formula>),
    Impl(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn op(op: BinOp, l: Formula, r: Formula) -> Formula {
        match op {
            BinOp::Meet => Formula::Meet(Box::new(l), Box::new(r)),
            BinOp::Join => Formula::Join(Box::new(l), Box::new(r)),
            BinOp::Impl => Formula::Impl(Box::new(l), Box::new(r)),
        }
    }

    pub fn meet(l: Formula, r: Formula) -> Formula {
        Formula::op(BinOp::Meet, l, r)
    }

    pub fn join(l: Formula, r: Formula) -> Formula {
        Formula::op(BinOp::Join, l, r)
    }

    pub fn imp(l: Formula, r: Formula) -> Formula {
        Formula::op(BinOp::Impl, l, r)
    }

    /// x -> 0.
    pub fn neg(x: Formula) -> Formula {
        Formula::imp(x, Formula::Bot)
    }

    /// (l -> r) & (r -> l).
    pub fn biimp(l: Formula, r: Formula) -> Formula {
        Formula::meet(
            Formula::imp(l.clone(), r.clone()),
            Formula::imp(r, l),
        )
    }

    /// Leaves have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Bot | Formula::Top => 0,
            Formula::Meet(l, r) | Formula::Join(l, r) | Formula::Impl(l, r) => {
                1 + l.depth().max(r.depth())
            }
        }
    }

    /// Node count, leaves included.
    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Bot | Formula::Top => 1,
            Formula::Meet(l, r) | Formula::Join(l, r) | Formula::Impl(l, r) => {
                1 + l.size() + r.size()
            }
        }
    }

    pub fn max_var(&self) -> Option<u32> {
        match self {
            Formula::Var(i) => Some(*i),
            Formula::Bot | Formula::Top => None,
            Formula::Meet(l, r) | Formula::Join(l, r) | Formula::Impl(l, r) => {
                match (l.max_var(), r.max_var()) {
                    (a, None) => a,
                    (None, b) => b,
                    (Some(a), Some(b)) => Some(a.max(b)),
                }
            }
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        // Precedence: -> 0, | 1, & 2, ~ 3, atoms 4. An operator below the
        // context minimum gets parenthesized.
        let prec = match self {
            Formula::Var(_) | Formula::Bot | Formula::Top => 4,
            Formula::Impl(_, r) if **r == Formula::Bot => 3,
            Formula::Meet(..) => 2,
            Formula::Join(..) => 1,
            Formula::Impl(..) => 0,
        };
        if prec < min {
            write!(f, "(")?;
            self.fmt_prec(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Formula::Var(i) => write!(f, "p{i}"),
            Formula::Bot => write!(f, "0"),
            Formula::Top => write!(f, "1"),
            Formula::Impl(l, r) if **r == Formula::Bot => {
                write!(f, "~")?;
                l.fmt_prec(f, 3)
            }
            Formula::Meet(l, r) => {
                l.fmt_prec(f, 2)?;
                write!(f, " & ")?;
                r.fmt_prec(f, 3)
            }
            Formula::Join(l, r) => {
                l.fmt_prec(f, 1)?;
                write!(f, " | ")?;
                r.fmt_prec(f, 2)
            }
            Formula::Impl(l, r) => {
                l.fmt_prec(f, 1)?;
                write!(f, " -> ")?;
                r.fmt_prec(f, 0)
            }
        }
    }
}

/// Prints with minimal parentheses in the input grammar; `x -> 0` renders as
/// `~x`. Parsing the output reproduces the tree.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

/// A total assignment of algebra elements to variable indices.
#[derive(Clone, Debug)]
pub struct Valuation<'a> {
    pub algebra: &'a FiniteHeytingAlgebra,
    pub assignment: Vec<usize>,
}

impl<'a> Valuation<'a> {
    pub fn new(algebra: &'a FiniteHeytingAlgebra, assignment: Vec<usize>) -> Self {
        Valuation { algebra, assignment }
    }

    pub fn eval(&self, f: &Formula) -> Result<usize> {
        eval_in(f, self.algebra, &self.assignment)
    }
}

pub fn eval(f: &Formula, v: &Valuation<'_>) -> Result<usize> {
    v.eval(f)
}

/// Recursive table-lookup evaluation.
pub fn eval_in(
    f: &Formula,
    h: &FiniteHeytingAlgebra,
    assignment: &[usize],
) -> Result<usize> {
    match f {
        Formula::Var(i) => assignment
            .get(*i as usize)
            .copied()
            .ok_or(Error::MissingVariable(*i)),
        Formula::Bot => Ok(h.bot()),
        Formula::Top => Ok(h.top()),
        Formula::Meet(l, r) => Ok(h.meet(eval_in(l, h, assignment)?, eval_in(r, h, assignment)?)),
        Formula::Join(l, r) => Ok(h.join(eval_in(l, h, assignment)?, eval_in(r, h, assignment)?)),
        Formula::Impl(l, r) => Ok(h.imp(eval_in(l, h, assignment)?, eval_in(r, h, assignment)?)),
    }
}

/// Checks `lhs = rhs` under every valuation of the combined variable set,
/// in odometer order (variable 0 slowest, last one fastest). Returns the
/// first failing assignment, or `None` when the identity holds.
///
/// Variable indices are matched positionally across the two sides; a side
/// may use fewer variables than the other. Indices below the maximum that
/// neither side reads are still swept, which leaves the outcome unchanged.
pub fn holds_identity(
    h: &FiniteHeytingAlgebra,
    lhs: &Formula,
    rhs: &Formula,
) -> Result<Option<Vec<usize>>> {
    let nvars = lhs
        .max_var()
        .into_iter()
        .chain(rhs.max_var())
        .map(|i| i as usize + 1)
        .max()
        .unwrap_or(0);
    let n = h.size();
    let mut assignment = vec![h.bot(); nvars];
    loop {
        let l = eval_in(lhs, h, &assignment)?;
        let r = eval_in(rhs, h, &assignment)?;
        if l != r {
            return Ok(Some(assignment));
        }
        // Odometer step, last variable fastest.
        let mut pos = nvars;
        loop {
            if pos == 0 {
                return Ok(None);
            }
            pos -= 1;
            assignment[pos] += 1;
            if assignment[pos] < n {
                break;
            }
            assignment[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u32) -> Formula {
        Formula::Var(i)
    }

    #[test]
    fn display_uses_minimal_parentheses() {
        let f = Formula::imp(
            Formula::imp(v(0), v(1)),
            Formula::imp(v(0), Formula::meet(v(1), Formula::join(v(0), v(1)))),
        );
        assert_eq!(f.to_string(), "(p0 -> p1) -> p0 -> p1 & (p0 | p1)");
        assert_eq!(Formula::neg(Formula::neg(v(0))).to_string(), "~~p0");
        assert_eq!(
            Formula::neg(Formula::meet(v(0), v(1))).to_string(),
            "~(p0 & p1)"
        );
        assert_eq!(
            Formula::meet(Formula::meet(v(0), v(1)), v(2)).to_string(),
            "p0 & p1 & p2"
        );
        assert_eq!(
            Formula::meet(v(0), Formula::meet(v(1), v(2))).to_string(),
            "p0 & (p1 & p2)"
        );
    }

    #[test]
    fn peirce_value_in_three_chain() {
        // ((p->q)->p)->p at p = m, q = 0 comes out m, not top.
        let c3 = FiniteHeytingAlgebra::chain(3);
        let peirce = Formula::imp(Formula::imp(Formula::imp(v(0), v(1)), v(0)), v(0));
        let val = Valuation::new(&c3, vec![1, 0]);
        assert_eq!(val.eval(&peirce).unwrap(), 1);
    }

    #[test]
    fn nested_implication_value_in_three_chain() {
        // x -> ((h -> a) -> h) at x=m, h=0, a=0.
        let c3 = FiniteHeytingAlgebra::chain(3);
        let f = Formula::imp(
            v(0),
            Formula::imp(Formula::imp(v(1), v(2)), v(1)),
        );
        assert_eq!(eval_in(&f, &c3, &[1, 0, 0]).unwrap(), 0);
    }

    #[test]
    fn missing_variable_is_reported() {
        let c3 = FiniteHeytingAlgebra::chain(3);
        let f = v(2);
        assert!(matches!(
            eval_in(&f, &c3, &[0, 1]),
            Err(Error::MissingVariable(2))
        ));
    }

    #[test]
    fn excluded_middle_fails_exactly_off_boolean() {
        let lem = Formula::join(v(0), Formula::neg(v(0)));
        let c3 = FiniteHeytingAlgebra::chain(3);
        let cex = holds_identity(&c3, &lem, &Formula::Top).unwrap();
        assert_eq!(cex, Some(vec![1]));

        let b4 = crate::algebra::FiniteHeytingAlgebra::from_poset(
            &crate::algebra::FinitePoset::antichain(2),
        )
        .unwrap();
        assert_eq!(holds_identity(&b4, &lem, &Formula::Top).unwrap(), None);
    }

    #[test]
    fn meet_commutativity_holds_everywhere() {
        let lhs = Formula::meet(v(0), v(1));
        let rhs = Formula::meet(v(1), v(0));
        for k in 2..=5 {
            let c = FiniteHeytingAlgebra::chain(k);
            assert_eq!(holds_identity(&c, &lhs, &rhs).unwrap(), None);
        }
    }

    #[test]
    fn positional_matching_distinguishes_variables() {
        let c2 = FiniteHeytingAlgebra::chain(2);
        // p0 vs p1 fails at (0, 1); a lone p1 against itself sweeps the
        // unused slot 0 without complaint.
        assert_eq!(
            holds_identity(&c2, &v(0), &v(1)).unwrap(),
            Some(vec![0, 1])
        );
        assert_eq!(holds_identity(&c2, &v(1), &v(1)).unwrap(), None);
    }

    #[test]
    fn identity_always_holds_against_itself() {
        let c3 = FiniteHeytingAlgebra::chain(3);
        for f in enumerate_terms(2, 1) {
            assert_eq!(holds_identity(&c3, &f, &f).unwrap(), None);
        }
    }
}
