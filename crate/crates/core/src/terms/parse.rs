//! Recursive-descent parser for the formula grammar.
//!
//! Precedence from tightest to loosest: `~`, `&`, `|`, `->`/`<->`, with the
//! two arrow forms right-associative and `&`/`|` left-associative. Constants
//! are `0`/`⊥` and `1`/`⊤`. A variable is either an explicit index `p0`,
//! `p1`, ... or any other identifier, which is assigned the next free index
//! in order of first appearance. Mixing the two styles in one name table is
//! allowed but the explicit indices do not shift the appearance counter.

use crate::error::{Error, Result};

use super::Formula;

/// Parses one formula with a fresh name table.
pub fn parse(text: &str) -> Result<Formula> {
    let mut names = Vec::new();
    parse_with(text, &mut names)
}

/// Parses with a caller-owned name table, so several formulas (say the two
/// sides of an identity) agree on which index each named variable gets.
pub fn parse_with(text: &str, names: &mut Vec<String>) -> Result<Formula> {
    let mut p = Parser {
        chars: text.char_indices().collect(),
        pos: 0,
        names,
    };
    let f = p.implication()?;
    p.skip_ws();
    if let Some(&(byte, c)) = p.chars.get(p.pos) {
        return Err(Error::Parse {
            pos: byte,
            msg: format!("unexpected '{c}'"),
        });
    }
    Ok(f)
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    names: &'a mut Vec<String>,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while matches!(self.chars.get(self.pos), Some((_, c)) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn byte_pos(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|&(b, _)| b)
            .unwrap_or_else(|| {
                self.chars.last().map(|&(b, c)| b + c.len_utf8()).unwrap_or(0)
            })
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        let mut end = self.pos;
        for t in token.chars() {
            match self.chars.get(end) {
                Some(&(_, c)) if c == t => end += 1,
                _ => return false,
            }
        }
        self.pos = end;
        true
    }

    fn implication(&mut self) -> Result<Formula> {
        let lhs = self.join()?;
        // '<->' must be tried first, '<' alone is not a token.
        if self.eat("<->") {
            let rhs = self.implication()?;
            Ok(Formula::biimp(lhs, rhs))
        } else if self.eat("->") {
            let rhs = self.implication()?;
            Ok(Formula::imp(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn join(&mut self) -> Result<Formula> {
        let mut f = self.meet()?;
        while self.peek() == Some('|') {
            self.pos += 1;
            f = Formula::join(f, self.meet()?);
        }
        Ok(f)
    }

    fn meet(&mut self) -> Result<Formula> {
        let mut f = self.unary()?;
        while self.peek() == Some('&') {
            self.pos += 1;
            f = Formula::meet(f, self.unary()?);
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula> {
        if self.peek() == Some('~') {
            self.pos += 1;
            return Ok(Formula::neg(self.unary()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Formula> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let f = self.implication()?;
                if !self.eat(")") {
                    return Err(Error::Parse {
                        pos: self.byte_pos(),
                        msg: "expected ')'".into(),
                    });
                }
                Ok(f)
            }
            Some('0') | Some('⊥') => {
                self.pos += 1;
                Ok(Formula::Bot)
            }
            Some('1') | Some('⊤') => {
                self.pos += 1;
                Ok(Formula::Top)
            }
            Some(c) if c.is_alphabetic() || c == '_' => self.identifier(),
            other => Err(Error::Parse {
                pos: self.byte_pos(),
                msg: match other {
                    Some(c) => format!("unexpected '{c}'"),
                    None => "unexpected end of input".into(),
                },
            }),
        }
    }

    fn identifier(&mut self) -> Result<Formula> {
        self.skip_ws();
        let start = self.pos;
        while matches!(
            self.chars.get(self.pos),
            Some((_, c)) if c.is_alphanumeric() || *c == '_'
        ) {
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        // Explicit index form.
        if let Some(digits) = name.strip_prefix('p') {
            if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
                let i: u32 = digits.parse().map_err(|_| Error::Parse {
                    pos: self.chars[start].0,
                    msg: format!("variable index out of range in '{name}'"),
                })?;
                return Ok(Formula::Var(i));
            }
        }
        let i = match self.names.iter().position(|n| n == &name) {
            Some(i) => i,
            None => {
                self.names.push(name);
                self.names.len() - 1
            }
        };
        Ok(Formula::Var(i as u32))
    }
}
