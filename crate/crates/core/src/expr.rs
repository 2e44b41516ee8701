//! Surface syntax for ordinal expressions.
//!
//! ```text
//! expr   := term ("+" term)*
//! term   := factor ("*" factor)*
//! factor := atom ("^" factor)?
//! atom   := "w" | NAT | "(" expr ")"
//! ```
//!
//! `^` binds tighter than `*`, which binds tighter than `+`, and `^` is
//! right-associative. `ω` is accepted as a spelling of `w`. Whitespace
//! between tokens is ignored.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::ordinal::Ordinal;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrdExpr {
    Nat(BigUint),
    Omega,
    Add(Box<OrdExpr>, Box<OrdExpr>),
    Mul(Box<OrdExpr>, Box<OrdExpr>),
    Pow(Box<OrdExpr>, Box<OrdExpr>),
}

impl OrdExpr {
    pub fn eval(&self) -> Ordinal {
        match self {
            OrdExpr::Nat(n) => Ordinal::from_natural(n.clone()),
            OrdExpr::Omega => Ordinal::omega(),
            OrdExpr::Add(a, b) => a.eval().add(&b.eval()),
            OrdExpr::Mul(a, b) => a.eval().mul(&b.eval()),
            OrdExpr::Pow(a, b) => a.eval().pow(&b.eval()),
        }
    }
}

/// A syntax error. `offset` counts characters from the start of the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: Option<char>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at offset {}: expected ", self.offset)?;
        for (i, e) in self.expected.iter().enumerate() {
            if i > 0 {
                f.write_str(if i + 1 == self.expected.len() {
                    " or "
                } else {
                    ", "
                })?;
            }
            f.write_str(e)?;
        }
        match self.found {
            Some(c) => write!(f, ", found '{c}'"),
            None => f.write_str(", found end of input"),
        }
    }
}

/// Character cursor shared by the expression and interval-set parsers.
pub(crate) struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    pub(crate) fn new(text: &str) -> Self {
        Cursor {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    pub(crate) fn offset(&mut self) -> usize {
        self.skip_ws();
        self.pos
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char, label: &'static str) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&[label]))
        }
    }

    pub(crate) fn error(&mut self, expected: &[&'static str]) -> ParseError {
        let found = self.peek();
        ParseError {
            offset: self.pos,
            expected: expected.to_vec(),
            found,
        }
    }

    pub(crate) fn finish(&mut self, expected: &[&'static str]) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.error(expected)),
        }
    }

    pub(crate) fn expr(&mut self) -> Result<OrdExpr, ParseError> {
        let mut lhs = self.term()?;
        while self.eat('+') {
            let rhs = self.term()?;
            lhs = OrdExpr::Add(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<OrdExpr, ParseError> {
        let mut lhs = self.factor()?;
        while self.eat('*') {
            let rhs = self.factor()?;
            lhs = OrdExpr::Mul(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<OrdExpr, ParseError> {
        let base = self.atom()?;
        if self.eat('^') {
            let exponent = self.factor()?;
            return Ok(OrdExpr::Pow(Box::new(base), Box::new(exponent)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<OrdExpr, ParseError> {
        match self.peek() {
            Some('w' | 'ω') => {
                self.pos += 1;
                Ok(OrdExpr::Omega)
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(')', "')'")?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits: String = self.chars[start..self.pos].iter().collect();
                let n = digits.parse::<BigUint>().expect("ascii digits");
                Ok(OrdExpr::Nat(n))
            }
            _ => Err(self.error(&["'w'", "a natural number", "'('"])),
        }
    }
}

pub fn parse(text: &str) -> Result<OrdExpr, ParseError> {
    let mut cursor = Cursor::new(text);
    let e = cursor.expr()?;
    cursor.finish(&["'+'", "'*'", "'^'", "end of input"])?;
    Ok(e)
}

/// Parses and evaluates in one step.
pub fn parse_ordinal(text: &str) -> Result<Ordinal, ParseError> {
    parse(text).map(|e| e.eval())
}

impl FromStr for Ordinal {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_ordinal(s)
    }
}

impl Serialize for Ordinal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Ordinal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
