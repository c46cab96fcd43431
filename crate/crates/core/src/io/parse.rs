use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::arith::{is_rational_square, parse_rational, Polynomial, Rational};
use crate::semialg::{Component, Endpoint, SemiAlgSet};

/// Largest exponent accepted by the polynomial parser.
pub const MAX_PARSE_DEGREE: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { offset, message: message.into() })
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Sym(char),
}

struct Lexer<'a> {
    src: &'a str,
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Result<Self, ParseError> {
        let mut toks = Vec::new();
        let bytes = src.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let b = bytes[i];
            if b.is_ascii_whitespace() {
                i += 1;
            } else if b.is_ascii_digit() {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                toks.push((start, Tok::Int(src[start..i].to_string())));
            } else if b.is_ascii_alphabetic() || b == b'_' {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                toks.push((start, Tok::Ident(src[start..i].to_string())));
            } else if b"+-*/^()[]{},".contains(&b) {
                toks.push((i, Tok::Sym(b as char)));
                i += 1;
            } else {
                let ch = src[i..].chars().next().unwrap_or('?');
                return err(i, format!("unexpected character {ch:?}"));
            }
        }
        Ok(Lexer { src, toks, pos: 0 })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.src.len())
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            err(self.offset(), format!("expected '{c}'"))
        }
    }

    fn eat_ident(&mut self, name: &str) -> bool {
        if matches!(self.peek(), Some(Tok::Ident(s)) if s == name) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    /// `int ('/' int)?`, unsigned.
    fn unsigned_rational(&mut self) -> Result<Rational, ParseError> {
        let off = self.offset();
        let Some(Tok::Int(n)) = self.peek().cloned() else {
            return err(off, "expected a number");
        };
        self.pos += 1;
        let mut text = n;
        if self.peek() == Some(&Tok::Sym('/')) {
            self.pos += 1;
            let doff = self.offset();
            let Some(Tok::Int(d)) = self.next() else {
                return err(doff, "expected a denominator");
            };
            text = format!("{text}/{d}");
            if d.bytes().all(|b| b == b'0') {
                return err(doff, "zero denominator");
            }
        }
        parse_rational(&text).ok_or(ParseError { offset: off, message: format!("malformed rational {text:?}") })
    }

    fn signed_rational(&mut self) -> Result<Rational, ParseError> {
        let neg = self.eat_sym('-');
        let q = self.unsigned_rational()?;
        Ok(if neg { -q } else { q })
    }
}

/// Parses a polynomial in the variable `x`.
pub fn parse_poly(src: &str) -> Result<Polynomial, ParseError> {
    parse_poly_in(src, "x")
}

/// Parses a polynomial in the given variable symbol.
pub fn parse_poly_in(src: &str, var: &str) -> Result<Polynomial, ParseError> {
    let mut lx = Lexer::new(src)?;
    if lx.at_end() {
        return err(0, "empty expression");
    }
    let p = expr(&mut lx, var, 0)?;
    if !lx.at_end() {
        return err(lx.offset(), "unexpected trailing input");
    }
    Ok(p)
}

const MAX_NESTING: usize = 256;

fn expr(lx: &mut Lexer, var: &str, depth: usize) -> Result<Polynomial, ParseError> {
    let mut acc = term(lx, var, depth)?;
    loop {
        if lx.eat_sym('+') {
            acc = acc + term(lx, var, depth)?;
        } else if lx.eat_sym('-') {
            acc = acc - term(lx, var, depth)?;
        } else {
            return Ok(acc);
        }
    }
}

fn term(lx: &mut Lexer, var: &str, depth: usize) -> Result<Polynomial, ParseError> {
    let start = lx.offset();
    let mut acc = unary(lx, var, depth)?;
    while lx.eat_sym('*') {
        acc = acc * unary(lx, var, depth)?;
        if acc.deg() > MAX_PARSE_DEGREE {
            return err(start, format!("degree exceeds {MAX_PARSE_DEGREE}"));
        }
    }
    Ok(acc)
}

fn unary(lx: &mut Lexer, var: &str, depth: usize) -> Result<Polynomial, ParseError> {
    if depth > MAX_NESTING {
        return err(lx.offset(), "expression nested too deeply");
    }
    if lx.eat_sym('-') {
        return Ok(-unary(lx, var, depth + 1)?);
    }
    if lx.eat_sym('+') {
        return unary(lx, var, depth + 1);
    }
    power(lx, var, depth)
}

fn power(lx: &mut Lexer, var: &str, depth: usize) -> Result<Polynomial, ParseError> {
    let base = atom(lx, var, depth)?;
    if !lx.eat_sym('^') {
        return Ok(base);
    }
    let off = lx.offset();
    match lx.next() {
        Some(Tok::Int(n)) => {
            let k: usize = match n.parse() {
                Ok(k) => k,
                Err(_) => return err(off, "exponent too large"),
            };
            if base.deg().saturating_mul(k) > MAX_PARSE_DEGREE {
                return err(off, format!("degree exceeds {MAX_PARSE_DEGREE}"));
            }
            Ok(base.pow(k))
        }
        Some(Tok::Sym('-')) => err(off, "negative exponent"),
        _ => err(off, "expected a nonnegative integer exponent"),
    }
}

fn atom(lx: &mut Lexer, var: &str, depth: usize) -> Result<Polynomial, ParseError> {
    let off = lx.offset();
    match lx.peek().cloned() {
        Some(Tok::Int(_)) => Ok(Polynomial::constant(lx.unsigned_rational()?)),
        Some(Tok::Ident(name)) => {
            if name == var {
                lx.pos += 1;
                Ok(Polynomial::x())
            } else {
                err(off, format!("unknown symbol {name:?}"))
            }
        }
        Some(Tok::Sym('(')) => {
            lx.pos += 1;
            let inner = expr(lx, var, depth + 1)?;
            lx.expect_sym(')')?;
            Ok(inner)
        }
        Some(Tok::Sym(c)) => err(off, format!("unexpected '{c}'")),
        None => err(off, "unexpected end of input"),
    }
}

fn endpoint(lx: &mut Lexer) -> Result<Endpoint, ParseError> {
    let off = lx.offset();
    let u = lx.signed_rational()?;
    let upper = match lx.peek() {
        Some(Tok::Sym('+')) => true,
        Some(Tok::Sym('-')) => false,
        _ => return Ok(Endpoint::Rational(u)),
    };
    lx.pos += 1;
    let voff = lx.offset();
    let v = lx.unsigned_rational()?;
    if v.is_zero() {
        return err(voff, "radical coefficient must be positive");
    }
    lx.expect_sym('*')?;
    if !lx.eat_ident("sqrt") {
        return err(lx.offset(), "expected 'sqrt'");
    }
    lx.expect_sym('(')?;
    let doff = lx.offset();
    let d = lx.signed_rational()?;
    lx.expect_sym(')')?;
    if !d.is_positive() {
        return err(doff, "radicand must be positive");
    }
    if is_rational_square(&d) {
        return err(doff, format!("radicand {d} is a rational square"));
    }
    Endpoint::from_radical(&u, &v, &d, upper).map_err(|e| ParseError { offset: off, message: e.to_string() })
}

fn component(lx: &mut Lexer) -> Result<Option<Component>, ParseError> {
    let off = lx.offset();
    if lx.eat_ident("R") {
        return Ok(Some(Component::Line));
    }
    if lx.eat_sym('{') {
        if lx.eat_sym('}') {
            return Ok(None);
        }
        let a = endpoint(lx)?;
        lx.expect_sym('}')?;
        return Ok(Some(Component::Point(a)));
    }
    if lx.eat_sym('(') {
        lx.expect_sym('-')?;
        if !lx.eat_ident("inf") {
            return err(lx.offset(), "expected 'inf'");
        }
        lx.expect_sym(',')?;
        if lx.eat_ident("inf") {
            lx.expect_sym(')')?;
            return Ok(Some(Component::Line));
        }
        let b = endpoint(lx)?;
        lx.expect_sym(']')?;
        return Ok(Some(Component::RayBelow(b)));
    }
    if lx.eat_sym('[') {
        let a = endpoint(lx)?;
        lx.expect_sym(',')?;
        if lx.eat_ident("inf") {
            lx.expect_sym(')')?;
            return Ok(Some(Component::RayAbove(a)));
        }
        let b = endpoint(lx)?;
        lx.expect_sym(']')?;
        if a.cmp_exact(&b) == std::cmp::Ordering::Greater {
            return err(off, format!("segment [{a}, {b}] has lo > hi"));
        }
        return Ok(Some(Component::Segment(a, b)));
    }
    err(off, "expected a component: [a,b], {a}, (-inf,a], [a,inf) or R")
}

/// Parses a union of closed components separated by `U`.
pub fn parse_set(src: &str) -> Result<SemiAlgSet, ParseError> {
    let mut lx = Lexer::new(src)?;
    if lx.at_end() {
        return err(0, "empty set description");
    }
    let mut comps = Vec::new();
    loop {
        if let Some(c) = component(&mut lx)? {
            comps.push(c);
        }
        if lx.at_end() {
            break;
        }
        if !lx.eat_ident("U") {
            return err(lx.offset(), "expected 'U' between components");
        }
    }
    SemiAlgSet::try_new(comps).map_err(|e| ParseError { offset: 0, message: e.to_string() })
}

/// Parses `EXPR; EXPR; ...`; empty pieces are skipped.
pub fn parse_poly_list(src: &str, var: &str) -> Result<Vec<Polynomial>, ParseError> {
    let mut out = Vec::new();
    let mut base = 0;
    for piece in src.split(';') {
        if !piece.trim().is_empty() {
            out.push(parse_poly_in(piece, var).map_err(|e| ParseError { offset: e.offset + base, message: e.message })?);
        }
        base += piece.len() + 1;
    }
    Ok(out)
}

/// A rational literal with optional sign, as in the JSON format.
pub fn parse_rational_strict(s: &str) -> Result<Rational, ParseError> {
    parse_rational(s).ok_or(ParseError { offset: 0, message: format!("malformed rational {s:?}") })
}
