//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! sum     := signed (("+" | "-") signed)*
//! signed  := "-" signed | product
//! product := power ("*"? power)*
//! power   := atom ("^" integer)?
//! atom    := integer ("/" integer)? | ident | "(" sum ")"
//! ident   := letter (letter | digit)* "'"?
//! ```
//!
//! Juxtaposition multiplies, so `1/2 h^2 + 2 e f` and `1/2*h^2 + 2*e*f`
//! are the same expression. `′` (U+2032) is accepted as a prime.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use thiserror::Error;

use crate::poly::{PolyError, Polynomial, Rational, VarContext};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Num(Rational),
    Var { name: String, offset: usize },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct SyntaxError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at byte {}: expected {}, found {}", self.offset, self.expected.join(" or "), self.found)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("unknown variable `{name}` at byte {offset}; known: {known}")]
    UnknownVariable { name: String, offset: usize, known: String },
    #[error("`{name}` at byte {offset} splits into known variables in more than one way")]
    AmbiguousVariable { name: String, offset: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number `{n}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::End => "end of input".to_string(),
        }
    }
}

const ATOM_START: [&str; 3] = ["number", "identifier", "`(`"];

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek_char(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    /// Next token and its byte offset.
    fn next(&mut self) -> Result<(Tok, usize), SyntaxError> {
        self.skip_ws();
        let start = self.pos;
        let Some(c) = self.peek_char() else { return Ok((Tok::End, start)) };
        if c.is_ascii_digit() {
            let len = self.src[start..].find(|c: char| !c.is_ascii_digit()).unwrap_or(self.src.len() - start);
            self.pos += len;
            let n = self.src[start..self.pos].parse().expect("digits");
            return Ok((Tok::Int(n), start));
        }
        if c.is_ascii_alphabetic() {
            let len = self.src[start..].find(|c: char| !c.is_ascii_alphanumeric()).unwrap_or(self.src.len() - start);
            self.pos += len;
            let mut name = self.src[start..self.pos].to_string();
            if let Some(p) = self.peek_char().filter(|&p| is_prime(p)) {
                self.pos += p.len_utf8();
                name.push('\'');
                if let Some(q) = self.peek_char().filter(|&q| is_prime(q)) {
                    return Err(SyntaxError { offset: self.pos, expected: vec!["operator", "end of input"], found: format!("`{q}`") });
                }
            }
            return Ok((Tok::Ident(name), start));
        }
        if "+-*/^()".contains(c) {
            self.pos += 1;
            return Ok((Tok::Sym(c), start));
        }
        Err(SyntaxError { offset: start, expected: vec!["number", "identifier", "operator"], found: format!("`{c}`") })
    }
}

fn is_prime(c: char) -> bool {
    c == '\'' || c == '\u{2032}'
}

struct Parser<'a> {
    lex: Lexer<'a>,
    tok: Tok,
    at: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Result<Self, SyntaxError> {
        let mut lex = Lexer { src, pos: 0 };
        let (tok, at) = lex.next()?;
        Ok(Self { lex, tok, at })
    }

    fn bump(&mut self) -> Result<Tok, SyntaxError> {
        let (tok, at) = self.lex.next()?;
        self.at = at;
        Ok(std::mem::replace(&mut self.tok, tok))
    }

    fn fail<T>(&self, expected: &[&'static str]) -> Result<T, SyntaxError> {
        Err(SyntaxError { offset: self.at, expected: expected.to_vec(), found: self.tok.describe() })
    }

    fn sum(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.signed()?;
        loop {
            match self.tok {
                Tok::Sym('+') => {
                    self.bump()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.signed()?));
                }
                Tok::Sym('-') => {
                    self.bump()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.signed()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn signed(&mut self) -> Result<Expr, SyntaxError> {
        if self.tok == Tok::Sym('-') {
            self.bump()?;
            return Ok(Expr::Neg(Box::new(self.signed()?)));
        }
        self.product()
    }

    fn starts_atom(&self) -> bool {
        matches!(self.tok, Tok::Int(_) | Tok::Ident(_) | Tok::Sym('('))
    }

    fn product(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.power()?;
        loop {
            if self.tok == Tok::Sym('*') {
                self.bump()?;
            } else if !self.starts_atom() {
                return Ok(lhs);
            }
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
        }
    }

    fn power(&mut self) -> Result<Expr, SyntaxError> {
        let base = self.atom()?;
        if self.tok != Tok::Sym('^') {
            return Ok(base);
        }
        self.bump()?;
        let Tok::Int(e) = &self.tok else { return self.fail(&["non-negative integer exponent"]) };
        let Ok(e) = u32::try_from(e) else { return self.fail(&["exponent below 2^32"]) };
        self.bump()?;
        Ok(Expr::Pow(Box::new(base), e))
    }

    fn atom(&mut self) -> Result<Expr, SyntaxError> {
        match self.tok.clone() {
            Tok::Int(p) => {
                self.bump()?;
                if self.tok != Tok::Sym('/') {
                    return Ok(Expr::Num(Rational::from_integer(p)));
                }
                self.bump()?;
                let Tok::Int(q) = &self.tok else { return self.fail(&["denominator"]) };
                if q == &BigInt::from(0) {
                    return self.fail(&["nonzero denominator"]);
                }
                let r = Rational::new(p, q.clone());
                self.bump()?;
                Ok(Expr::Num(r))
            }
            Tok::Ident(name) => {
                let offset = self.at;
                self.bump()?;
                Ok(Expr::Var { name, offset })
            }
            Tok::Sym('(') => {
                self.bump()?;
                let inner = self.sum()?;
                if self.tok != Tok::Sym(')') {
                    return self.fail(&["`)`", "operator"]);
                }
                self.bump()?;
                Ok(inner)
            }
            _ => self.fail(&ATOM_START),
        }
    }
}

/// Parses a complete expression.
pub fn parse_expression(src: &str) -> Result<Expr, SyntaxError> {
    let mut p = Parser::new(src)?;
    let e = p.sum()?;
    if p.tok != Tok::End {
        return p.fail(&["operator", "end of input"]);
    }
    Ok(e)
}

impl Expr {
    /// Identifiers as written, before any splitting against a context.
    pub fn identifiers(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_identifiers(&mut out);
        out
    }

    fn collect_identifiers(&self, out: &mut BTreeSet<String>) {
        match self {
            Expr::Num(_) => {}
            Expr::Var { name, .. } => {
                out.insert(name.clone());
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_identifiers(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.collect_identifiers(out);
                b.collect_identifiers(out);
            }
        }
    }

    /// Lowers to a polynomial over `ctx`.
    ///
    /// An identifier unknown to `ctx` that splits in exactly one way into a
    /// concatenation of known names is read as their product, so `ef` means
    /// `e*f` and `xx'` means `x*x'` when those are the variables.
    pub fn lower(&self, ctx: &Arc<VarContext>) -> Result<Polynomial, ExprError> {
        Ok(match self {
            Expr::Num(r) => Polynomial::constant(ctx, r.clone()),
            Expr::Var { name, offset } => {
                if let Some(i) = ctx.index_of(name) {
                    return Ok(Polynomial::var(ctx, i));
                }
                let parts = split_identifier(name, ctx, *offset)?;
                parts.into_iter().fold(Polynomial::one(ctx), |acc, i| &acc * &Polynomial::var(ctx, i))
            }
            Expr::Neg(a) => -a.lower(ctx)?,
            Expr::Add(a, b) => a.lower(ctx)?.checked_add(&b.lower(ctx)?)?,
            Expr::Sub(a, b) => a.lower(ctx)?.checked_sub(&b.lower(ctx)?)?,
            Expr::Mul(a, b) => a.lower(ctx)?.checked_mul(&b.lower(ctx)?)?,
            Expr::Pow(a, e) => a.lower(ctx)?.pow(*e),
        })
    }
}

/// Splits `name` into a concatenation of `names`: `Ok(Some(parts))` when
/// the split is unique, `Ok(None)` when there is none, `Err(())` when there
/// are several.
fn segment(name: &str, names: &[String]) -> Result<Option<Vec<usize>>, ()> {
    // ways[i] = number of segmentations of name[i..], capped at 2
    let n = name.len();
    let mut ways = vec![0u8; n + 1];
    let mut choice = vec![None; n + 1];
    ways[n] = 1;
    for i in (0..n).rev() {
        for (k, v) in names.iter().enumerate() {
            if !v.is_empty() && name[i..].starts_with(v.as_str()) && ways[i + v.len()] > 0 {
                ways[i] = (ways[i] + ways[i + v.len()]).min(2);
                choice[i] = Some(k);
            }
        }
    }
    match ways[0] {
        0 => Ok(None),
        1 => {
            let mut out = Vec::new();
            let mut i = 0;
            while i < n {
                let k = choice[i].expect("segmentation exists");
                out.push(k);
                i += names[k].len();
            }
            Ok(Some(out))
        }
        _ => Err(()),
    }
}

fn split_identifier(name: &str, ctx: &VarContext, offset: usize) -> Result<Vec<usize>, ExprError> {
    match segment(name, ctx.names()) {
        Ok(Some(parts)) => Ok(parts),
        Ok(None) => Err(ExprError::UnknownVariable { name: name.to_string(), offset, known: ctx.names().join(", ") }),
        Err(()) => Err(ExprError::AmbiguousVariable { name: name.to_string(), offset }),
    }
}

/// Parses `src` over an existing context.
pub fn parse_in(ctx: &Arc<VarContext>, src: &str) -> Result<Polynomial, ExprError> {
    parse_expression(src)?.lower(ctx)
}

/// Orders names as `x < x' < x2 < x10 < y`: alphabetic stem, then numeric
/// suffix by value, then prime.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    fn key(s: &str) -> (&str, Option<u128>, bool) {
        let (body, primed) = match s.strip_suffix('\'') {
            Some(b) => (b, true),
            None => (s, false),
        };
        let stem_len = body.trim_end_matches(|c: char| c.is_ascii_digit()).len();
        let (stem, digits) = body.split_at(stem_len);
        (stem, digits.parse().ok(), primed)
    }
    key(a).cmp(&key(b)).then_with(|| a.cmp(b))
}

/// Context holding the identifiers used by `exprs`, in natural order. An
/// identifier that splits uniquely into shorter ones also used is read as
/// their product, so `x y + xy` has variables `x, y`.
pub fn infer_context<'a, I: IntoIterator<Item = &'a Expr>>(exprs: I) -> Result<Arc<VarContext>, ExprError> {
    let mut seen: Vec<String> = exprs.into_iter().flat_map(Expr::identifiers).collect::<BTreeSet<_>>().into_iter().collect();
    seen.sort_by_key(String::len);
    let mut names: Vec<String> = Vec::new();
    for w in seen {
        if !matches!(segment(&w, &names), Ok(Some(_))) {
            names.push(w);
        }
    }
    names.sort_by(|a, b| natural_cmp(a, b));
    Ok(VarContext::new(names)?)
}

/// Parses several expressions into one shared context: `vars` when given,
/// otherwise the inferred one.
pub fn parse_all(srcs: &[&str], vars: Option<&[String]>) -> Result<(Arc<VarContext>, Vec<Polynomial>), ExprError> {
    let exprs = srcs.iter().map(|s| parse_expression(s)).collect::<Result<Vec<_>, _>>()?;
    let ctx = match vars {
        Some(v) => VarContext::new(v.iter().cloned())?,
        None => infer_context(&exprs)?,
    };
    let polys = exprs.iter().map(|e| e.lower(&ctx)).collect::<Result<Vec<_>, _>>()?;
    Ok((ctx, polys))
}
