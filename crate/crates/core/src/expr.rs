//! A small expression language over the five bases.
//!
//! ```text
//! program   := sum ( "|" "expand" BASIS )? EOF
//! sum       := product ( ("+" | "-") product )*
//! product   := factor ( "*" factor )*
//! factor    := "-" factor | INTEGER | atom | "(" sum ")"
//! atom      := BASIS "[" partition ( "/" partition )? "]"
//! partition := ( INTEGER ( "," INTEGER )* )?
//! BASIS     := "m" | "h" | "s" | "G" | "g"
//! ```

use std::fmt;

use num_bigint::BigInt;

use crate::error::Error;
use crate::shapes::{Partition, SkewShape};
use crate::symfunc::{change_basis, expand_to_m_skew, multiply, Basis, GradedExpansion};

/// Character offsets `[start, end)` into the source.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Atom { basis: Basis, outer: Partition, inner: Partition, span: Span },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Program {
    pub expr: Expr,
    pub expand: Option<Basis>,
}

/// A syntax or semantic error at a character position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub position: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at column {}: {}", self.position + 1, self.message)?;
        if !self.expected.is_empty() {
            write!(f, "; expected one of: {}", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for Diagnostic {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(String),
    Basis(Basis),
    Expand,
    Sym(char),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(s) => format!("integer {s}"),
            Tok::Basis(b) => format!("basis {b}"),
            Tok::Expand => "keyword expand".into(),
            Tok::Sym(c) => format!("'{c}'"),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, Span)>, Diagnostic> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            Tok::Int(chars[start..i].iter().collect())
        } else if c.is_alphabetic() {
            while i < chars.len() && chars[i].is_alphanumeric() {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            match word.as_str() {
                "expand" => Tok::Expand,
                w if w.chars().count() == 1 && Basis::from_symbol(c).is_some() => {
                    Tok::Basis(Basis::from_symbol(c).unwrap())
                }
                w => {
                    return Err(Diagnostic {
                        position: start,
                        message: format!("unknown identifier {w:?}"),
                        expected: vec!["basis symbol (m, h, s, G, g)".into(), "expand".into()],
                    })
                }
            }
        } else if "[]/,+-*()|".contains(c) {
            i += 1;
            Tok::Sym(c)
        } else {
            return Err(Diagnostic {
                position: start,
                message: format!("unexpected character {c:?}"),
                expected: Vec::new(),
            });
        };
        out.push((tok, Span { start, end: i }));
    }
    out.push((Tok::Eof, Span { start: chars.len(), end: chars.len() }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

const FACTOR_START: [&str; 4] = ["integer", "basis symbol", "'('", "'-'"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail(&self, expected: &[&str]) -> Diagnostic {
        Diagnostic {
            position: self.span().start,
            message: format!("unexpected {}", self.peek().describe()),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn eat(&mut self, c: char, expected: &[&str]) -> Result<Span, Diagnostic> {
        if self.peek() == &Tok::Sym(c) {
            Ok(self.bump().1)
        } else {
            Err(self.fail(expected))
        }
    }

    fn program(&mut self) -> Result<Program, Diagnostic> {
        let expr = self.sum()?;
        let mut expand = None;
        if self.peek() == &Tok::Sym('|') {
            self.bump();
            if self.peek() != &Tok::Expand {
                return Err(self.fail(&["expand"]));
            }
            self.bump();
            match self.peek().clone() {
                Tok::Basis(b) => {
                    self.bump();
                    expand = Some(b);
                }
                _ => return Err(self.fail(&["basis symbol"])),
            }
            if self.peek() != &Tok::Eof {
                return Err(self.fail(&["end of input"]));
            }
        } else if self.peek() != &Tok::Eof {
            return Err(self.fail(&["'+'", "'-'", "'*'", "'|'", "end of input"]));
        }
        Ok(Program { expr, expand })
    }

    fn sum(&mut self) -> Result<Expr, Diagnostic> {
        let mut lhs = self.product()?;
        loop {
            match self.peek() {
                Tok::Sym('+') => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.product()?));
                }
                Tok::Sym('-') => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.product()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn product(&mut self) -> Result<Expr, Diagnostic> {
        let mut lhs = self.factor()?;
        while self.peek() == &Tok::Sym('*') {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, Diagnostic> {
        match self.peek().clone() {
            Tok::Sym('-') => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.factor()?)))
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.sum()?;
                self.eat(')', &["')'", "'+'", "'-'", "'*'"])?;
                Ok(e)
            }
            Tok::Int(s) => {
                self.bump();
                Ok(Expr::Int(s.parse().expect("digits")))
            }
            Tok::Basis(b) => self.atom(b),
            _ => Err(self.fail(&FACTOR_START)),
        }
    }

    fn atom(&mut self, basis: Basis) -> Result<Expr, Diagnostic> {
        let start = self.bump().1.start;
        self.eat('[', &["'['"])?;
        let (outer, _) = self.partition()?;
        let mut inner = Partition::empty();
        if self.peek() == &Tok::Sym('/') {
            let slash = self.bump().1;
            if !basis.allows_skew() {
                return Err(Diagnostic {
                    position: slash.start,
                    message: format!("skew not supported for basis {basis}"),
                    expected: Vec::new(),
                });
            }
            let (p, inner_at) = self.partition()?;
            if !outer.contains(&p) {
                return Err(Diagnostic {
                    position: inner_at,
                    message: Error::NotContained(format!("{p:?} is not inside {outer:?}")).to_string(),
                    expected: Vec::new(),
                });
            }
            inner = p;
        }
        let end = self.eat(']', &["','", "'/'", "']'"])?.end;
        Ok(Expr::Atom { basis, outer, inner, span: Span { start, end } })
    }

    /// A possibly empty weakly decreasing list; returns it with its start offset.
    fn partition(&mut self) -> Result<(Partition, usize), Diagnostic> {
        let at = self.span().start;
        let mut parts = Vec::new();
        if let Tok::Int(_) = self.peek() {
            loop {
                let (tok, span) = self.bump();
                let Tok::Int(s) = tok else { unreachable!() };
                let p: usize = s.parse().map_err(|_| Diagnostic {
                    position: span.start,
                    message: format!("part {s} is too large"),
                    expected: Vec::new(),
                })?;
                if p == 0 {
                    return Err(Diagnostic {
                        position: span.start,
                        message: "parts must be positive".into(),
                        expected: Vec::new(),
                    });
                }
                if parts.last().is_some_and(|&q| q < p) {
                    return Err(Diagnostic {
                        position: span.start,
                        message: format!(
                            "partition must be weakly decreasing, but {p} follows {}",
                            parts.last().unwrap()
                        ),
                        expected: Vec::new(),
                    });
                }
                parts.push(p);
                if self.peek() != &Tok::Sym(',') {
                    break;
                }
                self.bump();
                if !matches!(self.peek(), Tok::Int(_)) {
                    return Err(self.fail(&["integer"]));
                }
            }
        } else if !matches!(self.peek(), Tok::Sym(']') | Tok::Sym('/')) {
            return Err(self.fail(&["integer", "']'"]));
        }
        Ok((Partition::new(parts).expect("validated"), at))
    }
}

pub fn parse(src: &str) -> Result<Program, Diagnostic> {
    let toks = lex(src)?;
    Parser { toks, pos: 0 }.program()
}

fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) => 2,
        Expr::Neg(..) => 3,
        Expr::Int(_) | Expr::Atom { .. } => 4,
    }
}

fn write_at(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if prec(e) < min {
        write!(f, "(")?;
        write!(f, "{e}")?;
        return write!(f, ")");
    }
    write!(f, "{e}")
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Atom { basis, outer, inner, .. } => {
                if inner.is_empty() {
                    write!(f, "{basis}[{outer}]")
                } else {
                    write!(f, "{basis}[{outer}/{inner}]")
                }
            }
            Expr::Neg(x) => {
                write!(f, "-")?;
                write_at(f, x, 3)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                write_at(f, a, 1)?;
                write!(f, " {} ", if matches!(self, Expr::Add(..)) { '+' } else { '-' })?;
                write_at(f, b, 2)
            }
            Expr::Mul(a, b) => {
                write_at(f, a, 2)?;
                write!(f, " * ")?;
                write_at(f, b, 3)
            }
        }
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.expr)?;
        if let Some(b) = self.expand {
            write!(f, " | expand {b}")?;
        }
        Ok(())
    }
}

impl Expr {
    /// Largest `|ν|` among the atoms.
    pub fn largest_index(&self) -> usize {
        match self {
            Expr::Int(_) => 0,
            Expr::Atom { outer, .. } => outer.size(),
            Expr::Neg(x) => x.largest_index(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => a.largest_index().max(b.largest_index()),
        }
    }
}

impl Program {
    /// `max(6, largest index + 2)`.
    pub fn default_degree(&self) -> usize {
        6.max(self.expr.largest_index() + 2)
    }
}

/// An evaluation failure tied to the part of the source that caused it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalError {
    pub span: Option<Span>,
    pub error: Error,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.span {
            Some(s) => write!(f, "at columns {}-{}: {}", s.start + 1, s.end, self.error),
            None => write!(f, "{}", self.error),
        }
    }
}

impl std::error::Error for EvalError {}

fn eval_expr(e: &Expr, d: usize) -> Result<GradedExpansion, EvalError> {
    let plain = |error| EvalError { span: None, error };
    Ok(match e {
        Expr::Int(n) => GradedExpansion::constant(Basis::M, d, n.clone()),
        Expr::Atom { basis, outer, inner, span } => {
            if inner.is_empty() {
                GradedExpansion::term(*basis, d, outer.clone(), 1)
            } else {
                SkewShape::new(outer.clone(), inner.clone())
                    .and_then(|_| expand_to_m_skew(*basis, outer, inner, d))
                    .map_err(|error| EvalError { span: Some(*span), error })?
            }
        }
        Expr::Neg(x) => eval_expr(x, d)?.neg(),
        Expr::Add(a, b) => eval_expr(a, d)?.add(&eval_expr(b, d)?).map_err(plain)?,
        Expr::Sub(a, b) => eval_expr(a, d)?.sub(&eval_expr(b, d)?).map_err(plain)?,
        Expr::Mul(a, b) => multiply(&eval_expr(a, d)?, &eval_expr(b, d)?).map_err(plain)?,
    })
}

/// Evaluates with degree bound `D`; the result is in the requested basis,
/// or the monomial basis when none is given.
pub fn eval(p: &Program, d: usize) -> Result<GradedExpansion, EvalError> {
    let v = eval_expr(&p.expr, d)?;
    change_basis(&v, p.expand.unwrap_or(Basis::M)).map_err(|error| EvalError { span: None, error })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn norm(s: &str) -> String {
        parse(s).unwrap().to_string()
    }

    #[test]
    fn shapes_of_trees() {
        let p = parse("G[2,1]*G[1] | expand G").unwrap();
        assert_eq!(p.expand, Some(Basis::BigG));
        assert!(matches!(p.expr, Expr::Mul(..)));
        let p = parse("g[2,1/1] | expand g").unwrap();
        assert!(matches!(p.expr, Expr::Atom { basis: Basis::SmallG, .. }));
        let e = parse("s[2,1/1]").unwrap_err();
        assert_eq!(e.message, "skew not supported for basis s");
        assert_eq!(e.position, 5);
    }

    #[test]
    fn printing_normalizes() {
        assert_eq!(norm("  G[2,1]*G[1]|expand  G"), "G[2,1] * G[1] | expand G");
        assert_eq!(norm("s[1]-(s[2]-s[1,1])"), "s[1] - (s[2] - s[1,1])");
        assert_eq!(norm("(s[1]-s[2])-s[1,1]"), "s[1] - s[2] - s[1,1]");
        assert_eq!(norm("-(h[1]*h[1])"), "-(h[1] * h[1])");
        assert_eq!(norm("2*(m[1]+m[2])"), "2 * (m[1] + m[2])");
    }

    #[test]
    fn evaluation() {
        let g = |s: &str, d| eval(&parse(s).unwrap(), d).unwrap().to_text();
        assert_eq!(g("G[1]*G[1] | expand G", 4), "G[2] + G[1,1] - G[2,1]");
        assert_eq!(g("g[2,1/1] | expand g", 4), "-g[1] + g[2] + g[1,1]");
        assert_eq!(g("h[2] | expand g", 3), "g[2]");
        assert_eq!(g("h[1,1] | expand g", 3), "-g[1] + g[2] + g[1,1]");
        assert_eq!(g("h[2]", 3), "m[2] + m[1,1]");
        assert_eq!(parse("G[3,2,1]").unwrap().default_degree(), 8);
    }
}
