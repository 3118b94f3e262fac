//! Text input and output for polynomials and polynomial systems.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | integer '/' integer | 'x' index | '(' expr ')'
//! ```
//!
//! Multiplication must be written out (`2*x0`, never `2x0`). A system file
//! starts with a `vars: <n>` header and lists one polynomial per line; `#`
//! starts a comment.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::monomial::VarContext;
use crate::polynomial::{Polynomial, Term};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at column {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("undefined variable x{index} at column {pos} (system has {num_vars} variables)")]
    UndefinedVariable { pos: usize, index: usize, num_vars: usize },
    #[error("negative exponent at column {pos}")]
    NegativeExponent { pos: usize },
    #[error("coefficient at column {pos} is not representable")]
    CoefficientOutOfRange { pos: usize },
    #[error("missing `vars: <n>` header")]
    MissingHeader,
    #[error("line {line}: malformed header `{text}`")]
    BadHeader { line: usize, text: String },
    #[error("system lists no polynomials")]
    EmptySystem,
    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<ParseError>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ratio(BigInt, BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn syntax(pos: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { pos, msg: msg.into() }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |start: usize| {
        let mut end = start;
        while end < chars.len() && chars[end].is_ascii_digit() {
            end += 1;
        }
        end
    };
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        match c {
            c if c.is_whitespace() => i += 1,
            '+' | '-' | '*' | '^' | '(' | ')' => {
                let tok = match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    _ => Tok::RParen,
                };
                out.push((pos, tok));
                i += 1;
            }
            '0'..='9' => {
                let end = digits(i);
                let numer: BigInt = chars[i..end].iter().collect::<String>().parse().expect("digits");
                if end < chars.len() && chars[end] == '/' {
                    let dend = digits(end + 1);
                    if dend == end + 1 {
                        return Err(syntax(end + 1, "expected denominator after `/`"));
                    }
                    let denom: BigInt = chars[end + 1..dend].iter().collect::<String>().parse().expect("digits");
                    if denom.is_zero() {
                        return Err(syntax(end + 2, "zero denominator"));
                    }
                    out.push((pos, Tok::Ratio(numer, denom)));
                    i = dend;
                } else {
                    out.push((pos, Tok::Int(numer)));
                    i = end;
                }
            }
            'x' => {
                let end = digits(i + 1);
                if end == i + 1 {
                    return Err(syntax(pos, "expected variable index after `x`"));
                }
                let index: usize = chars[i + 1..end]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| syntax(pos, "variable index too large"))?;
                out.push((pos, Tok::Var(index)));
                i = end;
            }
            other => return Err(syntax(pos, format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a, C> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    ctx: &'a VarContext,
    end_pos: usize,
    _coeff: std::marker::PhantomData<C>,
}

impl<C: Scalar> Parser<'_, C> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end_pos, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn n(&self) -> usize {
        self.ctx.num_vars()
    }

    fn expr(&mut self) -> Result<Polynomial<C>, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<C>, ParseError> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.bump();
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial<C>, ParseError> {
        if let Some(Tok::Minus) = self.peek() {
            self.bump();
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial<C>, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let pos = self.pos();
            return match self.bump() {
                Some(Tok::Int(e)) => {
                    let e: u32 = e.try_into().map_err(|_| syntax(pos, "exponent too large"))?;
                    Ok(base.pow(e))
                }
                Some(Tok::Minus) => Err(ParseError::NegativeExponent { pos }),
                _ => Err(syntax(pos, "expected a nonnegative integer exponent")),
            };
        }
        Ok(base)
    }

    fn coefficient(&self, numer: &BigInt, denom: &BigInt, pos: usize) -> Result<Polynomial<C>, ParseError> {
        let c = C::from_ratio(numer, denom).ok_or(ParseError::CoefficientOutOfRange { pos })?;
        Ok(Polynomial::constant(c, self.n()))
    }

    fn atom(&mut self) -> Result<Polynomial<C>, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(v)) => self.coefficient(&v, &BigInt::one(), pos),
            Some(Tok::Ratio(a, b)) => self.coefficient(&a, &b, pos),
            Some(Tok::Var(index)) => {
                if index >= self.n() {
                    return Err(ParseError::UndefinedVariable { pos, index, num_vars: self.n() });
                }
                Ok(Polynomial::var(index, self.n()))
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                let close = self.pos();
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(syntax(close, "expected `)`")),
                }
            }
            Some(_) => Err(syntax(pos, "expected a number, variable or `(`")),
            None => Err(syntax(pos, "unexpected end of input")),
        }
    }
}

/// Parse and expand one polynomial over the variables of `ctx`.
pub fn parse_polynomial<C: Scalar>(text: &str, ctx: &VarContext) -> Result<Polynomial<C>, ParseError> {
    let toks = lex(text)?;
    let end_pos = text.chars().count() + 1;
    let mut parser = Parser { toks, at: 0, ctx, end_pos, _coeff: std::marker::PhantomData };
    let f = parser.expr()?;
    if parser.at < parser.toks.len() {
        return Err(syntax(parser.pos(), "expected an operator"));
    }
    Ok(f)
}

fn render_coeff<C: Scalar>(c: &C) -> String {
    match c.to_ratio() {
        Some(r) => r.to_string(),
        None => format!("{c:?}"),
    }
}

fn push_term<C: Scalar>(out: &mut String, t: &Term<C>, leading: bool) {
    let negative = t.coeff.is_negative();
    match (leading, negative) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
    let magnitude = t.coeff.abs();
    if t.mono.is_one() {
        out.push_str(&render_coeff(&magnitude));
    } else if magnitude.is_one() {
        out.push_str(&t.mono.to_string());
    } else {
        out.push_str(&render_coeff(&magnitude));
        out.push('*');
        out.push_str(&t.mono.to_string());
    }
}

/// Terms in descending prime-encoding order, e.g. `2*x0*x2 + 4*x1*x2 - 6`.
pub fn render_polynomial<C: Scalar>(f: &Polynomial<C>) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in f.terms().iter().enumerate() {
        push_term(&mut out, t, i == 0);
    }
    out
}

pub fn render_term<C: Scalar>(t: &Term<C>) -> String {
    let mut out = String::new();
    push_term(&mut out, t, true);
    out
}

/// A parsed system file.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemFile<C: Scalar> {
    pub ctx: VarContext,
    pub polynomials: Vec<Polynomial<C>>,
}

impl<C: Scalar> SystemFile<C> {
    pub fn num_vars(&self) -> usize {
        self.ctx.num_vars()
    }
}

fn strip_comment(line: &str) -> &str {
    let line = line.strip_suffix('\r').unwrap_or(line);
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn parse_header(text: &str, line: usize) -> Result<VarContext, ParseError> {
    let bad = || ParseError::BadHeader { line, text: text.to_string() };
    let rest = text.strip_prefix("vars").ok_or_else(bad)?.trim_start();
    let rest = rest.strip_prefix(':').ok_or_else(bad)?.trim();
    let n: usize = rest.parse().map_err(|_| bad())?;
    VarContext::new(n).map_err(|_| bad())
}

/// Parse a `vars: <n>` header followed by one polynomial per line.
pub fn parse_system<C: Scalar>(text: &str) -> Result<SystemFile<C>, ParseError> {
    let mut ctx = None;
    let mut polynomials = Vec::new();
    for (idx, raw) in text.split('\n').enumerate() {
        let line_no = idx + 1;
        let content = strip_comment(raw).trim();
        if content.is_empty() {
            continue;
        }
        match &ctx {
            None => ctx = Some(parse_header(content, line_no)?),
            Some(ctx) => {
                let f = parse_polynomial(content, ctx)
                    .map_err(|e| ParseError::Line { line: line_no, source: Box::new(e) })?;
                polynomials.push(f);
            }
        }
    }
    let ctx = ctx.ok_or(ParseError::MissingHeader)?;
    if polynomials.is_empty() {
        return Err(ParseError::EmptySystem);
    }
    Ok(SystemFile { ctx, polynomials })
}

/// Render a system back into the file format.
pub fn render_system<C: Scalar>(system: &SystemFile<C>) -> String {
    let mut out = format!("vars: {}\n", system.num_vars());
    for f in &system.polynomials {
        out.push_str(&render_polynomial(f));
        out.push('\n');
    }
    out
}
