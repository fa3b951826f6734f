//! Parser and printer for polynomial expressions over any registered
//! semiring, serving as the surface syntax of the command line and the
//! test fixtures.
//!
//! Grammar (whitespace-insensitive, left-associative, `^` binds
//! tightest):
//!
//! ```text
//! expr := term ("+" term)*
//! term := pow (("*" pow) | pow)*     -- the bare juxtaposition form is
//!                                       accepted only between
//!                                       parenthesized groups, as in
//!                                       "(T+1)(T^2+1)"
//! pow  := atom ("^" natural)?
//! atom := "T" | literal | "(" expr ")"
//! ```
//!
//! Element literals per semiring: decimal naturals everywhere (read
//! through the canonical map); `p/q` over the nonnegative rationals;
//! `t(r)` with rational `r` and `tinf` over the tropical semiring;
//! `m(q)` with positive rational `q` over the monoid semiring; `x` and
//! `y` over the presented semiring. Juxtaposition is restricted to
//! parenthesized groups so that call-shaped literals like `t(0)` stay
//! unambiguous.

mod lexer;
mod literal;

use num_traits::ToPrimitive;

use crate::poly::Polynomial;
use crate::semiring::{Element, SemiringDescriptor};

pub use literal::render_element;

use lexer::{lex, Token, TokenKind};

/// Syntax or literal-resolution error with a position inside the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub offset: usize,
    pub line: usize,
    pub column: usize,
}

impl ParseError {
    pub(crate) fn at(src: &str, offset: usize, message: impl Into<String>) -> Self {
        let offset = offset.min(src.len());
        let mut line = 1;
        let mut column = 1;
        for b in src.as_bytes()[..offset].iter() {
            if *b == b'\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        Self { message: message.into(), offset, line, column }
    }
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse error at line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Semiring-independent syntax tree. Literal payloads stay textual
/// until evaluation resolves them against a concrete semiring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprAst {
    Literal { text: String, start: usize, end: usize },
    Var,
    Add(Vec<ExprAst>),
    Mul(Vec<ExprAst>),
    Pow { base: Box<ExprAst>, exponent: u32 },
    Paren(Box<ExprAst>),
}

fn is_paren_rooted(ast: &ExprAst) -> bool {
    match ast {
        ExprAst::Paren(_) => true,
        ExprAst::Pow { base, .. } => is_paren_rooted(base),
        _ => false,
    }
}

struct Parser<'a> {
    src: &'a str,
    tokens: Vec<Token>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn advance(&mut self) -> Option<Token> {
        let token = self.tokens.get(self.pos).cloned();
        if token.is_some() {
            self.pos += 1;
        }
        token
    }

    fn here(&self) -> usize {
        self.peek().map_or(self.src.len(), |t| t.start)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::at(self.src, self.here(), message)
    }

    fn expect(&mut self, kind: &TokenKind, what: &str) -> Result<Token, ParseError> {
        match self.peek() {
            Some(t) if t.kind == *kind => Ok(self.advance().unwrap()),
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    fn expr(&mut self) -> Result<ExprAst, ParseError> {
        let mut terms = vec![self.term()?];
        while matches!(self.peek().map(|t| &t.kind), Some(TokenKind::Plus)) {
            self.advance();
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { ExprAst::Add(terms) })
    }

    fn term(&mut self) -> Result<ExprAst, ParseError> {
        let mut factors = vec![self.pow()?];
        loop {
            match self.peek().map(|t| &t.kind) {
                Some(TokenKind::Star) => {
                    self.advance();
                    factors.push(self.pow()?);
                }
                Some(TokenKind::LParen) if is_paren_rooted(factors.last().unwrap()) => {
                    factors.push(self.pow()?);
                }
                _ => break,
            }
        }
        Ok(if factors.len() == 1 { factors.pop().unwrap() } else { ExprAst::Mul(factors) })
    }

    fn pow(&mut self) -> Result<ExprAst, ParseError> {
        let base = self.atom()?;
        if matches!(self.peek().map(|t| &t.kind), Some(TokenKind::Caret)) {
            self.advance();
            let token = match self.peek() {
                Some(t) if matches!(t.kind, TokenKind::Nat(_)) => self.advance().unwrap(),
                _ => return Err(self.error("expected a natural exponent after '^'")),
            };
            let TokenKind::Nat(value) = token.kind else { unreachable!() };
            let exponent = value
                .to_u32()
                .ok_or_else(|| ParseError::at(self.src, token.start, "exponent overflow"))?;
            return Ok(ExprAst::Pow { base: Box::new(base), exponent });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ExprAst, ParseError> {
        let token = match self.peek() {
            Some(t) => t.clone(),
            None => return Err(self.error("expected an expression")),
        };
        match token.kind {
            TokenKind::LParen => {
                self.advance();
                let inner = self.expr()?;
                self.expect(&TokenKind::RParen, "')'")?;
                Ok(ExprAst::Paren(Box::new(inner)))
            }
            TokenKind::Nat(ref n) => {
                self.advance();
                // `p/q` reads as one rational literal.
                if matches!(self.peek().map(|t| &t.kind), Some(TokenKind::Slash)) {
                    if let Some(next) = self.tokens.get(self.pos + 1) {
                        if let TokenKind::Nat(d) = &next.kind {
                            let end = next.end;
                            let (d, start) = (d.clone(), token.start);
                            self.advance();
                            self.advance();
                            return Ok(ExprAst::Literal {
                                text: format!("{n}/{d}"),
                                start,
                                end,
                            });
                        }
                    }
                }
                Ok(ExprAst::Literal {
                    text: n.to_string(),
                    start: token.start,
                    end: token.end,
                })
            }
            TokenKind::Ident(ref name) => {
                self.advance();
                if name == "T" {
                    return Ok(ExprAst::Var);
                }
                // Call-shaped literal like t(-1/2) or m(3/4).
                if matches!(self.peek().map(|t| &t.kind), Some(TokenKind::LParen))
                    && (name == "t" || name == "m")
                {
                    self.advance();
                    let mut text = format!("{name}(");
                    if matches!(self.peek().map(|t| &t.kind), Some(TokenKind::Minus)) {
                        self.advance();
                        text.push('-');
                    }
                    let numer = match self.peek() {
                        Some(t) if matches!(t.kind, TokenKind::Nat(_)) => self.advance().unwrap(),
                        _ => return Err(self.error("expected a number inside the literal")),
                    };
                    let TokenKind::Nat(numer) = numer.kind else { unreachable!() };
                    text.push_str(&numer.to_string());
                    if matches!(self.peek().map(|t| &t.kind), Some(TokenKind::Slash)) {
                        self.advance();
                        let denom = match self.peek() {
                            Some(t) if matches!(t.kind, TokenKind::Nat(_)) => {
                                self.advance().unwrap()
                            }
                            _ => return Err(self.error("expected a denominator")),
                        };
                        let TokenKind::Nat(denom) = denom.kind else { unreachable!() };
                        text.push('/');
                        text.push_str(&denom.to_string());
                    }
                    let close = self.expect(&TokenKind::RParen, "')'")?;
                    text.push(')');
                    return Ok(ExprAst::Literal { text, start: token.start, end: close.end });
                }
                Ok(ExprAst::Literal {
                    text: name.clone(),
                    start: token.start,
                    end: token.end,
                })
            }
            _ => Err(ParseError::at(self.src, token.start, "expected an expression")),
        }
    }
}

/// Parse to a semiring-independent syntax tree.
pub fn parse_ast(src: &str) -> Result<ExprAst, ParseError> {
    let tokens = lex(src)?;
    let mut parser = Parser { src, tokens, pos: 0 };
    let ast = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.error("unexpected token"));
    }
    Ok(ast)
}

/// Evaluate a syntax tree into a polynomial over the given semiring.
pub fn eval_ast(
    src: &str,
    ast: &ExprAst,
    descriptor: &SemiringDescriptor,
) -> Result<Polynomial, ParseError> {
    let internal = |e: crate::error::AlgebraError| ParseError::at(src, 0, e.to_string());
    match ast {
        ExprAst::Literal { text, start, .. } => match literal::resolve(descriptor, text) {
            Some(element) => Ok(Polynomial::constant(element)),
            None => Err(ParseError::at(
                src,
                *start,
                format!("unknown literal {:?} for semiring {:?}", text, descriptor.id()),
            )),
        },
        ExprAst::Var => Ok(Polynomial::monomial(descriptor.one(), 1)),
        ExprAst::Add(children) => {
            let mut acc = Polynomial::zero(descriptor.kind());
            for child in children {
                acc = acc.add(&eval_ast(src, child, descriptor)?).map_err(internal)?;
            }
            Ok(acc)
        }
        ExprAst::Mul(children) => {
            let mut acc = Polynomial::constant(descriptor.one());
            for child in children {
                acc = acc.mul(&eval_ast(src, child, descriptor)?).map_err(internal)?;
            }
            Ok(acc)
        }
        ExprAst::Pow { base, exponent } => {
            eval_ast(src, base, descriptor)?.pow(*exponent).map_err(internal)
        }
        ExprAst::Paren(inner) => eval_ast(src, inner, descriptor),
    }
}

/// Parse an expression into a polynomial over the given semiring.
pub fn parse(src: &str, descriptor: &SemiringDescriptor) -> Result<Polynomial, ParseError> {
    if src.trim().is_empty() {
        return Err(ParseError::at(src, 0, "empty input"));
    }
    let ast = parse_ast(src)?;
    eval_ast(src, &ast, descriptor)
}

/// Parse a single element literal (no `T`).
pub fn parse_element(src: &str, descriptor: &SemiringDescriptor) -> Result<Element, ParseError> {
    let poly = parse(src, descriptor)?;
    match poly.degree() {
        None => Ok(descriptor.zero()),
        Some(0) => Ok(poly.coeff(0)),
        Some(_) => Err(ParseError::at(src, 0, "expected a constant expression")),
    }
}

/// Canonical descending-power rendering; `parse(render(p))` always
/// yields a polynomial equal to `p`.
pub fn render(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_owned();
    }
    let degree = p.degree().unwrap();
    let mut pieces = Vec::new();
    for i in (0..=degree).rev() {
        let c = p.coeff(i);
        if c.is_zero() {
            continue;
        }
        let piece = if i == 0 {
            render_element(&c)
        } else {
            let base = if i == 1 { "T".to_owned() } else { format!("T^{i}") };
            if c.is_one() {
                base
            } else {
                let text = render_element(&c);
                if text.contains('+') {
                    format!("({text})*{base}")
                } else {
                    format!("{text}*{base}")
                }
            }
        };
        pieces.push(piece);
    }
    pieces.join("+")
}
