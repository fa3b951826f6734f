//! Tokenizer for polynomial expressions. Whitespace-insensitive;
//! every token records its byte span so errors can point at a position.

use num_bigint::BigUint;

use super::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum TokenKind {
    Nat(BigUint),
    Ident(String),
    LParen,
    RParen,
    Plus,
    Star,
    Caret,
    Slash,
    Minus,
}

#[derive(Debug, Clone)]
pub(crate) struct Token {
    pub kind: TokenKind,
    pub start: usize,
    pub end: usize,
}

pub(crate) fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = src.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
            }
            b'(' | b')' | b'+' | b'*' | b'^' | b'/' | b'-' => {
                let kind = match b {
                    b'(' => TokenKind::LParen,
                    b')' => TokenKind::RParen,
                    b'+' => TokenKind::Plus,
                    b'*' => TokenKind::Star,
                    b'^' => TokenKind::Caret,
                    b'/' => TokenKind::Slash,
                    _ => TokenKind::Minus,
                };
                i += 1;
                tokens.push(Token { kind, start, end: i });
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &src[start..i];
                let value = digits.parse::<BigUint>().expect("digits parse");
                tokens.push(Token { kind: TokenKind::Nat(value), start, end: i });
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                tokens.push(Token {
                    kind: TokenKind::Ident(src[start..i].to_owned()),
                    start,
                    end: i,
                });
            }
            _ => {
                return Err(ParseError::at(
                    src,
                    start,
                    format!("unexpected character {:?}", src[start..].chars().next().unwrap()),
                ));
            }
        }
    }
    Ok(tokens)
}
