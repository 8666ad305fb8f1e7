//! Parser for word expressions such as `a0^3*(s1*s2^-1)^2*D`.
//!
//! ```text
//! expr := term ('*' term)*
//! term := atom ('^' int)?
//! atom := token | '(' expr ')'
//! ```
//!
//! Tokens are `s1 … s{n-1}`, the catalogue names (`a0 a1 a2 D D2 r x y gamma
//! delta`) and `e` for the empty word. Whitespace is ignored.

use std::fmt;

use thiserror::Error;

use super::{canonical_word, BraidWord, CanonicalName, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at position {position}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
    pub input: String,
}

impl ParseError {
    /// The input with a caret under the offending position.
    pub fn render(&self) -> String {
        format!("{}\n{}^ {}", self.input, " ".repeat(self.position), self.message)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Star,
    Caret,
    Minus,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(i) => write!(f, "`{i}`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

struct Parser<'a> {
    input: &'a str,
    toks: Vec<(Tok, usize)>,
    at: usize,
    n: usize,
}

fn lex(input: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let err = |position: usize, message: String| ParseError { position, message, input: input.to_string() };
    let chars: Vec<(usize, char)> = input.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        // caret column counts characters, not bytes
        let col = i;
        match c {
            _ if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '*' => out.push((Tok::Star, col)),
            '^' => out.push((Tok::Caret, col)),
            '-' => out.push((Tok::Minus, col)),
            '(' => out.push((Tok::LParen, col)),
            ')' => out.push((Tok::RParen, col)),
            _ if c.is_ascii_digit() => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].1.is_ascii_digit() {
                    i += 1;
                }
                let end = chars.get(i + 1).map_or(input.len(), |&(p, _)| p);
                let text = &input[pos..end];
                let v = text.parse::<i64>().map_err(|_| err(start, format!("integer `{text}` too large")))?;
                out.push((Tok::Int(v), start));
            }
            _ if c.is_ascii_alphabetic() => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].1.is_ascii_alphanumeric() {
                    i += 1;
                }
                let end = chars.get(i + 1).map_or(input.len(), |&(p, _)| p);
                out.push((Tok::Ident(input[pos..end].to_string()), start));
            }
            _ => return Err(err(col, format!("unexpected character `{c}`"))),
        }
        i += 1;
    }
    out.push((Tok::End, chars.len()));
    Ok(out)
}

impl Parser<'_> {
    fn peek(&self) -> &(Tok, usize) {
        &self.toks[self.at]
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, position: usize, message: impl Into<String>) -> Result<T, WordError> {
        Err(WordError::Parse(ParseError { position, message: message.into(), input: self.input.to_string() }))
    }

    fn expr(&mut self) -> Result<BraidWord, WordError> {
        let mut acc = self.term()?;
        while self.peek().0 == Tok::Star {
            self.bump();
            let rhs = self.term()?;
            acc = acc.concat(&rhs)?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<BraidWord, WordError> {
        let base = self.atom()?;
        if self.peek().0 != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let negative = if self.peek().0 == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        match self.bump() {
            (Tok::Int(k), _) => Ok(base.pow(if negative { -k } else { k })),
            (t, pos) => self.fail(pos, format!("expected an integer exponent, found {t}")),
        }
    }

    fn atom(&mut self) -> Result<BraidWord, WordError> {
        match self.bump() {
            (Tok::LParen, open) => {
                let inner = self.expr()?;
                match self.bump() {
                    (Tok::RParen, _) => Ok(inner),
                    (t, pos) => self.fail(pos, format!("expected `)` to close `(` at {open}, found {t}")),
                }
            }
            (Tok::Ident(name), pos) => self.ident(&name, pos),
            (t, pos) => self.fail(pos, format!("expected a generator, name or `(`, found {t}")),
        }
    }

    fn ident(&self, name: &str, pos: usize) -> Result<BraidWord, WordError> {
        if name == "e" {
            return Ok(BraidWord::identity(self.n));
        }
        if let Some(digits) = name.strip_prefix('s') {
            if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
                let i: usize = digits.parse().unwrap_or(usize::MAX);
                if i == 0 || i >= self.n {
                    return self.fail(pos, format!("generator `{name}` needs 1 <= index <= {}", self.n - 1));
                }
                return BraidWord::generator(self.n, i as i32);
            }
        }
        let Ok(c) = name.parse::<CanonicalName>() else {
            return self.fail(pos, format!("unknown token `{name}`"));
        };
        match canonical_word(c, self.n) {
            Ok(w) => Ok(w),
            Err(WordError::WrongStrandCount { requirement, .. }) => {
                self.fail(pos, format!("`{name}` requires {requirement}"))
            }
            Err(e) => Err(e),
        }
    }
}

/// Parse a word expression on `n` strands.
pub fn parse_expr(input: &str, n: usize) -> Result<BraidWord, WordError> {
    if n < 2 {
        return Err(WordError::WrongStrandCount { name: "word", n, requirement: "n >= 2" });
    }
    let toks = lex(input)?;
    let mut p = Parser { input, toks, at: 0, n };
    let w = p.expr()?;
    match p.peek().clone() {
        (Tok::End, _) => Ok(w),
        (t, pos) => p.fail(pos, format!("unexpected {t}")),
    }
}
