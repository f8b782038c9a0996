//! Parser for Weyl-algebra expressions such as `z1^2*d1 + 3/2*d2 - (z1 + 1)*d1`.
//!
//! `zK` is the K-th coordinate, `dK` its derivative. Products are taken in
//! the order written (the algebra is noncommutative); juxtaposition also
//! multiplies. Division is allowed by integer literals only.

use num_bigint::BigInt;
use thiserror::Error;

use super::{Space, WeylElement};
use crate::algebra::BigRat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Coord(usize),
    Deriv(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\n' => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Tok::Plus)),
            '-' => out.push((start, Tok::Minus)),
            '*' => out.push((start, Tok::Star)),
            '/' => out.push((start, Tok::Slash)),
            '^' => out.push((start, Tok::Caret)),
            '(' => out.push((start, Tok::LParen)),
            ')' => out.push((start, Tok::RParen)),
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = input[start..i].parse().expect("digits");
                out.push((start, Tok::Num(n)));
                continue;
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let word = &input[start..i];
                let (kind, idx) = word.split_at(1);
                let index = idx
                    .parse::<usize>()
                    .ok()
                    .filter(|&k| k >= 1)
                    .ok_or_else(|| ParseError {
                        pos: start,
                        msg: format!("unknown symbol `{word}`; expected zK or dK with K >= 1"),
                    })?;
                match kind {
                    "z" => out.push((start, Tok::Coord(index - 1))),
                    "d" => out.push((start, Tok::Deriv(index - 1))),
                    _ => {
                        return Err(ParseError {
                            pos: start,
                            msg: format!("unknown symbol `{word}`; expected zK or dK with K >= 1"),
                        })
                    }
                }
                continue;
            }
            other => {
                return Err(ParseError {
                    pos: start,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    space: Space,
}

type W = WeylElement<BigRat>;

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn mul(&self, a: &W, b: &W) -> W {
        a.checked_mul(b).expect("single space")
    }

    fn expr(&mut self) -> Result<W, ParseError> {
        let mut acc = W::zero(self.space.clone(), 1);
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.at += 1;
                -1
            }
            Some(Tok::Plus) => {
                self.at += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            let t = if sign < 0 { t.neg() } else { t };
            acc = acc.checked_add(&t).expect("single space");
            match self.peek() {
                Some(Tok::Plus) => sign = 1,
                Some(Tok::Minus) => sign = -1,
                _ => return Ok(acc),
            }
            self.at += 1;
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Num(_) | Tok::Coord(_) | Tok::Deriv(_) | Tok::LParen)
        )
    }

    fn term(&mut self) -> Result<W, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.at += 1;
                    let f = self.factor()?;
                    acc = self.mul(&acc, &f);
                }
                Some(Tok::Slash) => {
                    self.at += 1;
                    match self.peek().cloned() {
                        Some(Tok::Num(n)) if n != BigInt::from(0) => {
                            self.at += 1;
                            acc = acc.scale(&BigRat::new(BigInt::from(1), n));
                        }
                        _ => return self.err("division only by a nonzero integer literal"),
                    }
                }
                _ if self.starts_factor() => {
                    let f = self.factor()?;
                    acc = self.mul(&acc, &f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<W, ParseError> {
        let base = self.unary()?;
        if self.peek() == Some(&Tok::Caret) {
            self.at += 1;
            let e = match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.at += 1;
                    u32::try_from(n).map_err(|_| ParseError {
                        pos: self.pos(),
                        msg: "exponent too large".into(),
                    })?
                }
                _ => return self.err("expected a non-negative integer exponent"),
            };
            let mut acc = W::one(self.space.clone(), 1);
            for _ in 0..e {
                acc = self.mul(&acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn unary(&mut self) -> Result<W, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.at += 1;
            return Ok(self.unary()?.neg());
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<W, ParseError> {
        let Some(tok) = self.peek().cloned() else {
            return self.err("unexpected end of input");
        };
        self.at += 1;
        match tok {
            Tok::Num(n) => Ok(W::scalar(self.space.clone(), BigRat::from_integer(n))),
            Tok::Coord(i) => Ok(W::coord(self.space.clone(), i)),
            Tok::Deriv(i) => Ok(W::deriv(self.space.clone(), i)),
            Tok::LParen => {
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.at += 1;
                Ok(e)
            }
            _ => {
                self.at -= 1;
                self.err("expected a number, zK, dK or `(`")
            }
        }
    }
}

/// Parses an expression over `z1..zn`, `n` being the largest index used (at least 1).
pub fn parse_weyl(input: &str) -> Result<WeylElement<BigRat>, ParseError> {
    let toks = tokenize(input)?;
    let n = toks
        .iter()
        .filter_map(|(_, t)| match t {
            Tok::Coord(i) | Tok::Deriv(i) => Some(i + 1),
            _ => None,
        })
        .max()
        .unwrap_or(1);
    parse_weyl_in(input, Space::standard(n))
}

/// Parses an expression into a given source space; indices must fit its dimension.
pub fn parse_weyl_in(input: &str, space: Space) -> Result<WeylElement<BigRat>, ParseError> {
    let toks = tokenize(input)?;
    if let Some((pos, _)) = toks
        .iter()
        .find(|(_, t)| matches!(t, Tok::Coord(i) | Tok::Deriv(i) if *i >= space.dim()))
    {
        return Err(ParseError {
            pos: *pos,
            msg: format!("index exceeds the space dimension {}", space.dim()),
        });
    }
    if toks.is_empty() {
        return Err(ParseError {
            pos: 0,
            msg: "empty expression".into(),
        });
    }
    let mut p = Parser {
        toks,
        at: 0,
        end: input.len(),
        space,
    };
    let e = p.expr()?;
    if p.at != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}
