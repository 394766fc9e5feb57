//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar: `+ - * ^`, integer and rational (`p/q`) literals, declared
//! variables, parentheses; juxtaposition multiplies (`3x^2y` works) and
//! whitespace is ignored. Printing a polynomial yields an expression this
//! parser maps back to the same value.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::poly::MultiPoly;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokens(src: &'a str) -> Result<Vec<(Tok, usize)>> {
        let mut lx = Lexer {
            src: src.as_bytes(),
            pos: 0,
        };
        let mut out = Vec::new();
        while let Some(t) = lx.next_token()? {
            out.push(t);
        }
        Ok(out)
    }

    fn next_token(&mut self) -> Result<Option<(Tok, usize)>> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.src.len() {
            return Ok(None);
        }
        let start = self.pos;
        let c = self.src[self.pos];
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                return Ok(Some((Tok::Int(text.parse().unwrap()), start)));
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                return Ok(Some((Tok::Ident(text.to_string()), start)));
            }
            other => {
                return Err(Error::Syntax {
                    pos: start,
                    msg: format!("unexpected character `{}`", other as char),
                })
            }
        };
        self.pos += 1;
        Ok(Some((tok, start)))
    }
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    idx: usize,
    vars: Vec<&'a str>,
    field: FieldSpec,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(t, _)| t.clone());
        self.idx += 1;
        t
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut negate = false;
        while matches!(self.peek(), Some(Tok::Plus) | Some(Tok::Minus)) {
            if let Some(Tok::Minus) = self.bump() {
                negate = !negate;
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t)?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let f = self.factor()?;
                    acc = acc.mul(&f)?;
                }
                // Juxtaposition: a new atom right after a factor multiplies.
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    let f = self.factor()?;
                    acc = acc.mul(&f)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let e: u32 = n.to_string().parse().map_err(|_| Error::Syntax {
                        pos,
                        msg: "exponent too large".to_string(),
                    })?;
                    return Ok(base.pow(e));
                }
                _ => {
                    return Err(Error::Syntax {
                        pos,
                        msg: "expected a non-negative integer exponent after `^`".to_string(),
                    })
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(n)) => {
                // Rational literal p/q when a slash follows.
                if let Some(Tok::Slash) = self.peek() {
                    self.bump();
                    let dpos = self.pos();
                    match self.bump() {
                        Some(Tok::Int(d)) => {
                            if d == BigInt::from(0) {
                                return Err(Error::ZeroDenominator { pos: dpos });
                            }
                            let c = self.field.from_ratio(n, d)?;
                            Ok(MultiPoly::constant(&self.vars, c))
                        }
                        _ => Err(Error::Syntax {
                            pos: dpos,
                            msg: "expected an integer denominator after `/`".to_string(),
                        }),
                    }
                } else {
                    let c = self.field.from_ratio(n, BigInt::from(1))?;
                    Ok(MultiPoly::constant(&self.vars, c))
                }
            }
            Some(Tok::Ident(name)) => {
                MultiPoly::variable(&self.vars, self.field, &name).map_err(|_| {
                    Error::UnknownVariable { name, pos }
                })
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(Error::Syntax {
                        pos: self.pos(),
                        msg: "expected `)`".to_string(),
                    }),
                }
            }
            other => Err(Error::Syntax {
                pos,
                msg: match other {
                    Some(t) => format!("unexpected token {t:?}"),
                    None => "unexpected end of input".to_string(),
                },
            }),
        }
    }
}

/// Parse an expression into the ring with the given variables and field.
pub fn parse(text: &str, vars: &[&str], field: FieldSpec) -> Result<MultiPoly> {
    let toks = Lexer::tokens(text)?;
    let mut p = Parser {
        toks,
        idx: 0,
        vars: vars.to_vec(),
        field,
        end: text.len(),
    };
    let poly = p.expr()?;
    if p.idx != p.toks.len() {
        return Err(Error::Syntax {
            pos: p.pos(),
            msg: "trailing input".to_string(),
        });
    }
    Ok(poly)
}
