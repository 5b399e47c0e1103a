//! Text syntax for polynomials.
//!
//! Terms are joined by `+`/`-`; a term is a product of rational
//! coefficients (`3`, `1/2`) and powers `var^exp`. Parentheses and
//! division by a constant are accepted as well, so `(x41 - x44 + 1)/2`
//! parses. Variable names match `[A-Za-z][A-Za-z0-9_]*`; whitespace is
//! ignored.
//!
//! [`parse_fraction`] additionally allows division by non-constant
//! polynomials and returns numerator and denominator.

use num::One;

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::ring::RingRef;
use super::PolyError;
use crate::scalar::{Integer, Rational};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Integer),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, PolyError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                i += 1;
            }
            let n: Integer = src[start..i].parse().expect("digits");
            out.push((Tok::Num(n), start));
            continue;
        }
        if c.is_ascii_alphabetic() {
            while i < bytes.len()
                && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
            {
                i += 1;
            }
            out.push((Tok::Ident(src[start..i].to_string()), start));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => {
                return Err(PolyError::Parse {
                    pos: start,
                    msg: format!("unexpected character '{c}'"),
                })
            }
        };
        out.push((tok, start));
        i += c.len_utf8();
    }
    Ok(out)
}

#[derive(Clone)]
struct Frac {
    num: Polynomial,
    den: Polynomial,
}

impl Frac {
    fn poly(p: Polynomial) -> Self {
        let den = Polynomial::one(p.ring());
        Frac { num: p, den }
    }

    fn normalize(self) -> Self {
        match self.den.constant_value() {
            Some(c) if !c.is_one() => Frac {
                num: self.num.scale(&c.recip()),
                den: Polynomial::one(self.den.ring()),
            },
            _ => self,
        }
    }

    fn add(&self, o: &Frac, negate: bool) -> Frac {
        let rhs = if negate { -&o.num } else { o.num.clone() };
        if self.den == o.den {
            return Frac {
                num: &self.num + &rhs,
                den: self.den.clone(),
            };
        }
        Frac {
            num: &(&self.num * &o.den) + &(&rhs * &self.den),
            den: &self.den * &o.den,
        }
        .normalize()
    }

    fn mul(&self, o: &Frac) -> Frac {
        Frac {
            num: &self.num * &o.num,
            den: &self.den * &o.den,
        }
        .normalize()
    }
}

struct Parser<'a> {
    ring: &'a RingRef,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Parse {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Frac, PolyError> {
        let mut acc = match self.peek() {
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                let t = self.term()?;
                Frac {
                    num: -&t.num,
                    den: t.den,
                }
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t, false);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t, true);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Frac, PolyError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let f = self.power()?;
                    acc = acc.mul(&f);
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.offset();
                    let f = self.power()?;
                    if f.num.is_zero() {
                        return Err(PolyError::Parse {
                            pos: at,
                            msg: "division by zero".into(),
                        });
                    }
                    acc = acc.mul(&Frac {
                        num: f.den,
                        den: f.num,
                    });
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Frac, PolyError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let e = match self.peek() {
                Some(Tok::Num(n)) => n.clone(),
                _ => return self.err("expected a non-negative integer exponent"),
            };
            let e: u32 = match e.try_into() {
                Ok(e) if e <= u16::MAX as u32 => e,
                _ => return self.err("exponent too large"),
            };
            self.pos += 1;
            return Ok(Frac {
                num: base.num.pow(e),
                den: base.den.pow(e),
            }
            .normalize());
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Frac, PolyError> {
        let ring = self.ring;
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Frac::poly(Polynomial::constant(
                    ring,
                    Rational::from_integer(n),
                )))
            }
            Some(Tok::Ident(name)) => match ring.index_of(&name) {
                Some(v) => {
                    self.pos += 1;
                    Ok(Frac::poly(Polynomial::monomial(
                        ring,
                        Monomial::var(ring.nvars(), v, 1),
                        Rational::one(),
                    )))
                }
                None => self.err(format!("unknown variable '{name}'")),
            },
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.err("expected ')'"),
                }
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                let inner = self.power()?;
                Ok(Frac {
                    num: -&inner.num,
                    den: inner.den,
                })
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `src` as a quotient of polynomials in `ring`.
pub fn parse_fraction(ring: &RingRef, src: &str) -> Result<(Polynomial, Polynomial), PolyError> {
    let toks = tokenize(src)?;
    if toks.is_empty() {
        return Err(PolyError::Parse {
            pos: 0,
            msg: "empty polynomial".into(),
        });
    }
    let mut p = Parser {
        ring,
        toks,
        pos: 0,
        end: src.len(),
    };
    let f = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    let f = f.normalize();
    Ok((f.num, f.den))
}

/// Parses `src` as a polynomial in `ring`.
pub fn parse_polynomial(ring: &RingRef, src: &str) -> Result<Polynomial, PolyError> {
    let (num, den) = parse_fraction(ring, src)?;
    match den.constant_value() {
        Some(c) => Ok(num.scale(&c.recip())),
        None => match num.exact_div(&den) {
            Some(q) => Ok(q),
            None => Err(PolyError::Parse {
                pos: 0,
                msg: format!("'{src}' is not a polynomial"),
            }),
        },
    }
}

/// Variable names occurring in `src`, in order of first appearance.
pub fn scan_variables(src: &str) -> Result<Vec<String>, PolyError> {
    let mut out: Vec<String> = Vec::new();
    for (t, _) in tokenize(src)? {
        if let Tok::Ident(name) = t {
            if !out.contains(&name) {
                out.push(name);
            }
        }
    }
    Ok(out)
}

impl Polynomial {
    pub fn parse(ring: &RingRef, src: &str) -> Result<Polynomial, PolyError> {
        parse_polynomial(ring, src)
    }
}
