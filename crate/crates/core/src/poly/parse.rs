//! Text grammar: signed integer coefficients, variables `x<i>` / `y<i>`
//! (1-based, optional `_`), `^` powers, `*` or juxtaposed products, `+`/`-`.

use num_bigint::BigInt;
use num_traits::One;

use super::{Monomial, Polynomial};
use crate::error::{Error, Result};

struct Term {
    coeff: BigInt,
    // (is_x, 1-based index, power)
    factors: Vec<(bool, usize, u32)>,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<&'a str> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn polynomial(&mut self) -> Result<Vec<Term>> {
        let mut terms = Vec::new();
        self.skip_ws();
        let mut negative = false;
        if let Some(c @ (b'+' | b'-')) = self.peek() {
            negative = c == b'-';
            self.pos += 1;
            self.skip_ws();
        }
        loop {
            let mut t = self.term()?;
            if negative {
                t.coeff = -t.coeff;
            }
            terms.push(t);
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(c @ (b'+' | b'-')) => {
                    negative = c == b'-';
                    self.pos += 1;
                    self.skip_ws();
                }
                Some(c) => return self.err(format!("unexpected {:?}", c as char)),
            }
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<Term> {
        let mut t = Term {
            coeff: BigInt::one(),
            factors: Vec::new(),
        };
        self.factor(&mut t)?;
        loop {
            let save = self.pos;
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    self.skip_ws();
                    self.factor(&mut t)?;
                }
                Some(b'x' | b'y') if save == self.pos => self.factor(&mut t)?,
                _ => {
                    self.pos = save;
                    return Ok(t);
                }
            }
        }
    }

    fn factor(&mut self, t: &mut Term) -> Result<()> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits()?;
                t.coeff *= d.parse::<BigInt>().unwrap();
                Ok(())
            }
            Some(c @ (b'x' | b'y')) => {
                self.pos += 1;
                if self.peek() == Some(b'_') {
                    self.pos += 1;
                }
                let at = self.pos;
                let idx: usize = self.digits()?.parse().map_err(|_| Error::Parse {
                    pos: at,
                    msg: "index too large".into(),
                })?;
                if idx == 0 {
                    return Err(Error::Parse {
                        pos: at,
                        msg: "variable indices are 1-based".into(),
                    });
                }
                let mut power = 1u32;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    let at = self.pos;
                    power = self.digits()?.parse().map_err(|_| Error::Parse {
                        pos: at,
                        msg: "exponent too large".into(),
                    })?;
                }
                t.factors.push((c == b'x', idx, power));
                Ok(())
            }
            None => self.err("unexpected end of input"),
            Some(c) => self.err(format!("unexpected {:?}", c as char)),
        }
    }
}

fn parse_terms(text: &str) -> Result<Vec<Term>> {
    Parser {
        src: text.as_bytes(),
        pos: 0,
    }
    .polynomial()
}

fn build(terms: Vec<Term>, n: usize) -> Result<Polynomial> {
    let mut p = Polynomial::zero(n);
    for t in terms {
        let mut m = Monomial::one(n);
        for (is_x, idx, power) in t.factors {
            if idx > n {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("index {} exceeds n = {}", idx, n),
                });
            }
            let slot = if is_x {
                &mut m.x_mut()[idx - 1]
            } else {
                &mut m.y_mut()[idx - 1]
            };
            let e = *slot as u32 + power;
            *slot = u8::try_from(e).map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("exponent {} too large", e),
            })?;
        }
        p.add_term(m, t.coeff);
    }
    Ok(p)
}

/// Parses with the ambient `n` inferred as the largest index used (at least 1).
pub fn parse(text: &str) -> Result<Polynomial> {
    let terms = parse_terms(text)?;
    let n = terms
        .iter()
        .flat_map(|t| t.factors.iter().map(|f| f.1))
        .max()
        .unwrap_or(1);
    build(terms, n)
}

pub fn parse_with_n(text: &str, n: usize) -> Result<Polynomial> {
    build(parse_terms(text)?, n)
}

/// Parses a single monomial with unit coefficient.
pub fn parse_monomial(text: &str, n: usize) -> Result<Monomial> {
    let p = parse_with_n(text, n)?;
    let mut it = p.terms();
    match (it.next(), it.next()) {
        (Some((m, c)), None) if c.is_one() => Ok(m.clone()),
        _ => Err(Error::Parse {
            pos: 0,
            msg: format!("{:?} is not a monomial", text),
        }),
    }
}
