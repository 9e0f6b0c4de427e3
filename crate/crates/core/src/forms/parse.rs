//! Recursive-descent parser for polynomial text.
//!
//! The grammar is shared by ternary forms and by the fiber-coordinate ring:
//!
//! ```text
//! expr   := ["+"|"-"] term (("+"|"-") term)*
//! term   := atom (["*"] atom)*
//! atom   := uint ["/" uint] | var ["^" uint] | "(" expr ")" ["^" uint]
//! ```
//!
//! Variable names are matched longest-first, so `s1t2` reads as `s1*t2`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Sparse polynomial keyed by exponent vectors over a caller-supplied name list.
pub(crate) type RawPoly = BTreeMap<Vec<u32>, BigRational>;

const MAX_EXPONENT: u32 = 256;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str, names: &[&str]) -> Result<Vec<(usize, Tok)>> {
    let mut by_len: Vec<(usize, &str)> = names.iter().copied().enumerate().collect();
    by_len.sort_by(|a, b| b.1.len().cmp(&a.1.len()));

    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            out.push((i, t));
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = text[start..i].parse().expect("digits");
            out.push((start, Tok::Int(n)));
            continue;
        }
        match by_len
            .iter()
            .find(|(_, name)| text[i..].starts_with(name))
        {
            Some(&(idx, name)) => {
                out.push((i, Tok::Var(idx)));
                i += name.len();
            }
            None => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(Error::Syntax {
                    pos: i,
                    msg: format!("unexpected character `{ch}`"),
                });
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    nvars: usize,
    text_len: usize,
    _names: &'a [&'a str],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.text_len, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn constant(&self, c: BigRational) -> RawPoly {
        let mut p = RawPoly::new();
        if !c.is_zero() {
            p.insert(vec![0; self.nvars], c);
        }
        p
    }

    fn expr(&mut self) -> Result<RawPoly> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Plus) => {
                self.bump();
            }
            Some(Tok::Minus) => {
                self.bump();
                negate = true;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = scale(&acc, &-BigRational::one());
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = add(&acc, &t);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = add(&acc, &scale(&t, &-BigRational::one()));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RawPoly> {
        let mut acc = self.atom()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let a = self.atom()?;
                    acc = mul(&acc, &a);
                }
                Some(Tok::Int(_)) | Some(Tok::Var(_)) | Some(Tok::LParen) => {
                    let a = self.atom()?;
                    acc = mul(&acc, &a);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() != Some(&Tok::Caret) {
            return Ok(1);
        }
        self.bump();
        match self.bump() {
            Some(Tok::Int(n)) => match n.to_u32() {
                Some(e) if e <= MAX_EXPONENT => Ok(e),
                _ => {
                    self.at -= 1;
                    self.err(format!("exponent exceeds {MAX_EXPONENT}"))
                }
            },
            _ => {
                self.at = self.at.saturating_sub(1);
                self.err("expected unsigned integer exponent")
            }
        }
    }

    fn atom(&mut self) -> Result<RawPoly> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.bump();
                let mut c = BigRational::from_integer(n);
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    match self.bump() {
                        Some(Tok::Int(d)) if !d.is_zero() => {
                            c /= BigRational::from_integer(d);
                        }
                        _ => {
                            self.at = self.at.saturating_sub(1);
                            return self.err("expected positive denominator");
                        }
                    }
                }
                Ok(self.constant(c))
            }
            Some(Tok::Var(idx)) => {
                self.bump();
                let e = self.exponent()?;
                let mut exps = vec![0; self.nvars];
                exps[idx] = e;
                let mut p = RawPoly::new();
                p.insert(exps, BigRational::one());
                Ok(p)
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.expr()?;
                if self.bump() != Some(Tok::RParen) {
                    self.at = self.at.saturating_sub(1);
                    return self.err("expected `)`");
                }
                let e = self.exponent()?;
                let mut acc = self.constant(BigRational::one());
                for _ in 0..e {
                    acc = mul(&acc, &inner);
                }
                Ok(acc)
            }
            Some(_) => self.err("expected coefficient, variable or `(`"),
            None => self.err("unexpected end of input"),
        }
    }
}

pub(crate) fn add(a: &RawPoly, b: &RawPoly) -> RawPoly {
    let mut out = a.clone();
    for (m, c) in b {
        let e = out.entry(m.clone()).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            out.remove(m);
        }
    }
    out
}

pub(crate) fn scale(a: &RawPoly, c: &BigRational) -> RawPoly {
    if c.is_zero() {
        return RawPoly::new();
    }
    a.iter().map(|(m, v)| (m.clone(), v * c)).collect()
}

pub(crate) fn mul(a: &RawPoly, b: &RawPoly) -> RawPoly {
    let mut out = RawPoly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m: Vec<u32> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            let e = out.entry(m).or_insert_with(BigRational::zero);
            *e += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Parses `text` over the given variable names.
pub(crate) fn parse_raw(text: &str, names: &[&str]) -> Result<RawPoly> {
    let toks = lex(text, names)?;
    if toks.is_empty() {
        return Err(Error::Syntax {
            pos: 0,
            msg: "empty input".into(),
        });
    }
    let mut p = Parser {
        toks,
        at: 0,
        nvars: names.len(),
        text_len: text.len(),
        _names: names,
    };
    let poly = p.expr()?;
    if p.at < p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    const XYZ: [&str; 3] = ["x", "y", "z"];

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn implicit_products_and_powers() {
        let p = parse_raw("2x^2y - (x+y)^2", &XYZ).unwrap();
        assert_eq!(p.get(&vec![2, 1, 0]), Some(&r(2)));
        assert_eq!(p.get(&vec![2, 0, 0]), Some(&r(-1)));
        assert_eq!(p.get(&vec![1, 1, 0]), Some(&r(-2)));
    }

    #[test]
    fn rational_coefficient() {
        let p = parse_raw("-3/6*x", &XYZ).unwrap();
        assert_eq!(
            p.get(&vec![1, 0, 0]),
            Some(&BigRational::new((-1).into(), 2.into()))
        );
    }

    #[test]
    fn longest_name_wins() {
        let names = ["r", "s1", "s2", "s3", "t1", "t2", "t3"];
        let p = parse_raw("s1t2 + 12 r s1", &names).unwrap();
        assert_eq!(p.get(&vec![0, 1, 0, 0, 0, 1, 0]), Some(&r(1)));
        assert_eq!(p.get(&vec![1, 1, 0, 0, 0, 0, 0]), Some(&r(12)));
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse_raw("x^4 + + y", &XYZ) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("unexpected {other:?}"),
        }
        match parse_raw("x^4 + q", &XYZ) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_raw("(x+y", &XYZ).is_err());
        assert!(parse_raw("", &XYZ).is_err());
        assert!(parse_raw("x/2", &XYZ).is_err());
        assert!(parse_raw("1/0*x", &XYZ).is_err());
    }

    #[test]
    fn cancellation_yields_empty() {
        assert!(parse_raw("x - x", &XYZ).unwrap().is_empty());
        assert!(parse_raw("0", &XYZ).unwrap().is_empty());
    }
}
