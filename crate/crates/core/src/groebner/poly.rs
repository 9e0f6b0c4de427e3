//! Sparse polynomials in the fiber coordinates, kept sorted under a monomial order.

use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::order::{mono_div, mono_divides, mono_mul, mono_string, Exponents, FiberVariable, MonomialOrder, NVARS};
use crate::error::{Error, Result};
use crate::forms::{join_terms, parse::parse_raw};

/// Polynomial with strictly descending monomials and no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedPoly {
    order: MonomialOrder,
    terms: Vec<(Exponents, BigRational)>,
}

impl OrderedPoly {
    pub fn zero(order: MonomialOrder) -> Self {
        OrderedPoly { order, terms: Vec::new() }
    }

    pub fn constant(order: MonomialOrder, c: BigRational) -> Self {
        OrderedPoly::monomial(order, [0; NVARS], c)
    }

    pub fn monomial(order: MonomialOrder, m: Exponents, c: BigRational) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        OrderedPoly { order, terms }
    }

    pub fn var(order: MonomialOrder, v: FiberVariable) -> Self {
        let mut m = [0; NVARS];
        m[v.index()] = 1;
        OrderedPoly::monomial(order, m, BigRational::one())
    }

    /// Collects terms in any order, combining repeats.
    pub fn from_terms<I>(order: MonomialOrder, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, BigRational)>,
    {
        let mut v: Vec<(Exponents, BigRational)> = terms.into_iter().collect();
        v.sort_by(|a, b| order.compare(&b.0, &a.0));
        let mut out: Vec<(Exponents, BigRational)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        OrderedPoly { order, terms: out }
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[(Exponents, BigRational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Exponents, BigRational)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<Exponents> {
        self.terms.first().map(|t| t.0)
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn coeff(&self, m: &Exponents) -> BigRational {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRational::zero)
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.iter().map(|(m, _)| m.iter().sum::<u32>());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub(crate) fn drop_leading(mut self) -> OrderedPoly {
        if !self.terms.is_empty() {
            self.terms.remove(0);
        }
        self
    }

    /// Re-sorts under another order.
    pub fn with_order(&self, order: MonomialOrder) -> OrderedPoly {
        OrderedPoly::from_terms(order, self.terms.iter().cloned())
    }

    /// `self + c · x^shift · other`.
    pub fn add_scaled(&self, c: &BigRational, shift: &Exponents, other: &OrderedPoly) -> OrderedPoly {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|(m, v)| (mono_mul(m, shift), v * c))
            .peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => self.order.compare(&x.0, &y.0),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let (m, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let s = x + y;
                    if !s.is_zero() {
                        out.push((*m, s));
                    }
                }
            }
        }
        OrderedPoly { order: self.order, terms: out }
    }

    pub fn add(&self, other: &OrderedPoly) -> OrderedPoly {
        self.add_scaled(&BigRational::one(), &[0; NVARS], other)
    }

    pub fn sub(&self, other: &OrderedPoly) -> OrderedPoly {
        self.add_scaled(&-BigRational::one(), &[0; NVARS], other)
    }

    pub fn scale(&self, c: &BigRational) -> OrderedPoly {
        if c.is_zero() {
            return OrderedPoly::zero(self.order);
        }
        OrderedPoly {
            order: self.order,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Exponents, c: &BigRational) -> OrderedPoly {
        OrderedPoly::zero(self.order).add_scaled(c, m, self)
    }

    pub fn mul(&self, other: &OrderedPoly) -> OrderedPoly {
        other
            .terms
            .iter()
            .fold(OrderedPoly::zero(self.order), |acc, (m, c)| acc.add_scaled(c, m, self))
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> OrderedPoly {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn evaluate(&self, point: &[BigRational; NVARS]) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    pub fn partial_derivative(&self, v: FiberVariable) -> OrderedPoly {
        let i = v.index();
        let terms = self.terms.iter().filter(|(m, _)| m[i] > 0).map(|(m, c)| {
            let mut d = *m;
            d[i] -= 1;
            (d, c * BigRational::from_integer(m[i].into()))
        });
        OrderedPoly::from_terms(self.order, terms)
    }

    /// Divides by `x^m` when every term is divisible.
    pub fn divide_monomial(&self, m: &Exponents) -> Option<OrderedPoly> {
        if !self.terms.iter().all(|(t, _)| mono_divides(m, t)) {
            return None;
        }
        Some(OrderedPoly {
            order: self.order,
            terms: self.terms.iter().map(|(t, c)| (mono_div(t, m), c.clone())).collect(),
        })
    }

    /// Parses text over `r, s1, s2, s3, t1, t2, t3`.
    pub fn parse(text: &str, order: MonomialOrder) -> Result<OrderedPoly> {
        let raw = parse_raw(text, &FiberVariable::NAMES)?;
        let terms = raw.into_iter().map(|(e, c)| {
            let m: Exponents = e
                .try_into()
                .map_err(|_| Error::InvalidInput("bad exponent vector".into()))?;
            Ok((m, c))
        });
        let terms: Result<Vec<_>> = terms.collect();
        Ok(OrderedPoly::from_terms(order, terms?))
    }
}

impl fmt::Display for OrderedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = join_terms(self.terms.iter().map(|(m, c)| {
            let s = mono_string(m);
            (c, if s == "1" { String::new() } else { s })
        }));
        f.write_str(&s)
    }
}
