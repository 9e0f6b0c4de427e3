//! Dense univariate polynomials over `ℚ`.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};


/// Coefficients lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(Vec<BigRational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn one() -> Self {
        UniPoly(vec![BigRational::one()])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.0.last()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = l.recip();
                UniPoly(self.0.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn sub(&self, other: &UniPoly) -> Self {
        let n = self.0.len().max(other.0.len());
        let z = BigRational::zero();
        UniPoly::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) - other.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.leading().expect("nonzero").recip();
        let mut r = self.0.clone();
        let mut q = vec![BigRational::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd {
            let k = r.len() - 1 - dd;
            let c = r.last().expect("nonempty") * &lead;
            for (i, dc) in d.0.iter().enumerate() {
                r[k + i] -= &c * dc;
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (UniPoly::new(q), UniPoly::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1.monic();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's algorithm: monic squarefree `a_1, a_2, ...` with `f = lc · Π a_i^i`.
    pub fn squarefree_decomposition(&self) -> Vec<UniPoly> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = UniPoly::gcd(&f, &df);
        let mut b = f.div_rem(&a0).0;
        let mut c = df.div_rem(&a0).0;
        loop {
            let d = c.sub(&b.derivative());
            if b.degree() == Some(0) {
                break;
            }
            let a = UniPoly::gcd(&b, &d);
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            out.push(a.monic());
        }
        out
    }

    pub fn evaluate(&self, t: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * t + c)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(BigRational, String)> = self
            .0
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let m = match i {
                    0 => String::new(),
                    1 => "t".into(),
                    _ => format!("t^{i}"),
                };
                (c.clone(), m)
            })
            .collect();
        if terms.is_empty() {
            return f.write_str("0");
        }
        let s = crate::forms::join_terms(terms.iter().map(|(c, m)| (c, m.clone())));
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::int;

    fn u(c: &[i64]) -> UniPoly {
        UniPoly::new(c.iter().map(|&x| int(x)).collect())
    }

    fn mul(a: &UniPoly, b: &UniPoly) -> UniPoly {
        let mut out = vec![int(0); a.0.len() + b.0.len() - 1];
        for (i, x) in a.0.iter().enumerate() {
            for (j, y) in b.0.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        UniPoly::new(out)
    }

    #[test]
    fn division() {
        let (q, r) = u(&[-1, 0, 1]).div_rem(&u(&[1, 1]));
        assert_eq!(q, u(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(UniPoly::gcd(&u(&[-1, 0, 1]), &u(&[-1, 1])), u(&[-1, 1]));
    }

    #[test]
    fn yun() {
        // (t-1)(t-2)^2(t^2+1)^3
        let a = u(&[-1, 1]);
        let b = u(&[-2, 1]);
        let c = u(&[1, 0, 1]);
        let f = mul(&mul(&a, &mul(&b, &b)), &mul(&c, &mul(&c, &c))).sub(&UniPoly::new(vec![]));
        let f3 = UniPoly::new(f.0.iter().map(|x| x * int(5)).collect());
        assert_eq!(f3.squarefree_decomposition(), vec![a, b, c]);
        assert_eq!(u(&[1, -2, 1]).squarefree_decomposition(), vec![UniPoly::one(), u(&[-1, 1])]);
    }

    #[test]
    fn display() {
        assert_eq!(u(&[-1, 0, 2]).to_string(), "2*t^2 - 1");
        assert_eq!(u(&[]).to_string(), "0");
    }
}
