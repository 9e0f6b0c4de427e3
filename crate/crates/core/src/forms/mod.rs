//! Sparse ternary forms with exact rational coefficients.
//!
//! A [`TernaryForm`] is homogeneous of a declared degree and lives in one of two
//! variable families: primal `x, y, z` or dual `u, v, w`. Zero coefficients are
//! never stored, so structural equality is equality of forms.

pub(crate) mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{factorial, rational_to_string};
use crate::error::{Error, Result};

/// Exponent triple `(i, j, k)` standing for `x^i y^j z^k` (or `u^i v^j w^k`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial([u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub const fn new(i: u32, j: u32, k: u32) -> Self {
        Monomial([i, j, k])
    }

    pub fn exponents(&self) -> [u32; 3] {
        self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }

    /// `self / var_index`, if that variable divides `self`.
    pub fn div_var(&self, var: usize) -> Option<Monomial> {
        let mut e = self.0;
        if e[var] == 0 {
            return None;
        }
        e[var] -= 1;
        Some(Monomial(e))
    }

    pub fn mul_var(&self, var: usize) -> Monomial {
        let mut e = self.0;
        e[var] += 1;
        Monomial(e)
    }

    /// `i! j! k!`
    pub fn factorial_product(&self) -> BigInt {
        self.0.iter().map(|&e| factorial(e)).product()
    }

    /// All monomials of degree `n`, in descending graded-lex order (`x > y > z`).
    ///
    /// This is the fixed row/column order used for coefficient vectors and
    /// matrices throughout the crate.
    pub fn all_of_degree(n: u32) -> Vec<Monomial> {
        let mut out = Vec::with_capacity(((n + 1) * (n + 2) / 2) as usize);
        for i in (0..=n).rev() {
            for j in (0..=n - i).rev() {
                out.push(Monomial([i, j, n - i - j]));
            }
        }
        out
    }

    pub(crate) fn index_in_degree(&self) -> usize {
        // position inside `all_of_degree(n)`
        let n = self.degree();
        let [i, j, _] = self.0;
        let before: u32 = (i + 1..=n).map(|a| n - a + 1).sum();
        (before + (n - i - j)) as usize
    }
}

impl Ord for Monomial {
    /// Graded lexicographic with `x > y > z`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Exponent triple that may have negative entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LaurentMonomial(pub [i64; 3]);

impl LaurentMonomial {
    pub fn as_monomial(&self) -> Option<Monomial> {
        if self.0.iter().all(|&e| e >= 0) {
            Some(Monomial::new(self.0[0] as u32, self.0[1] as u32, self.0[2] as u32))
        } else {
            None
        }
    }
}

/// The complement `(xyz)^n / (m1 m2)`.
pub fn complement_monomial(m1: &Monomial, m2: &Monomial, n: u32) -> Result<LaurentMonomial> {
    for m in [m1, m2] {
        if m.degree() != n {
            return Err(Error::DegreeMismatch(m.degree(), n));
        }
    }
    let n = n as i64;
    let [a1, b1, c1] = m1.0.map(i64::from);
    let [a2, b2, c2] = m2.0.map(i64::from);
    Ok(LaurentMonomial([n - a1 - a2, n - b1 - b2, n - c1 - c2]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VariableFamily {
    /// `x, y, z`
    Primal,
    /// `u, v, w`
    Dual,
}

impl VariableFamily {
    pub fn names(&self) -> [&'static str; 3] {
        match self {
            VariableFamily::Primal => ["x", "y", "z"],
            VariableFamily::Dual => ["u", "v", "w"],
        }
    }

    pub fn other(&self) -> VariableFamily {
        match self {
            VariableFamily::Primal => VariableFamily::Dual,
            VariableFamily::Dual => VariableFamily::Primal,
        }
    }
}

impl fmt::Display for VariableFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VariableFamily::Primal => write!(f, "primal (x,y,z)"),
            VariableFamily::Dual => write!(f, "dual (u,v,w)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TernaryForm {
    family: VariableFamily,
    degree: u32,
    coeffs: BTreeMap<Monomial, BigRational>,
}

impl TernaryForm {
    pub fn zero(family: VariableFamily, degree: u32) -> Self {
        TernaryForm {
            family,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn monomial(family: VariableFamily, m: Monomial, c: BigRational) -> Self {
        let mut f = TernaryForm::zero(family, m.degree());
        if !c.is_zero() {
            f.coeffs.insert(m, c);
        }
        f
    }

    /// Builds a form from terms, summing repeated monomials.
    pub fn from_terms<I>(family: VariableFamily, degree: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut f = TernaryForm::zero(family, degree);
        for (m, c) in terms {
            if m.degree() != degree {
                return Err(Error::NotHomogeneous(degree, m.degree()));
            }
            f.add_term(m, c);
        }
        Ok(f)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigRational) {
        debug_assert_eq!(m.degree(), self.degree);
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(m).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&m);
        }
    }

    pub fn family(&self) -> VariableFamily {
        self.family
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.coeffs.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.coeffs.iter().rev()
    }

    /// Largest monomial with a nonzero coefficient.
    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    fn check_compatible(&self, other: &TernaryForm) -> Result<()> {
        if self.family != other.family {
            return Err(Error::FamilyMismatch(self.family, other.family));
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        Ok(())
    }

    pub fn add(&self, other: &TernaryForm) -> Result<TernaryForm> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.coeffs {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TernaryForm) -> Result<TernaryForm> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational) -> TernaryForm {
        if c.is_zero() {
            return TernaryForm::zero(self.family, self.degree);
        }
        TernaryForm {
            family: self.family,
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn neg(&self) -> TernaryForm {
        self.scale(&-BigRational::one())
    }

    /// Product of two forms of the same family.
    pub fn mul(&self, other: &TernaryForm) -> Result<TernaryForm> {
        if self.family != other.family {
            return Err(Error::FamilyMismatch(self.family, other.family));
        }
        let mut out = TernaryForm::zero(self.family, self.degree + other.degree);
        for (ma, ca) in &self.coeffs {
            for (mb, cb) in &other.coeffs {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> TernaryForm {
        let mut acc = TernaryForm::monomial(self.family, Monomial::ONE, BigRational::one());
        for _ in 0..e {
            acc = acc.mul(self).expect("same family");
        }
        acc
    }

    /// Same coefficients, other variable family.
    pub fn with_family(&self, family: VariableFamily) -> TernaryForm {
        TernaryForm {
            family,
            ..self.clone()
        }
    }

    /// Linear change of variables `q(x) ↦ q(g·x)`.
    ///
    /// Row `r` of `g` gives the linear form that replaces variable `r`.
    pub fn substitute_linear(&self, g: &[[BigRational; 3]; 3]) -> TernaryForm {
        let images: Vec<TernaryForm> = g
            .iter()
            .map(|row| {
                TernaryForm::from_terms(
                    self.family,
                    1,
                    (0..3).map(|c| (Monomial::ONE.mul_var(c), row[c].clone())),
                )
                .expect("linear")
            })
            .collect();
        let mut out = TernaryForm::zero(self.family, self.degree);
        for (m, c) in &self.coeffs {
            let [i, j, k] = m.0;
            let t = images[0]
                .pow(i)
                .mul(&images[1].pow(j))
                .and_then(|t| t.mul(&images[2].pow(k)))
                .expect("same family");
            out = out.add(&t.scale(c)).expect("same degree");
        }
        out
    }

    /// Coefficients in the order of [`Monomial::all_of_degree`].
    pub fn coefficient_vector(&self) -> Vec<BigRational> {
        Monomial::all_of_degree(self.degree)
            .iter()
            .map(|m| self.coeff(m))
            .collect()
    }

    pub fn from_coefficient_vector(
        family: VariableFamily,
        degree: u32,
        coeffs: &[BigRational],
    ) -> Result<TernaryForm> {
        let basis = Monomial::all_of_degree(degree);
        if basis.len() != coeffs.len() {
            return Err(Error::InvalidInput(format!(
                "expected {} coefficients for degree {degree}, got {}",
                basis.len(),
                coeffs.len()
            )));
        }
        TernaryForm::from_terms(family, degree, basis.into_iter().zip(coeffs.iter().cloned()))
    }

    /// Parses `text` as a homogeneous form in the given family.
    ///
    /// The literal `0` yields the zero form of degree 0; use
    /// [`TernaryForm::with_degree`] to retype it.
    pub fn parse(text: &str, family: VariableFamily) -> Result<TernaryForm> {
        let raw = parse::parse_raw(text, &["x", "y", "z", "u", "v", "w"])?;
        let offset = match family {
            VariableFamily::Primal => 0,
            VariableFamily::Dual => 3,
        };
        let foreign = family.other().names();
        let mut degree = None;
        let mut terms = Vec::with_capacity(raw.len());
        for (exps, c) in raw {
            for (k, name) in foreign.iter().enumerate() {
                if exps[3 - offset + k] != 0 {
                    return Err(Error::WrongFamily {
                        expected: family,
                        found: name.to_string(),
                    });
                }
            }
            let m = Monomial::new(exps[offset], exps[offset + 1], exps[offset + 2]);
            match degree {
                None => degree = Some(m.degree()),
                Some(d) if d != m.degree() => return Err(Error::NotHomogeneous(d, m.degree())),
                _ => {}
            }
            terms.push((m, c));
        }
        TernaryForm::from_terms(family, degree.unwrap_or(0), terms)
    }

    /// Parses `text`, inferring the family from the variables used.
    ///
    /// Forms with no variables are taken as primal.
    pub fn parse_any(text: &str) -> Result<TernaryForm> {
        match TernaryForm::parse(text, VariableFamily::Primal) {
            Err(Error::WrongFamily { .. }) => TernaryForm::parse(text, VariableFamily::Dual),
            other => other,
        }
    }

    /// Re-declares the degree of a zero form; nonzero forms must already match.
    pub fn with_degree(self, degree: u32) -> Result<TernaryForm> {
        if self.is_zero() {
            Ok(TernaryForm::zero(self.family, degree))
        } else if self.degree == degree {
            Ok(self)
        } else {
            Err(Error::DegreeMismatch(self.degree, degree))
        }
    }
}

pub(crate) fn monomial_string(names: &[&str], exps: &[u32]) -> String {
    names
        .iter()
        .zip(exps)
        .filter(|(_, &e)| e > 0)
        .map(|(n, &e)| if e == 1 { n.to_string() } else { format!("{n}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

/// Joins `(coefficient, monomial-string)` pairs as `a*m1 + b*m2 - ...`.
pub(crate) fn join_terms<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (&'a BigRational, String)>,
{
    let mut out = String::new();
    for (idx, (c, mono)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&rational_to_string(&abs));
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&rational_to_string(&abs));
            out.push('*');
            out.push_str(&mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for TernaryForm {
    /// Descending graded-lex, e.g. `48*u^4 + 48*v^4 + 48*w^4`; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.family.names();
        let s = join_terms(
            self.terms()
                .map(|(m, c)| (c, monomial_string(&names, &m.exponents()))),
        );
        f.write_str(&s)
    }
}

/// Canonical text for a form; inverse of [`TernaryForm::parse`].
pub fn print_form(f: &TernaryForm) -> String {
    f.to_string()
}

/// Shorthand for integer rationals.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    use VariableFamily::*;

    fn p(s: &str) -> TernaryForm {
        TernaryForm::parse(s, Primal).unwrap()
    }

    #[test]
    fn add_cancels_to_zero_of_same_degree() {
        let z = p("x^4").add(&p("-x^4")).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.degree(), 4);
        assert_eq!(p("x^4+y^4").add(&p("y^4+z^4")).unwrap(), p("x^4+2y^4+z^4"));
    }

    #[test]
    fn add_rejects_mismatch() {
        assert!(matches!(
            p("x^4").add(&p("x^3")),
            Err(Error::DegreeMismatch(4, 3))
        ));
        let d = TernaryForm::parse("u^4", Dual).unwrap();
        assert!(matches!(p("x^4").add(&d), Err(Error::FamilyMismatch(..))));
    }

    #[test]
    fn scaling() {
        assert!(p("x^4+y^4").scale(&int(0)).is_zero());
        assert_eq!(p("3x^4").scale(&int(2)), p("6x^4"));
        let f = p("x^4 - 2/3*y^2z^2");
        assert_eq!(f.scale(&int(-1)).scale(&int(-1)), f);
    }

    #[test]
    fn complements() {
        let c = |a: Monomial, b: Monomial, n| complement_monomial(&a, &b, n).unwrap().0;
        assert_eq!(c(Monomial::new(4, 0, 0), Monomial::new(0, 4, 0), 4), [0, 0, 4]);
        assert_eq!(c(Monomial::new(4, 0, 0), Monomial::new(4, 0, 0), 4), [-4, 4, 4]);
        assert_eq!(c(Monomial::new(2, 1, 0), Monomial::new(1, 0, 2), 3), [0, 2, 1]);
        assert!(complement_monomial(&Monomial::new(1, 0, 0), &Monomial::new(2, 0, 0), 2).is_err());
    }

    #[test]
    fn parse_and_print() {
        let fermat = p("x^4+y^4+z^4");
        assert_eq!(fermat.len(), 3);
        assert_eq!(print_form(&fermat), "x^4 + y^4 + z^4");
        let d = TernaryForm::parse("u^3*(v+w)+v^3*(u+w)+w^3*(u+v)", Dual).unwrap();
        assert_eq!(
            d.to_string(),
            "u^3*v + u^3*w + u*v^3 + u*w^3 + v^3*w + v*w^3"
        );
        assert_eq!(TernaryForm::zero(Primal, 4).to_string(), "0");
        assert_eq!(p("-x^2 + 3/2*y*z").to_string(), "-x^2 + 3/2*y*z");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            TernaryForm::parse("x^4+x^3", Primal),
            Err(Error::NotHomogeneous(4, 3)) | Err(Error::NotHomogeneous(3, 4))
        ));
        assert!(matches!(
            TernaryForm::parse("x^4+u^4", Primal),
            Err(Error::WrongFamily { .. })
        ));
        assert_eq!(TernaryForm::parse_any("u^2").unwrap().family(), Dual);
    }

    #[test]
    fn monomial_indexing_matches_order() {
        for n in 0..7 {
            for (i, m) in Monomial::all_of_degree(n).iter().enumerate() {
                assert_eq!(m.index_in_degree(), i);
            }
        }
        let b = Monomial::all_of_degree(2);
        assert_eq!(b[0], Monomial::new(2, 0, 0));
        assert_eq!(b[5], Monomial::new(0, 0, 2));
    }

    #[test]
    fn substitution_by_permutation() {
        let zero = int(0);
        let one = int(1);
        let g = [
            [zero.clone(), one.clone(), zero.clone()],
            [one.clone(), zero.clone(), zero.clone()],
            [zero.clone(), zero, one],
        ];
        assert_eq!(p("x^3*y + 2z^4").substitute_linear(&g), p("y^3*x + 2z^4"));
    }
}
