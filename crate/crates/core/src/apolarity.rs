//! Polar pairing, the bilinear map `J_n`, the harmonic contravariant `h_n`,
//! the trilinear form `t_n` and the cubic invariant `A_n`.
//!
//! `J_n` has two constructions. [`jn_combinatorial`] evaluates the signed
//! binomial sum [`coco`] on monomial pairs and is the path everything else
//! uses. [`jn_operator`] substitutes the three 2×2 operator determinants into
//! `q1` and applies the resulting differential operator to `q2`. It is slower
//! and exists to cross-check the combinatorial path.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::binomial;
use crate::error::{Error, Result};
use crate::forms::{complement_monomial, Monomial, TernaryForm, VariableFamily};

fn require(f: &TernaryForm, family: VariableFamily) -> Result<()> {
    if f.family() != family {
        return Err(Error::FamilyMismatch(f.family(), family));
    }
    Ok(())
}

fn require_pair(q1: &TernaryForm, q2: &TernaryForm) -> Result<()> {
    require(q1, VariableFamily::Primal)?;
    require(q2, VariableFamily::Primal)?;
    if q1.degree() != q2.degree() {
        return Err(Error::DegreeMismatch(q1.degree(), q2.degree()));
    }
    Ok(())
}

/// `⟨p, q⟩ = p(∂x, ∂y, ∂z) q` for a dual `p` and primal `q` of equal degree.
pub fn polar_pair(p: &TernaryForm, q: &TernaryForm) -> Result<BigRational> {
    require(p, VariableFamily::Dual)?;
    require(q, VariableFamily::Primal)?;
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch(p.degree(), q.degree()));
    }
    let mut acc = BigRational::zero();
    for (m, c) in p.terms() {
        let d = q.coeff(m);
        if !d.is_zero() {
            acc += c * d * BigRational::from_integer(m.factorial_product());
        }
    }
    Ok(acc)
}

/// The integer `⟨m1, m2⟩` attached to a pair of degree-`n` monomials.
///
/// With `m3 = (xyz)^n / (m1 m2) = x^a3 y^b3 z^c3`, this is
/// `(-1)^(a2+b3+c1) a1! b1! c1! Σ_α (-1)^α C(a2,α) C(b2,c1-α) C(c2,b3-α)`.
pub fn coco(m1: &Monomial, m2: &Monomial, n: u32) -> Result<BigInt> {
    let m3 = complement_monomial(m1, m2, n)?;
    let c1 = i64::from(m1.exponents()[2]);
    let [a2, b2, c2] = m2.exponents().map(i64::from);
    let b3 = m3.0[1];

    let mut sum = BigInt::zero();
    for alpha in 0..=a2.min(c1) {
        let term = binomial(a2, alpha) * binomial(b2, c1 - alpha) * binomial(c2, b3 - alpha);
        if alpha % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if sum.is_zero() {
        return Ok(sum);
    }
    let value = sum * m1.factorial_product();
    Ok(if (a2 + b3 + c1).rem_euclid(2) == 1 {
        -value
    } else {
        value
    })
}

/// `J'_n(m1, m2) = ⟨m1, m2⟩ · u^a3 v^b3 w^c3`, or `None` when it vanishes.
pub(crate) fn jn_monomial(m1: &Monomial, m2: &Monomial, n: u32) -> Option<(Monomial, BigInt)> {
    let m3 = complement_monomial(m1, m2, n).ok()?.as_monomial()?;
    let c = coco(m1, m2, n).ok()?;
    (!c.is_zero()).then_some((m3, c))
}

/// `J_n(q1, q2)` by bilinear extension of [`jn_monomial`].
pub fn jn_combinatorial(q1: &TernaryForm, q2: &TernaryForm) -> Result<TernaryForm> {
    require_pair(q1, q2)?;
    let n = q1.degree();
    let mut out = TernaryForm::zero(VariableFamily::Dual, n);
    for (m1, c1) in q1.terms() {
        for (m2, c2) in q2.terms() {
            if let Some((m3, k)) = jn_monomial(m1, m2, n) {
                out.add_term(m3, c1 * c2 * BigRational::from_integer(k));
            }
        }
    }
    Ok(out)
}

/// Polynomial in `x, y, z, u, v, w` used while applying the operator.
type Mixed = BTreeMap<[u32; 6], BigInt>;

/// The three operator determinants, each a sum of `sign · (dual var) · ∂(primal var)`:
/// `w∂y - v∂z`, `u∂z - w∂x`, `v∂x - u∂y`.
const DETERMINANTS: [[(i8, usize, usize); 2]; 3] = [
    [(1, 5, 1), (-1, 4, 2)],
    [(1, 3, 2), (-1, 5, 0)],
    [(1, 4, 0), (-1, 3, 1)],
];

fn apply_determinant(p: &Mixed, which: usize) -> Mixed {
    let mut out = Mixed::new();
    for (exps, c) in p {
        for &(sign, dual, primal) in &DETERMINANTS[which] {
            let e = exps[primal];
            if e == 0 {
                continue;
            }
            let mut next = *exps;
            next[primal] -= 1;
            next[dual] += 1;
            let term = c * BigInt::from(e);
            let slot = out.entry(next).or_insert_with(BigInt::zero);
            if sign > 0 {
                *slot += term;
            } else {
                *slot -= term;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn jn_operator_monomial(m1: &Monomial, m2: &Monomial) -> Mixed {
    let [a, b, c] = m2.exponents();
    let mut p = Mixed::new();
    p.insert([a, b, c, 0, 0, 0], BigInt::one());
    for (which, &count) in m1.exponents().iter().enumerate() {
        for _ in 0..count {
            p = apply_determinant(&p, which);
        }
    }
    p
}

/// `J_n(q1, q2)` by direct application of the determinant operators.
pub fn jn_operator(q1: &TernaryForm, q2: &TernaryForm) -> Result<TernaryForm> {
    require_pair(q1, q2)?;
    let n = q1.degree();
    let mut out = TernaryForm::zero(VariableFamily::Dual, n);
    for (m1, c1) in q1.terms() {
        for (m2, c2) in q2.terms() {
            for (exps, k) in jn_operator_monomial(m1, m2) {
                debug_assert_eq!(exps[..3], [0, 0, 0]);
                let m = Monomial::new(exps[3], exps[4], exps[5]);
                out.add_term(m, c1 * c2 * BigRational::from_integer(k));
            }
        }
    }
    Ok(out)
}

/// The harmonic form `h_n(q) = J_n(q, q)`; zero for odd `n`.
pub fn harmonic(q: &TernaryForm) -> Result<TernaryForm> {
    require(q, VariableFamily::Primal)?;
    if q.degree() % 2 == 1 {
        return Ok(TernaryForm::zero(VariableFamily::Dual, q.degree()));
    }
    jn_combinatorial(q, q)
}

/// `t_n(q1, q2, q3) = ⟨J_n(q1, q2), q3⟩`.
pub fn trilinear(q1: &TernaryForm, q2: &TernaryForm, q3: &TernaryForm) -> Result<BigRational> {
    require_pair(q1, q2)?;
    require_pair(q1, q3)?;
    polar_pair(&jn_combinatorial(q1, q2)?, q3)
}

/// `A_n(q) = t_n(q, q, q) = ⟨h_n(q), q⟩`.
pub fn invariant_a(q: &TernaryForm) -> Result<BigRational> {
    polar_pair(&harmonic(q)?, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::int;

    fn p(s: &str) -> TernaryForm {
        TernaryForm::parse(s, VariableFamily::Primal).unwrap()
    }

    fn d(s: &str) -> TernaryForm {
        TernaryForm::parse(s, VariableFamily::Dual).unwrap()
    }

    #[test]
    fn polar_pair_examples() {
        assert_eq!(polar_pair(&d("u^2*v"), &p("x^2*y")).unwrap(), int(2));
        assert_eq!(polar_pair(&d("u^4"), &p("x^3*y")).unwrap(), int(0));
        assert_eq!(
            polar_pair(&d("u^4+v^4+w^4"), &p("x^4+y^4+z^4")).unwrap(),
            int(72)
        );
    }

    #[test]
    fn polar_pair_rejects_bad_input() {
        assert!(polar_pair(&p("x^4"), &p("x^4")).is_err());
        assert!(polar_pair(&d("u^3"), &p("x^4")).is_err());
    }

    #[test]
    fn coco_examples() {
        assert_eq!(coco(&Monomial::ONE, &Monomial::ONE, 0).unwrap(), BigInt::one());
        assert_eq!(
            coco(&Monomial::new(2, 0, 0), &Monomial::new(0, 2, 0), 2).unwrap(),
            BigInt::from(2)
        );
        assert!(coco(&Monomial::new(4, 0, 0), &Monomial::new(4, 0, 0), 4)
            .unwrap()
            .is_zero());
        assert!(coco(&Monomial::new(1, 0, 0), &Monomial::new(1, 0, 0), 2).is_err());
    }

    #[test]
    fn jn_small_cases() {
        assert_eq!(jn_operator(&p("x^2"), &p("y^2")).unwrap(), d("2w^2"));
        assert_eq!(jn_combinatorial(&p("x^2"), &p("y^2")).unwrap(), d("2w^2"));
        assert!(jn_combinatorial(&p("x^4"), &p("x^4")).unwrap().is_zero());
        let fermat = p("x^4+y^4+z^4");
        assert_eq!(
            jn_operator(&fermat, &fermat).unwrap(),
            d("48u^4+48v^4+48w^4")
        );
    }

    #[test]
    fn jn_prime_example_coefficient() {
        // x^2y^2 paired with x^2z^2 has complement v^2 w^2
        let m1 = Monomial::new(2, 2, 0);
        let m2 = Monomial::new(2, 0, 2);
        let j = jn_combinatorial(&p("x^2*y^2"), &p("x^2*z^2")).unwrap();
        let k = coco(&m1, &m2, 4).unwrap();
        assert_eq!(j, d("v^2*w^2").scale(&BigRational::from_integer(k)));
        assert_eq!(j, jn_operator(&p("x^2*y^2"), &p("x^2*z^2")).unwrap());
    }

    #[test]
    fn harmonic_odd_is_zero_and_typed() {
        let h = harmonic(&p("x^5 + x^3*y^2 + y*z^4")).unwrap();
        assert!(h.is_zero());
        assert_eq!(h.degree(), 5);
        assert_eq!(h.family(), VariableFamily::Dual);
    }

    #[test]
    fn fermat_invariant() {
        assert_eq!(invariant_a(&p("x^4+y^4+z^4")).unwrap(), int(3456));
    }

    #[test]
    fn trilinear_fermat_monomials() {
        let (x4, y4, z4) = (p("x^4"), p("y^4"), p("z^4"));
        let expected = BigRational::from_integer(
            coco(&Monomial::new(4, 0, 0), &Monomial::new(0, 4, 0), 4).unwrap() * 24,
        );
        assert_eq!(trilinear(&x4, &y4, &z4).unwrap(), expected);
        assert_eq!(trilinear(&x4, &x4, &y4).unwrap(), int(0));
    }
}
