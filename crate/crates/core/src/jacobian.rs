//! The symmetric matrix `R_n`, the constant `κ_n` and the invariant
//! `ρ_n = det(R_n) / κ_n`.
//!
//! Rows and columns are indexed by degree-`n` monomials in descending
//! graded-lex order, see [`Monomial::all_of_degree`].

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::apolarity::{coco, harmonic};
use crate::arith::{factor_small, format_factorization, rational_to_string};
use crate::error::{Error, Result};
use crate::forms::{complement_monomial, Monomial, TernaryForm, VariableFamily};
use crate::linalg::{det_rational, Matrix};

/// Linear coefficient of `h_n(q + t·d)` divided by the polar image of `R_n(q)·d`.
pub const DIFFERENTIAL_CONSTANT: i64 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RnMatrix {
    n: u32,
    monomials: Vec<Monomial>,
    entries: Matrix<BigRational>,
}

impl RnMatrix {
    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn entries(&self) -> &Matrix<BigRational> {
        &self.entries
    }

    pub fn entry(&self, m1: &Monomial, m2: &Monomial) -> BigRational {
        self.entries[m1.index_in_degree()][m2.index_in_degree()].clone()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.entries.len();
        (0..n).all(|i| (i + 1..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn determinant(&self) -> BigRational {
        det_rational(&self.entries)
    }

    /// `R_n(q)·v` for a coefficient vector `v`.
    pub fn apply(&self, v: &[BigRational]) -> Vec<BigRational> {
        let size = self.entries.len();
        (0..size)
            .map(|j| (0..size).map(|i| &self.entries[i][j] * &v[i]).sum())
            .collect()
    }
}

/// `(R_n)_{m1,m2} = t_n(q, m1, m2)`.
pub fn rn_matrix(q: &TernaryForm) -> Result<RnMatrix> {
    if q.family() != VariableFamily::Primal {
        return Err(Error::FamilyMismatch(q.family(), VariableFamily::Primal));
    }
    let n = q.degree();
    if n % 2 == 1 {
        return Err(Error::OddDegree(n));
    }
    let monomials = Monomial::all_of_degree(n);
    let terms: Vec<(Monomial, BigRational)> = q.terms().map(|(m, c)| (*m, c.clone())).collect();
    let entries: Matrix<BigRational> = monomials
        .par_iter()
        .map(|m1| {
            let mut row = vec![BigRational::zero(); monomials.len()];
            for (m, c) in &terms {
                let Some(m2) = complement_monomial(m, m1, n).ok().and_then(|l| l.as_monomial()) else {
                    continue;
                };
                let k = coco(m, m1, n).expect("degrees checked");
                if k.is_zero() {
                    continue;
                }
                row[m2.index_in_degree()] += c * BigRational::from_integer(k * m2.factorial_product());
            }
            row
        })
        .collect();
    let r = RnMatrix {
        n,
        monomials,
        entries,
    };
    assert!(r.is_symmetric(), "R_n must be symmetric for even n");
    Ok(r)
}

/// `κ_n = Π i! j! k!` over all monomials of degree `n`.
pub fn kappa(n: u32) -> BigInt {
    Monomial::all_of_degree(n)
        .iter()
        .map(Monomial::factorial_product)
        .product()
}

/// `ρ_n(q) = det R_n(q) / κ_n`.
pub fn rho(q: &TernaryForm) -> Result<BigRational> {
    let r = rn_matrix(q)?;
    Ok(r.determinant() / BigRational::from_integer(kappa(q.degree())))
}

/// Serialized result of a `ρ_n` evaluation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoEvaluation {
    pub n: u32,
    pub form: String,
    pub rho: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factorization: Option<BTreeMap<String, u32>>,
}

impl RhoEvaluation {
    pub fn evaluate(q: &TernaryForm) -> Result<Self> {
        let value = rho(q)?;
        let factorization = value
            .is_integer()
            .then(|| factor_small(value.numer(), 10_000))
            .flatten()
            .map(|f| f.into_iter().map(|(p, e)| (p.to_string(), e)).collect());
        Ok(RhoEvaluation {
            n: q.degree(),
            form: q.to_string(),
            rho: rational_to_string(&value),
            factorization,
        })
    }

    /// `2^34 * 3^24`-style rendering, when a factorization is available.
    pub fn factored(&self) -> Option<String> {
        let f = self.factorization.as_ref()?;
        let map: BTreeMap<u64, u32> = f.iter().map(|(p, e)| (p.parse().unwrap(), *e)).collect();
        Some(format_factorization(self.rho.starts_with('-'), &map))
    }
}

/// Two computations of the differential of `h_n` at `q` along `direction`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferentialCheck {
    /// Linear coefficient in `t` of `h_n(q + t·direction)`.
    pub linear_coefficient: TernaryForm,
    /// Dual form whose polar pairing with each monomial reproduces `R_n(q)·direction`.
    pub matrix_image: TernaryForm,
}

/// Compares the `t`-expansion of `h_n(q + t·d)` against `R_n(q)·d`.
///
/// Fails unless `linear_coefficient = DIFFERENTIAL_CONSTANT · matrix_image`.
pub fn differential_check(q: &TernaryForm, direction: &TernaryForm) -> Result<DifferentialCheck> {
    if direction.family() != VariableFamily::Primal {
        return Err(Error::FamilyMismatch(direction.family(), VariableFamily::Primal));
    }
    if q.degree() != direction.degree() {
        return Err(Error::DegreeMismatch(q.degree(), direction.degree()));
    }
    let r = rn_matrix(q)?;

    // h(q + t d) is quadratic in t, so the odd part isolates the linear term
    let plus = harmonic(&q.add(direction)?)?;
    let minus = harmonic(&q.sub(direction)?)?;
    let linear_coefficient = plus
        .sub(&minus)?
        .scale(&BigRational::new(BigInt::one(), BigInt::from(2)));

    let image = r.apply(&direction.coefficient_vector());
    let matrix_image = TernaryForm::from_terms(
        VariableFamily::Dual,
        q.degree(),
        r.monomials()
            .iter()
            .zip(image)
            .map(|(m, v)| (*m, v / BigRational::from_integer(m.factorial_product()))),
    )?;

    let expected = matrix_image.scale(&BigRational::from_integer(DIFFERENTIAL_CONSTANT.into()));
    if expected != linear_coefficient {
        return Err(Error::InvalidInput(format!(
            "differential mismatch: t-expansion {linear_coefficient} vs matrix {expected}"
        )));
    }
    Ok(DifferentialCheck {
        linear_coefficient,
        matrix_image,
    })
}
