//! Finite-dimensional quotients `ℚ[v]/I` and eigenvalue multiplicities.

use num_rational::BigRational;
use num_traits::Zero;

use super::univariate::UniPoly;
use crate::error::{Error, Result};
use crate::groebner::{mono_mul, Exponents, GroebnerBasis, OrderedPoly};
use crate::linalg::{char_poly, Matrix};

/// `ℚ[v]/I` for an affine zero-dimensional `I`, with the standard monomials as basis.
#[derive(Clone, Debug)]
pub struct Quotient {
    basis: GroebnerBasis,
    standard: Vec<Exponents>,
}

impl Quotient {
    pub fn new(basis: GroebnerBasis) -> Result<Self> {
        let standard = basis.initial_ideal().standard_monomials(None)?;
        Ok(Quotient { basis, standard })
    }

    pub fn dimension(&self) -> usize {
        self.standard.len()
    }

    pub fn standard_monomials(&self) -> &[Exponents] {
        &self.standard
    }

    /// Matrix of multiplication by `f`; column `j` is the normal form of `f·s_j`.
    pub fn multiplication_matrix(&self, f: &OrderedPoly) -> Matrix<BigRational> {
        let n = self.standard.len();
        let mut m = vec![vec![BigRational::zero(); n]; n];
        for (j, s) in self.standard.iter().enumerate() {
            let shifted = OrderedPoly::from_terms(
                self.basis.order(),
                f.terms().iter().map(|(e, c)| (mono_mul(e, s), c.clone())),
            );
            let nf = self.basis.reduce(&shifted);
            for (e, c) in nf.terms() {
                let i = self
                    .standard
                    .iter()
                    .position(|x| x == e)
                    .expect("normal forms are spanned by standard monomials");
                m[i][j] = c.clone();
            }
        }
        m
    }

    pub fn multiplicities(&self, f: &OrderedPoly) -> Result<MultiplicityProfile> {
        if f.order() != self.basis.order() {
            return Err(Error::InvalidInput("linear form uses a different order".into()));
        }
        let chi = UniPoly::new(char_poly(&self.multiplication_matrix(f)));
        let factors = chi.squarefree_decomposition();
        Ok(MultiplicityProfile { char_poly: chi, factors })
    }
}

/// Squarefree factorization of the characteristic polynomial of a multiplication map.
///
/// When the linear form separates the points, `factors[i]` collects the values
/// at the points of multiplicity `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityProfile {
    pub char_poly: UniPoly,
    pub factors: Vec<UniPoly>,
}

impl MultiplicityProfile {
    /// `(multiplicity, number of points)` for every multiplicity that occurs.
    pub fn counts(&self) -> Vec<(usize, usize)> {
        self.factors
            .iter()
            .enumerate()
            .filter_map(|(i, a)| match a.degree() {
                Some(d) if d > 0 => Some((i + 1, d)),
                _ => None,
            })
            .collect()
    }

    pub fn distinct_points(&self) -> usize {
        self.counts().iter().map(|(_, k)| k).sum()
    }

    pub fn total(&self) -> usize {
        self.counts().iter().map(|(m, k)| m * k).sum()
    }

    /// The factor for multiplicity `m`, if any point has it.
    pub fn factor(&self, multiplicity: usize) -> Option<&UniPoly> {
        self.factors
            .get(multiplicity.checked_sub(1)?)
            .filter(|a| a.degree().unwrap_or(0) > 0)
    }
}
