//! Proportionality systems `h_4(q) ∥ target` on the `sl_3`-reduced family.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::apolarity::{harmonic, jn_combinatorial};
use crate::error::{Error, Result};
use crate::forms::{Monomial, TernaryForm, VariableFamily};
use crate::groebner::{Exponents, FiberVariable, MonomialOrder, OrderedPoly, NVARS};
use crate::lie::sl3_linear_constraints;
use crate::linalg::{clear_denominators, integer_rref, kernel};

/// Free kernel columns of the Fermat target and the coordinate each one carries.
const FERMAT_SLOTS: [([u32; 3], FiberVariable); 7] = [
    ([2, 2, 0], FiberVariable::Sigma3),
    ([2, 1, 1], FiberVariable::Tau1),
    ([2, 0, 2], FiberVariable::Sigma2),
    ([1, 2, 1], FiberVariable::Tau2),
    ([1, 1, 2], FiberVariable::Tau3),
    ([0, 2, 2], FiberVariable::Sigma1),
    ([0, 0, 4], FiberVariable::Rho),
];

#[derive(Clone, Debug)]
pub struct FiberSystem {
    target: TernaryForm,
    basis: Vec<TernaryForm>,
    free_monomials: Vec<Monomial>,
    variables: Vec<FiberVariable>,
    harmonic: Vec<(Monomial, OrderedPoly)>,
    pivot: Monomial,
    equations: Vec<OrderedPoly>,
}

/// Builds the system under the fiber weighted order.
pub fn build_fiber_system(target: &TernaryForm) -> Result<FiberSystem> {
    build_fiber_system_with(target, MonomialOrder::fiber())
}

/// Builds the system with polynomials sorted under `order`.
pub fn build_fiber_system_with(target: &TernaryForm, order: MonomialOrder) -> Result<FiberSystem> {
    if target.family() != VariableFamily::Dual {
        return Err(Error::FamilyMismatch(target.family(), VariableFamily::Dual));
    }
    if target.degree() != 4 {
        return Err(Error::DegreeMismatch(target.degree(), 4));
    }
    let pivot = target.leading_monomial().ok_or(Error::ZeroPolynomial)?;
    let rows = sl3_linear_constraints(target)?;
    let columns = Monomial::all_of_degree(4);
    let (_, pivots) = integer_rref(&clear_denominators(&rows));
    let free_monomials: Vec<Monomial> = (0..columns.len())
        .filter(|c| !pivots.contains(c))
        .map(|c| columns[c])
        .collect();
    if free_monomials.len() > NVARS {
        return Err(Error::InvalidInput(format!(
            "kernel of dimension {} exceeds the seven fiber coordinates",
            free_monomials.len()
        )));
    }
    let basis: Vec<TernaryForm> = kernel(&rows, columns.len())
        .iter()
        .map(|v| TernaryForm::from_coefficient_vector(VariableFamily::Primal, 4, v))
        .collect::<Result<_>>()?;

    let fermat: Option<Vec<FiberVariable>> = free_monomials
        .iter()
        .zip(FERMAT_SLOTS.iter())
        .map(|(m, (e, v))| (m.exponents() == *e).then_some(*v))
        .collect();
    let variables = match fermat {
        Some(v) if v.len() == FERMAT_SLOTS.len() => v,
        _ => FiberVariable::ALL[..basis.len()].to_vec(),
    };

    let mut acc: BTreeMap<Monomial, Vec<(Exponents, BigRational)>> = BTreeMap::new();
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            let j_ij = jn_combinatorial(&basis[i], &basis[j])?;
            let mut e = [0; NVARS];
            e[variables[i].index()] += 1;
            e[variables[j].index()] += 1;
            for (m, c) in j_ij.terms() {
                acc.entry(*m).or_default().push((e, c.clone()));
            }
        }
    }
    let harmonic: Vec<(Monomial, OrderedPoly)> = Monomial::all_of_degree(4)
        .into_iter()
        .map(|m| {
            let terms = acc.remove(&m).unwrap_or_default();
            (m, OrderedPoly::from_terms(order, terms))
        })
        .collect();

    let h_pivot = harmonic
        .iter()
        .find(|(m, _)| *m == pivot)
        .map(|(_, p)| p.clone())
        .expect("pivot is a quartic monomial");
    let t_pivot = target.coeff(&pivot);
    let equations = harmonic
        .iter()
        .filter(|(m, _)| *m != pivot)
        .map(|(m, h)| h.scale(&t_pivot).sub(&h_pivot.scale(&target.coeff(m))))
        .filter(|e| !e.is_zero())
        .collect();

    Ok(FiberSystem {
        target: target.clone(),
        basis,
        free_monomials,
        variables,
        harmonic,
        pivot,
        equations,
    })
}

impl FiberSystem {
    pub fn target(&self) -> &TernaryForm {
        &self.target
    }

    /// Kernel basis of the `sl_3` constraints, one form per coordinate.
    pub fn reduced_coordinates(&self) -> &[TernaryForm] {
        &self.basis
    }

    /// The free column (primal monomial) behind each coordinate.
    pub fn free_monomials(&self) -> &[Monomial] {
        &self.free_monomials
    }

    pub fn variables(&self) -> &[FiberVariable] {
        &self.variables
    }

    /// Symbolic coefficients of `h_4(q)` on the reduced family, by dual monomial.
    pub fn harmonic_coefficients(&self) -> &[(Monomial, OrderedPoly)] {
        &self.harmonic
    }

    pub fn pivot(&self) -> Monomial {
        self.pivot
    }

    pub fn equations(&self) -> &[OrderedPoly] {
        &self.equations
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// The quartic `Σ point[v]·b_v`.
    pub fn quartic_at(&self, point: &[BigRational; NVARS]) -> TernaryForm {
        self.basis
            .iter()
            .zip(&self.variables)
            .fold(TernaryForm::zero(VariableFamily::Primal, 4), |acc, (b, v)| {
                acc.add(&b.scale(&point[v.index()])).expect("same family and degree")
            })
    }

    /// Coordinates of `q` in the reduced family, if it lies there.
    pub fn coordinates_of(&self, q: &TernaryForm) -> Option<[BigRational; NVARS]> {
        let mut point: [BigRational; NVARS] = std::array::from_fn(|_| BigRational::zero());
        for (m, v) in self.free_monomials.iter().zip(&self.variables) {
            point[v.index()] = q.coeff(m);
        }
        (self.quartic_at(&point) == *q).then_some(point)
    }

    /// Whether every equation vanishes at `point`.
    pub fn vanishes_at(&self, point: &[BigRational; NVARS]) -> bool {
        self.equations.iter().all(|e| e.evaluate(point).is_zero())
    }
}

/// Evidence for or against `h_4(q) ∥ target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Certificate {
    /// `h(q) = constant · target`.
    Constant(String),
    /// A nonvanishing `2×2` minor `h_a t_b − h_b t_a`.
    Minor { first: String, second: String, value: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointCheck {
    pub proportional: bool,
    pub certificate: Certificate,
}

impl PointCheck {
    pub fn constant(&self) -> Option<BigRational> {
        match &self.certificate {
            Certificate::Constant(c) => crate::arith::parse_rational(c),
            Certificate::Minor { .. } => None,
        }
    }
}

/// Checks that `h_n(q)` and `target` are proportional.
pub fn verify_point_on_fiber(q: &TernaryForm, target: &TernaryForm) -> Result<PointCheck> {
    if target.family() != VariableFamily::Dual {
        return Err(Error::FamilyMismatch(target.family(), VariableFamily::Dual));
    }
    if q.degree() != target.degree() {
        return Err(Error::DegreeMismatch(q.degree(), target.degree()));
    }
    let h = harmonic(q)?;
    let pivot = target.leading_monomial().ok_or(Error::ZeroPolynomial)?;
    let tp = target.coeff(&pivot);
    let hp = h.coeff(&pivot);
    let name = |m: &Monomial| crate::forms::monomial_string(&VariableFamily::Dual.names(), &m.exponents());
    for m in Monomial::all_of_degree(target.degree()) {
        let minor = h.coeff(&m) * &tp - target.coeff(&m) * &hp;
        if !minor.is_zero() {
            return Ok(PointCheck {
                proportional: false,
                certificate: Certificate::Minor {
                    first: name(&pivot),
                    second: name(&m),
                    value: crate::arith::rational_to_string(&minor),
                },
            });
        }
    }
    Ok(PointCheck {
        proportional: true,
        certificate: Certificate::Constant(crate::arith::rational_to_string(&(hp / tp))),
    })
}

pub(crate) fn rational_point(p: &[i64; NVARS]) -> [BigRational; NVARS] {
    std::array::from_fn(|i| BigRational::from_integer(p[i].into()))
}

