//! `gl_3` derivations acting on ternary forms.

use std::fmt;

use num_rational::BigRational;

use crate::apolarity::{harmonic, polar_pair};
use crate::error::{Error, Result};
use crate::forms::{Monomial, TernaryForm, VariableFamily};
use crate::linalg::{self, Matrix};

/// Entry `(r, c)` weights the operator `(variable r)·∂/∂(variable c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Derivation(pub [[i64; 3]; 3]);

impl Derivation {
    /// The operator `var_r · ∂/∂var_c`.
    pub fn elementary(r: usize, c: usize) -> Self {
        let mut m = [[0; 3]; 3];
        m[r][c] = 1;
        Derivation(m)
    }

    pub fn trace(&self) -> i64 {
        (0..3).map(|i| self.0[i][i]).sum()
    }

    pub fn is_traceless(&self) -> bool {
        self.trace() == 0
    }

    pub fn add(&self, other: &Derivation) -> Derivation {
        let mut m = self.0;
        for (r, row) in m.iter_mut().enumerate() {
            for (c, x) in row.iter_mut().enumerate() {
                *x += other.0[r][c];
            }
        }
        Derivation(m)
    }

    pub fn scale(&self, k: i64) -> Derivation {
        Derivation(self.0.map(|row| row.map(|x| x * k)))
    }
}

impl std::str::FromStr for Derivation {
    type Err = Error;

    /// Inverse of `Display`: integer combinations of `var*dvar`, e.g. `x*dx - y*dy`.
    fn from_str(s: &str) -> Result<Self> {
        let raw = crate::forms::parse::parse_raw(s, &["x", "y", "z", "dx", "dy", "dz"])?;
        let mut m = [[0i64; 3]; 3];
        for (e, c) in raw {
            let r = (0..3).find(|&i| e[i] == 1);
            let d = (3..6).find(|&i| e[i] == 1);
            let (Some(r), Some(d)) = (r, d) else {
                return Err(Error::InvalidInput(format!("`{s}` is not a combination of var*dvar")));
            };
            if e.iter().sum::<u32>() != 2 || !c.is_integer() {
                return Err(Error::InvalidInput(format!("`{s}` is not an integral combination of var*dvar")));
            }
            m[r][d - 3] = i64::try_from(c.to_integer())
                .map_err(|_| Error::InvalidInput("coefficient out of range".into()))?;
        }
        Ok(Derivation(m))
    }
}

impl fmt::Display for Derivation {
    /// E.g. `x*dx - y*dy`, `2*y*dz`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["x", "y", "z"];
        let mut out = String::new();
        for r in 0..3 {
            for c in 0..3 {
                let k = self.0[r][c];
                if k == 0 {
                    continue;
                }
                match (out.is_empty(), k < 0) {
                    (true, true) => out.push('-'),
                    (true, false) => {}
                    (false, true) => out.push_str(" - "),
                    (false, false) => out.push_str(" + "),
                }
                if k.abs() != 1 {
                    out.push_str(&format!("{}*", k.abs()));
                }
                out.push_str(&format!("{}*d{}", names[r], names[c]));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// The eight traceless derivations, in the fixed order
/// `x∂x−y∂y, y∂y−z∂z, y∂x, z∂x, x∂y, z∂y, x∂z, y∂z`.
pub fn sl3_basis() -> [Derivation; 8] {
    let e = Derivation::elementary;
    [
        e(0, 0).add(&e(1, 1).scale(-1)),
        e(1, 1).add(&e(2, 2).scale(-1)),
        e(1, 0),
        e(2, 0),
        e(0, 1),
        e(2, 1),
        e(0, 2),
        e(1, 2),
    ]
}

/// `g·q`, the derivation applied to a form.
pub fn apply_derivation(g: &Derivation, q: &TernaryForm) -> TernaryForm {
    let mut out = TernaryForm::zero(q.family(), q.degree());
    for (m, coef) in q.terms() {
        for (r, row) in g.0.iter().enumerate() {
            for (c, &k) in row.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let e = m.exponents()[c];
                if let Some(lowered) = m.div_var(c) {
                    let factor = BigRational::from_integer((k * e as i64).into());
                    out.add_term(lowered.mul_var(r), coef * factor);
                }
            }
        }
    }
    out
}

/// `⟨h_n(q), g·q⟩`, which vanishes for every traceless `g`.
pub fn check_lie_identity(q: &TernaryForm, g: &Derivation) -> Result<BigRational> {
    if !g.is_traceless() {
        return Err(Error::NotTraceless(g.trace()));
    }
    polar_pair(&harmonic(q)?, &apply_derivation(g, q))
}

/// Rows `m ↦ ⟨target, g·m⟩` for the eight basis derivations, as linear
/// functionals on primal coefficient vectors (columns in
/// [`Monomial::all_of_degree`] order).
pub fn sl3_linear_constraints(target: &TernaryForm) -> Result<Matrix<BigRational>> {
    if target.family() != VariableFamily::Dual {
        return Err(Error::FamilyMismatch(target.family(), VariableFamily::Dual));
    }
    let basis = Monomial::all_of_degree(target.degree());
    sl3_basis()
        .iter()
        .map(|g| {
            basis
                .iter()
                .map(|m| {
                    let gm = apply_derivation(
                        g,
                        &TernaryForm::monomial(VariableFamily::Primal, *m, BigRational::from_integer(1.into())),
                    );
                    polar_pair(target, &gm)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect()
}

/// Basis of the common kernel of the `sl_3` constraints, as primal forms.
pub fn constraint_kernel(target: &TernaryForm) -> Result<Vec<TernaryForm>> {
    let rows = sl3_linear_constraints(target)?;
    let n = target.degree();
    let cols = Monomial::all_of_degree(n).len();
    linalg::kernel(&rows, cols)
        .iter()
        .map(|v| TernaryForm::from_coefficient_vector(VariableFamily::Primal, n, v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::forms::int;

    fn p(s: &str) -> TernaryForm {
        TernaryForm::parse(s, VariableFamily::Primal).unwrap()
    }

    #[test]
    fn derivation_text_round_trip() {
        for g in sl3_basis() {
            assert_eq!(g.to_string().parse::<Derivation>().unwrap(), g);
        }
        let g: Derivation = "2*x*dz - 3 y dy".parse().unwrap();
        assert_eq!(g.0, [[0, 0, 2], [0, -3, 0], [0, 0, 0]]);
        assert!("x^2*dy".parse::<Derivation>().is_err());
        assert!("x".parse::<Derivation>().is_err());
    }

    #[test]
    fn single_derivations() {
        let x_dy = Derivation::elementary(0, 1);
        assert_eq!(apply_derivation(&x_dy, &p("y^4")), p("4x*y^3"));
        assert_eq!(apply_derivation(&sl3_basis()[0], &p("x^4")), p("4x^4"));
    }

    #[test]
    fn basis_is_traceless_and_spans() {
        let b = sl3_basis();
        assert!(b.iter().all(Derivation::is_traceless));
        let rows: Matrix<BigRational> = b
            .iter()
            .map(|g| g.0.iter().flatten().map(|&x| int(x)).collect())
            .collect();
        assert_eq!(linalg::rank(&rows), 8);
    }

    #[test]
    fn identity_rejects_gl3() {
        let id = Derivation::elementary(0, 0);
        assert!(matches!(
            check_lie_identity(&p("x^4"), &id),
            Err(Error::NotTraceless(1))
        ));
    }

    #[test]
    fn fermat_identity() {
        let v = check_lie_identity(&p("x^4+y^4+z^4"), &Derivation::elementary(0, 1)).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn zero_target_gives_zero_functionals() {
        let rows = sl3_linear_constraints(&TernaryForm::zero(VariableFamily::Dual, 4)).unwrap();
        assert_eq!(rows.len(), 8);
        assert!(rows.iter().all(|r| r.iter().all(Zero::is_zero)));
    }

    #[test]
    fn display() {
        assert_eq!(sl3_basis()[0].to_string(), "x*dx - y*dy");
        assert_eq!(sl3_basis()[2].to_string(), "y*dx");
    }
}
