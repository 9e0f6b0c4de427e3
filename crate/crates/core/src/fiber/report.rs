//! Fiber reports over the Fermat quartic and over `D`.

use std::time::Instant;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::appendix;
use super::named::NamedQuartic;
use super::system::{build_fiber_system, build_fiber_system_with, rational_point, verify_point_on_fiber, FiberSystem};
use super::zero_dim::{MultiplicityProfile, Quotient};
use crate::arith::rational_to_string;
use crate::error::{Error, Result};
use crate::forms::int;
use crate::groebner::{
    buchberger, buchberger_until, verify_groebner, FiberVariable, InitialIdeal, MonomialOrder, OrderedPoly, NVARS,
};
use crate::linalg::rank;
use crate::TernaryForm;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberPoint {
    /// Projective coordinates `ρ, σ1, σ2, σ3, τ1, τ2, τ3`, first nonzero entry 1.
    pub coords: Vec<String>,
    /// `None` when the solve did not get far enough to decide.
    pub multiplicity: Option<usize>,
    pub reduced: bool,
    pub quartic: String,
    pub name: Option<String>,
    pub jacobian_rank: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FiberStatus {
    Complete,
    Partial,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub equations: usize,
    pub reduced_coordinates: usize,
    pub standard_monomials: Option<usize>,
    pub groebner_pairs: Option<usize>,
    pub residuals_vanish: bool,
    pub distinct_points: Option<usize>,
    /// `[multiplicity, number of points]`.
    pub multiplicity_profile: Vec<[usize; 2]>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberReport {
    pub target: String,
    pub degree: Option<usize>,
    pub points: Vec<FiberPoint>,
    pub status: FiberStatus,
    pub evidence: Evidence,
}

impl FiberReport {
    pub fn multiplicities(&self) -> Vec<usize> {
        self.points.iter().filter_map(|p| p.multiplicity).collect()
    }
}

fn coords_strings(p: &[BigRational; NVARS]) -> Vec<String> {
    p.iter().map(rational_to_string).collect()
}

/// Scales so the first nonzero coordinate is 1.
fn normalize(p: &[BigRational; NVARS]) -> [BigRational; NVARS] {
    match p.iter().find(|c| !c.is_zero()) {
        None => p.clone(),
        Some(first) => {
            let inv = first.recip();
            std::array::from_fn(|i| &p[i] * &inv)
        }
    }
}

/// Rank of the Jacobian matrix of `gens` at `point`.
pub fn jacobian_rank(gens: &[OrderedPoly], point: &[BigRational; NVARS]) -> usize {
    let m: Vec<Vec<BigRational>> = gens
        .iter()
        .map(|g| {
            FiberVariable::ALL
                .iter()
                .map(|v| g.partial_derivative(*v).evaluate(point))
                .collect()
        })
        .collect();
    rank(&m)
}

fn name_of(q: &TernaryForm) -> Option<String> {
    NamedQuartic::ALL
        .into_iter()
        .find(|n| n.form() == *q)
        .map(|n| n.name().to_string())
}

/// How each equation of the derived Fermat system relates to the displayed generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Correspondence {
    /// Dual monomial whose `h_4` coefficient the equation comes from.
    pub monomial: String,
    pub equation: String,
    /// Index into the displayed generator list and the scale `equation = scale · generator`.
    pub generator: Option<(usize, String)>,
}

/// Matches the derived system over `u⁴ + v⁴ + w⁴` against the displayed generators.
pub fn fermat_correspondence() -> Result<Vec<Correspondence>> {
    let sys = build_fiber_system(&NamedQuartic::FerDual.form())?;
    let g0 = appendix::g0();
    let pivot = sys.pivot();
    let target = sys.target().clone();
    let h_pivot = sys
        .harmonic_coefficients()
        .iter()
        .find(|(m, _)| *m == pivot)
        .map(|(_, h)| h.clone())
        .expect("pivot present");
    let mut out = Vec::new();
    for (m, h) in sys.harmonic_coefficients() {
        if *m == pivot {
            continue;
        }
        let e = h.scale(&target.coeff(&pivot)).sub(&h_pivot.scale(&target.coeff(m)));
        let generator = g0.iter().enumerate().find_map(|(i, g)| {
            let (lg, le) = (g.leading_coefficient()?, e.leading_coefficient()?);
            let s = le / lg;
            (g.scale(&s) == e).then(|| (i, rational_to_string(&s)))
        });
        out.push(Correspondence {
            monomial: crate::forms::monomial_string(&crate::VariableFamily::Dual.names(), &m.exponents()),
            equation: e.to_string(),
            generator,
        });
    }
    Ok(out)
}

/// Multiplicities at the Fermat fiber read off the multiplication map of a
/// linear form on `ℚ[σ, τ]/(G_0, ρ − 1)`.
pub fn fermat_multiplicities_by_eigenvalues() -> Result<MultiplicityProfile> {
    let order = MonomialOrder::fiber();
    let mut gens = appendix::g0();
    gens.push(OrderedPoly::parse("r - 1", order)?);
    let q = Quotient::new(buchberger(&gens)?)?;
    q.multiplicities(&OrderedPoly::parse("s1 + 3*s2 + 9*s3 + 27*t1 + 81*t2 + 243*t3", order)?)
}

/// Replays the degree count of the Fermat fiber and checks its five points.
pub fn fermat_fiber() -> Result<FiberReport> {
    let order = MonomialOrder::fiber();
    let g0 = appendix::g0();
    let g = appendix::appendix_basis();
    let check = verify_groebner(&g);
    if !check.passed() {
        return Err(Error::Verification("Buchberger criterion on G0 ∪ G1".into()));
    }
    let standard = InitialIdeal::from_leading_monomials(order, &g).standard_monomials_affine(FiberVariable::Rho)?;
    let degree = standard.len();

    let system = build_fiber_system(&NamedQuartic::FerDual.form())?;
    if !system.equations().iter().all(|e| crate::groebner::reduce(e, &g).is_zero()) {
        return Err(Error::Verification("derived system lies in the ideal of G0".into()));
    }
    let derived = buchberger(system.equations())?;
    if !g0.iter().all(|p| derived.contains(p)) {
        return Err(Error::Verification("G0 lies in the ideal of the derived system".into()));
    }

    let fer_dual = NamedQuartic::FerDual.form();
    let mut points = Vec::new();
    let mut reduced_count = 0;
    for p in appendix::support_points() {
        let pt = rational_point(&p);
        if !g0.iter().all(|e| e.evaluate(&pt).is_zero()) || !system.vanishes_at(&pt) {
            return Err(Error::Verification(format!("support point {p:?} satisfies G0")));
        }
        let r = jacobian_rank(&g0, &pt);
        let reduced = r == NVARS - 1;
        if reduced {
            reduced_count += 1;
        }
        let q = system.quartic_at(&pt);
        if !verify_point_on_fiber(&q, &fer_dual)?.proportional {
            return Err(Error::Verification(format!("back-substitution at {p:?}")));
        }
        points.push(FiberPoint {
            coords: coords_strings(&pt),
            multiplicity: reduced.then_some(1),
            reduced,
            quartic: q.to_string(),
            name: name_of(&q),
            jacobian_rank: Some(r),
        });
    }
    let rest = degree
        .checked_sub(reduced_count)
        .ok_or_else(|| Error::Verification("degree accounting".into()))?;
    let unreduced: Vec<&mut FiberPoint> = points.iter_mut().filter(|p| !p.reduced).collect();
    if unreduced.len() != 1 {
        return Err(Error::Verification("exactly one non-reduced point".into()));
    }
    for p in unreduced {
        p.multiplicity = Some(rest);
    }

    let mut profile: Vec<[usize; 2]> = Vec::new();
    for m in points.iter().filter_map(|p| p.multiplicity) {
        match profile.iter_mut().find(|e| e[0] == m) {
            Some(e) => e[1] += 1,
            None => profile.push([m, 1]),
        }
    }
    profile.sort();
    Ok(FiberReport {
        target: fer_dual.to_string(),
        degree: Some(degree),
        points,
        status: FiberStatus::Complete,
        evidence: Evidence {
            equations: system.equations().len(),
            reduced_coordinates: system.reduced_coordinates().len(),
            standard_monomials: Some(degree),
            groebner_pairs: Some(check.pairs),
            residuals_vanish: true,
            distinct_points: Some(appendix::support_points().len()),
            multiplicity_profile: profile,
            notes: vec!["multiplicity of the non-reduced point by degree subtraction".into()],
        },
    })
}

/// Linear forms used to dehomogenize and to separate points over `D`.
const CHART: [i64; NVARS] = [1, 2, 3, 5, 7, 11, 13];
const SEPARATORS: [[i64; NVARS]; 2] = [[0, 3, -1, 4, 1, -5, 9], [0, 1, 10, -7, 3, 2, -4]];

fn linear_form(coeffs: &[i64; NVARS], order: MonomialOrder, used: usize) -> OrderedPoly {
    OrderedPoly::from_terms(
        order,
        (0..used).map(|i| {
            let mut e = [0; NVARS];
            e[i] = 1;
            (e, int(coeffs[i]))
        }),
    )
}

fn eval_linear(coeffs: &[i64; NVARS], p: &[BigRational; NVARS]) -> BigRational {
    coeffs.iter().zip(p).map(|(c, x)| int(*c) * x).sum()
}

/// Checks `Q` over `D`, and with a deadline also solves the whole fiber.
///
/// Without a deadline, or when it passes, the report is partial.
pub fn d_fiber_check(deadline: Option<Instant>) -> Result<FiberReport> {
    let d = NamedQuartic::D.form();
    let q = NamedQuartic::Q.form();
    let check = verify_point_on_fiber(&q, &d)?;
    if !check.proportional {
        return Err(Error::Verification("Q lies over D".into()));
    }
    let order = MonomialOrder::Grevlex;
    let system = build_fiber_system_with(&d, order)?;
    let q_point = system
        .coordinates_of(&q)
        .ok_or_else(|| Error::Verification("Q lies in the reduced family over D".into()))?;
    if !system.vanishes_at(&q_point) {
        return Err(Error::Verification("Q satisfies the fiber equations over D".into()));
    }
    let q_point = normalize(&q_point);
    let mut q_entry = FiberPoint {
        coords: coords_strings(&q_point),
        multiplicity: None,
        reduced: false,
        quartic: q.to_string(),
        name: Some("Q".into()),
        jacobian_rank: Some(jacobian_rank(system.equations(), &q_point)),
    };
    let mut evidence = Evidence {
        equations: system.equations().len(),
        reduced_coordinates: system.reduced_coordinates().len(),
        residuals_vanish: true,
        ..Evidence::default()
    };
    let partial = |q_entry: FiberPoint, mut evidence: Evidence, note: &str| {
        evidence.notes.push(note.into());
        FiberReport {
            target: d.to_string(),
            degree: None,
            points: vec![q_entry],
            status: FiberStatus::Partial,
            evidence,
        }
    };
    let Some(deadline) = deadline else {
        return Ok(partial(q_entry, evidence, "full solve not requested"));
    };
    match solve_d(&system, order, deadline) {
        Ok(solved) => {
            let profile = &solved.profiles[0];
            let double = profile
                .factor(2)
                .filter(|f| f.degree() == Some(1))
                .ok_or_else(|| Error::Verification("a single double point over D".into()))?;
            let q_affine: [BigRational; NVARS] = {
                let l = eval_linear(&CHART, &q_point);
                std::array::from_fn(|i| &q_point[i] / &l)
            };
            if !double.evaluate(&eval_linear(&SEPARATORS[0], &q_affine)).is_zero() {
                return Err(Error::Verification("the double point is Q".into()));
            }
            if solved.profiles[1].counts() != profile.counts() {
                return Err(Error::Verification("multiplicities independent of the separating form".into()));
            }
            q_entry.multiplicity = Some(2);
            evidence.standard_monomials = Some(solved.dimension);
            evidence.distinct_points = Some(profile.distinct_points());
            evidence.multiplicity_profile = profile.counts().iter().map(|&(m, k)| [m, k]).collect();
            evidence.notes.push(format!(
                "separating form takes {} distinct values at the reduced points",
                profile.factor(1).and_then(|f| f.degree()).unwrap_or(0)
            ));
            Ok(FiberReport {
                target: d.to_string(),
                degree: Some(profile.total()),
                points: vec![q_entry],
                status: FiberStatus::Complete,
                evidence,
            })
        }
        Err(Error::DeadlineExceeded) => Ok(partial(q_entry, evidence, "deadline reached before the solve finished")),
        Err(e) => Err(e),
    }
}

struct Solved {
    dimension: usize,
    profiles: Vec<MultiplicityProfile>,
}

fn solve_d(system: &FiberSystem, order: MonomialOrder, deadline: Instant) -> Result<Solved> {
    let used = system.variables().len();
    let mut gens: Vec<OrderedPoly> = system.equations().to_vec();
    for v in &FiberVariable::ALL[used..] {
        gens.push(OrderedPoly::var(order, *v));
    }
    gens.push(linear_form(&CHART, order, used).sub(&OrderedPoly::constant(order, BigRational::one())));
    let gb = buchberger_until(&gens, Some(deadline))?;
    let quotient = Quotient::new(gb)?;
    let profiles = SEPARATORS
        .iter()
        .map(|s| quotient.multiplicities(&linear_form(s, order, used)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Solved {
        dimension: quotient.dimension(),
        profiles,
    })
}
