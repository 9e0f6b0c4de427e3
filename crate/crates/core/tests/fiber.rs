use num_rational::BigRational;
use ternary_core::apolarity::harmonic;
use ternary_core::fiber::*;
use ternary_core::forms::int;
use ternary_core::groebner::{buchberger, reduce, FiberVariable, NVARS};
use ternary_core::{Error, TernaryForm, VariableFamily};

fn primal(s: &str) -> TernaryForm {
    TernaryForm::parse(s, VariableFamily::Primal).unwrap()
}

fn dual(s: &str) -> TernaryForm {
    TernaryForm::parse(s, VariableFamily::Dual).unwrap()
}

fn permutation(p: [usize; 3]) -> [[BigRational; 3]; 3] {
    std::array::from_fn(|r| std::array::from_fn(|c| int(i64::from(p[r] == c))))
}

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

#[test]
fn named_quartics() {
    assert_eq!(named_quartic("Fer").unwrap().1, primal("x^4+y^4+z^4"));
    assert_eq!(named_quartic("Fer'").unwrap().1, dual("u^4+v^4+w^4"));
    assert_eq!(
        named_quartic("C1").unwrap().1,
        primal("(x^4+y^4+z^4) - 6(x^2y^2 - x^2z^2 - y^2z^2)")
    );
    assert!(matches!(named_quartic("nope"), Err(Error::UnknownQuartic(_))));
}

#[test]
fn c1_c2_c3_are_permutations_of_each_other() {
    let cs = [NamedQuartic::C1, NamedQuartic::C2, NamedQuartic::C3].map(NamedQuartic::form);
    for a in &cs {
        for b in &cs {
            assert!(PERMS.iter().any(|p| a.substitute_linear(&permutation(*p)) == *b));
        }
    }
    // z -> i*z multiplies a z^2-even monomial by (-1)^(k/2).
    let c0 = NamedQuartic::C0.form();
    let twisted = TernaryForm::from_terms(
        VariableFamily::Primal,
        4,
        c0.terms().map(|(m, c)| {
            let k = m.exponents()[2];
            (*m, if k % 4 == 2 { -c.clone() } else { c.clone() })
        }),
    )
    .unwrap();
    assert_eq!(twisted, NamedQuartic::C1.form());
}

#[test]
fn point_checks() {
    let fer = NamedQuartic::Fer.form();
    let fer_d = NamedQuartic::FerDual.form();
    let c = verify_point_on_fiber(&fer, &fer_d).unwrap();
    assert!(c.proportional);
    assert_eq!(c.constant(), Some(int(48)));
    let c0 = verify_point_on_fiber(&NamedQuartic::C0.form(), &fer_d).unwrap();
    assert!(c0.proportional);
    assert_eq!(c0.constant(), Some(int(192)));
    let no = verify_point_on_fiber(&fer, &NamedQuartic::D.form()).unwrap();
    assert!(!no.proportional);
    assert!(matches!(no.certificate, Certificate::Minor { .. }));
    assert!(verify_point_on_fiber(&NamedQuartic::Q.form(), &NamedQuartic::D.form()).unwrap().proportional);
}

#[test]
fn fiber_system_over_fermat_matches_displayed_generators() {
    let sys = build_fiber_system(&NamedQuartic::FerDual.form()).unwrap();
    assert_eq!(sys.reduced_coordinates().len(), 7);
    assert_eq!(
        sys.variables(),
        [
            FiberVariable::Sigma3,
            FiberVariable::Tau1,
            FiberVariable::Sigma2,
            FiberVariable::Tau2,
            FiberVariable::Tau3,
            FiberVariable::Sigma1,
            FiberVariable::Rho
        ]
    );
    assert_eq!(sys.equations().len(), 14);
    for e in sys.equations() {
        assert_eq!(e.total_degree(), Some(2));
        assert!(e.is_homogeneous());
    }
    let g0 = appendix::g0();
    let g = appendix::appendix_basis();
    assert!(sys.equations().iter().all(|e| reduce(e, &g).is_zero()));
    let derived = buchberger(sys.equations()).unwrap();
    assert!(g0.iter().all(|p| derived.contains(p)));

    let corr = fermat_correspondence().unwrap();
    assert_eq!(corr.len(), 14);
    let unmatched: Vec<&str> = corr.iter().filter(|c| c.generator.is_none()).map(|c| c.monomial.as_str()).collect();
    assert_eq!(unmatched, ["v^4"]);
    for c in corr.iter().filter_map(|c| c.generator.as_ref()) {
        assert!(c.1 == "4" || c.1 == "-8", "{c:?}");
    }
}

#[test]
fn rejected_targets() {
    let zero = TernaryForm::zero(VariableFamily::Dual, 4);
    assert!(matches!(build_fiber_system(&zero), Err(Error::ZeroPolynomial)));
    assert!(build_fiber_system(&NamedQuartic::Fer.form()).is_err());
    assert!(build_fiber_system(&dual("u^2")).is_err());
}

#[test]
fn fermat_report() {
    let r = fermat_fiber().unwrap();
    assert_eq!(r.degree, Some(15));
    assert_eq!(r.status, FiberStatus::Complete);
    assert_eq!(r.multiplicities(), [11, 1, 1, 1, 1]);
    let names: Vec<_> = r.points.iter().map(|p| p.name.clone().unwrap()).collect();
    assert_eq!(names, ["Fer", "C0", "C3", "C2", "C1"]);
    assert_eq!(r.points[0].jacobian_rank, Some(3));
    assert!(r.points[1..].iter().all(|p| p.reduced && p.jacobian_rank == Some(6)));
    let sum: usize = r.multiplicities().iter().sum();
    assert_eq!(Some(sum), r.degree);

    let json = serde_json::to_value(&r).unwrap();
    assert_eq!(json["degree"], 15);
    assert_eq!(json["status"], "complete");
    assert_eq!(json["points"][1]["coords"][1], "-6");
    for p in json["points"].as_array().unwrap() {
        let q = primal(p["quartic"].as_str().unwrap());
        assert!(verify_point_on_fiber(&q, &NamedQuartic::FerDual.form()).unwrap().proportional);
    }
}

#[test]
fn fermat_multiplicities_from_eigenvalues() {
    let prof = fermat_multiplicities_by_eigenvalues().unwrap();
    assert_eq!(prof.counts(), [(1, 4), (11, 1)]);
    assert_eq!(prof.total(), 15);
    // the separating form vanishes at the Fermat point
    assert_eq!(prof.factor(11).unwrap().coeffs(), &[int(0), int(1)]);
}

#[test]
fn h4_of_sign_points() {
    for q in [NamedQuartic::C0, NamedQuartic::C1, NamedQuartic::C2, NamedQuartic::C3] {
        assert_eq!(harmonic(&q.form()).unwrap(), dual("192u^4 + 192v^4 + 192w^4"));
    }
}

#[test]
fn permuting_the_fermat_fiber() {
    let r = fermat_fiber().unwrap();
    let quartics: Vec<TernaryForm> = r.points.iter().map(|p| primal(&p.quartic)).collect();
    for p in PERMS {
        for q in &quartics {
            assert!(quartics.contains(&q.substitute_linear(&permutation(p))));
        }
    }
}

#[test]
fn equivariance_of_the_system() {
    let q = primal("x^4 + 2y^4 + 3z^4 - x^2y^2 + 5x^2z^2 + y^2z^2");
    let t = harmonic(&q).unwrap();
    for p in PERMS {
        let g = permutation(p);
        let (qp, tp) = (q.substitute_linear(&g), t.substitute_linear(&g));
        let sys = build_fiber_system(&tp).unwrap();
        let pt = sys.coordinates_of(&qp).expect("sl3 constraints hold on the fiber");
        assert!(sys.vanishes_at(&pt));
        assert!(verify_point_on_fiber(&qp, &tp).unwrap().proportional);
    }
}

#[test]
fn d_fiber_without_deadline_is_partial() {
    let r = d_fiber_check(None).unwrap();
    assert_eq!(r.status, FiberStatus::Partial);
    assert_eq!(r.degree, None);
    assert_eq!(r.points[0].name.as_deref(), Some("Q"));
    let sys = build_fiber_system(&NamedQuartic::D.form()).unwrap();
    assert_eq!(sys.reduced_coordinates().len(), 7);
    let pt = sys.coordinates_of(&NamedQuartic::Q.form()).unwrap();
    assert!(sys.vanishes_at(&pt));
    assert_eq!(sys.quartic_at(&pt), NamedQuartic::Q.form());
}

#[test]
fn d_fiber_expired_deadline_is_partial() {
    let past = std::time::Instant::now() - std::time::Duration::from_secs(1);
    let r = d_fiber_check(Some(past)).unwrap();
    assert_eq!(r.status, FiberStatus::Partial);
}

#[test]
fn jacobian_rank_at_support() {
    let g0 = appendix::g0();
    let pts = appendix::support_points();
    let ranks: Vec<usize> = pts
        .iter()
        .map(|p| {
            let pt: [BigRational; NVARS] = std::array::from_fn(|i| int(p[i]));
            jacobian_rank(&g0, &pt)
        })
        .collect();
    assert_eq!(ranks, [3, 6, 6, 6, 6]);
}
