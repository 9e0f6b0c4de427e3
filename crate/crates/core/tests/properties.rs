use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use ternary_core::apolarity::*;
use ternary_core::forms::int;
use ternary_core::jacobian::{differential_check, rho, rn_matrix};
use ternary_core::lie::{apply_derivation, check_lie_identity, sl3_basis, Derivation};
use ternary_core::{Monomial, TernaryForm, VariableFamily};

fn form_of(n: u32, coeffs: &[i64], den: i64) -> TernaryForm {
    let basis = Monomial::all_of_degree(n);
    TernaryForm::from_terms(
        VariableFamily::Primal,
        n,
        basis
            .into_iter()
            .zip(coeffs.iter())
            .map(|(m, &c)| (m, BigRational::new(c.into(), den.into()))),
    )
    .unwrap()
}

fn form(n: u32) -> impl Strategy<Value = TernaryForm> {
    let len = Monomial::all_of_degree(n).len();
    prop::collection::vec(-4i64..=4, len).prop_map(move |c| form_of(n, &c, 1))
}

fn rational_form() -> impl Strategy<Value = TernaryForm> {
    (0u32..=6).prop_flat_map(|n| {
        let len = Monomial::all_of_degree(n).len();
        (prop::collection::vec(-9i64..=9, len), 1i64..=5).prop_map(move |(c, d)| form_of(n, &c, d))
    })
}

fn sparse_form(n: u32) -> impl Strategy<Value = TernaryForm> {
    let len = Monomial::all_of_degree(n).len();
    prop::collection::vec((0..len, -3i64..=3), 1..5).prop_map(move |terms| {
        let mut c = vec![0; len];
        for (i, v) in terms {
            c[i] += v;
        }
        form_of(n, &c, 1)
    })
}

/// Products of elementary shears; determinant 1.
fn sl3_element() -> impl Strategy<Value = [[BigRational; 3]; 3]> {
    prop::collection::vec((0usize..3, 0usize..3, -2i64..=2), 1..4).prop_map(|ops| {
        let mut g: [[i64; 3]; 3] = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
        for (r, c, k) in ops {
            if r == c {
                continue;
            }
            let row = g[c];
            for j in 0..3 {
                g[r][j] += k * row[j];
            }
        }
        std::array::from_fn(|r| std::array::from_fn(|c| int(g[r][c])))
    })
}

fn sign(p: &[usize; 3]) -> i64 {
    let mut s = 1;
    for i in 0..3 {
        for j in i + 1..3 {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn round_trip(f in rational_form()) {
        let text = f.to_string();
        let back = TernaryForm::parse(&text, VariableFamily::Primal).unwrap().with_degree(f.degree()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn add_and_scale_stay_homogeneous(a in form(3), b in form(3), k in -5i64..=5) {
        let s = a.add(&b).unwrap();
        prop_assert_eq!(s.degree(), 3);
        prop_assert!(s.terms().all(|(m, c)| m.degree() == 3 && !c.is_zero()));
        prop_assert!(a.scale(&int(k)).terms().all(|(m, _)| m.degree() == 3));
    }

    #[test]
    fn jn_parity(n in 1u32..=6, seed in any::<u64>()) {
        let len = Monomial::all_of_degree(n).len();
        let c: Vec<i64> = (0..2 * len).map(|i| ((seed >> (i % 60)) as i64 % 7) - 3).collect();
        let (a, b) = (form_of(n, &c[..len], 1), form_of(n, &c[len..], 1));
        let ab = jn_combinatorial(&a, &b).unwrap();
        let ba = jn_combinatorial(&b, &a).unwrap();
        let s = if n % 2 == 0 { int(1) } else { int(-1) };
        prop_assert_eq!(ba, ab.scale(&s));
    }

    #[test]
    fn support_of_t(n in 1u32..=5, i in 0usize..21, j in 0usize..21, k in 0usize..21) {
        let basis = Monomial::all_of_degree(n);
        let (a, b, c) = (basis[i % basis.len()], basis[j % basis.len()], basis[k % basis.len()]);
        let one = |m: Monomial| TernaryForm::monomial(VariableFamily::Primal, m, int(1));
        let t = trilinear(&one(a), &one(b), &one(c)).unwrap();
        if !t.is_zero() {
            prop_assert_eq!(a.mul(&b).mul(&c), Monomial::new(n, n, n));
        }
    }

    #[test]
    fn leibniz(a in sparse_form(2), b in sparse_form(3), r in 0usize..3, c in 0usize..3) {
        let g = Derivation::elementary(r, c);
        let lhs = apply_derivation(&g, &a.mul(&b).unwrap());
        let rhs = apply_derivation(&g, &a).mul(&b).unwrap().add(&a.mul(&apply_derivation(&g, &b)).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn action_is_linear(a in form(3), b in form(3), i in 0usize..8, j in 0usize..8) {
        let basis = sl3_basis();
        let (g, h) = (&basis[i], &basis[j]);
        prop_assert_eq!(
            apply_derivation(&g.add(h), &a),
            apply_derivation(g, &a).add(&apply_derivation(h, &a)).unwrap()
        );
        prop_assert_eq!(
            apply_derivation(g, &a.add(&b).unwrap()),
            apply_derivation(g, &a).add(&apply_derivation(g, &b)).unwrap()
        );
    }

    #[test]
    fn lie_identity(n in prop::sample::select(vec![2u32, 4, 6]), seed in any::<u64>(), i in 0usize..8) {
        let len = Monomial::all_of_degree(n).len();
        let c: Vec<i64> = (0..len).map(|k| ((seed.rotate_left(k as u32 * 7)) % 9) as i64 - 4).collect();
        let q = form_of(n, &c, 1);
        prop_assert!(check_lie_identity(&q, &sl3_basis()[i]).unwrap().is_zero());
    }

    #[test]
    fn a4_is_sl3_invariant(q in form(4), g in sl3_element()) {
        prop_assert_eq!(invariant_a(&q.substitute_linear(&g)).unwrap(), invariant_a(&q).unwrap());
    }

    #[test]
    fn rn_is_symmetric(q in form(4)) {
        prop_assert!(rn_matrix(&q).unwrap().is_symmetric());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn t_sign_symmetry(n in 2u32..=6, seed in any::<u64>()) {
        let len = Monomial::all_of_degree(n).len();
        let c: Vec<i64> = (0..3 * len).map(|i| ((seed.rotate_left(i as u32)) % 7) as i64 - 3).collect();
        let q = [form_of(n, &c[..len], 1), form_of(n, &c[len..2 * len], 1), form_of(n, &c[2 * len..], 1)];
        let base = trilinear(&q[0], &q[1], &q[2]).unwrap();
        for p in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            let s = sign(&p).pow(n);
            prop_assert_eq!(trilinear(&q[p[0]], &q[p[1]], &q[p[2]]).unwrap(), &base * int(s));
        }
    }

    #[test]
    fn rho4_is_sl3_invariant(q in form(4), g in sl3_element()) {
        prop_assert_eq!(rho(&q.substitute_linear(&g)).unwrap(), rho(&q).unwrap());
    }

    #[test]
    fn rho4_is_integral(q in form(4)) {
        prop_assert!(rho(&q).unwrap().is_integer());
    }

    #[test]
    fn differential_matches_matrix(q in form(4), d in form(4)) {
        prop_assert!(differential_check(&q, &d).is_ok());
    }
}

fn coco_or_zero(k: u32, m1: Option<Monomial>, m2: Option<Monomial>, n: u32) -> BigRational {
    match (m1, m2) {
        (Some(a), Some(b)) if k > 0 => BigRational::from_integer(coco(&a, &b, n).unwrap() * k),
        _ => BigRational::zero(),
    }
}

#[test]
fn coco_recurrences_exhaustive() {
    for n in 1..=5u32 {
        let basis = Monomial::all_of_degree(n);
        for m1 in &basis {
            for m2 in &basis {
                let [a2, b2, c2] = m2.exponents();
                let lhs = BigRational::from_integer(coco(m1, m2, n).unwrap());
                // (divisor of m1, first partner var, second partner var)
                for (v, p, q, kp, kq) in [(0, 1, 2, b2, c2), (1, 2, 0, c2, a2), (2, 0, 1, a2, b2)] {
                    let Some(r) = m1.div_var(v) else { continue };
                    let rhs = coco_or_zero(kp, Some(r), m2.div_var(p), n - 1)
                        - coco_or_zero(kq, Some(r), m2.div_var(q), n - 1);
                    assert_eq!(lhs, rhs, "{m1:?} {m2:?} var {v}");
                }
            }
        }
    }
}

#[test]
fn coco_rescaling_exhaustive() {
    for n in 0..=5u32 {
        let basis = Monomial::all_of_degree(n);
        for m1 in &basis {
            for m2 in &basis {
                let comp = ternary_core::forms::complement_monomial(m1, m2, n).unwrap();
                let Some(m3) = comp.as_monomial() else {
                    assert!(coco(m1, m2, n).unwrap().is_zero());
                    continue;
                };
                let lhs = m3.factorial_product() * coco(m1, m2, n).unwrap();
                let mut rhs = m1.factorial_product() * coco(&m3, m2, n).unwrap();
                if n % 2 == 1 {
                    rhs = -rhs;
                }
                assert_eq!(lhs, rhs, "{m1:?} {m2:?}");
            }
        }
    }
}
