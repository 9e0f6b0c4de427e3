use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use ternary_core::apolarity::{jn_combinatorial, jn_operator};
use ternary_core::fiber::{appendix, fermat_fiber, NamedQuartic};
use ternary_core::groebner::verify_groebner;
use ternary_core::jacobian::RhoEvaluation;
use ternary_core::TernaryForm;

fn jn(c: &mut Criterion) {
    let q = NamedQuartic::Klein.form();
    c.bench_function("jn_combinatorial/klein", |b| b.iter(|| jn_combinatorial(black_box(&q), &q).unwrap()));
    c.bench_function("jn_operator/klein", |b| b.iter(|| jn_operator(black_box(&q), &q).unwrap()));
    let s = TernaryForm::parse_any("x^6 + 2*x^3*y^2*z - 5*y^6 + x*y*z^4 + 7*z^6").unwrap();
    c.bench_function("jn_combinatorial/sextic", |b| b.iter(|| jn_combinatorial(black_box(&s), &s).unwrap()));
}

fn rho(c: &mut Criterion) {
    let q = NamedQuartic::Klein.form();
    c.bench_function("rho_4/klein", |b| b.iter(|| RhoEvaluation::evaluate(black_box(&q)).unwrap()));
}

fn groebner(c: &mut Criterion) {
    let g = appendix::appendix_basis();
    c.bench_function("verify_groebner/fermat_basis", |b| b.iter(|| verify_groebner(black_box(&g))));
}

fn fiber(c: &mut Criterion) {
    let mut group = c.benchmark_group("fiber");
    group.sample_size(10);
    group.bench_function("fermat", |b| b.iter(|| fermat_fiber().unwrap()));
    group.finish();
}

criterion_group!(benches, jn, rho, groebner, fiber);
criterion_main!(benches);
