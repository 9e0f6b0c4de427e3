//! The generator sets of the Fermat fiber ideal and the data printed alongside them.

use crate::forms::int;
use crate::groebner::{Exponents, FiberVariable, MonomialOrder, OrderedPoly};

fn p(s: &str) -> OrderedPoly {
    OrderedPoly::parse(s, MonomialOrder::fiber()).expect("built-in polynomial parses")
}

fn monomials(items: &[&str]) -> Vec<Exponents> {
    items
        .iter()
        .map(|s| p(s).leading_monomial().expect("monomial"))
        .collect()
}

/// The fourteen quadrics cutting out the Fermat fiber, in display order.
pub fn g0() -> Vec<OrderedPoly> {
    [
        "s3^2 - s2^2",
        "s3^2 - s1^2",
        "s1*t2",
        "s2*t1",
        "s3*t1",
        "s1*t3",
        "s2*t3",
        "s3*t2",
        "12*r*s1 + 2*s2*s3 + t1^2",
        "4*s1*t1 - t2*t3",
        "12*r*s2 + 2*s1*s3 + t2^2",
        "4*s2*t2 - t1*t3",
        "12*r*s3 + 2*s1*s2 + t3^2",
        "4*s3*t3 - t1*t2",
    ]
    .iter()
    .map(|s| p(s))
    .collect()
}

/// The four cubics completing [`g0`] to a Gröbner basis.
pub fn g1() -> Vec<OrderedPoly> {
    ["6*r*s2*s1 + s3^3", "6*r*s3*s1 + s3^2*s2", "6*r*s3*s2 + s3^2*s1", "s3^2*t3"]
        .iter()
        .map(|s| p(s))
        .collect()
}

/// Each member of [`g1`] as an explicit combination of [`g0`].
///
/// The first uses `A_1 = σ3² − σ2²`; with `A_2` in its place the combination is
/// off by `σ3(σ2² − σ1²)`.
pub fn g1_combinations() -> Vec<OrderedPoly> {
    let g = g0();
    let (a1, s1, s2, t3) = (&g[0], &g[8], &g[10], &g[13]);
    let (s2t1, s3t1, s3t2) = (&g[3], &g[4], &g[7]);
    let v = |x| OrderedPoly::var(MonomialOrder::fiber(), x);
    use FiberVariable::*;
    let half = int(1) / int(2);
    vec![
        v(Sigma2)
            .mul(s1)
            .add(&v(Sigma3).mul(a1).scale(&int(2)))
            .sub(&v(Tau1).mul(s2t1))
            .scale(&half),
        v(Sigma3).mul(s1).sub(&v(Tau1).mul(s3t1)).scale(&half),
        v(Sigma3).mul(s2).sub(&v(Tau2).mul(s3t2)).scale(&half),
        v(Sigma3).mul(t3).add(&v(Tau2).mul(s3t1)).scale(&(int(1) / int(4))),
    ]
}

/// `G_0 ∪ G_1`.
pub fn appendix_basis() -> Vec<OrderedPoly> {
    let mut g = g0();
    g.extend(g1());
    g
}

/// Initial ideal generators exactly as printed.
///
/// Two entries read `σ3²τ2, σ3²τ1` where the leading monomials of the second
/// and third members of [`g1`] are `σ3²σ2, σ3²σ1`.
pub fn printed_initial_ideal() -> Vec<Exponents> {
    monomials(&[
        "s3^3", "s3^2*t2", "s3^2*t1", "s3^2*t3", "s2^2", "s1^2", "s3*t1", "s2*t3", "s1*t2", "s3*t2", "s2*t1",
        "s1*t3", "t1^2", "t2^2", "t3^2", "t1*t2", "t1*t3", "t2*t3",
    ])
}

/// [`printed_initial_ideal`] with the two entries replaced by the leading
/// monomials of their generators.
pub fn initial_ideal() -> Vec<Exponents> {
    monomials(&[
        "s3^3", "s3^2*s2", "s3^2*s1", "s3^2*t3", "s2^2", "s1^2", "s3*t1", "s2*t3", "s1*t2", "s3*t2", "s2*t1",
        "s1*t3", "t1^2", "t2^2", "t3^2", "t1*t2", "t1*t3", "t2*t3",
    ])
}

/// The fifteen monomials outside the initial ideal once `ρ = 1`.
pub fn standard_monomials() -> Vec<Exponents> {
    let mut m = vec![[0; 7]];
    m.extend(monomials(&[
        "s1", "s2", "s3", "t1", "t2", "t3", "s3^2", "s2*s3", "s1*s3", "s1*s2", "s3*t3", "s2*t2", "s1*t1",
        "s1*s2*s3",
    ]));
    m
}

/// Support of the Fermat fiber: the Fermat point, then the four sign points.
pub fn support_points() -> [[i64; 7]; 5] {
    [
        [1, 0, 0, 0, 0, 0, 0],
        [1, -6, -6, -6, 0, 0, 0],
        [1, -6, 6, 6, 0, 0, 0],
        [1, 6, -6, 6, 0, 0, 0],
        [1, 6, 6, -6, 0, 0, 0],
    ]
}
