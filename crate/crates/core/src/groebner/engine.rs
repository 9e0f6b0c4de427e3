//! Division, S-polynomials, Buchberger's criterion and completion.

use std::collections::HashSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::order::{
    mono_coprime, mono_div, mono_divides, mono_lcm, mono_string, Exponents, FiberVariable, MonomialOrder, NVARS,
};
use super::poly::OrderedPoly;
use crate::error::{Error, Result};

/// Normal form of `f` modulo `g`: repeatedly cancels the highest reducible
/// term using the first generator (in list order) whose leading monomial divides it.
pub fn reduce(f: &OrderedPoly, g: &[OrderedPoly]) -> OrderedPoly {
    let leads: Vec<Option<(Exponents, num_rational::BigRational)>> = g
        .iter()
        .map(|p| p.leading_term().cloned())
        .collect();
    let mut p = f.clone();
    let mut rem: Vec<(Exponents, num_rational::BigRational)> = Vec::new();
    while let Some((m, c)) = p.leading_term().cloned() {
        let hit = leads.iter().enumerate().find_map(|(i, lt)| match lt {
            Some((lm, lc)) if mono_divides(lm, &m) => Some((i, lm, lc)),
            _ => None,
        });
        match hit {
            Some((i, lm, lc)) => {
                let q = -(&c / lc);
                p = p.add_scaled(&q, &mono_div(&m, lm), &g[i]);
            }
            None => {
                rem.push((m, c.clone()));
                p = p.drop_leading();
            }
        }
    }
    OrderedPoly::from_terms(f.order(), rem)
}

/// `lcm/LT(f) · f − lcm/LT(g) · g`.
pub fn s_polynomial(f: &OrderedPoly, g: &OrderedPoly) -> Result<OrderedPoly> {
    let (Some((mf, cf)), Some((mg, cg))) = (f.leading_term(), g.leading_term()) else {
        return Err(Error::ZeroPolynomial);
    };
    let l = mono_lcm(mf, mg);
    let a = OrderedPoly::zero(f.order()).add_scaled(&cf.recip(), &mono_div(&l, mf), f);
    Ok(a.add_scaled(&-cg.recip(), &mono_div(&l, mg), g))
}

/// Outcome of checking Buchberger's criterion on a generator list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub pairs: usize,
    /// Index pairs whose S-polynomial has a nonzero remainder.
    pub failures: Vec<[usize; 2]>,
    pub initial_ideal: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Reduces every S-polynomial of `g` modulo `g`; no shortcuts.
pub fn verify_groebner(g: &[OrderedPoly]) -> VerificationReport {
    let idx: Vec<[usize; 2]> = (0..g.len())
        .flat_map(|i| (i + 1..g.len()).map(move |j| [i, j]))
        .filter(|[i, j]| !g[*i].is_zero() && !g[*j].is_zero())
        .collect();
    let failures = idx
        .par_iter()
        .filter(|[i, j]| {
            let s = s_polynomial(&g[*i], &g[*j]).expect("nonzero by filter");
            !reduce(&s, g).is_zero()
        })
        .copied()
        .collect();
    VerificationReport {
        pairs: idx.len(),
        failures,
        initial_ideal: g.iter().filter_map(|p| p.leading_monomial()).map(|m| mono_string(&m)).collect(),
    }
}

/// A reduced Gröbner basis, sorted by ascending leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    generators: Vec<OrderedPoly>,
    order: MonomialOrder,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[OrderedPoly] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn reduce(&self, f: &OrderedPoly) -> OrderedPoly {
        reduce(f, &self.generators)
    }

    pub fn contains(&self, f: &OrderedPoly) -> bool {
        self.reduce(f).is_zero()
    }

    pub fn initial_ideal(&self) -> InitialIdeal {
        InitialIdeal::from_leading_monomials(self.order, &self.generators)
    }
}

/// Completes `f` to a reduced Gröbner basis under the order of its members.
pub fn buchberger(f: &[OrderedPoly]) -> Result<GroebnerBasis> {
    buchberger_until(f, None)
}

/// [`buchberger`] giving up with [`Error::DeadlineExceeded`] once `deadline` passes.
pub fn buchberger_until(f: &[OrderedPoly], deadline: Option<Instant>) -> Result<GroebnerBasis> {
    let order = f.first().map(OrderedPoly::order).unwrap_or_else(MonomialOrder::fiber);
    let mut g: Vec<OrderedPoly> = f.iter().filter(|p| !p.is_zero()).map(OrderedPoly::monic).collect();
    let lm = |p: &OrderedPoly| p.leading_monomial().expect("nonzero");
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..g.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    while !pending.is_empty() {
        if deadline.is_some_and(|d| Instant::now() > d) {
            return Err(Error::DeadlineExceeded);
        }
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| {
                let la = mono_lcm(&lm(&g[a.0]), &lm(&g[a.1]));
                let lb = mono_lcm(&lm(&g[b.0]), &lm(&g[b.1]));
                order.compare(&la, &lb).then(a.cmp(b))
            })
            .expect("nonempty");
        pending.remove(&(i, j));
        let (li, lj) = (lm(&g[i]), lm(&g[j]));
        if mono_coprime(&li, &lj) {
            continue;
        }
        let l = mono_lcm(&li, &lj);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && mono_divides(&lm(&g[k]), &l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&g[i], &g[j])?;
        let r = reduce(&s, &g);
        if !r.is_zero() {
            let k = g.len();
            g.push(r.monic());
            for a in 0..k {
                pending.insert((a, k));
            }
        }
    }
    Ok(GroebnerBasis {
        generators: interreduce(g, order),
        order,
    })
}

fn interreduce(g: Vec<OrderedPoly>, order: MonomialOrder) -> Vec<OrderedPoly> {
    let leads: Vec<Exponents> = g.iter().map(|p| p.leading_monomial().expect("nonzero")).collect();
    let mut keep: Vec<OrderedPoly> = Vec::new();
    for (i, p) in g.iter().enumerate() {
        let redundant = leads.iter().enumerate().any(|(k, lk)| {
            k != i && mono_divides(lk, &leads[i]) && (*lk != leads[i] || k < i)
        });
        if !redundant {
            keep.push(p.clone());
        }
    }
    let mut out: Vec<OrderedPoly> = (0..keep.len())
        .map(|i| {
            let others: Vec<OrderedPoly> = keep
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, p)| p.clone())
                .collect();
            let (m, c) = keep[i].leading_term().cloned().expect("nonzero");
            let head = OrderedPoly::monomial(order, m, c);
            let tail = keep[i].sub(&head);
            head.add(&reduce(&tail, &others)).monic()
        })
        .collect();
    out.sort_by(|a, b| order.compare(&lm(a), &lm(b)));
    return out;

    fn lm(p: &OrderedPoly) -> Exponents {
        p.leading_monomial().expect("nonzero")
    }
}

/// Monomial ideal generated by a finite set of monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InitialIdeal {
    order: MonomialOrder,
    generators: Vec<Exponents>,
}

impl InitialIdeal {
    /// Leading monomials of the nonzero members, in list order, without repeats.
    pub fn from_leading_monomials(order: MonomialOrder, g: &[OrderedPoly]) -> Self {
        let mut gens: Vec<Exponents> = Vec::new();
        for m in g.iter().filter_map(OrderedPoly::leading_monomial) {
            if !gens.contains(&m) {
                gens.push(m);
            }
        }
        InitialIdeal { order, generators: gens }
    }

    pub fn from_monomials(order: MonomialOrder, gens: impl IntoIterator<Item = Exponents>) -> Self {
        let mut generators: Vec<Exponents> = Vec::new();
        for m in gens {
            if !generators.contains(&m) {
                generators.push(m);
            }
        }
        InitialIdeal { order, generators }
    }

    pub fn generators(&self) -> &[Exponents] {
        &self.generators
    }

    /// Generators not divisible by another generator, ascending in the order.
    pub fn minimal_generators(&self) -> Vec<Exponents> {
        let mut out: Vec<Exponents> = self
            .generators
            .iter()
            .filter(|m| !self.generators.iter().any(|k| k != *m && mono_divides(k, m)))
            .copied()
            .collect();
        out.sort_by(|a, b| self.order.compare(a, b));
        out
    }

    pub fn contains(&self, m: &Exponents) -> bool {
        self.generators.iter().any(|g| mono_divides(g, m))
    }

    pub fn same_ideal(&self, other: &InitialIdeal) -> bool {
        self.generators.iter().all(|m| other.contains(m)) && other.generators.iter().all(|m| self.contains(m))
    }

    /// Monomials outside the ideal after setting `dehomogenize` to 1.
    pub fn standard_monomials_affine(&self, dehomogenize: FiberVariable) -> Result<Vec<Exponents>> {
        self.standard_monomials(Some(dehomogenize))
    }

    /// Monomials outside the ideal, optionally after setting one variable to 1.
    ///
    /// Fails with [`Error::PositiveDimensional`] if some remaining variable has no
    /// pure power in the ideal.
    pub fn standard_monomials(&self, dehomogenize: Option<FiberVariable>) -> Result<Vec<Exponents>> {
        let skip = dehomogenize.map(FiberVariable::index);
        let gens: Vec<Exponents> = self
            .generators
            .iter()
            .map(|m| {
                let mut m = *m;
                if let Some(s) = skip {
                    m[s] = 0;
                }
                m
            })
            .collect();
        let mut bounds = [0u32; NVARS];
        for v in 0..NVARS {
            if Some(v) == skip {
                continue;
            }
            let pure = gens
                .iter()
                .filter(|m| m.iter().enumerate().all(|(k, &e)| k == v || e == 0) && m[v] > 0)
                .map(|m| m[v])
                .min();
            match pure {
                Some(b) => bounds[v] = b,
                None if gens.iter().any(|m| m.iter().all(|&e| e == 0)) => bounds[v] = 0,
                None => {
                    return Err(Error::PositiveDimensional(format!(
                        "no pure power of {}",
                        FiberVariable::ALL[v]
                    )))
                }
            }
        }
        let mut out = Vec::new();
        let mut m = [0u32; NVARS];
        enumerate_box(&bounds, 0, &mut m, &gens, &mut out);
        out.sort_by(|a, b| self.order.compare(a, b));
        Ok(out)
    }
}

fn enumerate_box(bounds: &[u32; NVARS], v: usize, m: &mut Exponents, gens: &[Exponents], out: &mut Vec<Exponents>) {
    if gens.iter().any(|g| mono_divides(g, m)) {
        return;
    }
    if v == NVARS {
        out.push(*m);
        return;
    }
    let top = bounds[v].max(1);
    for e in 0..top {
        m[v] = e;
        enumerate_box(bounds, v + 1, m, gens, out);
    }
    m[v] = 0;
}

impl InitialIdeal {
    pub fn to_strings(&self) -> Vec<String> {
        self.minimal_generators().iter().map(mono_string).collect()
    }
}
