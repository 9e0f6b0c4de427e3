//! Exact integer helpers: factorials, binomials and small-prime factorization.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

const TABLE_LEN: usize = 64;

fn table() -> &'static [BigInt] {
    static TABLE: OnceLock<Vec<BigInt>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = Vec::with_capacity(TABLE_LEN);
        t.push(BigInt::one());
        for i in 1..TABLE_LEN {
            let next = &t[i - 1] * BigInt::from(i);
            t.push(next);
        }
        t
    })
}

/// `n!` as a big integer; memoized for small `n`.
pub fn factorial(n: u32) -> BigInt {
    let t = table();
    if (n as usize) < t.len() {
        return t[n as usize].clone();
    }
    let mut acc = t[t.len() - 1].clone();
    for i in t.len() as u32..=n {
        acc *= i;
    }
    acc
}

/// Binomial coefficient with the convention `C(a, b) = 0` for `b < 0` or `b > a`.
///
/// The top argument must be non-negative.
pub fn binomial(a: i64, b: i64) -> BigInt {
    assert!(a >= 0, "binomial top argument must be non-negative, got {a}");
    if b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// Factors `|n|` over primes below `bound` by trial division.
///
/// Returns `None` when a cofactor larger than one remains or `n` is zero.
pub fn factor_small(n: &BigInt, bound: u64) -> Option<BTreeMap<u64, u32>> {
    if n.is_zero() {
        return None;
    }
    let mut rest = n.abs();
    let mut out = BTreeMap::new();
    let mut p = 2u64;
    while p < bound && !rest.is_one() {
        let bp = BigInt::from(p);
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&bp);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            out.insert(p, e);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    rest.is_one().then_some(out)
}

/// Renders a factorization as `2^34 * 3^24`, with a leading `-` for negatives.
pub fn format_factorization(negative: bool, f: &BTreeMap<u64, u32>) -> String {
    let body = if f.is_empty() {
        "1".to_string()
    } else {
        f.iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect::<Vec<_>>()
            .join(" * ")
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// Product of `p^e` over a factorization.
pub fn from_factorization(f: &[(u64, u32)]) -> BigInt {
    f.iter()
        .fold(BigInt::one(), |acc, &(p, e)| acc * BigInt::from(p).pow(e))
}

/// Exact rational printed as `a` or `a/b`.
pub fn rational_to_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `a` or `a/b` into a rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().ok()?;
            let b: BigInt = b.trim().parse().ok()?;
            if b.is_zero() {
                None
            } else {
                Some(BigRational::new(a, b))
            }
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}
