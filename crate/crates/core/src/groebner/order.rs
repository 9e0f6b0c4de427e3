//! Monomial orders on the seven fiber coordinates.

use std::cmp::Ordering;
use std::fmt;

/// Number of variables in the fiber coordinate ring.
pub const NVARS: usize = 7;

/// Exponent vector over the fiber coordinates, indexed by [`FiberVariable`].
pub type Exponents = [u32; NVARS];

/// Homogeneous coordinates `ρ, σ1, σ2, σ3, τ1, τ2, τ3` with fixed indices `0..7`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiberVariable {
    Rho,
    Sigma1,
    Sigma2,
    Sigma3,
    Tau1,
    Tau2,
    Tau3,
}

impl FiberVariable {
    pub const ALL: [FiberVariable; NVARS] = [
        FiberVariable::Rho,
        FiberVariable::Sigma1,
        FiberVariable::Sigma2,
        FiberVariable::Sigma3,
        FiberVariable::Tau1,
        FiberVariable::Tau2,
        FiberVariable::Tau3,
    ];

    /// Names used in polynomial text.
    pub const NAMES: [&'static str; NVARS] = ["r", "s1", "s2", "s3", "t1", "t2", "t3"];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        Self::NAMES[self.index()]
    }

    pub fn from_name(name: &str) -> Option<FiberVariable> {
        Self::NAMES
            .iter()
            .position(|n| *n == name)
            .map(|i| Self::ALL[i])
    }
}

impl fmt::Display for FiberVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How weight ties are broken along the variable chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TieBreak {
    /// Scan from the largest variable; the larger exponent wins.
    LexLargestFirst,
    /// Scan from the smallest variable; the larger exponent wins.
    LexSmallestFirst,
    /// Scan from the smallest variable; the larger exponent loses.
    RevLexSmallestFirst,
    /// Scan from the largest variable; the larger exponent loses.
    RevLexLargestFirst,
}

impl TieBreak {
    pub const ALL: [TieBreak; 4] = [
        TieBreak::LexLargestFirst,
        TieBreak::LexSmallestFirst,
        TieBreak::RevLexSmallestFirst,
        TieBreak::RevLexLargestFirst,
    ];
}

/// Weight-graded order with a lexicographic tiebreak.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WeightedOrder {
    /// Positive weight per variable index.
    pub weights: [u32; NVARS],
    /// Variable indices in ascending order of the tiebreak chain.
    pub chain: [usize; NVARS],
    pub tiebreak: TieBreak,
}

impl WeightedOrder {
    /// Weights `ρ:1, σ3:3, σ2:4, σ1:4, τ1:5, τ2:5, τ3:5` with chain
    /// `ρ < σ3 < σ2 < σ1 < τ1 < τ2 < τ3`, ties broken by reverse lex from
    /// the smallest variable.
    pub fn fiber() -> Self {
        WeightedOrder::fiber_with(TieBreak::RevLexSmallestFirst)
    }

    /// Fiber weights and chain with a caller-chosen tiebreak.
    pub fn fiber_with(tiebreak: TieBreak) -> Self {
        WeightedOrder {
            weights: [1, 4, 4, 3, 5, 5, 5],
            chain: [0, 3, 2, 1, 4, 5, 6],
            tiebreak,
        }
    }

    pub fn weight(&self, m: &Exponents) -> u64 {
        m.iter()
            .zip(&self.weights)
            .map(|(&e, &w)| u64::from(e) * u64::from(w))
            .sum()
    }

    pub fn compare(&self, a: &Exponents, b: &Exponents) -> Ordering {
        self.weight(a).cmp(&self.weight(b)).then_with(|| {
            let ascending = self.chain.iter();
            let scan: Box<dyn Iterator<Item = &usize>> = match self.tiebreak {
                TieBreak::LexLargestFirst | TieBreak::RevLexLargestFirst => Box::new(ascending.rev()),
                TieBreak::LexSmallestFirst | TieBreak::RevLexSmallestFirst => Box::new(ascending),
            };
            let larger_wins = matches!(
                self.tiebreak,
                TieBreak::LexLargestFirst | TieBreak::LexSmallestFirst
            );
            for &v in scan {
                match a[v].cmp(&b[v]) {
                    Ordering::Equal => continue,
                    o if larger_wins => return o,
                    o => return o.reverse(),
                }
            }
            Ordering::Equal
        })
    }
}

/// A total order on [`Exponents`] compatible with multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Weighted(WeightedOrder),
    /// Graded reverse lex with `r > s1 > ... > t3`.
    Grevlex,
}

impl MonomialOrder {
    pub fn fiber() -> Self {
        MonomialOrder::Weighted(WeightedOrder::fiber())
    }

    pub fn compare(&self, a: &Exponents, b: &Exponents) -> Ordering {
        match self {
            MonomialOrder::Weighted(w) => w.compare(a, b),
            MonomialOrder::Grevlex => {
                let da: u32 = a.iter().sum();
                let db: u32 = b.iter().sum();
                da.cmp(&db).then_with(|| {
                    for v in (0..NVARS).rev() {
                        match a[v].cmp(&b[v]) {
                            Ordering::Equal => continue,
                            o => return o.reverse(),
                        }
                    }
                    Ordering::Equal
                })
            }
        }
    }
}

pub fn mono_mul(a: &Exponents, b: &Exponents) -> Exponents {
    std::array::from_fn(|i| a[i] + b[i])
}

pub fn mono_divides(a: &Exponents, b: &Exponents) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// `b / a`, assuming `a | b`.
pub fn mono_div(b: &Exponents, a: &Exponents) -> Exponents {
    std::array::from_fn(|i| b[i] - a[i])
}

pub fn mono_lcm(a: &Exponents, b: &Exponents) -> Exponents {
    std::array::from_fn(|i| a[i].max(b[i]))
}

pub fn mono_coprime(a: &Exponents, b: &Exponents) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// `s3^2*t3`-style rendering; `1` for the constant monomial.
pub fn mono_string(m: &Exponents) -> String {
    let s = crate::forms::monomial_string(&FiberVariable::NAMES, m);
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}
