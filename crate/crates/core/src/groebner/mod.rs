//! Buchberger's algorithm over `ℚ` in the seven fiber coordinates.

mod engine;
mod order;
mod poly;

pub use engine::{
    buchberger, buchberger_until, reduce, s_polynomial, verify_groebner, GroebnerBasis, InitialIdeal,
    VerificationReport,
};
pub use order::{
    mono_divides, mono_lcm, mono_mul, mono_string, Exponents, FiberVariable, MonomialOrder, TieBreak, WeightedOrder,
    NVARS,
};
pub use poly::OrderedPoly;
