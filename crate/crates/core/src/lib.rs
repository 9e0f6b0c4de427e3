//! Exact arithmetic for the harmonic contravariant of ternary forms.
//!
//! The crate is organised bottom-up:
//!
//! * [`forms`]: sparse ternary forms, parsing and printing;
//! * [`apolarity`]: polar pairing, `J_n`, `h_n`, `t_n` and `A_n`;
//! * [`lie`]: `gl_3` derivations and the `sl_3` constraints they induce;
//! * [`jacobian`]: the symmetric matrix `R_n`, `κ_n` and the invariant `ρ_n`;
//! * [`groebner`]: a Buchberger engine over `ℚ` in seven variables;
//! * [`fiber`]: fibers of `h_4` over a target quartic.

pub mod apolarity;
pub mod arith;
pub mod error;
pub mod fiber;
pub mod forms;
pub mod groebner;
pub mod jacobian;
pub mod lie;
pub mod linalg;

pub use error::{Error, Result};
pub use forms::{LaurentMonomial, Monomial, TernaryForm, VariableFamily};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
