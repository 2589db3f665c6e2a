//! Exact arithmetic for q-binomial and Andrews–Baxter q-trinomial
//! coefficients, reduction modulo powers of cyclotomic polynomials, and a
//! checker for the congruences and identities these coefficients satisfy.

pub mod congruence;
pub mod cyclotomic;
pub mod error;
mod memo;
pub mod oracle;
pub mod polyring;
pub mod qcombinatorics;
pub mod report;

pub use congruence::{
    check_eq18, falsification_probe, lhs_value, rhs_value, run_check, CheckResult, ParamTuple,
    TheoremId,
};
pub use cyclotomic::{cyclo, cyclo_pow, CyclotomicModulus};
pub use error::{Error, Result};
pub use polyring::{congruent_zero, LaurentPoly, RatFun, Valuation};
pub use qcombinatorics::{
    binom, legendre3, qbinom, qint, qpoch, qtrinom, r_n, symbol_monomial, trinom, Mod3Symbol,
};
