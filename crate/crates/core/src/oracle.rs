//! Independent integer cross-checks of the q = 1 specializations.
//!
//! Nothing here goes through the polynomial multiplication used by the
//! engine: binomials come from an integer Pascal triangle and trinomials from
//! a direct expansion of `(1 + x + 1/x)^n` as a coefficient vector.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::polyring::LaurentPoly;
use crate::qcombinatorics::{binom, qbinom, qtrinom, trinom};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub what: &'static str,
    pub n: i64,
    pub index: i64,
    pub expected: BigInt,
    pub got: BigInt,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} mismatch at n={} index={}: expected {}, got {}",
            self.what, self.n, self.index, self.expected, self.got
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleSummary {
    pub rows: i64,
    pub comparisons: usize,
}

/// Row `n` of Pascal's triangle.
fn pascal_row(n: i64) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = vec![BigInt::one(); row.len() + 1];
        for i in 1..row.len() {
            next[i] = &row[i - 1] + &row[i];
        }
        row = next;
    }
    row
}

/// Coefficients of `(1 + x + 1/x)^n`, index `i` holding `x^(i - n)`.
pub fn trinomial_row(n: i64) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = vec![BigInt::zero(); row.len() + 2];
        for (i, c) in row.iter().enumerate() {
            next[i] += c;
            next[i + 1] += c;
            next[i + 2] += c;
        }
        row = next;
    }
    row
}

/// Compares q = 1 values for every `0 <= n <= max_n` against the integer
/// brute force, using `qtrinom_impl` for the q-trinomial so that mutants can
/// be injected.
pub fn run_with<F>(max_n: i64, qtrinom_impl: F) -> Result<OracleSummary, Mismatch>
where
    F: Fn(i64, i64) -> LaurentPoly,
{
    let mut summary = OracleSummary::default();
    for n in 0..=max_n {
        let pascal = pascal_row(n);
        for k in 0..=n {
            let expected = &pascal[k as usize];
            for (what, got) in [
                ("qbinom(q=1) vs Pascal", qbinom(n, k).eval_one()),
                ("binom vs Pascal", binom(n, k)),
            ] {
                summary.comparisons += 1;
                if &got != expected {
                    return Err(Mismatch {
                        what,
                        n,
                        index: k,
                        expected: expected.clone(),
                        got,
                    });
                }
            }
        }
        let expansion = trinomial_row(n);
        for j in -n..=n {
            let expected = &expansion[(j + n) as usize];
            for (what, got) in [
                ("binomial-sum trinomial vs expansion", trinom(n, j)),
                ("qtrinom(q=1) vs expansion", qtrinom_impl(n, j).eval_one()),
            ] {
                summary.comparisons += 1;
                if &got != expected {
                    return Err(Mismatch {
                        what,
                        n,
                        index: j,
                        expected: expected.clone(),
                        got,
                    });
                }
            }
        }
        summary.rows += 1;
    }
    Ok(summary)
}

pub fn run(max_n: i64) -> Result<OracleSummary, Mismatch> {
    run_with(max_n, |n, j| (*qtrinom(n, j)).clone())
}
