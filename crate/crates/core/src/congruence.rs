//! Left- and right-hand sides of every identity and congruence, and the
//! decision procedure that checks them.
//!
//! A congruence `lhs ≡ rhs (mod Phi_n(q)^k)` passes when the `Phi_n`-adic
//! valuation of `lhs - rhs` is at least `k`. Exact identities pass when the
//! difference is the zero rational function. A failing check is a result,
//! not an error; only parameter-schema violations and exponent-integrality
//! violations are errors.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::cyclo_pow;
use crate::error::{Error, Result};
use crate::polyring::{congruent_zero, LaurentPoly, RatFun, Valuation};
use crate::qcombinatorics::{binom, legendre3, qbinom, qtrinom, r_n, symbol_monomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "LEMMA1")]
    Lemma1,
    #[serde(rename = "LEMMA2")]
    Lemma2,
    #[serde(rename = "PROP1")]
    Prop1,
    #[serde(rename = "STRAUB")]
    Straub,
    #[serde(rename = "THM_EQ26")]
    ThmEq26,
    #[serde(rename = "THM_EQ7")]
    ThmEq7,
    #[serde(rename = "THM_EQ8")]
    ThmEq8,
    #[serde(rename = "THM_EQ9")]
    ThmEq9,
    #[serde(rename = "THM_EQ10")]
    ThmEq10,
    #[serde(rename = "THM_EQ11")]
    ThmEq11,
    #[serde(rename = "THM7_SUM")]
    Thm7Sum,
    #[serde(rename = "EQ22")]
    Eq22,
    #[serde(rename = "REMARK")]
    Remark,
    #[serde(rename = "EQ18")]
    Eq18,
}

/// Which optional parameters a theorem takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamShape {
    pub a: bool,
    pub b: bool,
    pub j: bool,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::Lemma1,
        TheoremId::Lemma2,
        TheoremId::Prop1,
        TheoremId::Straub,
        TheoremId::ThmEq26,
        TheoremId::ThmEq7,
        TheoremId::ThmEq8,
        TheoremId::ThmEq9,
        TheoremId::ThmEq10,
        TheoremId::ThmEq11,
        TheoremId::Thm7Sum,
        TheoremId::Eq22,
        TheoremId::Remark,
        TheoremId::Eq18,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Lemma1 => "LEMMA1",
            TheoremId::Lemma2 => "LEMMA2",
            TheoremId::Prop1 => "PROP1",
            TheoremId::Straub => "STRAUB",
            TheoremId::ThmEq26 => "THM_EQ26",
            TheoremId::ThmEq7 => "THM_EQ7",
            TheoremId::ThmEq8 => "THM_EQ8",
            TheoremId::ThmEq9 => "THM_EQ9",
            TheoremId::ThmEq10 => "THM_EQ10",
            TheoremId::ThmEq11 => "THM_EQ11",
            TheoremId::Thm7Sum => "THM7_SUM",
            TheoremId::Eq22 => "EQ22",
            TheoremId::Remark => "REMARK",
            TheoremId::Eq18 => "EQ18",
        }
    }

    /// Power of `Phi_n` in the modulus; `None` for exact identities.
    pub fn modulus_power(self) -> Option<u32> {
        match self {
            TheoremId::Lemma1 | TheoremId::Lemma2 => None,
            TheoremId::Straub => Some(3),
            TheoremId::ThmEq26 | TheoremId::ThmEq7 | TheoremId::ThmEq8 | TheoremId::Eq18 => Some(2),
            TheoremId::Prop1
            | TheoremId::ThmEq9
            | TheoremId::ThmEq10
            | TheoremId::ThmEq11
            | TheoremId::Thm7Sum
            | TheoremId::Eq22
            | TheoremId::Remark => Some(1),
        }
    }

    pub fn shape(self) -> ParamShape {
        let (a, b, j) = match self {
            TheoremId::Lemma1
            | TheoremId::Lemma2
            | TheoremId::Prop1
            | TheoremId::ThmEq26
            | TheoremId::Eq22 => (false, false, false),
            TheoremId::Straub | TheoremId::ThmEq11 => (true, true, false),
            TheoremId::ThmEq7 | TheoremId::ThmEq8 | TheoremId::Remark | TheoremId::Eq18 => {
                (true, false, false)
            }
            TheoremId::ThmEq9 | TheoremId::ThmEq10 => (true, false, true),
            TheoremId::Thm7Sum => (false, false, true),
        };
        ParamShape { a, b, j }
    }

    /// Checks the parameter schema and returns the fully populated tuple.
    pub fn validate(self, p: &ParamTuple) -> Result<()> {
        let fail = |reason: String| {
            Err(Error::Schema {
                theorem: self.name().to_string(),
                reason,
            })
        };
        let shape = self.shape();
        for (name, wanted, value) in [
            ("a", shape.a, p.a),
            ("b", shape.b, p.b),
            ("j", shape.j, p.j),
        ] {
            match (wanted, value) {
                (true, None) => return fail(format!("missing parameter {name}")),
                (false, Some(_)) => return fail(format!("unexpected parameter {name}")),
                _ => {}
            }
        }
        let n = p.n;
        let a = p.a.unwrap_or(0);
        let b = p.b.unwrap_or(0);
        let j = p.j.unwrap_or(0);
        let odd = n >= 1 && n % 2 == 1;
        let check = |ok: bool, msg: &str| if ok { Ok(()) } else { fail(msg.to_string()) };
        match self {
            TheoremId::Lemma1 | TheoremId::Lemma2 => check(n >= 0, "n must be >= 0"),
            TheoremId::Prop1 | TheoremId::ThmEq26 => check(n >= 1, "n must be >= 1"),
            TheoremId::Straub => {
                check(n >= 1, "n must be >= 1")?;
                check(b >= 0 && a >= b, "need a >= b >= 0")
            }
            TheoremId::ThmEq7 | TheoremId::Eq18 => {
                check(n >= 1, "n must be >= 1")?;
                check(a >= 1, "a must be >= 1")
            }
            TheoremId::ThmEq8 => {
                check(n >= 1, "n must be >= 1")?;
                check(a >= 2, "a must be >= 2")
            }
            TheoremId::ThmEq9 => {
                check(odd, "n must be a positive odd integer")?;
                check(a >= 1, "a must be >= 1")?;
                check((0..n).contains(&j), "need 0 <= j <= n-1")
            }
            TheoremId::ThmEq10 => {
                check(odd, "n must be a positive odd integer")?;
                check(a >= 2, "a must be >= 2")?;
                check((0..=n).contains(&j), "need 0 <= j <= n")
            }
            TheoremId::ThmEq11 => {
                check(odd, "n must be a positive odd integer")?;
                check(a >= 2, "a must be >= 2")?;
                check(b >= 1, "b must be >= 1")?;
                check(a <= b + 2, "need a <= b + 2")
            }
            TheoremId::Thm7Sum => {
                check(odd, "n must be a positive odd integer")?;
                check((0..n).contains(&j), "need 0 <= j <= n-1")
            }
            TheoremId::Eq22 => check(odd, "n must be a positive odd integer"),
            TheoremId::Remark => {
                check(odd, "n must be a positive odd integer")?;
                check(a >= 2, "a must be >= 2")
            }
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let upper = s.trim().to_ascii_uppercase();
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == upper)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct ParamTuple {
    pub n: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<i64>,
}

impl ParamTuple {
    pub fn n(n: i64) -> Self {
        Self {
            n,
            ..Self::default()
        }
    }

    pub fn with_a(mut self, a: i64) -> Self {
        self.a = Some(a);
        self
    }

    pub fn with_b(mut self, b: i64) -> Self {
        self.b = Some(b);
        self
    }

    pub fn with_j(mut self, j: i64) -> Self {
        self.j = Some(j);
        self
    }
}

impl fmt::Display for ParamTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        for (name, v) in [("a", self.a), ("b", self.b), ("j", self.j)] {
            if let Some(v) = v {
                write!(f, " {name}={v}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub theorem: TheoremId,
    pub params: ParamTuple,
    pub passed: bool,
    /// Zero iff `passed`. For congruences this is the residue of the cleared
    /// numerator; for exact identities the numerator of the difference.
    pub witness: LaurentPoly,
    /// `Phi_n`-adic valuation of `lhs - rhs`; `None` for exact identities.
    pub valuation: Option<Valuation>,
    pub elapsed: Duration,
    /// Perturbation added to the right-hand side by a falsification probe.
    pub probe: Option<i64>,
}

// ---------------------------------------------------------------------------
// building blocks

fn poly(p: LaurentPoly) -> RatFun {
    RatFun::from_poly(p)
}

fn int(c: BigInt) -> LaurentPoly {
    LaurentPoly::constant(c)
}

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `c * n * (1 - q^n)`.
fn n_one_minus_qn(n: i64, c: BigInt) -> LaurentPoly {
    LaurentPoly::one_minus_q_pow(n).scale(c * n)
}

fn trinomial_lhs(n: i64, j: i64) -> RatFun {
    poly((*qtrinom(n, j)).clone())
}

/// `(1 - q^n) sum_{k=0}^{floor(n/2)} (-1)^k q^(k(k-1)/2) [n-k k] / (1 - q^(n-k))`.
///
/// The `k = 0` summand carries `(1 - q^n) / (1 - q^n)`, taken as 1. At
/// `n = 0` that quotient is `0/0`; the cancelled value is used there too.
pub fn lemma1_lhs(n: i64) -> RatFun {
    let mut acc = poly(LaurentPoly::one());
    let outer = LaurentPoly::one_minus_q_pow(n);
    for k in 1..=n / 2 {
        let num = qbinom(n - k, k).shift(k * (k - 1) / 2).scale(sign(k)) * &outer;
        let term =
            RatFun::new(num, LaurentPoly::one_minus_q_pow(n - k)).expect("n - k >= 1 for k <= n/2");
        acc = &acc + &term;
    }
    acc
}

/// `sum_{k=1}^{floor(n/2)} q^(-k(k-1)) [2k k] / [2k]_q`, as written.
pub fn prop1_lhs_raw(n: i64) -> RatFun {
    let mut acc = poly(LaurentPoly::zero());
    for k in 1..=n / 2 {
        let num = qbinom(2 * k, k).shift(-k * (k - 1));
        let den = crate::qcombinatorics::qint(2 * k as u64);
        acc = &acc + &RatFun::new(num, den).expect("[2k]_q is nonzero");
    }
    acc
}

/// The same sum rewritten as `sum (1-q) q^(-k(k-1)) [2k-1 k] / (1 - q^k)`,
/// whose denominators never contain `Phi_n` for `k <= n/2`.
pub fn prop1_lhs(n: i64) -> RatFun {
    let mut acc = poly(LaurentPoly::zero());
    let one_minus_q = LaurentPoly::one_minus_q_pow(1);
    for k in 1..=n / 2 {
        let num = qbinom(2 * k - 1, k).shift(-k * (k - 1)) * &one_minus_q;
        let term = RatFun::new(num, LaurentPoly::one_minus_q_pow(k)).expect("k >= 1");
        acc = &acc + &term;
    }
    acc
}

fn lhs_inner(id: TheoremId, p: &ParamTuple) -> Result<RatFun> {
    let n = p.n;
    let a = p.a.unwrap_or(0);
    let b = p.b.unwrap_or(0);
    let j = p.j.unwrap_or(0);
    Ok(match id {
        TheoremId::Lemma1 => lemma1_lhs(n),
        TheoremId::Lemma2 => {
            let sum = (0..=n)
                .map(|k| qbinom(n - k, k).shift(k * (k - 1) / 2).scale(sign(k)))
                .sum();
            poly(sum)
        }
        TheoremId::Prop1 => prop1_lhs(n),
        TheoremId::Straub => poly(qbinom(a * n, b * n).scale(24)),
        TheoremId::ThmEq26 => trinomial_lhs(2 * n, 0),
        TheoremId::ThmEq7 => trinomial_lhs(a * n, a * n - n),
        TheoremId::ThmEq8 => trinomial_lhs(a * n, a * n - 2 * n),
        TheoremId::ThmEq9 => trinomial_lhs(a * n - 1, a * n - n + j),
        TheoremId::ThmEq10 => trinomial_lhs(a * n - 1, a * n - 2 * n + j),
        TheoremId::ThmEq11 => trinomial_lhs(a * n - 1, b * n - 1),
        TheoremId::Thm7Sum => {
            let sum = (0..n - j)
                .map(|k| qbinom(2 * k + j, k).shift(-k * (k + 1 + j)))
                .sum();
            poly(sum)
        }
        TheoremId::Eq22 => {
            let sum = (0..n).map(|k| qbinom(2 * k, k).shift(-k * (k + 1))).sum();
            poly(sum)
        }
        TheoremId::Remark => {
            let mono = symbol_monomial(legendre3(n + 1), n * (n - 1), 6)?;
            poly(LaurentPoly::constant(a) + mono)
        }
        TheoremId::Eq18 => poly((*qbinom(a * n, n)).clone()),
    })
}

/// `legendre3(n - j) * q^((n-j-1)(n-j-2)/6 - (j^2+j)/2)`.
fn eq9_monomial(n: i64, j: i64) -> Result<LaurentPoly> {
    let d = n - j;
    symbol_monomial(legendre3(d), (d - 1) * (d - 2) - 3 * (j * j + j), 6)
}

fn rhs_inner(id: TheoremId, p: &ParamTuple) -> Result<RatFun> {
    let n = p.n;
    let a = p.a.unwrap_or(0);
    let b = p.b.unwrap_or(0);
    let j = p.j.unwrap_or(0);
    let rn = || r_n(n as u64);
    Ok(match id {
        TheoremId::Lemma1 => poly(rn()),
        TheoremId::Lemma2 => {
            poly(symbol_monomial(legendre3(n + 1), n * (n - 1), 6)?.scale(sign(n)))
        }
        TheoremId::Prop1 => {
            let num = (LaurentPoly::one() - rn()) * LaurentPoly::one_minus_q_pow(1);
            RatFun::new(num, LaurentPoly::one_minus_q_pow(n)).expect("n >= 1")
        }
        TheoremId::Straub => {
            // 24 [a b]_{q^(n^2)} - (a-b) b C(a,b) (n^2 - 1) (q^n - 1)^2
            let sub = qbinom(a, b).substitute_power(n * n).scale(24);
            let c = binom(a, b) * ((a - b) * b * (n * n - 1));
            let sq = (LaurentPoly::monomial(1, n) - LaurentPoly::one()).pow(2);
            poly(sub - sq.scale(c))
        }
        // The three n mod 3 cases collapse to R_n: 3m, 3m+1 and 3m-1 are n itself.
        TheoremId::ThmEq26 => {
            poly(rn().scale(2) - n_one_minus_qn(n, BigInt::from(3)) + LaurentPoly::one())
        }
        TheoremId::ThmEq7 => poly(rn().scale(a) - n_one_minus_qn(n, binom(a, 2))),
        TheoremId::ThmEq8 => {
            let constant = (3 * a - a * a) / 2;
            poly(
                rn().scale(binom(a, 2) * 2) - n_one_minus_qn(n, binom(a + 1, 3) * 3)
                    + LaurentPoly::constant(constant),
            )
        }
        TheoremId::ThmEq9 => poly(eq9_monomial(n, j)?),
        TheoremId::ThmEq10 => {
            let first = eq9_monomial(n, j)?.scale(a - 1);
            let second = symbol_monomial(legendre3(j), 1 - j * j, 3)?;
            poly(first + second)
        }
        TheoremId::ThmEq11 => {
            let mono = symbol_monomial(legendre3(n + 1), n * (n - 1), 6)?;
            poly(int(binom(a, b)) + mono.scale(binom(a - 1, b)))
        }
        TheoremId::Thm7Sum => {
            let d = n - j;
            poly(symbol_monomial(legendre3(d), (d - 1) * (d - 2), 6)?.scale(sign(j)))
        }
        TheoremId::Eq22 => poly(symbol_monomial(legendre3(n), (n - 1) * (n - 2), 6)?),
        TheoremId::Remark => {
            let first = LaurentPoly::monomial(a - 1, -n * (n - 1) / 2);
            let second = symbol_monomial(legendre3(n - 1), -n * (n - 2), 3)?;
            poly(first + second)
        }
        TheoremId::Eq18 => poly(LaurentPoly::constant(a) - n_one_minus_qn(n, binom(a, 2))),
    })
}

/// Exact left-hand side. Straub's congruence is reported in its 24-cleared form.
pub fn lhs_value(id: TheoremId, p: &ParamTuple) -> Result<RatFun> {
    id.validate(p)?;
    lhs_inner(id, p)
}

/// Exact right-hand side, with the same clearing as [`lhs_value`].
pub fn rhs_value(id: TheoremId, p: &ParamTuple) -> Result<RatFun> {
    id.validate(p)?;
    rhs_inner(id, p)
}

fn decide(id: TheoremId, p: &ParamTuple, perturb: Option<i64>) -> Result<CheckResult> {
    let start = Instant::now();
    id.validate(p)?;
    let lhs = lhs_inner(id, p)?;
    let mut rhs = rhs_inner(id, p)?;
    if let Some(c) = perturb {
        rhs = &rhs + &poly(LaurentPoly::monomial(c, p.n - 1));
    }
    if id == TheoremId::Prop1 && lhs != prop1_lhs_raw(p.n) {
        return Err(Error::Inconsistent(format!(
            "PROP1 rewritten and raw sums differ at n={}",
            p.n
        )));
    }
    let diff = &lhs - &rhs;
    let (passed, witness, valuation) = match id.modulus_power() {
        None => {
            let witness = diff.to_poly().unwrap_or_else(|| diff.numer().clone());
            (diff.is_zero(), witness, None)
        }
        Some(k) => {
            let n = p.n as u64;
            let valuation = diff.phi_valuation(n);
            let den_mult = diff
                .denom()
                .phi_multiplicity(n)
                .expect("nonzero denominator");
            let modulus = cyclo_pow(n, k + den_mult as u32);
            let (zero, witness) = congruent_zero(diff.numer(), &modulus);
            debug_assert_eq!(zero, valuation.at_least(k as i64));
            (zero, witness, Some(valuation))
        }
    };
    Ok(CheckResult {
        theorem: id,
        params: *p,
        passed,
        witness,
        valuation,
        elapsed: start.elapsed(),
        probe: perturb,
    })
}

/// Decides the identity or congruence `id` at `p`.
pub fn run_check(id: TheoremId, p: &ParamTuple) -> Result<CheckResult> {
    decide(id, p, None)
}

/// `[an n]_q ≡ a - n (1 - q^n) a(a-1)/2 (mod Phi_n(q)^2)`.
pub fn check_eq18(n: i64, a: i64) -> Result<CheckResult> {
    run_check(TheoremId::Eq18, &ParamTuple::n(n).with_a(a))
}

/// Runs the check with `perturb * q^(n-1)` added to the right-hand side. A
/// sound checker must report failure.
pub fn falsification_probe(id: TheoremId, p: &ParamTuple, perturb: i64) -> Result<CheckResult> {
    assert!(perturb != 0, "a probe needs a nonzero perturbation");
    decide(id, p, Some(perturb))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(min_exp: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64s(min_exp, c)
    }

    #[test]
    fn theorem_names_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.name().parse::<TheoremId>().unwrap(), id);
            let json = serde_json::to_string(&id).unwrap();
            assert_eq!(json, format!("\"{}\"", id.name()));
        }
        assert!("THM_EQ99".parse::<TheoremId>().is_err());
    }

    #[test]
    fn schema_rejections() {
        let even = ParamTuple::n(4).with_a(1).with_j(0);
        assert!(matches!(
            run_check(TheoremId::ThmEq9, &even),
            Err(Error::Schema { .. })
        ));
        let missing = ParamTuple::n(3);
        assert!(run_check(TheoremId::ThmEq7, &missing).is_err());
        let extra = ParamTuple::n(3).with_b(1);
        assert!(run_check(TheoremId::Lemma2, &extra).is_err());
        assert!(run_check(TheoremId::ThmEq8, &ParamTuple::n(3).with_a(1)).is_err());
        assert!(run_check(TheoremId::ThmEq11, &ParamTuple::n(3).with_a(5).with_b(2)).is_err());
        assert!(run_check(TheoremId::Straub, &ParamTuple::n(3).with_a(1).with_b(2)).is_err());
        assert!(run_check(TheoremId::ThmEq10, &ParamTuple::n(3).with_a(2).with_j(4)).is_err());
    }

    #[test]
    fn lhs_examples() {
        let l = lhs_value(TheoremId::ThmEq7, &ParamTuple::n(3).with_a(1)).unwrap();
        assert_eq!(l.to_poly().unwrap(), lp(0, &[1, 1, 2, 2, 1]));
        let l = lhs_value(TheoremId::Thm7Sum, &ParamTuple::n(3).with_j(0)).unwrap();
        let expected = LaurentPoly::one() + lp(-2, &[1, 1]) + lp(-6, &[1, 1, 2, 1, 1]);
        assert_eq!(l.to_poly().unwrap(), expected);
        let l = lhs_value(TheoremId::Lemma2, &ParamTuple::n(2)).unwrap();
        assert!(l.is_zero());
    }

    #[test]
    fn rhs_examples() {
        let r = rhs_value(TheoremId::ThmEq9, &ParamTuple::n(3).with_a(1).with_j(0)).unwrap();
        assert!(r.is_zero());
        let r = rhs_value(TheoremId::ThmEq11, &ParamTuple::n(3).with_a(2).with_b(1)).unwrap();
        assert_eq!(r.to_poly().unwrap(), lp(0, &[2, 1]));
        let r = rhs_value(TheoremId::ThmEq7, &ParamTuple::n(3).with_a(1)).unwrap();
        assert_eq!(r.to_poly().unwrap(), lp(1, &[-1, -1]));
    }

    #[test]
    fn run_check_examples() {
        let r = run_check(TheoremId::Lemma2, &ParamTuple::n(3)).unwrap();
        assert!(r.passed);
        assert!(r.witness.is_zero());
        let r = run_check(TheoremId::ThmEq9, &ParamTuple::n(3).with_a(1).with_j(0)).unwrap();
        assert!(r.passed);
        let rhs = rhs_value(TheoremId::Eq22, &ParamTuple::n(5)).unwrap();
        assert_eq!(rhs.to_poly().unwrap(), lp(2, &[-1]));
        assert!(
            run_check(TheoremId::Eq22, &ParamTuple::n(5))
                .unwrap()
                .passed
        );
        let r = run_check(TheoremId::ThmEq26, &ParamTuple::n(3)).unwrap();
        assert!(r.passed);
        assert!(r.valuation.unwrap().at_least(2));
    }

    #[test]
    fn eq26_rhs_matches_case_list_for_n_3() {
        // 2(-1)(1+q)q - 9(1-q^3) + 1
        let expected =
            lp(1, &[-2, -2]) - LaurentPoly::one_minus_q_pow(3).scale(9) + LaurentPoly::one();
        let r = rhs_value(TheoremId::ThmEq26, &ParamTuple::n(3)).unwrap();
        assert_eq!(r.to_poly().unwrap(), expected);
    }

    #[test]
    fn eq18_examples() {
        assert!(check_eq18(1, 3).unwrap().passed);
        assert!(check_eq18(2, 2).unwrap().passed);
        let r = check_eq18(5, 1).unwrap();
        assert!(r.passed);
        assert_eq!(
            lhs_value(TheoremId::Eq18, &ParamTuple::n(5).with_a(1))
                .unwrap()
                .to_poly(),
            Some(LaurentPoly::one())
        );
    }

    #[test]
    fn probes_fail() {
        let r = falsification_probe(TheoremId::ThmEq7, &ParamTuple::n(4).with_a(2), 1).unwrap();
        assert!(!r.passed);
        assert!(!r.witness.is_zero());
        assert!(
            !falsification_probe(TheoremId::Lemma1, &ParamTuple::n(6), 1)
                .unwrap()
                .passed
        );
        assert!(
            !falsification_probe(TheoremId::Eq22, &ParamTuple::n(5), 2)
                .unwrap()
                .passed
        );
    }

    #[test]
    fn lemma1_at_zero_is_the_degenerate_case() {
        let r = run_check(TheoremId::Lemma1, &ParamTuple::n(0)).unwrap();
        assert_eq!(lemma1_lhs(0).to_poly(), Some(LaurentPoly::one()));
        assert_eq!(r_n(0), LaurentPoly::constant(2));
        assert!(!r.passed);
        assert_eq!(r.witness, LaurentPoly::constant(-1));
    }
}
