//! Acceptance criteria. Each test prints one `[PASS]`/`[FAIL]` line; run with
//! `--nocapture` to see them. All comparisons are exact.

use std::time::{Duration, Instant};

use qcongruence::report::{run_sweep, CheckSpec, SweepConfig};
use qcongruence::{
    binom, congruent_zero, cyclo, cyclo_pow, falsification_probe, oracle, qbinom, qtrinom, r_n,
    rhs_value, run_check, LaurentPoly, ParamTuple, RatFun, TheoremId, Valuation,
};

/// Wall-clock budgets per criterion.
const BUDGET_EXACT: Duration = Duration::from_secs(10);
const BUDGET_MOD_PHI2: Duration = Duration::from_secs(60);
const BUDGET_MOD_PHI: Duration = Duration::from_secs(120);
const BUDGET_STRAUB: Duration = Duration::from_secs(60);
/// Every n-mod-3 branch must be hit at least this often in criterion 2.
const MIN_BRANCH_HITS: usize = 10;
/// Failures listed in a FAIL line before truncation.
const SHOWN_FAILURES: usize = 6;

struct Criterion {
    label: &'static str,
    start: Instant,
    budget: Option<Duration>,
    checks: usize,
    failures: Vec<String>,
}

impl Criterion {
    fn new(label: &'static str, budget: Option<Duration>) -> Self {
        Self {
            label,
            start: Instant::now(),
            budget,
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn check(&mut self, id: TheoremId, p: ParamTuple) {
        match run_check(id, &p) {
            Ok(r) => {
                let exact = id.modulus_power().is_none();
                let ok = r.passed && (!exact || r.witness.is_zero());
                self.expect(ok, || {
                    let v = r
                        .valuation
                        .map(|v| format!(" valuation={v}"))
                        .unwrap_or_default();
                    format!("{id} {p}{v} witness={}", r.witness)
                });
            }
            Err(e) => self.expect(false, || format!("{id} {p}: {e}")),
        }
    }

    fn finish(self) {
        let elapsed = self.start.elapsed();
        let mut failures = self.failures;
        if let Some(b) = self.budget {
            if elapsed > b {
                failures.push(format!("runtime {elapsed:.2?} exceeds budget {b:?}"));
            }
        }
        let status = if failures.is_empty() { "PASS" } else { "FAIL" };
        let mut line = format!(
            "[{status}] {}: {} checks, {} failed, {:.2?}",
            self.label,
            self.checks,
            failures.len(),
            elapsed
        );
        if !failures.is_empty() {
            let shown: Vec<&str> = failures
                .iter()
                .take(SHOWN_FAILURES)
                .map(String::as_str)
                .collect();
            line.push_str(&format!("; first: {}", shown.join(" | ")));
        }
        println!("{line}");
        assert!(failures.is_empty(), "{line}");
    }
}

fn odd_up_to(max: i64) -> impl Iterator<Item = i64> {
    (1..=max).step_by(2)
}

fn poly_of(r: &RatFun) -> LaurentPoly {
    r.to_poly()
        .expect("right-hand sides are Laurent polynomials")
}

fn rhs(id: TheoremId, p: ParamTuple) -> LaurentPoly {
    poly_of(&rhs_value(id, &p).unwrap())
}

fn congruent(f: &LaurentPoly, g: &LaurentPoly, n: i64, k: u32) -> bool {
    congruent_zero(&(f - g), &cyclo_pow(n as u64, k)).0
}

/// The three-case list for the central q-trinomial, written out case by case.
fn central_case_list(n: i64) -> LaurentPoly {
    let sign = |m: i64| if m % 2 == 0 { 1 } else { -1 };
    match n % 3 {
        0 => {
            let m = n / 3;
            let base = LaurentPoly::monomial(sign(m), m * (3 * m - 1) / 2);
            &base + &base.shift(m)
        }
        1 => {
            let m = (n - 1) / 3;
            LaurentPoly::monomial(sign(m), m * (3 * m + 1) / 2)
        }
        _ => {
            let m = (n + 1) / 3;
            LaurentPoly::monomial(sign(m), m * (3 * m - 1) / 2)
        }
    }
}

#[test]
fn criterion_1_exact_identities() {
    let mut c = Criterion::new(
        "1 exact identities (LEMMA1 n<=60, LEMMA2 n<=80)",
        Some(BUDGET_EXACT),
    );
    for n in 0..=60 {
        c.check(TheoremId::Lemma1, ParamTuple::n(n));
    }
    for n in 0..=80 {
        c.check(TheoremId::Lemma2, ParamTuple::n(n));
    }
    c.finish();
}

#[test]
fn criterion_2_mod_phi_squared() {
    let mut c = Criterion::new(
        "2 mod Phi_n^2 (EQ7, EQ8, EQ26, EQ18; n<=30)",
        Some(BUDGET_MOD_PHI2),
    );
    let mut branch_hits = [0usize; 3];
    for n in 1..=30i64 {
        let before = c.checks;
        for a in 1..=5 {
            c.check(TheoremId::ThmEq7, ParamTuple::n(n).with_a(a));
            c.check(TheoremId::Eq18, ParamTuple::n(n).with_a(a));
        }
        for a in 2..=5 {
            c.check(TheoremId::ThmEq8, ParamTuple::n(n).with_a(a));
        }
        c.check(TheoremId::ThmEq26, ParamTuple::n(n));
        branch_hits[(n % 3) as usize] += c.checks - before;
    }
    for (r, &hits) in branch_hits.iter().enumerate() {
        c.expect(hits >= MIN_BRANCH_HITS, || {
            format!("branch n%3={r} exercised {hits} times")
        });
    }
    c.finish();
}

#[test]
fn criterion_3_mod_phi() {
    let mut c = Criterion::new(
        "3 mod Phi_n (EQ9, EQ10, EQ11, THM7, EQ22, REMARK odd n<=29; PROP1 n<=30)",
        Some(BUDGET_MOD_PHI),
    );
    for n in odd_up_to(29) {
        for a in 1..=3 {
            for j in 0..n {
                c.check(TheoremId::ThmEq9, ParamTuple::n(n).with_a(a).with_j(j));
            }
        }
        for a in 2..=4 {
            for j in 0..=n {
                c.check(TheoremId::ThmEq10, ParamTuple::n(n).with_a(a).with_j(j));
            }
            for b in [a - 2, a - 1] {
                if b >= 1 {
                    c.check(TheoremId::ThmEq11, ParamTuple::n(n).with_a(a).with_b(b));
                }
            }
            c.check(TheoremId::Remark, ParamTuple::n(n).with_a(a));
        }
        for j in 0..n {
            c.check(TheoremId::Thm7Sum, ParamTuple::n(n).with_j(j));
        }
        c.check(TheoremId::Eq22, ParamTuple::n(n));
    }
    for n in 1..=30 {
        c.check(TheoremId::Prop1, ParamTuple::n(n));
    }
    c.finish();
}

#[test]
fn criterion_4_straub() {
    let mut c = Criterion::new(
        "4 STRAUB mod Phi_n^3 (n<=20, 0<=b<=a<=5)",
        Some(BUDGET_STRAUB),
    );
    for n in 1..=20 {
        for a in 0..=5 {
            for b in 0..=a {
                c.check(TheoremId::Straub, ParamTuple::n(n).with_a(a).with_b(b));
            }
        }
    }
    c.finish();
}

#[test]
fn criterion_5_consistency() {
    let mut c = Criterion::new("5 cross-theorem consistency", None);

    // a = 1 and a = 2 specializations of EQ7
    for n in 1..=30i64 {
        let p1 = ParamTuple::n(n).with_a(1);
        c.check(TheoremId::ThmEq7, p1);
        let list = central_case_list(n);
        c.expect(rhs(TheoremId::ThmEq7, p1) == list, || {
            format!("EQ7 a=1 RHS != case list at n={n}")
        });
        c.expect(congruent(&qtrinom(n, 0), &list, n, 2), || {
            format!("central trinomial n={n}")
        });

        let p2 = ParamTuple::n(n).with_a(2);
        let doubled = list.scale(2) - LaurentPoly::one_minus_q_pow(n).scale(n);
        c.expect(rhs(TheoremId::ThmEq7, p2) == doubled, || {
            format!("EQ7 a=2 RHS n={n}")
        });
        c.expect(congruent(&qtrinom(2 * n, n), &doubled, n, 2), || {
            format!("((2n n)) n={n}")
        });
    }

    // EQ8 at a = 2 against EQ26
    for n in 1..=30i64 {
        let p = ParamTuple::n(n).with_a(2);
        c.check(TheoremId::ThmEq8, p);
        c.check(TheoremId::ThmEq26, ParamTuple::n(n));
        let v = rhs_value(TheoremId::ThmEq8, &p).unwrap().valuation_diff(
            &rhs_value(TheoremId::ThmEq26, &ParamTuple::n(n)).unwrap(),
            n as u64,
        );
        c.expect(v.at_least(2), || {
            format!("EQ8 a=2 vs EQ26 n={n} valuation={v}")
        });
    }

    for n in odd_up_to(29) {
        for a in 2..=4 {
            // j = 0 in EQ9 and j = n in EQ10 share a left-hand side
            let p9 = ParamTuple::n(n).with_a(a).with_j(0);
            let p10 = ParamTuple::n(n).with_a(a).with_j(n);
            let v = rhs_value(TheoremId::ThmEq9, &p9)
                .unwrap()
                .valuation_diff(&rhs_value(TheoremId::ThmEq10, &p10).unwrap(), n as u64);
            c.expect(v.at_least(1), || {
                format!("EQ9 j=0 vs EQ10 j=n n={n} a={a} valuation={v}")
            });

            // j = n-1 in EQ10 and b = a-1 in EQ11 share a left-hand side
            let p10 = ParamTuple::n(n).with_a(a).with_j(n - 1);
            let p11 = ParamTuple::n(n).with_a(a).with_b(a - 1);
            let v = rhs_value(TheoremId::ThmEq10, &p10)
                .unwrap()
                .valuation_diff(&rhs_value(TheoremId::ThmEq11, &p11).unwrap(), n as u64);
            c.expect(v.at_least(1), || {
                format!("EQ10 j=n-1 vs EQ11 b=a-1 n={n} a={a} valuation={v}")
            });
            c.check(TheoremId::Remark, ParamTuple::n(n).with_a(a));
        }
    }
    c.finish();
}

#[test]
fn criterion_6_oracle() {
    let mut c = Criterion::new("6 q=1 oracle up to n=20", None);
    let outcome = oracle::run(20);
    c.expect(outcome.is_ok(), || {
        format!("{}", outcome.clone().unwrap_err())
    });
    if let Ok(s) = &outcome {
        c.checks += s.comparisons;
    }
    c.finish();
}

#[test]
fn criterion_7_structural() {
    let mut c = Criterion::new(
        "7 structural (cyclotomic product, Pascal, probes, parallel)",
        None,
    );

    for n in 1..=100u64 {
        let product = (1..=n)
            .filter(|d| n % d == 0)
            .fold(LaurentPoly::one(), |acc, d| &acc * &*cyclo(d));
        let target = LaurentPoly::monomial(1, n as i64) - LaurentPoly::one();
        c.expect(product == target, || format!("divisor product n={n}"));
    }

    for n in 0..=40i64 {
        for k in 0..=n {
            let v = qbinom(n, k);
            c.expect(*v == *qbinom(n, n - k), || format!("symmetry n={n} k={k}"));
            c.expect(v.eval_one() == binom(n, k), || {
                format!("q=1 value n={n} k={k}")
            });
            if n >= 1 {
                let left = &*qbinom(n - 1, k - 1) + &qbinom(n - 1, k).shift(k);
                let right = &qbinom(n - 1, k - 1).shift(n - k) + &*qbinom(n - 1, k);
                c.expect(*v == left && *v == right, || format!("Pascal n={n} k={k}"));
            }
        }
    }

    let small = SweepConfig {
        parallel: false,
        fail_fast: false,
        checks: TheoremId::ALL
            .into_iter()
            .map(|id| CheckSpec::new(id).n(0, 11))
            .collect(),
    };
    // A probe perturbs a congruence that holds; where the base check already
    // fails, a perturbation can land on a true statement.
    let mut unprobed = 0;
    for (id, p, _) in small.tuples() {
        if id.validate(&p).is_err() {
            continue;
        }
        if !run_check(id, &p).is_ok_and(|r| r.passed) {
            unprobed += 1;
            continue;
        }
        for perturb in [1, -1, 3] {
            match falsification_probe(id, &p, perturb) {
                Ok(r) => c.expect(!r.passed, || format!("probe {perturb} passed: {id} {p}")),
                Err(e) => c.expect(false, || format!("probe {id} {p}: {e}")),
            }
        }
    }

    println!("criterion 7: {unprobed} tuples with failing base checks not probed");

    let mut serial_cfg = SweepConfig::defaults();
    for spec in &mut serial_cfg.checks {
        *spec = spec.clone().n(0, 15);
    }
    let mut parallel_cfg = serial_cfg.clone();
    parallel_cfg.parallel = true;
    let serial = run_sweep(&serial_cfg, false);
    let parallel = run_sweep(&parallel_cfg, false);
    c.expect(
        serial.records == parallel.records && serial.skipped == parallel.skipped,
        || "parallel records differ from serial".into(),
    );
    let strip = |mut json: serde_json::Value| {
        json["config"]["parallel"] = serde_json::Value::Null;
        json
    };
    let s: serde_json::Value = serde_json::from_str(&serial.golden_json()).unwrap();
    let p: serde_json::Value = serde_json::from_str(&parallel.golden_json()).unwrap();
    c.expect(strip(s) == strip(p), || {
        "parallel golden report differs from serial".into()
    });
    c.finish();
}

#[test]
fn criterion_8_golden_values() {
    let mut c = Criterion::new("8 golden values", None);
    let golden: [(&str, LaurentPoly, &str); 5] = [
        ("cyclo(6)", (*cyclo(6)).clone(), "1 - q + q^2"),
        ("r_n(2)", r_n(2), "-q"),
        ("r_n(3)", r_n(3), "-q - q^2"),
        ("qtrinom(2,0)", (*qtrinom(2, 0)).clone(), "1 + q + q^2"),
        (
            "qbinom(4,2)",
            (*qbinom(4, 2)).clone(),
            "1 + q + 2*q^2 + q^3 + q^4",
        ),
    ];
    for (what, value, text) in golden {
        c.expect(value.to_string() == text, || {
            format!("{what} = {value}, expected {text}")
        });
    }
    c.expect(
        *cyclo(6) == LaurentPoly::from_i64s(0, &[1, -1, 1])
            && r_n(3) == LaurentPoly::from_i64s(1, &[-1, -1])
            && *qbinom(4, 2) == LaurentPoly::from_i64s(0, &[1, 1, 2, 1, 1]),
        || "coefficient vectors".into(),
    );
    c.finish();
}

#[test]
fn valuation_reporting_is_consistent() {
    // passed agrees with the reported valuation for every congruence in a small grid
    for id in TheoremId::ALL {
        let Some(k) = id.modulus_power() else {
            continue;
        };
        let cfg = SweepConfig {
            parallel: false,
            fail_fast: false,
            checks: vec![CheckSpec::new(id).n(1, 9)],
        };
        for (id, p, _) in cfg.tuples() {
            if id.validate(&p).is_err() {
                continue;
            }
            let r = run_check(id, &p).unwrap();
            let v = r.valuation.unwrap();
            assert_eq!(r.passed, v.at_least(k as i64), "{id} {p}");
            assert_eq!(r.passed, r.witness.is_zero(), "{id} {p}");
            if let Valuation::Finite(x) = v {
                assert!(x < k as i64 || r.passed);
            }
        }
    }
}
