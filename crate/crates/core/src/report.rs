//! Declarative sweeps and their JSON reports.
//!
//! A [`SweepConfig`] lists per-theorem parameter ranges. Absent ranges take
//! the engine defaults, which only ever produce legal tuples; explicit ranges
//! are expanded as a cartesian product and illegal tuples are reported as
//! skipped. Records are sorted by theorem id and then parameters, so serial
//! and parallel runs produce the same report apart from timings, which live
//! in the `summary` block.

use std::path::Path;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::congruence::{falsification_probe, run_check, CheckResult, ParamTuple, TheoremId};
use crate::error::{Error, Result};
use crate::polyring::{LaurentPoly, Valuation};

pub const TOOL_NAME: &str = "qcongruence";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Witnesses with more terms than this are replaced by a digest unless full
/// output is requested.
pub const WITNESS_ELIDE_TERMS: usize = 200;

pub const DEFAULT_MAX_N: i64 = 30;
pub const DEFAULT_MAX_A: i64 = 5;

/// Inclusive range, written `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct IntRange {
    pub lo: i64,
    pub hi: i64,
}

impl IntRange {
    pub fn new(lo: i64, hi: i64) -> Self {
        Self { lo, hi }
    }

    fn iter(self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

impl From<[i64; 2]> for IntRange {
    fn from([lo, hi]: [i64; 2]) -> Self {
        Self { lo, hi }
    }
}

impl From<IntRange> for [i64; 2] {
    fn from(r: IntRange) -> Self {
        [r.lo, r.hi]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckSpec {
    pub theorem: TheoremId,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<IntRange>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<IntRange>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<IntRange>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<IntRange>,
    /// Runs falsification probes with this perturbation instead of the plain check.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub probe: Option<i64>,
}

impl CheckSpec {
    pub fn new(theorem: TheoremId) -> Self {
        Self {
            theorem,
            n: None,
            a: None,
            b: None,
            j: None,
            probe: None,
        }
    }

    pub fn n(mut self, lo: i64, hi: i64) -> Self {
        self.n = Some(IntRange::new(lo, hi));
        self
    }

    pub fn a(mut self, lo: i64, hi: i64) -> Self {
        self.a = Some(IntRange::new(lo, hi));
        self
    }

    pub fn b(mut self, lo: i64, hi: i64) -> Self {
        self.b = Some(IntRange::new(lo, hi));
        self
    }

    pub fn j(mut self, lo: i64, hi: i64) -> Self {
        self.j = Some(IntRange::new(lo, hi));
        self
    }

    pub fn probe(mut self, perturb: i64) -> Self {
        self.probe = Some(perturb);
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    #[serde(default)]
    pub parallel: bool,
    #[serde(default)]
    pub fail_fast: bool,
    pub checks: Vec<CheckSpec>,
}

fn requires_odd_n(id: TheoremId) -> bool {
    matches!(
        id,
        TheoremId::ThmEq9
            | TheoremId::ThmEq10
            | TheoremId::ThmEq11
            | TheoremId::Thm7Sum
            | TheoremId::Eq22
            | TheoremId::Remark
    )
}

fn default_n_values(id: TheoremId) -> Vec<i64> {
    let lo = match id {
        TheoremId::Lemma1 | TheoremId::Lemma2 => 0,
        _ => 1,
    };
    let odd = requires_odd_n(id);
    (lo..=DEFAULT_MAX_N)
        .filter(|n| !odd || n % 2 == 1)
        .collect()
}

fn default_a_values(id: TheoremId) -> Vec<i64> {
    let lo = match id {
        TheoremId::Straub => 0,
        TheoremId::ThmEq7 | TheoremId::ThmEq9 | TheoremId::Eq18 => 1,
        _ => 2,
    };
    (lo..=DEFAULT_MAX_A).collect()
}

fn default_b_values(id: TheoremId, a: i64) -> Vec<i64> {
    match id {
        TheoremId::Straub => (0..=a).collect(),
        TheoremId::ThmEq11 => ((a - 2).max(1)..=a - 1).collect(),
        _ => Vec::new(),
    }
}

fn default_j_values(id: TheoremId, n: i64) -> Vec<i64> {
    match id {
        TheoremId::ThmEq9 | TheoremId::Thm7Sum => (0..n).collect(),
        TheoremId::ThmEq10 => (0..=n).collect(),
        _ => Vec::new(),
    }
}

impl SweepConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: SweepConfig =
            serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn validate(&self) -> Result<()> {
        if self.checks.is_empty() {
            return Err(Error::Config("no checks configured".into()));
        }
        for spec in &self.checks {
            let shape = spec.theorem.shape();
            let name = spec.theorem.name();
            for (field, wanted, range) in [
                ("n", true, spec.n),
                ("a", shape.a, spec.a),
                ("b", shape.b, spec.b),
                ("j", shape.j, spec.j),
            ] {
                if let Some(r) = range {
                    if !wanted {
                        return Err(Error::Config(format!("{name} takes no parameter {field}")));
                    }
                    if r.lo > r.hi {
                        return Err(Error::Config(format!(
                            "{name}: empty range for {field}: [{}, {}]",
                            r.lo, r.hi
                        )));
                    }
                }
            }
            if spec.probe == Some(0) {
                return Err(Error::Config(format!(
                    "{name}: probe perturbation must be nonzero"
                )));
            }
        }
        Ok(())
    }

    /// Default sweep over every theorem with engine-default ranges.
    pub fn defaults() -> Self {
        Self {
            parallel: false,
            fail_fast: false,
            checks: TheoremId::ALL.into_iter().map(CheckSpec::new).collect(),
        }
    }

    /// Expands every entry into parameter tuples, in config order.
    pub fn tuples(&self) -> Vec<(TheoremId, ParamTuple, Option<i64>)> {
        let mut out = Vec::new();
        for spec in &self.checks {
            let id = spec.theorem;
            let shape = id.shape();
            let ns: Vec<i64> = match spec.n {
                Some(r) => r.iter().collect(),
                None => default_n_values(id),
            };
            for &n in &ns {
                let a_values: Vec<Option<i64>> = if shape.a {
                    match spec.a {
                        Some(r) => r.iter().map(Some).collect(),
                        None => default_a_values(id).into_iter().map(Some).collect(),
                    }
                } else {
                    vec![None]
                };
                for &a in &a_values {
                    let b_values: Vec<Option<i64>> = if shape.b {
                        match spec.b {
                            Some(r) => r.iter().map(Some).collect(),
                            None => default_b_values(id, a.unwrap_or(0))
                                .into_iter()
                                .map(Some)
                                .collect(),
                        }
                    } else {
                        vec![None]
                    };
                    let j_values: Vec<Option<i64>> = if shape.j {
                        match spec.j {
                            Some(r) => r.iter().map(Some).collect(),
                            None => default_j_values(id, n).into_iter().map(Some).collect(),
                        }
                    } else {
                        vec![None]
                    };
                    for &b in &b_values {
                        for &j in &j_values {
                            out.push((id, ParamTuple { n, a, b, j }, spec.probe));
                        }
                    }
                }
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// report

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub theorem: TheoremId,
    #[serde(flatten)]
    pub params: ParamTuple,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub probe: Option<i64>,
    pub passed: bool,
    pub witness: String,
    /// Integer, `"inf"`, or null for exact identities.
    pub valuation: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Record {
    /// Probe records are expected to fail.
    pub fn is_expected_fail(&self) -> bool {
        self.probe.is_some() && !self.passed
    }

    fn sort_key(&self) -> (TheoremId, ParamTuple, Option<i64>) {
        (self.theorem, self.params, self.probe)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skipped {
    pub theorem: TheoremId,
    #[serde(flatten)]
    pub params: ParamTuple,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub probe: Option<i64>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub theorem: TheoremId,
    #[serde(flatten)]
    pub params: ParamTuple,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub probe: Option<i64>,
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub expected_fail: usize,
    pub elapsed_ms: f64,
    pub timings: Vec<Timing>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub config: SweepConfig,
    pub records: Vec<Record>,
    pub skipped: Vec<Skipped>,
    pub summary: Summary,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.summary.failed > 0 {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The report without timing data, for golden comparisons.
    pub fn golden_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if let Some(summary) = v.get_mut("summary").and_then(Value::as_object_mut) {
            summary.remove("elapsed_ms");
            summary.remove("timings");
        }
        serde_json::to_string_pretty(&v).expect("value serializes")
    }
}

fn digest(p: &LaurentPoly) -> String {
    let hash = Sha256::digest(p.to_string().as_bytes());
    format!(
        "<elided terms={} span=[{},{}] sha256={}>",
        p.term_count(),
        p.min_exp(),
        p.max_exp().unwrap_or(0),
        hex::encode(&hash[..8])
    )
}

/// Canonical rendering, or a digest (exponent span plus a hash of the
/// rendering) for witnesses over [`WITNESS_ELIDE_TERMS`] terms.
pub fn render_witness(p: &LaurentPoly, full: bool) -> String {
    if !full && p.term_count() > WITNESS_ELIDE_TERMS {
        digest(p)
    } else {
        p.to_string()
    }
}

pub fn valuation_value(v: Option<Valuation>) -> Value {
    match v {
        None => Value::Null,
        Some(Valuation::Infinite) => Value::String("inf".into()),
        Some(Valuation::Finite(k)) => Value::from(k),
    }
}

enum Outcome {
    Ran(Record, Duration),
    Skipped(Skipped),
}

fn record_from(r: &CheckResult, full_witness: bool) -> Record {
    Record {
        theorem: r.theorem,
        params: r.params,
        probe: r.probe,
        passed: r.passed,
        witness: render_witness(&r.witness, full_witness),
        valuation: valuation_value(r.valuation),
        error: None,
    }
}

fn run_one(id: TheoremId, p: ParamTuple, probe: Option<i64>, full_witness: bool) -> Outcome {
    if let Err(e) = id.validate(&p) {
        let reason = match e {
            Error::Schema { reason, .. } => reason,
            other => other.to_string(),
        };
        return Outcome::Skipped(Skipped {
            theorem: id,
            params: p,
            probe,
            reason,
        });
    }
    let start = Instant::now();
    let result = match probe {
        Some(c) => falsification_probe(id, &p, c),
        None => run_check(id, &p),
    };
    let elapsed = start.elapsed();
    let record = match result {
        Ok(r) => record_from(&r, full_witness),
        // schema was validated above; anything else is a falsification event
        Err(e) => Record {
            theorem: id,
            params: p,
            probe,
            passed: false,
            witness: String::new(),
            valuation: Value::Null,
            error: Some(e.to_string()),
        },
    };
    Outcome::Ran(record, elapsed)
}

fn counts_as_failure(r: &Record) -> bool {
    match r.probe {
        Some(_) => r.passed,
        None => !r.passed,
    }
}

/// Runs every configured tuple and assembles the report.
pub fn run_sweep(config: &SweepConfig, full_witness: bool) -> Report {
    let start = Instant::now();
    let tuples = config.tuples();
    let stop = AtomicBool::new(false);
    let task = |&(id, p, probe): &(TheoremId, ParamTuple, Option<i64>)| -> Outcome {
        if config.fail_fast && stop.load(Ordering::SeqCst) {
            return Outcome::Skipped(Skipped {
                theorem: id,
                params: p,
                probe,
                reason: "not run: fail-fast after an earlier failure".into(),
            });
        }
        let out = run_one(id, p, probe, full_witness);
        if let Outcome::Ran(r, _) = &out {
            if counts_as_failure(r) {
                stop.store(true, Ordering::SeqCst);
            }
        }
        out
    };
    let outcomes: Vec<Outcome> = if config.parallel {
        tuples.par_iter().map(task).collect()
    } else {
        tuples.iter().map(task).collect()
    };

    let mut ran: Vec<(Record, Duration)> = Vec::new();
    let mut skipped = Vec::new();
    for o in outcomes {
        match o {
            Outcome::Ran(r, d) => ran.push((r, d)),
            Outcome::Skipped(s) => skipped.push(s),
        }
    }
    ran.sort_by_key(|(r, _)| r.sort_key());
    skipped.sort_by_key(|s| (s.theorem, s.params, s.probe));

    let mut passed = 0;
    let mut failed = 0;
    let mut expected_fail = 0;
    for (r, _) in &ran {
        if r.is_expected_fail() {
            expected_fail += 1;
        } else if counts_as_failure(r) {
            failed += 1;
        } else {
            passed += 1;
        }
    }
    let timings = ran
        .iter()
        .map(|(r, d)| Timing {
            theorem: r.theorem,
            params: r.params,
            probe: r.probe,
            elapsed_ms: d.as_secs_f64() * 1e3,
        })
        .collect();
    let records: Vec<Record> = ran.into_iter().map(|(r, _)| r).collect();
    Report {
        tool: TOOL_NAME.into(),
        version: TOOL_VERSION.into(),
        config: config.clone(),
        summary: Summary {
            passed,
            failed,
            skipped: skipped.len(),
            expected_fail,
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
            timings,
        },
        records,
        skipped,
    }
}
