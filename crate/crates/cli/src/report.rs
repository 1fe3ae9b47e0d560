//! Evaluation of named identity groups and the reports built from them.
//!
//! A [`Runner`] collects sections in order. With an oracle attached, every
//! identity is also evaluated on random element tuples and the two verdicts
//! are compared; by multilinearity they can only differ through a bug.

use std::collections::BTreeMap;

use antiflex_algebra::{CheckReport, Identity, Witness, WitnessMode};
use antiflex_linear::{format_scalar, Vector, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentitySummary {
    pub label: String,
    pub tuples: usize,
    pub failing: usize,
}

#[derive(Clone, Debug)]
pub struct Section {
    pub report: CheckReport,
    pub identities: Vec<IdentitySummary>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleRecord {
    pub label: String,
    pub basis_passed: bool,
    pub random_passed: bool,
}

pub struct Oracle {
    pub trials: usize,
    pub seed: u64,
    rng: ChaCha8Rng,
    pub records: Vec<OracleRecord>,
}

impl Oracle {
    pub fn new(trials: usize, seed: u64) -> Self {
        Oracle { trials, seed, rng: ChaCha8Rng::seed_from_u64(seed), records: Vec::new() }
    }

    /// `true` when every trial gives a zero residual.
    fn random_verdict(&mut self, id: &Identity<'_>) -> bool {
        for _ in 0..self.trials {
            let args: Vec<Vector> = id.arg_dims.iter().map(|&d| Vector::random(d, &mut self.rng)).collect();
            if id.residual(&args).iter().any(|x| !x.is_zero()) {
                return false;
            }
        }
        true
    }

    pub fn agrees(&self) -> bool {
        self.records.iter().all(|r| r.basis_passed == r.random_passed)
    }
}

pub struct Runner {
    pub mode: WitnessMode,
    pub sections: Vec<Section>,
    pub oracle: Option<Oracle>,
    pub notes: BTreeMap<String, Value>,
}

impl Runner {
    pub fn new(mode: WitnessMode) -> Self {
        Runner { mode, sections: Vec::new(), oracle: None, notes: BTreeMap::new() }
    }

    pub fn with_oracle(mode: WitnessMode, trials: usize, seed: u64) -> Self {
        Runner { oracle: Some(Oracle::new(trials, seed)), ..Runner::new(mode) }
    }

    /// Evaluates `ids` on every basis tuple and records the section.
    pub fn identities(&mut self, name: &str, ids: &[Identity<'_>]) -> bool {
        let mut report = CheckReport::pass(name);
        let mut summaries = Vec::new();
        for id in ids {
            let fails = id.all_failures();
            summaries.push(IdentitySummary { label: id.label.clone(), tuples: id.tuple_count(), failing: fails.len() });
            if let Some(o) = self.oracle.as_mut() {
                let random_passed = o.random_verdict(id);
                o.records.push(OracleRecord { label: id.label.clone(), basis_passed: fails.is_empty(), random_passed });
            }
            if report.passed && !fails.is_empty() {
                report.passed = false;
                report.witness = Some(fails[0].clone());
            }
            if self.mode == WitnessMode::All {
                report.all_witnesses.extend(fails);
            }
        }
        let passed = report.passed;
        self.sections.push(Section { report, identities: summaries });
        passed
    }

    /// Records a verdict computed elsewhere.
    pub fn report(&mut self, report: CheckReport) -> bool {
        let passed = report.passed;
        self.sections.push(Section { report, identities: Vec::new() });
        passed
    }

    pub fn note(&mut self, key: &str, value: Value) {
        self.notes.insert(key.to_string(), value);
    }

    pub fn passed(&self) -> bool {
        self.sections.iter().all(|s| s.report.passed)
    }

    pub fn first_witness(&self) -> Option<&Witness> {
        self.sections.iter().find_map(|s| s.report.witness.as_ref())
    }

    /// An oracle disagreement is an implementation bug, never a verdict.
    pub fn oracle_error(&self) -> Option<CliError> {
        let o = self.oracle.as_ref()?;
        let bad: Vec<&str> =
            o.records.iter().filter(|r| r.basis_passed != r.random_passed).map(|r| r.label.as_str()).collect();
        (!bad.is_empty()).then(|| {
            CliError::Internal(format!("basis and random-element verdicts differ for {}", bad.join("; ")))
        })
    }
}

pub fn witness_json(w: &Witness) -> Value {
    json!({
        "identity": w.identity,
        "indices": w.indices,
        "residual": w.residual.iter().map(format_scalar).collect::<Vec<_>>(),
    })
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "fail"
    }
}

/// The JSON report. Keys are sorted, so equal inputs give equal bytes.
pub fn report_json(command: &str, kind: &str, inputs: &[String], runner: &Runner) -> Value {
    let sections: Vec<Value> = runner
        .sections
        .iter()
        .map(|s| {
            json!({
                "name": s.report.identity_name,
                "verdict": verdict(s.report.passed),
                "identities": s.identities.iter().map(|i| json!({
                    "label": i.label,
                    "tuples": i.tuples,
                    "failing_tuples": i.failing,
                })).collect::<Vec<_>>(),
                "witness": s.report.witness.as_ref().map(witness_json),
            })
        })
        .collect();
    let mut out = json!({
        "command": command,
        "kind": kind,
        "inputs": inputs,
        "verdict": verdict(runner.passed()),
        "sections": sections,
        "witness": runner.first_witness().map(witness_json),
    });
    let obj = out.as_object_mut().expect("object literal");
    if runner.mode == WitnessMode::All {
        let all: Vec<Value> =
            runner.sections.iter().flat_map(|s| s.report.all_witnesses.iter().map(witness_json)).collect();
        obj.insert("all_witnesses".into(), Value::Array(all));
    }
    if !runner.notes.is_empty() {
        obj.insert("notes".into(), json!(runner.notes));
    }
    if let Some(o) = &runner.oracle {
        obj.insert(
            "oracle".into(),
            json!({
                "seed": o.seed,
                "trials": o.trials,
                "agreement": o.agrees(),
                "identities": o.records.iter().map(|r| json!({
                    "label": r.label,
                    "basis": verdict(r.basis_passed),
                    "random": verdict(r.random_passed),
                })).collect::<Vec<_>>(),
            }),
        );
    }
    out
}

/// Plain-text report: one line per section, then the verdict.
pub fn report_text(command: &str, kind: &str, runner: &Runner) -> String {
    let mut out = String::new();
    for s in &runner.sections {
        out.push_str(&format!("{}\n", s.report));
        if runner.mode == WitnessMode::All {
            for w in &s.report.all_witnesses {
                out.push_str(&format!("  {w}\n"));
            }
        }
    }
    for (k, v) in &runner.notes {
        out.push_str(&format!("{k}: {v}\n"));
    }
    if let Some(o) = &runner.oracle {
        let state = if o.agrees() { "agree" } else { "DISAGREE" };
        out.push_str(&format!("oracle: {state} over {} trials (seed {})\n", o.trials, o.seed));
    }
    out.push_str(&format!("{command} {kind}: {}\n", verdict(runner.passed())));
    out
}
