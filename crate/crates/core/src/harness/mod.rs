//! Executable experiment suites: every semantic claim the toolkit depends
//! on, packaged as named experiments producing pass/fail reports with
//! witnesses. Experiments are deterministic given their seed and budget;
//! both are embedded in the report.

pub mod fixtures;

mod experiments;

use serde::Serialize;

/// One failed assertion, with enough context to reproduce it.
#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub instance: String,
    pub expected: String,
    pub got: String,
    pub witness: String,
}

/// Outcome of one experiment.
#[derive(Debug, Clone, Serialize)]
pub struct ExperimentReport {
    pub experiment: String,
    /// Assertions checked.
    pub checks: u64,
    pub failures: Vec<Failure>,
    /// Observations that are reported rather than asserted.
    pub notes: Vec<String>,
    pub budget: String,
    pub seed: u64,
}

impl ExperimentReport {
    pub(crate) fn new(experiment: &str, budget: String, seed: u64) -> Self {
        ExperimentReport {
            experiment: experiment.to_string(),
            checks: 0,
            failures: Vec::new(),
            notes: Vec::new(),
            budget,
            seed,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub(crate) fn check(
        &mut self,
        ok: bool,
        instance: impl FnOnce() -> String,
        expected: impl FnOnce() -> String,
        got: impl FnOnce() -> String,
        witness: impl FnOnce() -> String,
    ) {
        self.checks += 1;
        if !ok {
            self.failures.push(Failure {
                instance: instance(),
                expected: expected(),
                got: got(),
                witness: witness(),
            });
        }
    }

    pub(crate) fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Human-readable summary, one block per experiment.
    pub fn render(&self) -> String {
        let mut out = format!(
            "{}: {} — {} checks (budget {}, seed {})\n",
            self.experiment,
            if self.passed() { "PASS" } else { "FAIL" },
            self.checks,
            self.budget,
            self.seed,
        );
        for n in &self.notes {
            out.push_str(&format!("  note: {n}\n"));
        }
        for f in self.failures.iter().take(20) {
            out.push_str(&format!(
                "  FAIL {}: expected {}, got {}\n    witness: {}\n",
                f.instance, f.expected, f.got, f.witness
            ));
        }
        if self.failures.len() > 20 {
            out.push_str(&format!("  ... and {} more failures\n", self.failures.len() - 20));
        }
        out
    }
}

/// Budgets and seeds for the experiments.
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    /// Exhaustive frame bound for "on every frame" claims.
    pub max_worlds: usize,
    /// Formula-size bound for separation searches.
    pub max_size: usize,
    /// Randomized trials for the duality and exact-truth experiments.
    pub trials: u64,
    /// Random formulas evaluated on the glut/gap fixed points.
    pub formula_samples: usize,
    /// Inference-rule instances sampled for the ignorance experiment.
    pub rule_samples: usize,
    /// When set, the tableau/oracle agreement sweep uses a seeded random
    /// sample of this many sequents instead of the full battery.
    pub agreement_sample: Option<usize>,
    pub seed: u64,
    pub model_cap: u64,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            max_worlds: 3,
            max_size: 6,
            trials: 10_000,
            formula_samples: 500,
            rule_samples: 100,
            agreement_sample: None,
            seed: 0xBD,
            model_cap: 1 << 32,
        }
    }
}

pub const EXPERIMENT_NAMES: &[&str] = &[
    "figures",
    "no-validities",
    "duality",
    "knowledge",
    "ignorance",
    "definability",
    "separations",
    "remarks",
    "agreement",
];

/// Run one experiment by name.
pub fn run_experiment(name: &str, cfg: &ExperimentConfig) -> Option<ExperimentReport> {
    let report = match name {
        "figures" => experiments::figures(cfg),
        "no-validities" => experiments::no_validities(cfg),
        "duality" => experiments::duality(cfg),
        "knowledge" => experiments::knowledge(cfg),
        "ignorance" => experiments::ignorance(cfg),
        "definability" => experiments::definability(cfg),
        "separations" => experiments::separations(cfg),
        "remarks" => experiments::remarks(cfg),
        "agreement" => experiments::agreement(cfg),
        _ => return None,
    };
    Some(report)
}

/// Run every experiment in the fixed order.
pub fn run_all(cfg: &ExperimentConfig) -> Vec<ExperimentReport> {
    EXPERIMENT_NAMES
        .iter()
        .map(|n| run_experiment(n, cfg).expect("registered name"))
        .collect()
}
