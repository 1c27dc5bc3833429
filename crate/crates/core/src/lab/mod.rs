//! Executable claims about Hilbert coefficients, run over a built-in corpus or user input.

mod checks;
mod corpus;
mod modules;
mod planes;
mod run;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use checks::{
    descent_check, goto_nishida_check, huckaba_marley_check, northcott_check, ses_e1_check,
    sign_test,
};
pub use corpus::{Corpus, CorpusEntry, EntryFlags, ModuleEntry};
pub use modules::module_check;
pub use planes::{annihilator_ideal, lambda_by_hilbert_functions, plane_union_check};
pub use run::{run_corpus, run_suite, Suite};

use crate::config::Config;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    HypothesisUnverified,
    Unstable,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::HypothesisUnverified => "hypothesis_unverified",
            Verdict::Unstable => "unstable",
        }
    }

    pub fn from_bool(ok: bool) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    SignTest,
    SesE1,
    Descent,
    Northcott,
    GotoNishida,
    HuckabaMarley,
    Planes,
    ModuleCheck,
    Coefficients,
    GroebnerBasis,
    Dimension,
    Depth,
    CohenMacaulay,
    Length,
    Reduction,
    Superficial,
    Lift,
}

impl Claim {
    pub fn as_str(&self) -> &'static str {
        match self {
            Claim::SignTest => "sign_test",
            Claim::SesE1 => "ses_e1",
            Claim::Descent => "descent",
            Claim::Northcott => "northcott",
            Claim::GotoNishida => "goto_nishida",
            Claim::HuckabaMarley => "huckaba_marley",
            Claim::Planes => "planes",
            Claim::ModuleCheck => "module_check",
            Claim::Coefficients => "coefficients",
            Claim::GroebnerBasis => "groebner_basis",
            Claim::Dimension => "dimension",
            Claim::Depth => "depth",
            Claim::CohenMacaulay => "cohen_macaulay",
            Claim::Length => "length",
            Claim::Reduction => "reduction",
            Claim::Superficial => "superficial",
            Claim::Lift => "lift",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One checked claim with its inputs and integer evidence.
///
/// `e` is the headline coefficient vector; `evectors` and `lengths` hold the rest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub claim: Claim,
    pub entry: String,
    pub inputs: BTreeMap<String, String>,
    pub e: Vec<i64>,
    pub evectors: BTreeMap<String, Vec<i64>>,
    pub lengths: BTreeMap<String, i64>,
    pub verdict: Verdict,
    pub seed: u64,
    pub config: Config,
    pub notes: Vec<String>,
}

impl ExperimentReport {
    pub fn new(claim: Claim, entry: &str, seed: u64, config: &Config) -> Self {
        ExperimentReport {
            claim,
            entry: entry.to_string(),
            inputs: BTreeMap::new(),
            e: Vec::new(),
            evectors: BTreeMap::new(),
            lengths: BTreeMap::new(),
            verdict: Verdict::Unstable,
            seed,
            config: config.clone(),
            notes: Vec::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl fmt::Display) {
        self.inputs.insert(key.to_string(), value.to_string());
    }

    pub fn evector(&mut self, key: &str, e: &[i64]) {
        self.evectors.insert(key.to_string(), e.to_vec());
    }

    pub fn length(&mut self, key: &str, value: i64) {
        self.lengths.insert(key.to_string(), value);
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// `λ` column of the flat table, when the claim measured one.
    pub fn lambda(&self) -> Option<i64> {
        self.lengths.get("lambda").copied()
    }
}

/// Runs `body`, turning genericity, instability and limit errors into an `unstable`
/// verdict; input errors propagate.
pub fn guarded(
    claim: Claim,
    entry: &str,
    seed: u64,
    config: &Config,
    body: impl FnOnce(&mut ExperimentReport) -> Result<Verdict>,
) -> Result<ExperimentReport> {
    let mut report = ExperimentReport::new(claim, entry, seed, config);
    match body(&mut report) {
        Ok(v) => report.verdict = v,
        Err(e) if e.is_computational_shortfall() => {
            report.verdict = Verdict::Unstable;
            report.note(e.to_string());
        }
        Err(e) => return Err(e),
    }
    Ok(report)
}
