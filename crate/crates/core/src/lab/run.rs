use std::collections::HashSet;
use std::str::FromStr;

use rayon::prelude::*;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::groebner::IdealHandle;
use crate::rng::derive_seed;

use super::{
    descent_check, goto_nishida_check, huckaba_marley_check, module_check, northcott_check,
    plane_union_check, ses_e1_check, sign_test, Claim, Corpus, ExperimentReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Paper,
    Cm,
    NonCm,
    Modules,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Ok(match s {
            "paper" => Suite::Paper,
            "cm" => Suite::Cm,
            "noncm" => Suite::NonCm,
            "modules" => Suite::Modules,
            "all" => Suite::All,
            other => {
                return Err(Error::input(format!(
                    "unknown suite `{other}` (expected paper, cm, noncm, modules or all)"
                )))
            }
        })
    }
}

type JobFn<'a> = Box<dyn Fn(u64) -> Result<ExperimentReport> + Send + Sync + 'a>;

struct Job<'a> {
    claim: Claim,
    label: String,
    run: JobFn<'a>,
}

struct Plan<'a> {
    corpus: &'a Corpus,
    config: &'a Config,
    jobs: Vec<Job<'a>>,
    seen: HashSet<(Claim, String)>,
}

impl<'a> Plan<'a> {
    fn push(&mut self, claim: Claim, label: String, run: JobFn<'a>) {
        if self.seen.insert((claim, label.clone())) {
            self.jobs.push(Job { claim, label, run });
        }
    }

    fn ideal(&self, entry: &str, gens: &[&str]) -> Option<IdealHandle> {
        let e = self.corpus.ring(entry)?;
        IdealHandle::from_strs(e.ring.base(), gens).ok()
    }

    fn maximal(&self, entry: &str) -> Option<IdealHandle> {
        Some(IdealHandle::maximal(self.corpus.ring(entry)?.ring.base()))
    }

    fn sign(&mut self, entry: &str) {
        let (Some(e), config) = (self.corpus.ring(entry), self.config) else {
            return;
        };
        self.push(
            Claim::SignTest,
            entry.into(),
            Box::new(move |s| sign_test(e, config, s)),
        );
    }

    fn descent(&mut self, entry: &str, tag: &str, ideal: Option<IdealHandle>) {
        let (Some(e), Some(i), config) = (self.corpus.ring(entry), ideal, self.config) else {
            return;
        };
        let label = format!("{entry}/{tag}");
        let name = label.clone();
        self.push(
            Claim::Descent,
            label,
            Box::new(move |s| descent_check(&name, &e.ring, &i, config, s)),
        );
    }

    fn northcott(&mut self, entry: &str, tag: &str, ideal: Option<IdealHandle>) {
        let (Some(e), Some(i), config) = (self.corpus.ring(entry), ideal, self.config) else {
            return;
        };
        let label = format!("{entry}/{tag}");
        let name = label.clone();
        self.push(
            Claim::Northcott,
            label,
            Box::new(move |s| northcott_check(&name, &e.ring, &i, config, s)),
        );
    }

    fn goto_nishida(&mut self, entry: &str, tag: &str, ideal: Option<IdealHandle>) {
        let (Some(e), Some(i), config) = (self.corpus.ring(entry), ideal, self.config) else {
            return;
        };
        let label = format!("{entry}/{tag}");
        let name = label.clone();
        self.push(
            Claim::GotoNishida,
            label,
            Box::new(move |s| goto_nishida_check(&name, &e.ring, &i, None, config, s)),
        );
    }

    fn huckaba(
        &mut self,
        entry: &str,
        tag: &str,
        ideal: Option<IdealHandle>,
        j: Option<IdealHandle>,
    ) {
        let (Some(e), Some(i), config) = (self.corpus.ring(entry), ideal, self.config) else {
            return;
        };
        let label = format!("{entry}/{tag}");
        let name = label.clone();
        self.push(
            Claim::HuckabaMarley,
            label,
            Box::new(move |s| huckaba_marley_check(&name, &e.ring, &i, j.as_ref(), config, s)),
        );
    }

    fn planes(&mut self, entry: &str) {
        let (Some(e), config) = (self.corpus.ring(entry), self.config) else {
            return;
        };
        if e.components.is_empty() {
            return;
        }
        self.push(
            Claim::Planes,
            entry.into(),
            Box::new(move |s| plane_union_check(&e.name, &e.components, config, s)),
        );
    }

    /// Torsion examples in three variables: `L0 = x·(x, y, z)` and `L0 = (x^3, xy, xz)`.
    fn ses(&mut self) {
        let Some(e) = self.corpus.ring("poly3") else {
            return;
        };
        let base = e.ring.base();
        let config = self.config;
        for (tag, gens) in [
            ("ses-x", ["x^2", "x*y", "x*z"]),
            ("ses-x3", ["x^3", "x*y", "x*z"]),
        ] {
            let Ok(l0) = IdealHandle::from_strs(base, &gens) else {
                continue;
            };
            let m = IdealHandle::maximal(base);
            self.push(
                Claim::SesE1,
                tag.into(),
                Box::new(move |s| ses_e1_check(tag, base, &l0, &m, config, s)),
            );
        }
        if let Ok(l0) = IdealHandle::from_strs(base, &["x^2", "x*y", "x*z"]) {
            let ring = crate::alg::RingDesc::from_ideal(&l0);
            let m = IdealHandle::maximal(base);
            self.push(
                Claim::Descent,
                "ses-x/m".into(),
                Box::new(move |s| descent_check("ses-x/m", &ring, &m, config, s)),
            );
        }
    }

    fn module(&mut self, name: &str) {
        let config = self.config;
        let Some(m) = self.corpus.modules.iter().find(|m| m.name == name) else {
            return;
        };
        self.push(
            Claim::ModuleCheck,
            name.into(),
            Box::new(move |s| module_check(&m.name, &m.module, config, s)),
        );
    }

    fn paper(&mut self) {
        self.planes("two-planes");
        self.planes("three-planes");
        for e in ["two-planes", "three-planes", "curve345", "poly2"] {
            self.sign(e);
        }
        self.ses();
        self.descent("poly2", "m", self.maximal("poly2"));
        self.descent(
            "two-planes",
            "J",
            self.ideal("two-planes", &["x1 + x3", "x2 + x4"]),
        );
        self.descent("two-planes", "m", self.maximal("two-planes"));
        self.descent("curve345", "m", self.maximal("curve345"));
        self.northcott("poly2", "m2", self.ideal("poly2", &["x^2", "x*y", "y^2"]));
        self.northcott("poly2", "m", self.maximal("poly2"));
        self.northcott("curve345", "m", self.maximal("curve345"));
        self.goto_nishida("two-planes", "m", self.maximal("two-planes"));
        self.goto_nishida("curve345", "m", self.maximal("curve345"));
        self.huckaba(
            "poly2",
            "m2",
            self.ideal("poly2", &["x^2", "x*y", "y^2"]),
            self.ideal("poly2", &["x^2", "y^2"]),
        );
        self.huckaba(
            "curve345",
            "m",
            self.maximal("curve345"),
            self.ideal("curve345", &["x"]),
        );
        self.module("ideal-m");
        self.module("free-rank2");
    }

    fn cm(&mut self) {
        let names: Vec<String> = self
            .corpus
            .rings
            .iter()
            .filter(|e| e.flags.cm_expected)
            .map(|e| e.name.clone())
            .collect();
        for e in &names {
            self.sign(e);
            self.northcott(e, "m", self.maximal(e));
            self.huckaba(e, "m", self.maximal(e), None);
            self.descent(e, "m", self.maximal(e));
        }
    }

    fn noncm(&mut self) {
        let names: Vec<String> = self
            .corpus
            .rings
            .iter()
            .filter(|e| !e.flags.cm_expected)
            .map(|e| e.name.clone())
            .collect();
        for e in &names {
            self.sign(e);
            self.goto_nishida(e, "m", self.maximal(e));
            self.descent(e, "m", self.maximal(e));
        }
    }

    fn modules(&mut self) {
        let names: Vec<String> = self.corpus.modules.iter().map(|m| m.name.clone()).collect();
        for m in &names {
            self.module(m);
        }
    }
}

/// Runs the checks of `suite` over `corpus`; reports come back in plan order whatever the
/// scheduling, each seeded from `(seed, label, claim)`.
pub fn run_suite(corpus: &Corpus, suite: Suite, config: &Config) -> Result<Vec<ExperimentReport>> {
    let mut plan = Plan {
        corpus,
        config,
        jobs: Vec::new(),
        seen: HashSet::new(),
    };
    match suite {
        Suite::Paper => plan.paper(),
        Suite::Cm => plan.cm(),
        Suite::NonCm => plan.noncm(),
        Suite::Modules => plan.modules(),
        Suite::All => {
            plan.paper();
            plan.cm();
            plan.noncm();
            plan.modules();
        }
    }
    let seed = config.seed;
    plan.jobs
        .par_iter()
        .map(|job| (job.run)(derive_seed(seed, &[&job.label, job.claim.as_str()])))
        .collect()
}

/// The built-in corpus over `F_p` with `p = config.characteristic`.
pub fn run_corpus(suite: &str, config: &Config) -> Result<Vec<ExperimentReport>> {
    let suite: Suite = suite.parse()?;
    let corpus = Corpus::builtin(config.characteristic)?;
    run_suite(&corpus, suite, config)
}
