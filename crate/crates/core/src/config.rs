//! Run settings shared by the structure checks, the lab and the command line.

use serde::{Deserialize, Serialize};

use crate::alg::DEFAULT_CHARACTERISTIC;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    pub seed: u64,
    /// Fit bound `N`; `None` uses `max(2d + 6, 12)`.
    pub nmax: Option<usize>,
    /// Random parameter ideals drawn per sign test.
    pub trials: usize,
    /// Retries for randomized searches before a genericity failure.
    pub genericity_trials: usize,
    pub c_max: usize,
    pub s_max: usize,
    pub characteristic: u32,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: 42,
            nmax: None,
            trials: 20,
            genericity_trials: 8,
            c_max: 5,
            s_max: 10,
            characteristic: DEFAULT_CHARACTERISTIC,
        }
    }
}

/// Optional overrides, applied over a base configuration.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub nmax: Option<usize>,
    pub trials: Option<usize>,
    pub genericity_trials: Option<usize>,
    pub c_max: Option<usize>,
    pub s_max: Option<usize>,
    pub characteristic: Option<u32>,
}

impl Overrides {
    pub fn apply(&self, base: &Config) -> Config {
        Config {
            seed: self.seed.unwrap_or(base.seed),
            nmax: self.nmax.or(base.nmax),
            trials: self.trials.unwrap_or(base.trials),
            genericity_trials: self.genericity_trials.unwrap_or(base.genericity_trials),
            c_max: self.c_max.unwrap_or(base.c_max),
            s_max: self.s_max.unwrap_or(base.s_max),
            characteristic: self.characteristic.unwrap_or(base.characteristic),
        }
    }

    /// Sets one key from a script directive such as `set nmax=12;`.
    pub fn set(&mut self, key: &str, value: u64) -> Result<(), String> {
        match key {
            "seed" => self.seed = Some(value),
            "nmax" => self.nmax = Some(value as usize),
            "trials" => self.trials = Some(value as usize),
            "genericity_trials" | "t" => self.genericity_trials = Some(value as usize),
            "cmax" | "c_max" => self.c_max = Some(value as usize),
            "smax" | "s_max" => self.s_max = Some(value as usize),
            "char" => self.characteristic = Some(value as u32),
            other => return Err(format!("unknown setting `{other}`")),
        }
        Ok(())
    }
}
