//! Graded pieces of quotients `S/L` and of submodules of free modules: Hilbert functions,
//! partial sums, finite lengths and freeness probes.

mod module;
mod quotient;
mod series;

pub use module::{freeness_probe, FreenessVerdict, GradedSubmodule};
pub use quotient::{graded_dim_by_rank, GradedQuotient, SparseVec};
pub use series::{
    hilbert_function_from_numerator, hilbert_numerator, ideal_numerator, length_between,
};

use crate::alg::RingDesc;
use crate::error::Result;

/// A homogeneous object with graded pieces.
#[derive(Clone, Copy, Debug)]
pub enum Graded<'a> {
    Quotient(&'a RingDesc),
    Module(&'a GradedSubmodule),
}

/// Dimensions of the graded pieces in degrees `0..=n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertFunctionTable {
    pub entries: Vec<u64>,
}

impl HilbertFunctionTable {
    pub fn n_max(&self) -> usize {
        self.entries.len().saturating_sub(1)
    }

    pub fn get(&self, n: usize) -> u64 {
        self.entries[n]
    }
}

/// `dim_k` of the degree-`n` piece.
pub fn graded_dim(obj: Graded<'_>, n: usize) -> Result<u64> {
    Ok(hilbert_function_from(obj, n, n)?.entries[n])
}

pub fn hilbert_function(obj: Graded<'_>, n_max: usize) -> Result<HilbertFunctionTable> {
    hilbert_function_from(obj, 0, n_max)
}

fn hilbert_function_from(
    obj: Graded<'_>,
    from: usize,
    n_max: usize,
) -> Result<HilbertFunctionTable> {
    let mut entries = vec![0u64; n_max + 1];
    match obj {
        Graded::Quotient(r) => {
            let mut q = GradedQuotient::new(r)?;
            for (n, e) in entries.iter_mut().enumerate().skip(from) {
                *e = q.dim(n) as u64;
            }
        }
        Graded::Module(m) => {
            let mut q = GradedQuotient::new(m.ring())?;
            for (n, e) in entries.iter_mut().enumerate().skip(from) {
                *e = m.dim_with(&mut q, n) as u64;
            }
        }
    }
    Ok(HilbertFunctionTable { entries })
}

/// `entry(n) = Σ_{k ≤ n} H(k)`.
pub fn partial_sum_table(h: &HilbertFunctionTable) -> HilbertFunctionTable {
    let mut acc = 0;
    HilbertFunctionTable {
        entries: h
            .entries
            .iter()
            .map(|v| {
                acc += v;
                acc
            })
            .collect(),
    }
}

/// Default degree bound `2·(d + max generator degree) + 8`.
pub fn default_degree_bound(dim: usize, max_generator_degree: u32) -> usize {
    2 * (dim + max_generator_degree as usize) + 8
}
