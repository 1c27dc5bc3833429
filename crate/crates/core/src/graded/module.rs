use crate::alg::{Polynomial, RingDesc};
use crate::error::{Error, Result};
use crate::linalg::Subspace;

use super::GradedQuotient;

/// A submodule of the free module `R^r` generated by homogeneous vectors, all of whose
/// nonzero components share one degree.
#[derive(Clone, Debug)]
pub struct GradedSubmodule {
    ring: RingDesc,
    rank: usize,
    generators: Vec<Vec<Polynomial>>,
    degrees: Vec<u32>,
}

impl GradedSubmodule {
    pub fn new(ring: &RingDesc, rank: usize, generators: Vec<Vec<Polynomial>>) -> Result<Self> {
        if !ring.is_homogeneous() {
            return Err(Error::input("modules need a homogeneous base ring"));
        }
        let base = ring.base();
        let mut gens = Vec::new();
        let mut degrees = Vec::new();
        for (k, v) in generators.into_iter().enumerate() {
            if v.len() != rank {
                return Err(Error::input(format!(
                    "generator {} has {} components, expected {rank}",
                    k + 1,
                    v.len()
                )));
            }
            let v: Vec<Polynomial> = v.into_iter().map(|c| c.to_ring(base)).collect();
            let mut deg = None;
            for c in v.iter().filter(|c| !c.is_zero()) {
                if !c.is_homogeneous() {
                    return Err(Error::input(format!("component {c} is not homogeneous")));
                }
                let d = c.degree().unwrap();
                if deg.is_some_and(|e| e != d) {
                    return Err(Error::input(format!(
                        "generator {} mixes component degrees",
                        k + 1
                    )));
                }
                deg = Some(d);
            }
            if let Some(d) = deg {
                gens.push(v);
                degrees.push(d);
            }
        }
        Ok(GradedSubmodule {
            ring: ring.clone(),
            rank,
            generators: gens,
            degrees,
        })
    }

    /// The free module `R^rank` with its standard basis.
    pub fn free(ring: &RingDesc, rank: usize) -> Result<Self> {
        let base = ring.base();
        let gens = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        if i == j {
                            base.one()
                        } else {
                            Polynomial::zero(base)
                        }
                    })
                    .collect()
            })
            .collect();
        GradedSubmodule::new(ring, rank, gens)
    }

    pub fn ring(&self) -> &RingDesc {
        &self.ring
    }

    pub fn ambient_rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[Vec<Polynomial>] {
        &self.generators
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// The smallest generator degree `a`; `None` for the zero module.
    pub fn generation_degree(&self) -> Option<u32> {
        self.degrees.iter().copied().min()
    }

    pub fn is_generated_in_single_degree(&self) -> bool {
        self.degrees.windows(2).all(|w| w[0] == w[1])
    }

    /// `dim_k M_n` using the quotient's graded pieces.
    pub(crate) fn dim_with(&self, q: &mut GradedQuotient, n: usize) -> usize {
        self.span_with(q, n, None).dim()
    }

    /// Span of the degree-`n` multiples of the generators (or of the generators in `only`).
    fn span_with(&self, q: &mut GradedQuotient, n: usize, only: Option<&[usize]>) -> Subspace {
        let field = self.ring.base().field();
        let piece = q.dim(n);
        let ambient = piece * self.rank;
        let mut span = Subspace::zero(field, ambient);
        let chosen: Vec<usize> = match only {
            Some(s) => s.to_vec(),
            None => (0..self.generators.len()).collect(),
        };
        for g in chosen {
            let d = self.degrees[g] as usize;
            if d > n {
                continue;
            }
            let src = q.dim(n - d);
            let mats: Vec<_> = self.generators[g]
                .iter()
                .map(|c| q.multiplication_matrix(&c.to_ring(q.poly_ring()), n - d))
                .collect();
            for col in 0..src {
                let mut v = Vec::with_capacity(ambient);
                for (c, m) in self.generators[g].iter().zip(&mats) {
                    if c.is_zero() {
                        v.extend(std::iter::repeat_n(0, piece));
                    } else {
                        v.extend(m.column(col));
                    }
                }
                span.insert(v);
                if span.is_full() {
                    return span;
                }
            }
        }
        span
    }

    /// Indices of a minimal generating set, chosen greedily by increasing degree.
    pub(crate) fn minimal_generators_with(&self, q: &mut GradedQuotient) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.generators.len()).collect();
        order.sort_by_key(|&g| self.degrees[g]);
        let mut kept: Vec<usize> = Vec::new();
        for g in order {
            let d = self.degrees[g] as usize;
            let before = self.span_with(q, d, Some(&kept)).dim();
            kept.push(g);
            let after = self.span_with(q, d, Some(&kept)).dim();
            if after == before {
                kept.pop();
            }
        }
        kept
    }
}

/// Outcome of comparing `H_M` with the free module on a minimal generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FreenessVerdict {
    /// `H_M(n)` matched the free count for every `n ≤ bound`.
    FreeUpToBound {
        bound: u32,
        minimal_generators: usize,
    },
    /// A syzygy exists in the witness degree.
    NotFree {
        witness_degree: u32,
        minimal_generators: usize,
    },
}

impl FreenessVerdict {
    pub fn is_free_up_to_bound(&self) -> bool {
        matches!(self, FreenessVerdict::FreeUpToBound { .. })
    }
}

pub fn freeness_probe(m: &GradedSubmodule, bound: u32) -> Result<FreenessVerdict> {
    let mut q = GradedQuotient::new(m.ring())?;
    let minimal = m.minimal_generators_with(&mut q);
    for n in 0..=bound as usize {
        let free: usize = minimal
            .iter()
            .map(|&g| m.degrees[g] as usize)
            .filter(|&d| d <= n)
            .map(|d| q.dim(n - d))
            .sum();
        if m.dim_with(&mut q, n) < free {
            return Ok(FreenessVerdict::NotFree {
                witness_degree: n as u32,
                minimal_generators: minimal.len(),
            });
        }
    }
    Ok(FreenessVerdict::FreeUpToBound {
        bound,
        minimal_generators: minimal.len(),
    })
}
