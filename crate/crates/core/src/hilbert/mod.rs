//! Hilbert–Samuel functions `n ↦ λ(R/I^{n+1})`, the binomial-basis fit and the
//! coefficient vector `(e_0, ..., e_d)`.

mod filtration;
mod fit;

pub use filtration::{Filtration, Layer};
pub use fit::{fit_evector, EVector, FIT_WINDOW};

use crate::alg::RingDesc;
use crate::error::{Error, Result};
use crate::graded::{
    default_degree_bound, hilbert_function, partial_sum_table, Graded, HilbertFunctionTable,
};
use crate::groebner::{krull_dim, local_length_at_origin, product, sum, IdealHandle};

/// Default number of fitted samples minus one: `max(2d + 6, 12)`.
pub fn default_sample_bound(d: usize) -> usize {
    (2 * d + 6).max(12)
}

/// How a Hilbert–Samuel table was measured.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    /// Degree-by-degree linear algebra in `R` (homogeneous data).
    Graded,
    /// Lengths of `S/(L + I^{n+1})` at the origin from Gröbner bases.
    GroebnerLocal,
}

/// Sampled lengths `values[n] = λ(R/I^{n+1})` for `n = 0..=N`.
#[derive(Clone, Debug)]
pub struct HilbertSamuelTable {
    pub ring: RingDesc,
    pub ideal: IdealHandle,
    pub values: Vec<u64>,
    pub dim: usize,
    pub engine: Engine,
}

impl HilbertSamuelTable {
    pub fn n(&self) -> usize {
        self.values.len() - 1
    }
}

/// Checks that `I` is proper, inside the origin's maximal ideal and primary to it modulo `L`.
pub(crate) fn check_m_primary(ring: &RingDesc, ideal: &IdealHandle) -> Result<()> {
    ideal.check_same_ring(ring.relations())?;
    if ideal
        .generators()
        .iter()
        .any(|g| g.terms().last().is_some_and(|t| t.monomial.is_one()))
    {
        return Err(Error::input(format!(
            "ideal ({ideal}) has a generator with a constant term"
        )));
    }
    let total = sum(ring.relations(), ideal);
    if total.is_unit() || krull_dim(&total)? != 0 {
        return Err(Error::NotZeroDimensional(format!(
            "({ideal}) is not m-primary in {ring}"
        )));
    }
    Ok(())
}

/// The graded engine needs homogeneous data; generators of one degree keep the pieces it
/// touches small, so mixed-degree ideals go through Gröbner bases instead.
pub(crate) fn uses_graded_engine(ring: &RingDesc, ideal: &IdealHandle) -> bool {
    let mut degrees = ideal.generators().iter().filter_map(|g| g.degree());
    let first = degrees.next();
    ring.is_homogeneous() && ideal.is_homogeneous() && degrees.all(|d| Some(d) == first)
}

/// `λ(R/I^{n+1})` for `n = 0..=N`, choosing the graded engine for homogeneous
/// equigenerated data.
pub fn hs_sample(ring: &RingDesc, ideal: &IdealHandle, n: usize) -> Result<HilbertSamuelTable> {
    if uses_graded_engine(ring, ideal) {
        hs_sample_graded(ring, ideal, n)
    } else {
        hs_sample_by_gb(ring, ideal, n)
    }
}

pub fn hs_sample_graded(
    ring: &RingDesc,
    ideal: &IdealHandle,
    n: usize,
) -> Result<HilbertSamuelTable> {
    check_m_primary(ring, ideal)?;
    let dim = krull_dim(ring.relations())?;
    let mut f = Filtration::new(ring, ideal)?;
    let values = (1..=n + 1)
        .map(|p| f.colength(p))
        .collect::<Result<Vec<_>>>()?;
    Ok(HilbertSamuelTable {
        ring: ring.clone(),
        ideal: ideal.clone(),
        values,
        dim,
        engine: Engine::Graded,
    })
}

/// The Gröbner-basis route: `K_0 = L + I`, `K_{n+1} = L + I·K_n`, lengths at the origin.
pub fn hs_sample_by_gb(
    ring: &RingDesc,
    ideal: &IdealHandle,
    n: usize,
) -> Result<HilbertSamuelTable> {
    check_m_primary(ring, ideal)?;
    let dim = krull_dim(ring.relations())?;
    let l = ring.relations();
    let mut k = sum(l, ideal);
    let mut values = Vec::with_capacity(n + 1);
    for step in 0..=n {
        if step > 0 {
            k = sum(l, &product(ideal, &k));
        }
        let reduced = IdealHandle::new(k.ring(), k.groebner_basis().polys().to_vec());
        values.push(local_length_at_origin(&reduced)?);
        k = reduced;
    }
    Ok(HilbertSamuelTable {
        ring: ring.clone(),
        ideal: ideal.clone(),
        values,
        dim,
        engine: Engine::GroebnerLocal,
    })
}

/// A fitted coefficient vector together with the table it came from.
#[derive(Clone, Debug)]
pub struct Coefficients {
    pub evector: EVector,
    pub table: HilbertSamuelTable,
}

/// Samples `N + 2` further values, fits on the first `N + 1` and on all of them, and
/// accepts only if both fits agree.
pub fn coefficients(
    ring: &RingDesc,
    ideal: &IdealHandle,
    n: Option<usize>,
) -> Result<Coefficients> {
    let dim = krull_dim(ring.relations())?;
    let n = n.unwrap_or_else(|| default_sample_bound(dim));
    let table = hs_sample(ring, ideal, n + 2)?;
    let ev = fit_evector(&table.values[..=n], dim)?;
    let guard = fit_evector(&table.values, dim)?;
    if guard.e != ev.e {
        return Err(Error::Unstable(format!(
            "fit changed from {:?} to {:?} with two more samples; increase N",
            ev.e, guard.e
        )));
    }
    let mut table = table;
    table.values.truncate(n + 1);
    Ok(Coefficients { evector: ev, table })
}

/// Indexing convention for a graded object generated in degree `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// Partial sums from degree 0: the coefficients of `M` itself.
    Natural,
    /// Partial sums re-indexed so that degree `a` becomes index 0: the coefficients of `M[a]`.
    Shifted(u32),
}

/// Fits the partial sums of the Hilbert function of `obj` (with the `N + 2` guard).
pub fn graded_evector(
    obj: Graded<'_>,
    convention: Convention,
    n_max: Option<usize>,
) -> Result<EVector> {
    let (ring, max_deg) = match obj {
        Graded::Quotient(r) => (r, r.relations().max_generator_degree()),
        Graded::Module(m) => (m.ring(), m.degrees().iter().copied().max().unwrap_or(0)),
    };
    let dim = krull_dim(ring.relations())?;
    let n = n_max.unwrap_or_else(|| default_degree_bound(dim, max_deg));
    let shift = match convention {
        Convention::Natural => 0,
        Convention::Shifted(a) => a as usize,
    };
    let h = hilbert_function(obj, n + 2 + shift)?;
    let shifted = HilbertFunctionTable {
        entries: h.entries[shift..].to_vec(),
    };
    let sums = partial_sum_table(&shifted).entries;
    let ev = fit_evector(&sums[..=n], dim)?;
    let guard = fit_evector(&sums, dim)?;
    if guard.e != ev.e {
        return Err(Error::Unstable(format!(
            "graded fit changed from {:?} to {:?} with two more degrees; increase the bound",
            ev.e, guard.e
        )));
    }
    Ok(ev)
}
