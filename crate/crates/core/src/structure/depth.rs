use serde::Serialize;

use crate::alg::RingDesc;
use crate::error::{Error, Result};
use crate::groebner::{colon, krull_dim, saturate, IdealHandle};
use crate::rng;

/// Depth of `R` at the origin by peeling off generic linear nonzerodivisors.
///
/// Stops as soon as the maximal ideal is associated to `L_cur`, detected by
/// `(L_cur : m^∞) ≠ L_cur`. Each step tries up to `trials` random linear forms.
pub fn depth(ring: &RingDesc, seed: u64, trials: usize) -> Result<usize> {
    let base = ring.base();
    let m = IdealHandle::maximal(base);
    let mut cur = ring.relations().clone();
    if cur.is_unit() {
        return Err(Error::input("depth of the zero ring"));
    }
    let mut count = 0usize;
    loop {
        let sat = saturate(&cur, &m)?;
        if !sat.ideal.same_ideal(&cur) {
            return Ok(count);
        }
        let mut found = None;
        for attempt in 0..trials.max(1) {
            let mut g = rng::stream(seed, &["depth", &count.to_string(), &attempt.to_string()]);
            let l = rng::linear_form(base, &mut g);
            if colon(&cur, &l)?.same_ideal(&cur) {
                found = Some(l);
                break;
            }
        }
        let Some(l) = found else {
            return Err(Error::Genericity(format!(
                "no linear nonzerodivisor modulo ({cur}) in {trials} draws although the maximal \
                 ideal is not associated; enlarge the field or the trial count"
            )));
        };
        cur = IdealHandle::new(
            base,
            cur.add_generators(&[l]).groebner_basis().polys().to_vec(),
        );
        count += 1;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CmStatus {
    pub depth: usize,
    pub dim: usize,
    pub is_cm: bool,
}

pub fn is_cohen_macaulay(ring: &RingDesc, seed: u64, trials: usize) -> Result<CmStatus> {
    let dim = krull_dim(ring.relations())?;
    let depth = depth(ring, seed, trials)?;
    Ok(CmStatus {
        depth,
        dim,
        is_cm: depth == dim,
    })
}
