use serde::Serialize;

use crate::alg::RingDesc;
use crate::error::{Error, Result};
use crate::groebner::{colon_ideal, product, sum, IdealHandle};

/// `J·I^s = I^{s+1}` in `R`, checked by double inclusion modulo `L`; for
/// non-homogeneous data the inclusion `I^{s+1} ⊆ J·I^s` may hold only at the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionCertificate {
    pub s: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionOutcome {
    Certified(ReductionCertificate),
    NotWithinBound { s_max: usize },
}

impl ReductionOutcome {
    pub fn certificate(&self) -> Option<ReductionCertificate> {
        match self {
            ReductionOutcome::Certified(c) => Some(*c),
            ReductionOutcome::NotWithinBound { .. } => None,
        }
    }
}

fn reduced(ideal: &IdealHandle) -> IdealHandle {
    IdealHandle::new(ideal.ring(), ideal.groebner_basis().polys().to_vec())
}

/// `A ⊆ B` after localizing at the origin: `(B : A)` has an element with nonzero constant term.
fn contained_at_origin(a: &IdealHandle, b: &IdealHandle) -> Result<bool> {
    let q = colon_ideal(b, a)?;
    Ok(q.groebner_basis()
        .polys()
        .iter()
        .any(|g| g.terms().last().is_some_and(|t| t.monomial.is_one())))
}

/// Smallest `s ≤ s_max` with `J·I^s = I^{s+1}` in `R`.
pub fn reduction_check(
    ring: &RingDesc,
    j: &IdealHandle,
    i: &IdealHandle,
    s_max: usize,
) -> Result<ReductionOutcome> {
    j.check_same_ring(ring.relations())?;
    i.check_same_ring(ring.relations())?;
    let l = ring.relations();
    let li = sum(l, i);
    if let Some(g) = j.generators().iter().find(|g| !li.contains(g)) {
        return Err(Error::input(format!("J is not contained in I: {g}")));
    }
    // i_pow = L + I^s
    let mut i_pow = IdealHandle::unit(ring.base());
    for s in 0..=s_max {
        let next = reduced(&sum(l, &product(&i_pow, i)));
        let lhs = sum(l, &product(j, &i_pow));
        let rhs = sum(l, &next);
        if rhs.contains_ideal(&lhs)
            && (lhs.contains_ideal(&next) || contained_at_origin(&next, &lhs)?)
        {
            return Ok(ReductionOutcome::Certified(ReductionCertificate { s }));
        }
        i_pow = next;
    }
    Ok(ReductionOutcome::NotWithinBound { s_max })
}
