use std::sync::Arc;

use crate::alg::{PolyRing, RingDesc};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::graded::length_between;
use crate::groebner::{krull_dim, local_length_at_origin, product, saturate, sum, IdealHandle};
use crate::hilbert::coefficients;
use crate::rng::{self, derive_seed};
use crate::structure::{
    find_superficial, is_cohen_macaulay, random_sop, reduction_check, superficial_descent_check,
    ReductionOutcome,
};

use super::{guarded, Claim, CorpusEntry, ExperimentReport, Verdict};

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

fn reduced(ideal: &IdealHandle) -> IdealHandle {
    IdealHandle::new(ideal.ring(), ideal.groebner_basis().polys().to_vec())
}

/// `λ(R/K R)` at the origin.
fn colength(ring: &RingDesc, k: &IdealHandle) -> Result<u64> {
    local_length_at_origin(&reduced(&sum(ring.relations(), k)))
}

fn positive_dim(ring: &RingDesc) -> Result<usize> {
    let d = krull_dim(ring.relations())?;
    if d == 0 {
        return Err(Error::input(format!("{ring} has dimension 0")));
    }
    Ok(d)
}

/// Draws `trials` parameter ideals and compares the sign of `e_1` with the
/// Cohen–Macaulay status.
pub fn sign_test(entry: &CorpusEntry, config: &Config, seed: u64) -> Result<ExperimentReport> {
    let ring = &entry.ring;
    let d = positive_dim(ring)?;
    guarded(Claim::SignTest, &entry.name, seed, config, |rep| {
        rep.input("ring", ring);
        rep.input("cm_expected", entry.flags.cm_expected);
        rep.input("constructed_unmixed", entry.flags.constructed_unmixed);
        let cm = is_cohen_macaulay(ring, derive_seed(seed, &["cm"]), config.genericity_trials)?;
        rep.length("dim", d as i64);
        rep.length("depth", cm.depth as i64);
        let mut e1s = Vec::with_capacity(config.trials);
        let mut binomial_law = true;
        for t in 0..config.trials {
            let sop = random_sop(
                ring,
                derive_seed(seed, &["trial", &t.to_string()]),
                config.genericity_trials,
            )?;
            let j = sop.ideal(ring);
            let co = coefficients(ring, &j, config.nmax)?;
            if t == 0 {
                rep.input("J_0", &j);
                rep.e = co.evector.e.clone();
            }
            rep.evector(&format!("trial_{t:02}"), &co.evector.e);
            let l0 = co.table.values[0];
            binomial_law &= co
                .table
                .values
                .iter()
                .enumerate()
                .all(|(n, &v)| v == l0 * binom((n + d) as u64, d as u64));
            e1s.push(co.evector.e1());
        }
        let expected_sign = |e1: i64| if cm.is_cm { e1 == 0 } else { e1 < 0 };
        let passed = e1s.iter().filter(|e| expected_sign(**e)).count();
        rep.length("trials_passed", passed as i64);
        if let (Some(lo), Some(hi)) = (e1s.iter().min(), e1s.iter().max()) {
            rep.length("e1_min", *lo);
            rep.length("e1_max", *hi);
        }
        if cm.is_cm {
            rep.length("binomial_law", binomial_law as i64);
        }
        if cm.is_cm != entry.flags.cm_expected {
            rep.note(format!(
                "Cohen-Macaulay test found depth {} in dimension {}, contradicting cm_expected = {}",
                cm.depth, d, entry.flags.cm_expected
            ));
            return Ok(Verdict::Fail);
        }
        let ok = passed == e1s.len() && (!cm.is_cm || binomial_law);
        if !entry.flags.constructed_unmixed {
            rep.note(format!(
                "conjecture check: hypothesis unverified ({} of {} trials had the predicted sign)",
                passed,
                e1s.len()
            ));
            return Ok(Verdict::HypothesisUnverified);
        }
        rep.note(format!("{passed} of {} trials passed", e1s.len()));
        Ok(Verdict::from_bool(ok))
    })
}

/// Compares `M = S/L0` with `N = M/T`, `T` the finite-length torsion of `M`.
pub fn ses_e1_check(
    name: &str,
    base: &Arc<PolyRing>,
    l0: &IdealHandle,
    ideal: &IdealHandle,
    config: &Config,
    seed: u64,
) -> Result<ExperimentReport> {
    let sat = saturate(l0, &IdealHandle::maximal(base))?.ideal;
    if sat.same_ideal(l0) {
        return Err(Error::input("no finite-length torsion: L0 is saturated"));
    }
    let d = krull_dim(l0)?;
    if d < 2 {
        return Err(Error::input(format!("need dim S/L0 ≥ 2, found {d}")));
    }
    let lambda = length_between(l0, &sat)? as i64;
    guarded(Claim::SesE1, name, seed, config, |rep| {
        rep.input("L0", l0);
        rep.input("saturation", &sat);
        rep.input("ideal", ideal);
        let m = RingDesc::from_ideal(l0);
        let n = RingDesc::from_ideal(&sat);
        let em = coefficients(&m, ideal, config.nmax)?.evector;
        let en = coefficients(&n, ideal, config.nmax)?.evector;
        rep.e = em.e.clone();
        rep.evector("M", &em.e);
        rep.evector("N", &en.e);
        rep.length("lambda", lambda);
        let lower = (0..d).all(|i| em.e[i] == en.e[i]);
        let sign = if d % 2 == 0 { -1 } else { 1 };
        let top = en.e[d] == em.e[d] + sign * lambda;
        if !lower {
            rep.note("e_i(M) and e_i(N) differ below the top index");
        }
        if !top {
            rep.note(format!(
                "e_d(N) = {} but e_d(M) + (-1)^(d+1) λ(T) = {}",
                en.e[d],
                em.e[d] + sign * lambda
            ));
        }
        Ok(Verdict::from_bool(lower && top))
    })
}

/// Coefficients of `(R, I)` and of `(R/hR, I)` for a certified superficial `h`.
pub fn descent_check(
    name: &str,
    ring: &RingDesc,
    ideal: &IdealHandle,
    config: &Config,
    seed: u64,
) -> Result<ExperimentReport> {
    positive_dim(ring)?;
    guarded(Claim::Descent, name, seed, config, |rep| {
        rep.input("ring", ring);
        rep.input("ideal", ideal);
        let cert = find_superficial(
            ring,
            ideal,
            derive_seed(seed, &["superficial"]),
            config.nmax,
            config.c_max,
            config.genericity_trials,
        )?;
        rep.input("h", &cert.h);
        rep.length("c", cert.c as i64);
        rep.length("range_end", cert.range.1 as i64);
        let report = superficial_descent_check(ring, &cert, config.nmax)?;
        rep.e = report.full.e.clone();
        rep.evector("R", &report.full.e);
        rep.evector("R/hR", &report.cut.e);
        rep.length("lambda", report.lambda_colon as i64);
        rep.length("expected_top", report.expected_top);
        let replay = cert.replay(ring)?;
        if !replay {
            rep.note("superficial certificate did not replay");
        }
        if !report.holds() {
            rep.note("descent identities violated");
        }
        Ok(Verdict::from_bool(report.holds() && replay))
    })
}

/// `e_1(I) ≥ e_0(I) − λ(R/I)` on a Cohen–Macaulay ring.
pub fn northcott_check(
    name: &str,
    ring: &RingDesc,
    ideal: &IdealHandle,
    config: &Config,
    seed: u64,
) -> Result<ExperimentReport> {
    guarded(Claim::Northcott, name, seed, config, |rep| {
        rep.input("ring", ring);
        rep.input("ideal", ideal);
        let cm = is_cohen_macaulay(ring, derive_seed(seed, &["cm"]), config.genericity_trials)?;
        let co = coefficients(ring, ideal, config.nmax)?;
        let ev = &co.evector;
        let lambda = co.table.values[0] as i64;
        let slack = ev.e1() - (ev.e0() - lambda);
        rep.e = ev.e.clone();
        rep.length("lambda", lambda);
        rep.length("slack", slack);
        rep.length("depth", cm.depth as i64);
        rep.length("dim", cm.dim as i64);
        if !cm.is_cm {
            rep.note("ring is not Cohen-Macaulay; inequality not asserted");
            return Ok(Verdict::HypothesisUnverified);
        }
        Ok(Verdict::from_bool(slack >= 0))
    })
}

/// A parameter ideal inside `I` that is a reduction of `I`: the given `J`, or random
/// combinations of the generators of `I`.
fn find_reduction(
    ring: &RingDesc,
    ideal: &IdealHandle,
    given: Option<&IdealHandle>,
    config: &Config,
    seed: u64,
) -> Result<(IdealHandle, usize)> {
    let d = krull_dim(ring.relations())?;
    if let Some(j) = given {
        return match reduction_check(ring, j, ideal, config.s_max)? {
            ReductionOutcome::Certified(c) => Ok((j.clone(), c.s)),
            ReductionOutcome::NotWithinBound { s_max } => Err(Error::Genericity(format!(
                "({j}) is not a reduction of ({ideal}) with number ≤ {s_max}"
            ))),
        };
    }
    for t in 0..config.genericity_trials.max(1) {
        let mut g = rng::stream(seed, &["reduction", &t.to_string()]);
        let gens: Vec<_> = (0..d)
            .map(|_| rng::combination(ring.base(), ideal.generators(), &mut g))
            .collect();
        let j = IdealHandle::new(ring.base(), gens);
        let total = sum(ring.relations(), &j);
        if total.is_unit() || krull_dim(&total)? != 0 {
            continue;
        }
        if let ReductionOutcome::Certified(c) = reduction_check(ring, &j, ideal, config.s_max)? {
            return Ok((j, c.s));
        }
    }
    Err(Error::Genericity(format!(
        "no minimal reduction of ({ideal}) with reduction number ≤ {} found",
        config.s_max
    )))
}

/// `e_1(I) − e_1(J) ≥ e_0(I) − λ(R/I)` for a minimal reduction `J` of `I`.
pub fn goto_nishida_check(
    name: &str,
    ring: &RingDesc,
    ideal: &IdealHandle,
    j: Option<&IdealHandle>,
    config: &Config,
    seed: u64,
) -> Result<ExperimentReport> {
    positive_dim(ring)?;
    guarded(Claim::GotoNishida, name, seed, config, |rep| {
        rep.input("ring", ring);
        rep.input("ideal", ideal);
        let (j, s) = find_reduction(ring, ideal, j, config, derive_seed(seed, &["J"]))?;
        rep.input("J", &j);
        rep.length("s", s as i64);
        let ci = coefficients(ring, ideal, config.nmax)?;
        let cj = coefficients(ring, &j, config.nmax)?;
        let (ei, ej) = (&ci.evector, &cj.evector);
        let lambda = ci.table.values[0] as i64;
        let slack = (ei.e1() - ej.e1()) - (ei.e0() - lambda);
        rep.e = ei.e.clone();
        rep.evector("I", &ei.e);
        rep.evector("J", &ej.e);
        rep.length("lambda", lambda);
        rep.length("slack", slack);
        if ei.e0() != ej.e0() {
            rep.note("reduction changed the multiplicity");
        }
        Ok(Verdict::from_bool(slack >= 0 && ei.e0() == ej.e0()))
    })
}

/// `e_1(I) ≤ Σ_{n=1}^{s+1} λ(I^n / J I^{n−1})` on a Cohen–Macaulay ring.
pub fn huckaba_marley_check(
    name: &str,
    ring: &RingDesc,
    ideal: &IdealHandle,
    j: Option<&IdealHandle>,
    config: &Config,
    seed: u64,
) -> Result<ExperimentReport> {
    positive_dim(ring)?;
    guarded(Claim::HuckabaMarley, name, seed, config, |rep| {
        rep.input("ring", ring);
        rep.input("ideal", ideal);
        let cm = is_cohen_macaulay(ring, derive_seed(seed, &["cm"]), config.genericity_trials)?;
        let (j, s) = find_reduction(ring, ideal, j, config, derive_seed(seed, &["J"]))?;
        rep.input("J", &j);
        rep.length("s", s as i64);
        let l = ring.relations();
        let mut bound = 0i64;
        // prev = L + I^{n-1}
        let mut prev = IdealHandle::unit(ring.base());
        for n in 1..=s + 1 {
            let cur = reduced(&sum(l, &product(&prev, ideal)));
            let jprev = product(&j, &prev);
            let term = colength(ring, &jprev)? as i64 - colength(ring, &cur)? as i64;
            rep.length(&format!("term_{n}"), term);
            bound += term;
            prev = cur;
        }
        let ev = coefficients(ring, ideal, config.nmax)?.evector;
        rep.e = ev.e.clone();
        rep.length("bound", bound);
        rep.length("lambda", bound);
        rep.length("slack", bound - ev.e1());
        if !cm.is_cm {
            rep.note("ring is not Cohen-Macaulay; inequality not asserted");
            return Ok(Verdict::HypothesisUnverified);
        }
        Ok(Verdict::from_bool(ev.e1() <= bound))
    })
}
