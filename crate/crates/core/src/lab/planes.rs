use crate::alg::{monomials_of_degree, Polynomial, RingDesc};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::graded::{hilbert_function, ideal_numerator, Graded};
use crate::groebner::{intersection, krull_dim, sum, IdealHandle};
use crate::hilbert::coefficients;
use crate::rng::{self, derive_seed};
use crate::structure::is_cohen_macaulay;

use super::{guarded, Claim, ExperimentReport, Verdict};

fn meet(ideals: &[&IdealHandle]) -> Option<IdealHandle> {
    let mut it = ideals.iter();
    let first = (*it.next()?).clone();
    Some(it.fold(first, |acc, p| intersection(&acc, p)))
}

/// `∩_i (P_i + ∩_{j≠i} P_j)`: the elements `a` with `a·(⊕ S/P_i) ⊆ R`, i.e. the
/// annihilator of the cokernel of `R → ⊕ S/P_i`.
pub fn annihilator_ideal(primes: &[IdealHandle]) -> Result<IdealHandle> {
    let ring = primes
        .first()
        .ok_or_else(|| Error::input("need at least one prime"))?
        .ring()
        .clone();
    let mut acc = IdealHandle::unit(&ring);
    for (i, p) in primes.iter().enumerate() {
        let others: Vec<&IdealHandle> = primes
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, q)| q)
            .collect();
        let Some(rest) = meet(&others) else {
            continue;
        };
        acc = intersection(&acc, &sum(p, &rest));
    }
    Ok(IdealHandle::new(
        &ring,
        acc.groebner_basis().polys().to_vec(),
    ))
}

/// `λ(L)` for `L = coker(R → ⊕ S/P_i)` with `R = S/∩P_i`, two ways: summing the differences
/// of graded Hilbert functions up to the point where they vanish, and exactly from the
/// Hilbert series numerators.
pub fn lambda_by_hilbert_functions(primes: &[IdealHandle], l: &IdealHandle) -> Result<(u64, u64)> {
    let n = l.ring().nvars();
    let mut diff: Vec<i64> = Vec::new();
    let mut add = |num: Vec<i64>, sign: i64| {
        if diff.len() < num.len() {
            diff.resize(num.len(), 0);
        }
        for (k, c) in num.into_iter().enumerate() {
            diff[k] += sign * c;
        }
    };
    for p in primes {
        add(ideal_numerator(p), 1);
    }
    add(ideal_numerator(l), -1);
    let hf = crate::graded::hilbert_function_from_numerator(&diff, n, diff.len() + 2 * n + 8);
    let support = hf.iter().rposition(|v| *v != 0).map_or(0, |k| k + 1);
    let window = 4;
    let bound = support + window;
    let by_numerator: i64 = hf.iter().sum();

    let table = |ring: &RingDesc| hilbert_function(Graded::Quotient(ring), bound);
    let mut sums = vec![0i64; bound + 1];
    for p in primes {
        let t = table(&RingDesc::from_ideal(p))?;
        for (k, v) in t.entries.iter().enumerate() {
            sums[k] += *v as i64;
        }
    }
    let t = table(&RingDesc::from_ideal(l))?;
    for (k, v) in t.entries.iter().enumerate() {
        sums[k] -= *v as i64;
    }
    if sums[bound + 1 - window..].iter().any(|v| *v != 0) || sums.iter().any(|v| *v < 0) {
        return Err(Error::input("the cokernel does not have finite length"));
    }
    let by_tables: i64 = sums.iter().sum();
    Ok((by_tables as u64, by_numerator.max(0) as u64))
}

/// Random forms of degree `deg` in the homogeneous ideal `a`.
fn random_form_in(a: &IdealHandle, deg: u32, g: &mut impl rand::Rng) -> Option<Polynomial> {
    let ring = a.ring();
    let n = ring.nvars();
    let mut span = Vec::new();
    for gen in a.groebner_basis().polys() {
        let e = gen.degree()?;
        if e > deg {
            continue;
        }
        for m in monomials_of_degree(n, deg - e) {
            span.push(gen.mul_monomial(&m));
        }
    }
    if span.is_empty() {
        return None;
    }
    Some(rng::combination(ring, &span, g))
}

/// `R = S/∩P_i` for codimension-two primes in four variables meeting pairwise only at the
/// origin, and a parameter ideal `J` annihilating the cokernel `L` of `R → ⊕ S/P_i`:
/// checks `e_0(J) = Σ e_0(J, S/P_i)`, `e_1(J) = −λ(L)` and `e_2(J) = 0`.
pub fn plane_union_check(
    name: &str,
    primes: &[IdealHandle],
    config: &Config,
    seed: u64,
) -> Result<ExperimentReport> {
    let Some(first) = primes.first() else {
        return Err(Error::input("need at least one prime"));
    };
    let base = first.ring().clone();
    if base.nvars() != 4 {
        return Err(Error::input("the ambient ring must have four variables"));
    }
    for p in primes {
        p.check_same_ring(first)?;
        if !p.is_homogeneous() || p.is_unit() || krull_dim(p)? != 2 {
            return Err(Error::input(format!(
                "({p}) is not a homogeneous codimension-two ideal"
            )));
        }
    }
    for (i, p) in primes.iter().enumerate() {
        for q in &primes[i + 1..] {
            if krull_dim(&sum(p, q))? != 0 {
                return Err(Error::input(format!(
                    "({p}) + ({q}) is not primary to the origin"
                )));
            }
        }
    }
    guarded(Claim::Planes, name, seed, config, |rep| {
        for (i, p) in primes.iter().enumerate() {
            rep.input(&format!("P{}", i + 1), p);
            let cm = is_cohen_macaulay(
                &RingDesc::from_ideal(p),
                derive_seed(seed, &["cm", &i.to_string()]),
                config.genericity_trials,
            )?;
            if !cm.is_cm {
                return Err(Error::input(format!("S/({p}) is not Cohen-Macaulay")));
            }
        }
        let l = meet(&primes.iter().collect::<Vec<_>>()).unwrap();
        let l = IdealHandle::new(&base, l.groebner_basis().polys().to_vec());
        let ring = RingDesc::from_ideal(&l);
        rep.input("ring", &ring);
        let (lambda, lambda_exact) = lambda_by_hilbert_functions(primes, &l)?;
        rep.length("lambda", lambda as i64);
        if lambda != lambda_exact {
            rep.note(format!(
                "λ(L) from tables ({lambda}) and from series ({lambda_exact}) disagree"
            ));
            return Ok(Verdict::Fail);
        }

        let ann = annihilator_ideal(primes)?;
        let mut found = None;
        'search: for deg in 1..=4u32 {
            for t in 0..config.genericity_trials.max(1) {
                let mut g = rng::stream(seed, &["J", &deg.to_string(), &t.to_string()]);
                let (Some(a), Some(b)) = (
                    random_form_in(&ann, deg, &mut g),
                    random_form_in(&ann, deg, &mut g),
                ) else {
                    continue 'search;
                };
                let j = IdealHandle::new(&base, vec![a, b]);
                let total = sum(&l, &j);
                if !total.is_unit() && krull_dim(&total)? == 0 {
                    found = Some((j, deg));
                    break 'search;
                }
            }
        }
        let Some((j, deg)) = found else {
            return Err(Error::Genericity(
                "no parameter ideal inside the annihilator of the cokernel".into(),
            ));
        };
        // J·(⊕ S/P_i) ⊆ R: each generator lies in P_i + ∩_{j≠i} P_j.
        let annihilates = j.generators().iter().all(|g| ann.contains(g));
        rep.input("J", &j);
        rep.length("J_degree", deg as i64);

        let ev = coefficients(&ring, &j, config.nmax)?.evector;
        rep.e = ev.e.clone();
        let mut e0_sum = 0;
        for (i, p) in primes.iter().enumerate() {
            let ei = coefficients(&RingDesc::from_ideal(p), &j, config.nmax)?.evector;
            rep.evector(&format!("R{}", i + 1), &ei.e);
            e0_sum += ei.e0();
        }
        rep.length("e0_sum", e0_sum);
        let ok = [
            (
                ev.e0() == e0_sum,
                "e_0(J) differs from the sum over components",
            ),
            (ev.e1() == -(lambda as i64), "e_1(J) differs from -λ(L)"),
            (ev.get(2) == 0, "e_2(J) is not zero"),
            (annihilates, "J does not annihilate the cokernel"),
        ];
        for (holds, msg) in ok {
            if !holds {
                rep.note(msg);
            }
        }
        Ok(Verdict::from_bool(ok.iter().all(|(h, _)| *h)))
    })
}
