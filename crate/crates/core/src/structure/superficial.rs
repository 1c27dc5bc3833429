use std::collections::HashMap;

use serde::Serialize;

use crate::alg::{Polynomial, RingDesc};
use crate::error::{Error, Result};
use crate::graded::length_between;
use crate::groebner::{colon, intersection, krull_dim, product, sum, IdealHandle};
use crate::hilbert::{
    check_m_primary, coefficients, default_sample_bound, uses_graded_engine, EVector, Filtration,
};
use crate::linalg::{Matrix, Subspace};
use crate::rng;

/// `h ∈ I` with `(I^{n+1} :_R h) ∩ I^c = I^n` verified for every `n` in `range`.
///
/// Only the finite range is certified; the defining property asks for all `n ≥ c`.
#[derive(Clone, Debug)]
pub struct SuperficialCertificate {
    pub h: Polynomial,
    pub ideal: IdealHandle,
    pub c: usize,
    pub range: (usize, usize),
    /// Random draws consumed by the search (0 for a user-supplied element).
    pub draws: usize,
}

impl SuperficialCertificate {
    /// Re-runs the verification from the stored data.
    pub fn replay(&self, ring: &RingDesc) -> Result<bool> {
        verify_superficial(ring, &self.ideal, &self.h, self.c, self.range.1)
    }
}

/// Decides the superficial equality for single `(n, c)` pairs, caching intermediate data.
enum Checker {
    /// Per degree: `h^{-1}(I^{n+1})_{k+δ} ∩ (I^c)_k = (I^n)_k` inside `R_k`.
    Graded {
        filtration: Box<Filtration>,
        h: Polynomial,
        delta: usize,
        mats: HashMap<usize, Matrix>,
    },
    /// Ideal equality in `S`: `((L + I^{n+1}) : h) ∩ (L + I^c) = L + I^n`.
    Groebner {
        l: IdealHandle,
        ideal: IdealHandle,
        h: Polynomial,
        powers: Vec<IdealHandle>,
    },
}

impl Checker {
    fn new(ring: &RingDesc, ideal: &IdealHandle, h: &Polynomial) -> Result<Checker> {
        let h = h.to_ring(ring.base());
        if uses_graded_engine(ring, ideal) && h.is_homogeneous() {
            let delta = h.degree().unwrap_or(0) as usize;
            return Ok(Checker::Graded {
                filtration: Box::new(Filtration::new(ring, ideal)?),
                h,
                delta,
                mats: HashMap::new(),
            });
        }
        Ok(Checker::Groebner {
            l: ring.relations().clone(),
            ideal: ideal.clone(),
            h,
            powers: vec![IdealHandle::unit(ring.base())],
        })
    }

    fn holds(&mut self, n: usize, c: usize) -> Result<bool> {
        match self {
            Checker::Graded {
                filtration,
                h,
                delta,
                mats,
            } => {
                let full = filtration.layer(n)?.full_from();
                for k in 0..full {
                    let wn = filtration.piece(n, k)?;
                    let wc = filtration.piece(c, k)?;
                    let target = filtration.piece(n + 1, k + *delta)?;
                    let m = match mats.get(&k) {
                        Some(m) => m,
                        None => {
                            let m = filtration.quotient().multiplication_matrix(h, k);
                            mats.entry(k).or_insert(m)
                        }
                    };
                    let pre = Subspace::preimage(m, &target);
                    if pre.intersect(&wc).dim() != wn.dim() {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Checker::Groebner {
                l,
                ideal,
                h,
                powers,
            } => {
                while powers.len() <= n + 1 {
                    let prev = powers.last().unwrap();
                    let next = sum(l, &product(ideal, prev));
                    powers.push(IdealHandle::new(
                        next.ring(),
                        next.groebner_basis().polys().to_vec(),
                    ));
                }
                let lhs = intersection(&colon(&powers[n + 1], h)?, &powers[c]);
                Ok(powers[n].contains_ideal(&lhs))
            }
        }
    }
}

fn check_membership(ring: &RingDesc, ideal: &IdealHandle, h: &Polynomial) -> Result<()> {
    check_m_primary(ring, ideal)?;
    if !sum(ring.relations(), ideal).contains(&h.to_ring(ring.base())) {
        return Err(Error::input(format!("{h} is not in ({ideal})")));
    }
    Ok(())
}

/// Checks the superficial equality for `n = c..=n_max`.
pub fn verify_superficial(
    ring: &RingDesc,
    ideal: &IdealHandle,
    h: &Polynomial,
    c: usize,
    n_max: usize,
) -> Result<bool> {
    check_membership(ring, ideal, h)?;
    let mut checker = Checker::new(ring, ideal, h)?;
    for n in c..=n_max {
        if !checker.holds(n, c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Smallest `c ≤ c_max` certifying `h` over `[c, n_max]`, or the longest verified prefix.
fn certify(
    checker: &mut Checker,
    c_max: usize,
    n_max: usize,
) -> Result<std::result::Result<usize, (usize, usize)>> {
    let mut best = (0, 0);
    for c in 1..=c_max.min(n_max) {
        let mut reached = c;
        let mut ok = true;
        for n in c..=n_max {
            if !checker.holds(n, c)? {
                ok = false;
                break;
            }
            reached = n;
        }
        if ok {
            return Ok(Ok(c));
        }
        if reached > best.1 {
            best = (c, reached);
        }
    }
    Ok(Err(best))
}

/// Random combinations of the generators of `I`, certified over `[c, N]`.
pub fn find_superficial(
    ring: &RingDesc,
    ideal: &IdealHandle,
    seed: u64,
    n_max: Option<usize>,
    c_max: usize,
    trials: usize,
) -> Result<SuperficialCertificate> {
    check_m_primary(ring, ideal)?;
    let n_max = match n_max {
        Some(n) => n,
        None => default_sample_bound(krull_dim(ring.relations())?),
    };
    let mut best = (0, 0);
    for draw in 0..trials.max(1) {
        let mut g = rng::stream(seed, &["superficial", &draw.to_string()]);
        let h = rng::combination(ring.base(), ideal.generators(), &mut g);
        if h.is_zero() {
            continue;
        }
        let mut checker = Checker::new(ring, ideal, &h)?;
        match certify(&mut checker, c_max, n_max)? {
            Ok(c) => {
                return Ok(SuperficialCertificate {
                    h,
                    ideal: ideal.clone(),
                    c,
                    range: (c, n_max),
                    draws: draw + 1,
                })
            }
            Err(partial) if partial.1 > best.1 => best = partial,
            Err(_) => {}
        }
    }
    Err(Error::Genericity(format!(
        "no superficial element of ({ideal}) in {trials} draws; best partial range c = {}, n ≤ {}",
        best.0, best.1
    )))
}

/// `λ(0 :_R h) = λ((L : h) / L)`.
pub fn colon_length(ring: &RingDesc, h: &Polynomial) -> Result<u64> {
    let l = ring.relations();
    if l.is_zero() {
        return Ok(0);
    }
    let col = colon(l, h)?;
    if col.same_ideal(l) {
        return Ok(0);
    }
    length_between(l, &col)
}

/// Coefficients of `(R, I)` and `(R/hR, I)` with the correction term `λ(0 : h)`.
#[derive(Clone, Debug, Serialize)]
pub struct DescentReport {
    pub d: usize,
    pub full: EVector,
    pub cut: EVector,
    pub lambda_colon: u64,
    /// `e_i(I) = e_i(I/(h))` for every `i < d - 1`.
    pub lower_agree: bool,
    /// `e_{d-1}(I/(h)) + (-1)^d λ(0 : h)`.
    pub expected_top: i64,
    pub top_agrees: bool,
}

impl DescentReport {
    pub fn holds(&self) -> bool {
        self.lower_agree && self.top_agrees
    }
}

pub fn superficial_descent_check(
    ring: &RingDesc,
    cert: &SuperficialCertificate,
    n_max: Option<usize>,
) -> Result<DescentReport> {
    let d = krull_dim(ring.relations())?;
    if d == 0 {
        return Err(Error::input("descent needs dim R ≥ 1"));
    }
    let full = coefficients(ring, &cert.ideal, n_max)?.evector;
    let cut_ring = ring.modulo(std::slice::from_ref(&cert.h));
    let cut = coefficients(&cut_ring, &cert.ideal, n_max)?.evector;
    let lambda = colon_length(ring, &cert.h)? as i64;
    let lower_agree = (0..d - 1).all(|i| full.e[i] == cut.e[i]);
    let sign = if d % 2 == 0 { 1 } else { -1 };
    let expected_top = cut.e[d - 1] + sign * lambda;
    Ok(DescentReport {
        d,
        top_agrees: full.e[d - 1] == expected_top,
        full,
        cut,
        lambda_colon: lambda as u64,
        lower_agree,
        expected_top,
    })
}
