use crate::alg::{Monomial, TermOrder};
use crate::error::{Error, Result};
use crate::groebner::IdealHandle;

/// Numerator `N(t)` of the Hilbert series `N(t) / (1 - t)^n` of `S/(monos)`, as
/// coefficients of `1, t, t^2, ...`.
pub fn hilbert_numerator(monos: &[Monomial]) -> Vec<i64> {
    let gens = minimalize(monos.to_vec());
    numerator(gens)
}

fn minimalize(mut monos: Vec<Monomial>) -> Vec<Monomial> {
    monos.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::with_capacity(monos.len());
    for m in monos {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn numerator(mut gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    let coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if coprime {
        // A monomial complete intersection: a product of (1 - t^deg).
        let mut acc = vec![1i64];
        for g in &gens {
            acc = mul(&acc, &one_minus_t_pow(g.degree() as usize));
        }
        return acc;
    }
    // N(I + (m)) = N(I) - t^deg(m) N(I : m), pivoting on the last generator.
    let last = gens.pop().unwrap();
    let colon: Vec<Monomial> = gens.iter().map(|g| divide_out(g, &last)).collect();
    let a = numerator(gens);
    let b = numerator(minimalize(colon));
    let shift = last.degree() as usize;
    let mut out = a;
    if out.len() < b.len() + shift {
        out.resize(b.len() + shift, 0);
    }
    for (i, c) in b.iter().enumerate() {
        out[i + shift] -= c;
    }
    trim(out)
}

/// `g / gcd(g, m)`.
fn divide_out(g: &Monomial, m: &Monomial) -> Monomial {
    let exps: Vec<u32> = g
        .exponents()
        .iter()
        .zip(m.exponents())
        .map(|(a, b)| a.saturating_sub(*b))
        .collect();
    Monomial::from_exponents(&exps)
}

fn one_minus_t_pow(d: usize) -> Vec<i64> {
    let mut v = vec![0i64; d + 1];
    v[0] = 1;
    v[d] -= 1;
    v
}

fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    v
}

/// Divides by `(1 - t)` if it divides exactly.
fn divide_one_minus_t(v: &[i64]) -> Option<Vec<i64>> {
    // v(t) = (1 - t) q(t)  ⇔  q_i = v_0 + ... + v_i, with the full sum zero.
    let mut q = Vec::with_capacity(v.len());
    let mut acc = 0i64;
    for c in v {
        acc += c;
        q.push(acc);
    }
    if acc != 0 {
        return None;
    }
    q.pop();
    if q.is_empty() {
        q.push(0);
    }
    Some(trim(q))
}

/// The Hilbert series numerator of `S/I` under grevlex leading terms; for homogeneous `I`
/// this is the graded series, otherwise the series of the degree filtration.
pub fn ideal_numerator(ideal: &IdealHandle) -> Vec<i64> {
    let gb = ideal.groebner_basis_in(&TermOrder::grevlex());
    if gb.is_unit() {
        return vec![0];
    }
    hilbert_numerator(&gb.leading_monomials())
}

/// `λ(B/A)` for ideals `A ⊆ B` whose quotient has finite length, from the difference of
/// Hilbert series numerators. Errors if the difference is not a polynomial.
pub fn length_between(a: &IdealHandle, b: &IdealHandle) -> Result<u64> {
    let n = a.ring().nvars();
    let na = ideal_numerator(a);
    let nb = ideal_numerator(b);
    let mut d = vec![0i64; na.len().max(nb.len())];
    for (i, c) in na.iter().enumerate() {
        d[i] += c;
    }
    for (i, c) in nb.iter().enumerate() {
        d[i] -= c;
    }
    let mut q = trim(d);
    for _ in 0..n {
        q = divide_one_minus_t(&q).ok_or_else(|| {
            Error::NotZeroDimensional(format!("({b}) / ({a}) does not have finite length"))
        })?;
    }
    let total: i64 = q.iter().sum();
    if total < 0 || q.iter().any(|c| *c < 0) {
        return Err(Error::input(format!("({a}) is not contained in ({b})")));
    }
    Ok(total as u64)
}

/// Hilbert function values `H(0..=max)` read off a numerator over `(1 - t)^n`.
pub fn hilbert_function_from_numerator(num: &[i64], nvars: usize, max: usize) -> Vec<i64> {
    // Coefficients of 1/(1-t)^n are binom(k + n - 1, n - 1).
    (0..=max)
        .map(|k| {
            num.iter()
                .enumerate()
                .filter(|(i, _)| *i <= k)
                .map(|(i, c)| c * binom_i64(k - i + nvars - 1, nvars.saturating_sub(1)))
                .sum::<i64>()
        })
        .collect()
}

fn binom_i64(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}
