use std::collections::HashSet;

use super::IdealHandle;
use crate::alg::{Monomial, Polynomial, TermOrder};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};

/// `dim S/I`: the largest set of variables no leading monomial is supported in.
pub fn krull_dim(ideal: &IdealHandle) -> Result<usize> {
    let gb = ideal.groebner_basis();
    if gb.is_unit() {
        return Err(Error::input("krull_dim of the unit ideal"));
    }
    let n = ideal.ring().nvars();
    let supports: Vec<u64> = gb
        .leading_monomials()
        .iter()
        .map(|m| m.support().fold(0u64, |acc, i| acc | 1 << i))
        .collect();
    let mut best = 0;
    for subset in 0u64..(1u64 << n) {
        let size = subset.count_ones() as usize;
        if size > best && supports.iter().all(|s| s & !subset != 0) {
            best = size;
        }
    }
    Ok(best)
}

/// Monomials outside the leading-term ideal of a zero-dimensional ideal.
#[derive(Clone, Debug)]
pub struct StandardMonomialSet {
    pub order: TermOrder,
    pub monomials: Vec<Monomial>,
}

impl StandardMonomialSet {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }
}

pub fn standard_monomials(ideal: &IdealHandle) -> Result<StandardMonomialSet> {
    let gb = ideal.groebner_basis();
    let order = ideal.ring().order().clone();
    if gb.is_unit() {
        return Ok(StandardMonomialSet {
            order,
            monomials: Vec::new(),
        });
    }
    let dim = krull_dim(ideal)?;
    if dim > 0 {
        return Err(Error::NotZeroDimensional(format!(
            "ideal ({ideal}) has dimension {dim}"
        )));
    }
    let n = ideal.ring().nvars();
    let mut out = Vec::new();
    let mut layer = vec![Monomial::one(n)];
    while !layer.is_empty() {
        let mut next = HashSet::new();
        for m in &layer {
            for i in 0..n {
                let c = m.mul_var(i);
                if !gb.is_reducible(&c) {
                    next.insert(c);
                }
            }
        }
        out.append(&mut layer);
        layer = next.into_iter().collect();
        layer.sort_by(|a, b| order.cmp(a, b));
    }
    out.sort_by(|a, b| order.cmp(a, b));
    Ok(StandardMonomialSet {
        order,
        monomials: out,
    })
}

/// `λ(S/I) = dim_k S/I` for zero-dimensional `I`.
pub fn length_zero_dim(ideal: &IdealHandle) -> Result<u64> {
    Ok(standard_monomials(ideal)?.len() as u64)
}

/// Length of the localization of `S/I` at the origin: the joint generalized kernel of
/// the multiplication maps by the variables.
pub fn local_length_at_origin(ideal: &IdealHandle) -> Result<u64> {
    let basis = standard_monomials(ideal)?;
    let total = basis.len();
    if total == 0 {
        return Ok(0);
    }
    let gb = ideal.groebner_basis();
    let ring = ideal.ring();
    let n = ring.nvars();
    let exponent = total as u32;
    let all_nilpotent = (0..n).all(|i| gb.normal_form(&ring.var(i).pow(exponent)).is_zero());
    if all_nilpotent {
        return Ok(total as u64);
    }
    let index: std::collections::HashMap<&Monomial, usize> = basis
        .monomials
        .iter()
        .enumerate()
        .map(|(k, m)| (m, k))
        .collect();
    let field = ring.field();
    let mut joint = Subspace::full(field, total);
    for i in 0..n {
        let columns: Vec<Vec<u32>> = basis
            .monomials
            .iter()
            .map(|m| {
                let nf = gb.normal_form(&Polynomial::monomial(ring, 1, m.mul_var(i)));
                let mut col = vec![0u32; total];
                for t in nf.terms() {
                    col[index[&t.monomial]] = t.coeff;
                }
                col
            })
            .collect();
        let mi = Matrix::from_columns(field, total, &columns);
        let generalized = Subspace::span(field, total, mi.pow(total as u64).kernel());
        joint = joint.intersect(&generalized);
    }
    Ok(joint.dim() as u64)
}
