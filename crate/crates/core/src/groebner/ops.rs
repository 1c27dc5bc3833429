use super::IdealHandle;
use crate::alg::{Polynomial, TermOrder};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealOp {
    Sum,
    Product,
    /// `A^n`; the second operand is ignored.
    Power(u32),
    Intersection,
}

pub fn ideal_op(a: &IdealHandle, b: &IdealHandle, op: IdealOp) -> Result<IdealHandle> {
    a.check_same_ring(b)?;
    Ok(match op {
        IdealOp::Sum => sum(a, b),
        IdealOp::Product => product(a, b),
        IdealOp::Power(n) => power(a, n),
        IdealOp::Intersection => intersection(a, b),
    })
}

pub fn sum(a: &IdealHandle, b: &IdealHandle) -> IdealHandle {
    a.add_generators(b.generators())
}

/// Generators of `A·B`, re-reduced through a Gröbner basis.
pub fn product(a: &IdealHandle, b: &IdealHandle) -> IdealHandle {
    let ring = a.ring();
    let mut gens = Vec::with_capacity(a.generators().len() * b.generators().len());
    for f in a.generators() {
        for g in b.generators() {
            gens.push(f.mul_unchecked(&g.to_ring(ring)));
        }
    }
    let raw = IdealHandle::new(ring, gens);
    let gb = raw.groebner_basis();
    IdealHandle::new(ring, gb.polys().to_vec())
}

pub fn power(a: &IdealHandle, n: u32) -> IdealHandle {
    let mut acc = IdealHandle::unit(a.ring());
    for _ in 0..n {
        acc = product(&acc, a);
    }
    acc
}

/// `A ∩ B` by eliminating `t` from `t·A + (1 − t)·B`.
pub fn intersection(a: &IdealHandle, b: &IdealHandle) -> IdealHandle {
    let ring = a.ring();
    if a.is_zero() || b.is_zero() {
        return IdealHandle::zero(ring);
    }
    let ext = ring.extend_front(&["_t"], TermOrder::elimination(1));
    let t = ext.var(0);
    let one_minus_t = &ext.one() - &t;
    let mut gens = Vec::new();
    for f in a.generators() {
        gens.push(f.widen_front(&ext, 1).mul_unchecked(&t));
    }
    for g in b.generators() {
        gens.push(
            g.to_ring(ring)
                .widen_front(&ext, 1)
                .mul_unchecked(&one_minus_t),
        );
    }
    let gb = IdealHandle::new(&ext, gens).groebner_basis();
    let out = gb
        .polys()
        .iter()
        .filter_map(|p| p.narrow_front(ring, 1))
        .collect();
    IdealHandle::new(ring, out)
}

/// `(I : f) = (I ∩ (f)) / f`.
pub fn colon(i: &IdealHandle, f: &Polynomial) -> Result<IdealHandle> {
    if f.is_zero() {
        return Err(Error::input("colon by the zero polynomial"));
    }
    let ring = i.ring();
    let f = f.to_ring(ring);
    if f.is_constant() {
        return Ok(i.clone());
    }
    let meet = intersection(i, &IdealHandle::new(ring, vec![f.clone()]));
    let mut out = Vec::with_capacity(meet.generators().len());
    for g in meet.generators() {
        out.push(exact_division(g, &f)?);
    }
    Ok(IdealHandle::new(ring, out))
}

/// `(I : J) = ∩_g (I : g)`; the colon by the zero ideal is the unit ideal.
pub fn colon_ideal(i: &IdealHandle, j: &IdealHandle) -> Result<IdealHandle> {
    i.check_same_ring(j)?;
    let mut acc: Option<IdealHandle> = None;
    for g in j.generators() {
        let c = colon(i, g)?;
        acc = Some(match acc {
            None => c,
            Some(prev) => intersection(&prev, &c),
        });
        if acc.as_ref().is_some_and(|a| a.same_ideal(i)) {
            // Every further colon contains I, so the intersection is already I.
            return Ok(i.clone());
        }
    }
    Ok(acc.unwrap_or_else(|| IdealHandle::unit(i.ring())))
}

/// Saturation `(I : J^∞)` with the number of colon steps before stabilization.
#[derive(Clone, Debug)]
pub struct Saturation {
    pub ideal: IdealHandle,
    pub exponent: u32,
}

const SATURATION_CAP: u32 = 50;

pub fn saturate(i: &IdealHandle, j: &IdealHandle) -> Result<Saturation> {
    if j.is_zero() {
        return Err(Error::input("saturation by the zero ideal"));
    }
    let mut cur = i.clone();
    for k in 0..SATURATION_CAP {
        let next = colon_ideal(&cur, j)?;
        if next.same_ideal(&cur) {
            return Ok(Saturation {
                ideal: cur,
                exponent: k,
            });
        }
        cur = next;
    }
    Err(Error::Limit(format!(
        "saturation did not stabilize within {SATURATION_CAP} colon steps"
    )))
}

/// `g / f` for `f` dividing `g`.
fn exact_division(g: &Polynomial, f: &Polynomial) -> Result<Polynomial> {
    let ring = g.ring();
    let field = ring.field();
    let lf = f.leading_monomial().unwrap();
    let inv = field.inv(f.leading_coeff()).unwrap();
    let mut rem = g.clone();
    let mut quot = Polynomial::zero(ring);
    while let Some(lt) = rem.leading_term() {
        let Some(q) = lf.quotient_of(&lt.monomial) else {
            return Err(Error::input(format!("{f} does not divide {g}")));
        };
        let c = field.mul(lt.coeff, inv);
        quot = quot.combine(&Polynomial::constant(ring, 1), c, &q);
        rem = rem.combine(f, field.neg(c), &q);
    }
    Ok(quot)
}

/// Outcome of the double-annihilator comparison `L = L0 : (L0 : L)`.
#[derive(Clone, Debug)]
pub enum AnnihilatorVerdict {
    Holds,
    /// A generator of `L0 : (L0 : L)` outside `L`, or of `L` outside it.
    Fails {
        witness: Polynomial,
    },
}

impl AnnihilatorVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, AnnihilatorVerdict::Holds)
    }
}

/// Tests `L = (L0 : (L0 : L))` in the ambient ring `S/L0`.
pub fn double_annihilator_test(l0: &IdealHandle, l: &IdealHandle) -> Result<AnnihilatorVerdict> {
    l0.check_same_ring(l)?;
    if !l.contains_ideal(l0) {
        return Err(Error::input("L0 must be contained in L"));
    }
    let full_l = super::sum(l, l0);
    let a = colon_ideal(l0, &full_l)?;
    let b = colon_ideal(l0, &a)?;
    if let Some(w) = b.generators().iter().find(|g| !full_l.contains(g)) {
        return Ok(AnnihilatorVerdict::Fails { witness: w.clone() });
    }
    if let Some(w) = full_l.generators().iter().find(|g| !b.contains(g)) {
        return Ok(AnnihilatorVerdict::Fails { witness: w.clone() });
    }
    Ok(AnnihilatorVerdict::Holds)
}
