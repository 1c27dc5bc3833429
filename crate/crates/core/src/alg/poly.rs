use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::field::symmetric;
use super::{Monomial, PolyRing};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: u32,
    pub monomial: Monomial,
}

/// A polynomial over `F_p`: nonzero terms, strictly decreasing under the ring's order.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<Term>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked ring arithmetic.
pub fn poly_arith(f: &Polynomial, g: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    match op {
        ArithOp::Add => f.try_add(g),
        ArithOp::Sub => f.try_sub(g),
        ArithOp::Mul => f.try_mul(g),
    }
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: i64) -> Self {
        Polynomial::from_terms(ring, vec![(c, Monomial::one(ring.nvars()))])
    }

    pub fn monomial(ring: &Arc<PolyRing>, coeff: i64, m: Monomial) -> Self {
        Polynomial::from_terms(ring, vec![(coeff, m)])
    }

    /// Builds a polynomial from an arbitrary term multiset: coefficients are reduced,
    /// equal monomials merged, zeros dropped and the result sorted.
    pub fn from_terms(ring: &Arc<PolyRing>, terms: Vec<(i64, Monomial)>) -> Self {
        let f = ring.field();
        let raw = terms
            .into_iter()
            .map(|(c, m)| {
                assert_eq!(
                    m.nvars(),
                    ring.nvars(),
                    "monomial arity does not match ring"
                );
                Term {
                    coeff: f.reduce(c),
                    monomial: m,
                }
            })
            .collect();
        Polynomial::normalize(ring, raw)
    }

    pub(crate) fn normalize(ring: &Arc<PolyRing>, mut terms: Vec<Term>) -> Self {
        let ord = ring.order();
        let f = ring.field();
        terms.sort_by(|a, b| ord.cmp(&b.monomial, &a.monomial));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.monomial == t.monomial => {
                    last.coeff = f.add(last.coeff, t.coeff);
                }
                _ => {
                    if let Some(last) = out.last() {
                        if last.coeff == 0 {
                            out.pop();
                        }
                    }
                    out.push(t);
                }
            }
        }
        if out.last().is_some_and(|t| t.coeff == 0) {
            out.pop();
        }
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Terms already sorted and nonzero.
    pub(crate) fn from_sorted(ring: &Arc<PolyRing>, terms: Vec<Term>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].monomial, &w[1].monomial) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| t.coeff != 0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    #[inline]
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.monomial.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    pub fn leading_coeff(&self) -> u32 {
        self.terms.first().map_or(0, |t| t.coeff)
    }

    /// Maximal total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => {
                let d = t.monomial.degree();
                self.terms.iter().all(|s| s.monomial.degree() == d)
            }
        }
    }

    /// Coefficient of `m` (zero when absent).
    pub fn coeff_of(&self, m: &Monomial) -> u32 {
        let ord = self.ring.order();
        self.terms
            .binary_search_by(|t| ord.cmp(m, &t.monomial))
            .map_or(0, |i| self.terms[i].coeff)
    }

    pub fn same_ring(&self, other: &Polynomial) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::input(format!(
                "ring mismatch: {} vs {}",
                self.ring, other.ring
            )))
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.combine(other, 1, &Monomial::one(self.ring.nvars())))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let minus_one = self.ring.field().neg(1);
        Ok(self.combine(other, minus_one, &Monomial::one(self.ring.nvars())))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero(&self.ring);
        for t in &small.terms {
            acc = acc.combine(large, t.coeff, &t.monomial);
        }
        acc
    }

    /// `self + c * m * other` by a single merge.
    pub(crate) fn combine(&self, other: &Polynomial, c: u32, m: &Monomial) -> Polynomial {
        let f = self.ring.field();
        let ord = self.ring.order();
        if c == 0 || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let shifted = |t: &Term| Term {
            coeff: f.mul(c, t.coeff),
            monomial: t.monomial.mul(m),
        };
        let mut pending: Option<Term> = other.terms.first().map(shifted);
        while i < self.terms.len() || pending.is_some() {
            match (&self.terms.get(i), &pending) {
                (Some(a), Some(b)) => match ord.cmp(&a.monomial, &b.monomial) {
                    Ordering::Greater => {
                        out.push((*a).clone());
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push(pending.take().unwrap());
                        j += 1;
                        pending = other.terms.get(j).map(shifted);
                    }
                    Ordering::Equal => {
                        let s = f.add(a.coeff, b.coeff);
                        if s != 0 {
                            out.push(Term {
                                coeff: s,
                                monomial: a.monomial.clone(),
                            });
                        }
                        i += 1;
                        j += 1;
                        pending = other.terms.get(j).map(shifted);
                    }
                },
                (Some(_), None) => {
                    out.extend_from_slice(&self.terms[i..]);
                    break;
                }
                (None, Some(_)) => {
                    out.push(pending.take().unwrap());
                    j += 1;
                    pending = other.terms.get(j).map(shifted);
                }
                (None, None) => break,
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let f = self.ring.field();
        if c.is_multiple_of(f.modulus()) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: f.mul(t.coeff, c),
                    monomial: t.monomial.clone(),
                })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff,
                    monomial: t.monomial.mul(m),
                })
                .collect(),
        }
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.ring.field().inv(self.leading_coeff()) {
            None => self.clone(),
            Some(1) => self.clone(),
            Some(inv) => self.scale(inv),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::constant(&self.ring, 1);
        for _ in 0..n {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// The same polynomial re-sorted in `ring`, which must share field and variables.
    pub fn to_ring(&self, ring: &Arc<PolyRing>) -> Polynomial {
        assert!(
            ring.field() == self.ring.field() && ring.var_names() == self.ring.var_names(),
            "to_ring only changes the term order"
        );
        if Arc::ptr_eq(ring, &self.ring) {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        let ord = ring.order();
        terms.sort_by(|a, b| ord.cmp(&b.monomial, &a.monomial));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Re-embeds in a ring whose variable list is `extra` new variables followed by ours.
    pub(crate) fn widen_front(&self, ring: &Arc<PolyRing>, extra: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff,
                monomial: t.monomial.widen_front(extra),
            })
            .collect();
        Polynomial::normalize(ring, terms)
    }

    /// Inverse of [`widen_front`](Self::widen_front); `None` if a dropped variable occurs.
    pub(crate) fn narrow_front(&self, ring: &Arc<PolyRing>, count: usize) -> Option<Polynomial> {
        if self
            .terms
            .iter()
            .any(|t| t.monomial.exponents()[..count].iter().any(|e| *e > 0))
        {
            return None;
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff,
                monomial: t.monomial.narrow_front(count),
            })
            .collect();
        Some(Polynomial::normalize(ring, terms))
    }

    /// Image under the substitution `x_i -> images[i]`.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars());
        let target = images
            .first()
            .map(|p| p.ring.clone())
            .unwrap_or_else(|| self.ring.clone());
        let mut acc = Polynomial::zero(&target);
        for t in &self.terms {
            let mut prod = Polynomial::constant(&target, t.coeff as i64);
            for (i, e) in t.monomial.exponents().iter().enumerate() {
                if *e > 0 {
                    prod = prod.mul_unchecked(&images[i].pow(*e));
                }
            }
            acc = acc.combine(&prod, 1, &Monomial::one(target.nvars()));
        }
        acc
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let p = self.ring.field().modulus();
        for (k, t) in self.terms.iter().enumerate() {
            let c = symmetric(p, t.coeff);
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if k == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if t.monomial.is_one() {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}*")?;
                }
                t.monomial.write_with(f, self.ring.var_names())?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl std::ops::$tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs)
                    .expect("polynomial arithmetic across rings")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(self.ring.field().neg(1))
    }
}
