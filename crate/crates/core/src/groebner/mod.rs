//! Reduced Gröbner bases and the ideal calculus built on them.

mod buchberger;
mod dimension;
mod ops;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

pub use buchberger::GroebnerBasis;
pub use dimension::{
    krull_dim, length_zero_dim, local_length_at_origin, standard_monomials, StandardMonomialSet,
};
pub use ops::{
    colon, colon_ideal, double_annihilator_test, ideal_op, intersection, power, product, saturate,
    sum, AnnihilatorVerdict, IdealOp, Saturation,
};

use crate::alg::{PolyRing, Polynomial, TermOrder};
use crate::error::{Error, Result};

struct Inner {
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial>,
    gb_cache: RwLock<HashMap<TermOrder, Arc<GroebnerBasis>>>,
}

/// An ideal of a polynomial ring given by generators, with reduced Gröbner bases
/// cached per term order. Cloning is cheap and shares the cache.
#[derive(Clone)]
pub struct IdealHandle {
    inner: Arc<Inner>,
}

impl IdealHandle {
    /// Zero generators are dropped; generators are re-sorted into `ring`'s order.
    pub fn new(ring: &Arc<PolyRing>, generators: Vec<Polynomial>) -> Self {
        let generators = generators
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.to_ring(ring))
            .collect();
        IdealHandle {
            inner: Arc::new(Inner {
                ring: ring.clone(),
                generators,
                gb_cache: RwLock::new(HashMap::new()),
            }),
        }
    }

    pub fn from_strs(ring: &Arc<PolyRing>, gens: &[&str]) -> Result<Self> {
        Ok(IdealHandle::new(ring, ring.parse_all(gens)?))
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Self {
        IdealHandle::new(ring, vec![ring.one()])
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        IdealHandle::new(ring, Vec::new())
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(ring: &Arc<PolyRing>) -> Self {
        IdealHandle::new(ring, ring.vars())
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.inner.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.inner.generators
    }

    /// Reduced Gröbner basis in the ring's own order.
    pub fn groebner_basis(&self) -> Arc<GroebnerBasis> {
        self.groebner_basis_in(&self.inner.ring.order().clone())
    }

    pub fn groebner_basis_in(&self, order: &TermOrder) -> Arc<GroebnerBasis> {
        if let Some(gb) = self.inner.gb_cache.read().unwrap().get(order) {
            return gb.clone();
        }
        let ring = self.inner.ring.with_order(order.clone());
        let gb = Arc::new(GroebnerBasis::compute(&self.inner.generators, &ring));
        let mut cache = self.inner.gb_cache.write().unwrap();
        cache.entry(order.clone()).or_insert(gb).clone()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.groebner_basis().normal_form(f)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn contains_ideal(&self, other: &IdealHandle) -> bool {
        other.generators().iter().all(|g| self.contains(g))
    }

    pub fn same_ideal(&self, other: &IdealHandle) -> bool {
        self.groebner_basis().polys() == other.groebner_basis().polys()
            || (self.contains_ideal(other) && other.contains_ideal(self))
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.inner.generators.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.inner.generators.iter().all(|g| g.is_homogeneous())
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.inner
            .generators
            .iter()
            .filter_map(|g| g.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn add_generators(&self, extra: &[Polynomial]) -> IdealHandle {
        let mut gens = self.inner.generators.clone();
        gens.extend(extra.iter().cloned());
        IdealHandle::new(&self.inner.ring, gens)
    }

    pub(crate) fn check_same_ring(&self, other: &IdealHandle) -> Result<()> {
        if self.ring().field() != other.ring().field()
            || self.ring().var_names() != other.ring().var_names()
        {
            return Err(Error::input(format!(
                "ideals live in different rings: {} and {}",
                self.ring(),
                other.ring()
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IdealHandle({self})")
    }
}

impl fmt::Display for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.generators.is_empty() {
            return write!(f, "0");
        }
        for (i, g) in self.inner.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Reduced Gröbner basis of `ideal` under `order`.
pub fn buchberger(ideal: &IdealHandle, order: &TermOrder) -> Arc<GroebnerBasis> {
    ideal.groebner_basis_in(order)
}

/// Remainder of `f` modulo `ideal` under `order`; zero iff `f` lies in the ideal.
pub fn normal_form(f: &Polynomial, ideal: &IdealHandle, order: &TermOrder) -> Result<Polynomial> {
    if f.ring().var_names() != ideal.ring().var_names() || f.ring().field() != ideal.ring().field()
    {
        return Err(Error::input("polynomial and ideal live in different rings"));
    }
    Ok(ideal.groebner_basis_in(order).normal_form(f))
}
