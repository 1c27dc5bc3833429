use std::fmt;
use std::sync::Arc;

use super::{Monomial, Polynomial, PrimeField, TermOrder};
use crate::error::{Error, Result};
use crate::groebner::IdealHandle;

/// `F_p[x_1, ..., x_n]` with a fixed term order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: PrimeField,
    vars: Vec<String>,
    order: TermOrder,
}

impl PolyRing {
    pub fn new(characteristic: u32, vars: &[&str]) -> Result<Arc<Self>> {
        Self::with_names(
            characteristic,
            vars.iter().map(|s| s.to_string()).collect(),
            TermOrder::grevlex(),
        )
    }

    pub fn with_names(
        characteristic: u32,
        vars: Vec<String>,
        order: TermOrder,
    ) -> Result<Arc<Self>> {
        let field = PrimeField::new(characteristic)?;
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::input(format!("variable {v} declared twice")));
            }
        }
        if let Some(p) = order.permutation() {
            if p.len() != vars.len() {
                return Err(Error::input(
                    "order permutation does not match variable count",
                ));
            }
        }
        Ok(Arc::new(PolyRing { field, vars, order }))
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.field.modulus()
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    #[inline]
    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables and field under another order.
    pub fn with_order(self: &Arc<Self>, order: TermOrder) -> Arc<Self> {
        if self.order == order {
            return self.clone();
        }
        Arc::new(PolyRing {
            field: self.field,
            vars: self.vars.clone(),
            order,
        })
    }

    /// The ring with `names` prepended as new variables, under `order`.
    pub(crate) fn extend_front(&self, names: &[&str], order: TermOrder) -> Arc<Self> {
        let mut vars: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        vars.extend(self.vars.iter().cloned());
        Arc::new(PolyRing {
            field: self.field,
            vars,
            order,
        })
    }

    pub fn var(self: &Arc<Self>, i: usize) -> Polynomial {
        Polynomial::monomial(self, 1, Monomial::var(self.nvars(), i))
    }

    pub fn vars(self: &Arc<Self>) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    pub fn one(self: &Arc<Self>) -> Polynomial {
        Polynomial::constant(self, 1)
    }

    /// Parses a polynomial in this ring's variables (`3*x^2*y - y + 1`).
    pub fn parse(self: &Arc<Self>, text: &str) -> Result<Polynomial> {
        let expr = crate::io::dsl::parse_poly_expr(text)?;
        expr.evaluate(self)
    }

    pub fn parse_all(self: &Arc<Self>, texts: &[&str]) -> Result<Vec<Polynomial>> {
        texts.iter().map(|t| self.parse(t)).collect()
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[{}]", self.field.modulus(), self.vars.join(","))
    }
}

/// A ring `R = S/L` presented by the polynomial ring `S` and generators of `L`.
#[derive(Clone, Debug)]
pub struct RingDesc {
    base: Arc<PolyRing>,
    relations: IdealHandle,
}

impl RingDesc {
    /// The polynomial ring itself (`L = 0`).
    pub fn polynomial(base: &Arc<PolyRing>) -> Self {
        RingDesc {
            base: base.clone(),
            relations: IdealHandle::new(base, Vec::new()),
        }
    }

    pub fn quotient(base: &Arc<PolyRing>, relations: Vec<Polynomial>) -> Result<Self> {
        for g in &relations {
            if !Arc::ptr_eq(g.ring(), base) && **g.ring() != **base {
                return Err(Error::input(format!(
                    "relation {g} does not live in {base}"
                )));
            }
        }
        Ok(RingDesc {
            base: base.clone(),
            relations: IdealHandle::new(base, relations),
        })
    }

    pub fn from_ideal(ideal: &IdealHandle) -> Self {
        RingDesc {
            base: ideal.ring().clone(),
            relations: ideal.clone(),
        }
    }

    pub fn base(&self) -> &Arc<PolyRing> {
        &self.base
    }

    pub fn characteristic(&self) -> u32 {
        self.base.characteristic()
    }

    pub fn nvars(&self) -> usize {
        self.base.nvars()
    }

    /// The defining ideal `L`.
    pub fn relations(&self) -> &IdealHandle {
        &self.relations
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.relations.generators().iter().all(|g| g.is_zero())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.relations.is_homogeneous()
    }

    /// `S/(L + extra)`.
    pub fn modulo(&self, extra: &[Polynomial]) -> RingDesc {
        RingDesc {
            base: self.base.clone(),
            relations: self.relations.add_generators(extra),
        }
    }
}

impl fmt::Display for RingDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial_ring() {
            write!(f, "{}", self.base)
        } else {
            write!(f, "{}/({})", self.base, self.relations)
        }
    }
}
