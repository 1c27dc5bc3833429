use std::collections::HashMap;
use std::sync::Arc;

use crate::alg::{monomials_of_degree, Monomial, PolyRing, Polynomial, RingDesc, TermOrder};
use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::linalg::{Matrix, Subspace};

/// Sparse coordinates `(basis index, coefficient)` in one graded piece.
pub type SparseVec = Vec<(usize, u32)>;

/// Degree-by-degree linear algebra in `R = S/L` for homogeneous `L`: a standard-monomial
/// basis of every piece `R_k` and memoized normal forms of monomials.
pub struct GradedQuotient {
    ring: RingDesc,
    grevlex: Arc<PolyRing>,
    gb: Arc<GroebnerBasis>,
    bases: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, usize>>,
    nf_cache: HashMap<Monomial, SparseVec>,
}

impl GradedQuotient {
    pub fn new(ring: &RingDesc) -> Result<Self> {
        if !ring.is_homogeneous() {
            return Err(Error::input(
                "graded pieces need homogeneous relations; use the adic sampler in `hilbert` instead",
            ));
        }
        let grevlex = ring.base().with_order(TermOrder::grevlex());
        let gb = ring.relations().groebner_basis_in(&TermOrder::grevlex());
        Ok(GradedQuotient {
            ring: ring.clone(),
            grevlex,
            gb,
            bases: Vec::new(),
            index: Vec::new(),
            nf_cache: HashMap::new(),
        })
    }

    pub fn ring(&self) -> &RingDesc {
        &self.ring
    }

    /// The base ring under grevlex, in which all normal forms are taken.
    pub fn poly_ring(&self) -> &Arc<PolyRing> {
        &self.grevlex
    }

    pub fn groebner_basis(&self) -> &Arc<GroebnerBasis> {
        &self.gb
    }

    fn ensure(&mut self, k: usize) {
        let n = self.grevlex.nvars();
        while self.bases.len() <= k {
            let next: Vec<Monomial> = match self.bases.last() {
                None => {
                    if self.gb.is_unit() {
                        Vec::new()
                    } else {
                        vec![Monomial::one(n)]
                    }
                }
                Some(prev) => {
                    let mut seen = std::collections::HashSet::new();
                    let mut out = Vec::new();
                    for u in prev {
                        for i in 0..n {
                            let m = u.mul_var(i);
                            if !self.gb.is_reducible(&m) && seen.insert(m.clone()) {
                                out.push(m);
                            }
                        }
                    }
                    let ord = self.grevlex.order().clone();
                    out.sort_by(|a, b| ord.cmp(b, a));
                    out
                }
            };
            self.index.push(
                next.iter()
                    .enumerate()
                    .map(|(i, m)| (m.clone(), i))
                    .collect(),
            );
            self.bases.push(next);
        }
    }

    /// Standard monomials of degree `k`, in decreasing order.
    pub fn basis(&mut self, k: usize) -> &[Monomial] {
        self.ensure(k);
        &self.bases[k]
    }

    /// `dim_k R_k`.
    pub fn dim(&mut self, k: usize) -> usize {
        self.basis(k).len()
    }

    /// Normal form of a monomial as coordinates in `R_{deg m}`.
    pub fn nf_monomial(&mut self, m: &Monomial) -> SparseVec {
        if let Some(v) = self.nf_cache.get(m) {
            return v.clone();
        }
        let k = m.degree() as usize;
        self.ensure(k);
        let v = if let Some(&i) = self.index[k].get(m) {
            vec![(i, 1)]
        } else if k == 0 {
            Vec::new()
        } else {
            let i = m.exponents().iter().position(|e| *e > 0).unwrap();
            let mut exps = m.exponents().to_vec();
            exps[i] -= 1;
            let parent = Monomial::from_exponents(&exps);
            if self.index[k - 1].contains_key(&parent) {
                self.reduce_directly(m)
            } else {
                let pv = self.nf_monomial(&parent);
                let field = self.grevlex.field();
                let mut acc: HashMap<usize, u32> = HashMap::new();
                for (u, c) in pv {
                    let child = self.bases[k - 1][u].mul_var(i);
                    for (w, d) in self.boundary_nf(&child) {
                        let e = acc.entry(w).or_insert(0);
                        *e = field.add(*e, field.mul(c, d));
                    }
                }
                let mut out: SparseVec = acc.into_iter().filter(|(_, c)| *c != 0).collect();
                out.sort_unstable();
                out
            }
        };
        self.nf_cache.insert(m.clone(), v.clone());
        v
    }

    /// Normal form of `x_i * u` for a standard `u`.
    fn boundary_nf(&mut self, m: &Monomial) -> SparseVec {
        if let Some(v) = self.nf_cache.get(m) {
            return v.clone();
        }
        let k = m.degree() as usize;
        let v = match self.index[k].get(m) {
            Some(&i) => vec![(i, 1)],
            None => self.reduce_directly(m),
        };
        self.nf_cache.insert(m.clone(), v.clone());
        v
    }

    fn reduce_directly(&mut self, m: &Monomial) -> SparseVec {
        let k = m.degree() as usize;
        let nf = self
            .gb
            .normal_form(&Polynomial::monomial(&self.grevlex, 1, m.clone()));
        let mut out: SparseVec = nf
            .terms()
            .iter()
            .map(|t| (self.index[k][&t.monomial], t.coeff))
            .collect();
        out.sort_unstable();
        out
    }

    /// Coordinates of a homogeneous polynomial of degree `k` in `R_k`.
    pub fn coordinates(&mut self, f: &Polynomial) -> Vec<u32> {
        let k = f.degree().unwrap_or(0) as usize;
        let n = self.dim(k);
        let field = self.grevlex.field();
        let mut v = vec![0u32; n];
        for t in f.terms() {
            for (i, c) in self.nf_monomial(&t.monomial) {
                v[i] = field.add(v[i], field.mul(c, t.coeff));
            }
        }
        v
    }

    /// Matrix of multiplication by the homogeneous `g` from `R_k` to `R_{k + deg g}`.
    pub fn multiplication_matrix(&mut self, g: &Polynomial, k: usize) -> Matrix {
        let e = g.degree().unwrap_or(0) as usize;
        let field = self.grevlex.field();
        let src: Vec<Monomial> = self.basis(k).to_vec();
        let rows = self.dim(k + e);
        let mut m = Matrix::zeros(field, rows, src.len());
        for (col, u) in src.iter().enumerate() {
            for t in g.terms() {
                for (row, c) in self.nf_monomial(&t.monomial.mul(u)) {
                    let cur = m.get(row, col);
                    m.set(row, col, field.add(cur, field.mul(c, t.coeff)));
                }
            }
        }
        m
    }

    /// `dim R_n` by counting standard monomials (engine a).
    pub fn graded_dim(&mut self, n: usize) -> usize {
        self.dim(n)
    }
}

/// `dim R_n` by row reduction of all degree-`n` multiples of the relations (engine b).
pub fn graded_dim_by_rank(ring: &RingDesc, n: usize) -> Result<usize> {
    if !ring.is_homogeneous() {
        return Err(Error::input(
            "graded pieces need homogeneous relations; use the adic sampler in `hilbert` instead",
        ));
    }
    let base = ring.base();
    let field = base.field();
    let monos = monomials_of_degree(base.nvars(), n as u32);
    let index: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut span = Subspace::zero(field, monos.len());
    for g in ring.relations().generators() {
        let dg = g.degree().unwrap() as usize;
        if dg > n {
            continue;
        }
        for m in monomials_of_degree(base.nvars(), (n - dg) as u32) {
            let mut v = vec![0u32; monos.len()];
            for t in g.terms() {
                v[index[&t.monomial.mul(&m)]] = t.coeff;
            }
            span.insert(v);
            if span.is_full() {
                return Ok(0);
            }
        }
    }
    Ok(monos.len() - span.dim())
}
