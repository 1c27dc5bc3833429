use std::collections::HashMap;

use crate::alg::{Polynomial, RingDesc};
use crate::error::{Error, Result};
use crate::graded::GradedQuotient;
use crate::groebner::IdealHandle;
use crate::linalg::{Matrix, Subspace};

/// The pieces `(I^p R)_k` of one power: explicit below `full_from`, all of `R_k` from there on.
#[derive(Clone, Debug)]
pub struct Layer {
    pieces: Vec<Subspace>,
    full_from: usize,
}

impl Layer {
    /// Degree from which the power fills every piece.
    pub fn full_from(&self) -> usize {
        self.full_from
    }

    pub fn explicit(&self, k: usize) -> Option<&Subspace> {
        self.pieces.get(k)
    }
}

/// Powers `I^p R` of a homogeneous ideal in a homogeneous quotient, degree by degree,
/// using `(I^{p+1})_k = Σ_j g_j · (I^p)_{k - deg g_j}`.
pub struct Filtration {
    q: GradedQuotient,
    gens: Vec<Polynomial>,
    mats: HashMap<(usize, usize), Matrix>,
    layers: Vec<Layer>,
    degree_cap: usize,
}

impl Filtration {
    pub fn new(ring: &RingDesc, ideal: &IdealHandle) -> Result<Self> {
        if !ideal.is_homogeneous() {
            return Err(Error::input(
                "the graded filtration needs a homogeneous ideal",
            ));
        }
        let q = GradedQuotient::new(ring)?;
        let gens: Vec<Polynomial> = ideal
            .generators()
            .iter()
            .map(|g| g.to_ring(q.poly_ring()))
            .collect();
        if gens.iter().any(|g| g.degree() == Some(0)) {
            return Err(Error::NotZeroDimensional(
                "the ideal is the unit ideal".into(),
            ));
        }
        let max_deg = gens.iter().filter_map(|g| g.degree()).max().unwrap_or(1) as usize;
        let degree_cap = 64 + 8 * max_deg * (ring.nvars() + 1);
        Ok(Filtration {
            q,
            gens,
            mats: HashMap::new(),
            layers: vec![Layer {
                pieces: Vec::new(),
                full_from: 0,
            }],
            degree_cap,
        })
    }

    pub fn quotient(&mut self) -> &mut GradedQuotient {
        &mut self.q
    }

    /// `dim R_k`.
    pub fn piece_dim(&mut self, k: usize) -> usize {
        self.q.dim(k)
    }

    /// The layer of `I^p`, computing intermediate powers as needed.
    pub fn layer(&mut self, p: usize) -> Result<&Layer> {
        while self.layers.len() <= p {
            self.extend()?;
        }
        Ok(&self.layers[p])
    }

    /// `(I^p)_k` as a subspace of `R_k`.
    pub fn piece(&mut self, p: usize, k: usize) -> Result<Subspace> {
        let field = self.q.poly_ring().field();
        let dim = self.q.dim(k);
        let layer = self.layer(p)?;
        Ok(match layer.explicit(k) {
            Some(s) if k < layer.full_from => s.clone(),
            _ => Subspace::full(field, dim),
        })
    }

    /// Caches the matrix of multiplication by generator `j` on `R_k`.
    fn ensure_mult(&mut self, j: usize, k: usize) {
        if !self.mats.contains_key(&(j, k)) {
            let m = self.q.multiplication_matrix(&self.gens[j], k);
            self.mats.insert((j, k), m);
        }
    }

    fn extend(&mut self) -> Result<()> {
        let field = self.q.poly_ring().field();
        let p = self.layers.len();
        let mut pieces = Vec::new();
        let mut k = 0;
        loop {
            if k > self.degree_cap {
                return Err(Error::Limit(format!(
                    "power {p} does not fill the graded pieces below degree {}; is the ideal m-primary?",
                    self.degree_cap
                )));
            }
            let dim = self.q.dim(k);
            let mut span = Subspace::zero(field, dim);
            if dim > 0 {
                'gens: for j in 0..self.gens.len() {
                    let e = self.gens[j].degree().unwrap() as usize;
                    if e > k {
                        continue;
                    }
                    let src = self.piece(p - 1, k - e)?;
                    if src.dim() == 0 {
                        continue;
                    }
                    let full_src = src.is_full();
                    self.ensure_mult(j, k - e);
                    let m = &self.mats[&(j, k - e)];
                    if full_src {
                        for c in 0..m.cols() {
                            span.insert(m.column(c));
                            if span.is_full() {
                                break 'gens;
                            }
                        }
                    } else {
                        for v in src.basis() {
                            span.insert(m.apply(v));
                            if span.is_full() {
                                break 'gens;
                            }
                        }
                    }
                }
            }
            if span.is_full() {
                self.layers.push(Layer {
                    pieces,
                    full_from: k,
                });
                return Ok(());
            }
            pieces.push(span);
            k += 1;
        }
    }

    /// `λ(R / I^p)`.
    pub fn colength(&mut self, p: usize) -> Result<u64> {
        let layer = self.layer(p)?.clone();
        let mut total = 0u64;
        for k in 0..layer.full_from {
            total += (self.q.dim(k) - layer.pieces[k].dim()) as u64;
        }
        Ok(total)
    }
}
