use crate::alg::{Polynomial, RingDesc};
use crate::error::{Error, Result};
use crate::groebner::{krull_dim, sum, IdealHandle};
use crate::rng;

/// A system of parameters of `R`, certified by `dim S/(L + J) = 0`.
#[derive(Clone, Debug)]
pub struct Sop {
    pub elements: Vec<Polynomial>,
    /// Draws consumed before the certificate succeeded.
    pub attempts: usize,
}

impl Sop {
    pub fn ideal(&self, ring: &RingDesc) -> IdealHandle {
        IdealHandle::new(ring.base(), self.elements.clone())
    }
}

/// `d = dim R` random linear forms generating an ideal primary to the origin.
pub fn random_sop(ring: &RingDesc, seed: u64, trials: usize) -> Result<Sop> {
    let d = krull_dim(ring.relations())?;
    let base = ring.base();
    if d == 0 {
        return Ok(Sop {
            elements: Vec::new(),
            attempts: 0,
        });
    }
    for attempt in 0..trials.max(1) {
        let mut g = rng::stream(seed, &["sop", &attempt.to_string()]);
        let elements: Vec<Polynomial> = (0..d).map(|_| rng::linear_form(base, &mut g)).collect();
        let total = ring.relations().add_generators(&elements);
        if !total.is_unit() && krull_dim(&total)? == 0 {
            return Ok(Sop {
                elements,
                attempts: attempt + 1,
            });
        }
    }
    Err(Error::Genericity(format!(
        "no system of parameters of {ring} among {trials} random draws"
    )))
}

/// Lifted parameters `a_i = b_i + λ_i c_1 + … + λ_i^s c_s` with the `λ_i` used.
#[derive(Clone, Debug)]
pub struct LiftedSop {
    pub elements: Vec<Polynomial>,
    pub lambdas: Vec<u32>,
    /// `dim S/(L + (a_1..a_i))` for `i = 0..=r`.
    pub dims: Vec<usize>,
}

/// Lifts a system of parameters `x` of `S/p` to elements of `S` that cut the dimension of `S`
/// by one at each step and agree with `x` modulo `p`.
pub fn lift_sop(
    s_amb: &RingDesc,
    p: &IdealHandle,
    x: &[Polynomial],
    seed: u64,
    trials: usize,
) -> Result<LiftedSop> {
    p.check_same_ring(s_amb.relations())?;
    let base = s_amb.base();
    let field = base.field();
    let l = s_amb.relations();
    let dim_s = krull_dim(l)?;
    let quotient = sum(l, p);
    if quotient.is_unit() {
        return Err(Error::input("S/p is the zero ring"));
    }
    let dim_q = krull_dim(&quotient)?;
    let x: Vec<Polynomial> = x.iter().map(|f| f.to_ring(base)).collect();
    let cut = quotient.add_generators(&x);
    if x.len() != dim_q || cut.is_unit() || krull_dim(&cut)? != 0 {
        return Err(Error::input(format!(
            "the given elements are not a system of parameters of S/p (dim {dim_q})"
        )));
    }
    if x.len() > dim_s {
        return Err(Error::input("more parameters than dim S"));
    }
    let cs: Vec<Polynomial> = p.generators().to_vec();
    let mut elements = Vec::with_capacity(x.len());
    let mut lambdas = Vec::with_capacity(x.len());
    let mut dims = vec![dim_s];
    for (i, b) in x.iter().enumerate() {
        let mut accepted = None;
        for attempt in 0..trials.max(1) {
            let mut g = rng::stream(seed, &["lift", &i.to_string(), &attempt.to_string()]);
            let lambda = if cs.is_empty() {
                0
            } else {
                rng::nonzero_element(field, &mut g)
            };
            let mut a = b.clone();
            let mut power = 1u32;
            for c in &cs {
                power = field.mul(power, lambda);
                a = a.combine(c, power, &crate::alg::Monomial::one(base.nvars()));
            }
            let mut partial = elements.clone();
            partial.push(a.clone());
            let ideal = l.add_generators(&partial);
            if !ideal.is_unit() && krull_dim(&ideal)? == dim_s - i - 1 {
                accepted = Some((a, lambda));
                break;
            }
        }
        let Some((a, lambda)) = accepted else {
            return Err(Error::Genericity(format!(
                "parameter {} could not be lifted in {trials} draws",
                i + 1
            )));
        };
        elements.push(a);
        lambdas.push(lambda);
        dims.push(dim_s - i - 1);
    }
    Ok(LiftedSop {
        elements,
        lambdas,
        dims,
    })
}
