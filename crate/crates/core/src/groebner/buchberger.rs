use std::borrow::Borrow;
use std::cmp::Ordering;
use std::sync::Arc;

use crate::alg::{Monomial, PolyRing, Polynomial, Term};

/// A reduced Gröbner basis: monic, no leading monomial divides another, tails reduced.
/// Elements are sorted by increasing leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    polys: Vec<Polynomial>,
    masks: Vec<u64>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.polys == other.polys
    }
}

impl Eq for GroebnerBasis {}

impl GroebnerBasis {
    /// Runs Buchberger's algorithm on `gens` (re-sorted into `ring`'s order).
    pub fn compute(gens: &[Polynomial], ring: &Arc<PolyRing>) -> Self {
        let input: Vec<Polynomial> = gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.to_ring(ring).monic())
            .collect();
        let polys = run(ring, input);
        GroebnerBasis::from_reduced(ring, polys)
    }

    fn from_reduced(ring: &Arc<PolyRing>, polys: Vec<Polynomial>) -> Self {
        let masks = polys
            .iter()
            .map(|p| p.leading_monomial().unwrap().divmask())
            .collect();
        GroebnerBasis {
            ring: ring.clone(),
            polys,
            masks,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys
            .iter()
            .map(|p| p.leading_monomial().unwrap().clone())
            .collect()
    }

    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant()
    }

    /// Whether some leading monomial divides `m`.
    pub fn is_reducible(&self, m: &Monomial) -> bool {
        find_reducer(&self.polys, &self.masks, m).is_some()
    }

    /// Fully reduced remainder of `f`; zero iff `f` lies in the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let f = f.to_ring(&self.ring);
        reduce(&f, &self.polys, &self.masks, true)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }
}

#[inline]
fn find_reducer<P: Borrow<Polynomial>>(basis: &[P], masks: &[u64], m: &Monomial) -> Option<usize> {
    let mm = m.divmask();
    basis.iter().zip(masks).position(|(g, gm)| {
        gm & !mm == 0
            && g.borrow()
                .leading_monomial()
                .is_some_and(|lm| lm.divides(m))
    })
}

/// Reduces `f` by monic `basis`. With `full = false` only the leading term is reduced.
pub(crate) fn reduce<P: Borrow<Polynomial>>(
    f: &Polynomial,
    basis: &[P],
    masks: &[u64],
    full: bool,
) -> Polynomial {
    let ring = f.ring().clone();
    let field = ring.field();
    let ord = ring.order().clone();
    let mut remainder: Vec<Term> = Vec::new();
    let mut cur: Vec<Term> = f.terms().to_vec();
    let mut start = 0usize;
    while start < cur.len() {
        let lead = &cur[start];
        match find_reducer(basis, masks, &lead.monomial) {
            Some(k) => {
                let g = basis[k].borrow();
                let q = g
                    .leading_monomial()
                    .unwrap()
                    .quotient_of(&lead.monomial)
                    .unwrap();
                let c = field.neg(lead.coeff);
                cur = merge_sub(&cur[start + 1..], &g.terms()[1..], c, &q, &ord, field);
                start = 0;
            }
            None => {
                if !full {
                    break;
                }
                remainder.push(cur[start].clone());
                start += 1;
            }
        }
    }
    if !full {
        remainder.extend_from_slice(&cur[start..]);
    }
    Polynomial::from_sorted(&ring, remainder)
}

/// `a + c * q * b` for sorted term slices.
fn merge_sub(
    a: &[Term],
    b: &[Term],
    c: u32,
    q: &Monomial,
    ord: &crate::alg::TermOrder,
    field: crate::alg::PrimeField,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let mut bj: Option<Term> = b.first().map(|t| Term {
        coeff: field.mul(c, t.coeff),
        monomial: t.monomial.mul(q),
    });
    loop {
        match (a.get(i), bj.as_ref()) {
            (Some(x), Some(y)) => match ord.cmp(&x.monomial, &y.monomial) {
                Ordering::Greater => {
                    out.push(x.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(bj.take().unwrap());
                    j += 1;
                    bj = b.get(j).map(|t| Term {
                        coeff: field.mul(c, t.coeff),
                        monomial: t.monomial.mul(q),
                    });
                }
                Ordering::Equal => {
                    let s = field.add(x.coeff, y.coeff);
                    if s != 0 {
                        out.push(Term {
                            coeff: s,
                            monomial: x.monomial.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                    bj = b.get(j).map(|t| Term {
                        coeff: field.mul(c, t.coeff),
                        monomial: t.monomial.mul(q),
                    });
                }
            },
            (Some(_), None) => {
                out.extend_from_slice(&a[i..]);
                break;
            }
            (None, Some(_)) => {
                out.push(bj.take().unwrap());
                j += 1;
                bj = b.get(j).map(|t| Term {
                    coeff: field.mul(c, t.coeff),
                    monomial: t.monomial.mul(q),
                });
            }
            (None, None) => break,
        }
    }
    out
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct State {
    ring: Arc<PolyRing>,
    polys: Vec<Polynomial>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl State {
    fn lm(&self, i: usize) -> &Monomial {
        self.polys[i].leading_monomial().unwrap()
    }

    fn active_reducers(&self) -> (Vec<&Polynomial>, Vec<u64>) {
        let polys: Vec<&Polynomial> = self
            .polys
            .iter()
            .zip(&self.active)
            .filter(|(_, a)| **a)
            .map(|(p, _)| p)
            .collect();
        let masks = polys
            .iter()
            .map(|p| p.leading_monomial().unwrap().divmask())
            .collect();
        (polys, masks)
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u32 {
        let si = self.sugar[i] + lcm.degree() - self.lm(i).degree();
        let sj = self.sugar[j] + lcm.degree() - self.lm(j).degree();
        si.max(sj)
    }

    /// Gebauer–Möller update for the new element `h`.
    fn update(&mut self, h: usize) {
        let lm_h = self.lm(h).clone();
        let candidates: Vec<usize> = (0..h).filter(|&g| self.active[g]).collect();
        let mut c: Vec<(usize, Monomial)> = candidates
            .iter()
            .map(|&g| (g, self.lm(g).lcm(&lm_h)))
            .collect();
        let mut d: Vec<(usize, Monomial)> = Vec::new();
        while let Some((g, lcm)) = c.pop() {
            let coprime = self.lm(g).is_coprime(&lm_h);
            let dominated = c
                .iter()
                .chain(d.iter())
                .any(|(_, other)| other.divides(&lcm));
            if coprime || !dominated {
                d.push((g, lcm));
            }
        }
        let new_pairs: Vec<(usize, Monomial)> = d
            .into_iter()
            .filter(|(g, _)| !self.lm(*g).is_coprime(&lm_h))
            .collect();

        let old = std::mem::take(&mut self.pairs);
        let mut kept = Vec::with_capacity(old.len() + new_pairs.len());
        for p in old {
            let lcm_ih = self.lm(p.i).lcm(&lm_h);
            let lcm_jh = self.lm(p.j).lcm(&lm_h);
            let redundant = lm_h.divides(&p.lcm) && lcm_ih != p.lcm && lcm_jh != p.lcm;
            if !redundant {
                kept.push(p);
            }
        }
        for (g, lcm) in new_pairs {
            let sugar = self.pair_sugar(g, h, &lcm);
            kept.push(Pair {
                i: g,
                j: h,
                lcm,
                sugar,
            });
        }
        self.pairs = kept;
        for g in 0..h {
            if self.active[g] && lm_h.divides(self.lm(g)) {
                self.active[g] = false;
            }
        }
    }

    fn select(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let ord = self.ring.order();
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let a = &self.pairs[k];
            let b = &self.pairs[best];
            let better = a.sugar < b.sugar
                || (a.sugar == b.sugar && ord.cmp(&a.lcm, &b.lcm) == Ordering::Less);
            if better {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn add(&mut self, p: Polynomial, sugar: u32) {
        self.polys.push(p);
        self.sugar.push(sugar);
        self.active.push(true);
        let h = self.polys.len() - 1;
        self.update(h);
    }
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, lcm: &Monomial) -> Polynomial {
    let qf = f.leading_monomial().unwrap().quotient_of(lcm).unwrap();
    let qg = g.leading_monomial().unwrap().quotient_of(lcm).unwrap();
    let a = f.mul_monomial(&qf);
    let minus_one = f.ring().field().neg(1);
    a.combine(g, minus_one, &qg)
}

fn run(ring: &Arc<PolyRing>, mut input: Vec<Polynomial>) -> Vec<Polynomial> {
    if input.is_empty() {
        return Vec::new();
    }
    if input.iter().any(|p| p.is_constant()) {
        return vec![Polynomial::constant(ring, 1)];
    }
    let ord = ring.order().clone();
    input.sort_by(|a, b| ord.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut st = State {
        ring: ring.clone(),
        polys: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for p in input {
        let r = {
            let (reducers, masks) = st.active_reducers();
            reduce(&p, &reducers, &masks, false)
        };
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return vec![Polynomial::constant(ring, 1)];
        }
        let sugar = p.degree().unwrap();
        st.add(r.monic(), sugar);
    }
    while let Some(pair) = st.select() {
        let s = s_polynomial(&st.polys[pair.i], &st.polys[pair.j], &pair.lcm);
        let r = {
            let (reducers, masks) = st.active_reducers();
            reduce(&s, &reducers, &masks, false)
        };
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return vec![Polynomial::constant(ring, 1)];
        }
        st.add(r.monic(), pair.sugar);
    }
    let active: Vec<Polynomial> = st.active_reducers().0.into_iter().cloned().collect();
    interreduce(ring, active)
}

/// Minimalizes and tail-reduces a Gröbner basis.
fn interreduce(ring: &Arc<PolyRing>, polys: Vec<Polynomial>) -> Vec<Polynomial> {
    let ord = ring.order().clone();
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (k, p) in polys.iter().enumerate() {
        let lm = p.leading_monomial().unwrap();
        let redundant = polys.iter().enumerate().any(|(l, q)| {
            let lq = q.leading_monomial().unwrap();
            l != k && lq.divides(lm) && (lq != lm || l < k)
        });
        if !redundant {
            minimal.push(p.clone());
        }
    }
    minimal.sort_by(|a, b| ord.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != k)
            .map(|(_, p)| p.clone())
            .collect();
        let masks: Vec<u64> = others
            .iter()
            .map(|p| p.leading_monomial().unwrap().divmask())
            .collect();
        let lead = Polynomial::from_sorted(ring, vec![minimal[k].terms()[0].clone()]);
        let tail = Polynomial::from_sorted(ring, minimal[k].terms()[1..].to_vec());
        let tail = reduce(&tail, &others, &masks, true);
        out.push((&lead + &tail).monic());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn principal_ideal_is_its_own_basis() {
        let r = PolyRing::new(32003, &["x", "y"]).unwrap();
        let gb = GroebnerBasis::compute(&[r.parse("x").unwrap()], &r);
        assert_eq!(gb.polys(), &[r.parse("x").unwrap()]);
    }

    #[test]
    fn unit_detection() {
        let r = PolyRing::new(32003, &["x", "y"]).unwrap();
        let gb = GroebnerBasis::compute(&r.parse_all(&["x*y - 1", "x"]).unwrap(), &r);
        assert!(gb.is_unit());
    }

    #[test]
    fn single_reduction_step() {
        let r = PolyRing::new(32003, &["x", "y"]).unwrap();
        let gb = GroebnerBasis::compute(&[r.parse("x^2 - y").unwrap()], &r);
        assert_eq!(
            gb.normal_form(&r.parse("x^2").unwrap()),
            r.parse("y").unwrap()
        );
    }
}
