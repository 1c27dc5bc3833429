use std::cmp::Ordering;
use std::sync::Arc;

use super::Monomial;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Graded reverse lexicographic.
    Grevlex,
    /// Pure lexicographic.
    Lex,
    /// Block order eliminating the first `k` positions: degree in the block first,
    /// grevlex inside each block.
    Elimination(usize),
}

/// A monomial order: an order kind applied to the exponent vector read through
/// an optional variable permutation (position `j` reads variable `perm[j]`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermOrder {
    kind: OrderKind,
    perm: Option<Arc<[usize]>>,
}

impl Default for TermOrder {
    fn default() -> Self {
        TermOrder::grevlex()
    }
}

impl TermOrder {
    pub fn grevlex() -> Self {
        TermOrder {
            kind: OrderKind::Grevlex,
            perm: None,
        }
    }

    pub fn lex() -> Self {
        TermOrder {
            kind: OrderKind::Lex,
            perm: None,
        }
    }

    pub fn elimination(block: usize) -> Self {
        TermOrder {
            kind: OrderKind::Elimination(block),
            perm: None,
        }
    }

    pub fn with_permutation(self, perm: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; perm.len()];
        for &i in &perm {
            if i >= perm.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::input(format!("{perm:?} is not a permutation")));
            }
        }
        Ok(TermOrder {
            kind: self.kind,
            perm: Some(perm.into()),
        })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn permutation(&self) -> Option<&[usize]> {
        self.perm.as_deref()
    }

    /// Compares two monomials of equal arity. Panics on arity mismatch; see
    /// [`compare_monomials`] for the checked form.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match &self.perm {
            None => cmp_kind(
                self.kind,
                a.exponents(),
                b.exponents(),
                a.degree(),
                b.degree(),
            ),
            Some(perm) => {
                let pa: Vec<u32> = perm.iter().map(|&i| a.exponents()[i]).collect();
                let pb: Vec<u32> = perm.iter().map(|&i| b.exponents()[i]).collect();
                cmp_kind(self.kind, &pa, &pb, a.degree(), b.degree())
            }
        }
    }

    /// Whether the order compares total degree first.
    pub fn is_degree_compatible(&self) -> bool {
        matches!(self.kind, OrderKind::Grevlex)
    }
}

fn cmp_kind(kind: OrderKind, a: &[u32], b: &[u32], da: u32, db: u32) -> Ordering {
    match kind {
        OrderKind::Grevlex => da.cmp(&db).then_with(|| revlex(a, b)),
        OrderKind::Lex => a.cmp(b),
        OrderKind::Elimination(k) => {
            let k = k.min(a.len());
            let (ha, ta) = a.split_at(k);
            let (hb, tb) = b.split_at(k);
            let dha: u32 = ha.iter().sum();
            let dhb: u32 = hb.iter().sum();
            dha.cmp(&dhb)
                .then_with(|| revlex(ha, hb))
                .then_with(|| (da - dha).cmp(&(db - dhb)))
                .then_with(|| revlex(ta, tb))
        }
    }
}

/// Reverse lexicographic tie-break: the monomial with the smaller exponent in the last
/// differing variable is larger.
#[inline]
fn revlex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

/// Checked monomial comparison.
pub fn compare_monomials(a: &Monomial, b: &Monomial, ord: &TermOrder) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::input(format!(
            "monomial arity mismatch: {} vs {}",
            a.nvars(),
            b.nvars()
        )));
    }
    if let Some(p) = ord.permutation() {
        if p.len() != a.nvars() {
            return Err(Error::input("order permutation does not match arity"));
        }
    }
    Ok(ord.cmp(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_examples() {
        let o = TermOrder::grevlex();
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 3])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[1, 1]), &m(&[1, 1])), Ordering::Equal);
        // x*z < y^2 in grevlex(x > y > z)
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn lex_and_elimination() {
        let lex = TermOrder::lex();
        assert_eq!(lex.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        let el = TermOrder::elimination(1);
        assert_eq!(el.cmp(&m(&[1, 0, 0]), &m(&[0, 4, 4])), Ordering::Greater);
        assert_eq!(el.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn permutation_reverses_roles() {
        let o = TermOrder::lex().with_permutation(vec![1, 0]).unwrap();
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 1])), Ordering::Less);
        assert!(TermOrder::lex().with_permutation(vec![0, 0]).is_err());
    }

    #[test]
    fn arity_mismatch_is_input_error() {
        assert!(compare_monomials(&m(&[1]), &m(&[1, 0]), &TermOrder::grevlex()).is_err());
    }
}
