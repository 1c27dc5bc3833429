use std::sync::Arc;

use super::lexer::Pos;
use crate::alg::{Monomial, PolyRing, Polynomial};
use crate::error::{Error, Result};

/// One signed summand `± c * x^a * y^b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermExpr {
    pub negative: bool,
    pub coeff: Option<u64>,
    pub factors: Vec<(String, u32)>,
}

/// A polynomial as written: a sum of terms, not yet bound to a ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyExpr {
    pub terms: Vec<TermExpr>,
    pub pos: Pos,
}

impl PolyExpr {
    /// Binds the expression to `ring`; unknown variables are errors.
    pub fn evaluate(&self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        let p = ring.characteristic() as u64;
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let mut exps = vec![0u32; ring.nvars()];
            for (name, e) in &t.factors {
                let i = ring.var_index(name).ok_or_else(|| Error::Parse {
                    line: self.pos.line,
                    column: self.pos.column,
                    message: format!("unknown variable `{name}` in ring {ring}"),
                })?;
                exps[i] += e;
            }
            let c = (t.coeff.unwrap_or(1) % p) as i64;
            terms.push((
                if t.negative { -c } else { c },
                Monomial::from_exponents(&exps),
            ));
        }
        Ok(Polynomial::from_terms(ring, terms))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StmtKind {
    /// `ring S = char 32003, vars x y z;`
    Ring {
        name: String,
        characteristic: u32,
        vars: Vec<String>,
    },
    /// `ideal I = x^2, y^3;` in the most recently declared ring.
    Ideal { name: String, gens: Vec<PolyExpr> },
    /// `quotient R = S / L;`
    Quotient {
        name: String,
        base: String,
        ideal: String,
    },
    /// `module M = [x, 0], [0, y];` a submodule of a free module over the current ring.
    Module {
        name: String,
        gens: Vec<Vec<PolyExpr>>,
    },
    /// `flags R cm_expected=true unmixed=true;`
    Flags {
        target: String,
        flags: Vec<(String, bool)>,
    },
    /// `set nmax=12;`
    Set { key: String, value: u64 },
    /// `task coeffs R J nmax=12;`
    Task {
        kind: String,
        args: Vec<String>,
        options: Vec<(String, u64)>,
    },
}

#[derive(Clone, Debug)]
pub struct Stmt {
    pub kind: StmtKind,
    pub pos: Pos,
}

impl PartialEq for Stmt {
    fn eq(&self, other: &Self) -> bool {
        strip(&self.kind) == strip(&other.kind)
    }
}

impl Eq for Stmt {}

/// Positions are not part of a statement's identity.
fn strip(kind: &StmtKind) -> StmtKind {
    let clear = |e: &PolyExpr| PolyExpr {
        terms: e.terms.clone(),
        pos: Pos::default(),
    };
    match kind {
        StmtKind::Ideal { name, gens } => StmtKind::Ideal {
            name: name.clone(),
            gens: gens.iter().map(clear).collect(),
        },
        StmtKind::Module { name, gens } => StmtKind::Module {
            name: name.clone(),
            gens: gens.iter().map(|v| v.iter().map(clear).collect()).collect(),
        },
        other => other.clone(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Script {
    pub statements: Vec<Stmt>,
}
