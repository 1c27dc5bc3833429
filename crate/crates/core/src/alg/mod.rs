//! Exact arithmetic: the prime field, monomials, term orders, polynomials and ring descriptors.

mod field;
mod monomial;
mod order;
mod poly;
mod ring;

pub use field::{FieldElem, PrimeField, DEFAULT_CHARACTERISTIC};
pub use monomial::{monomials_of_degree, Monomial};
pub use order::{compare_monomials, OrderKind, TermOrder};
pub use poly::{poly_arith, ArithOp, Polynomial, Term};
pub use ring::{PolyRing, RingDesc};
