//! Hilbert–Samuel functions and Hilbert coefficients `e_i(I, M)` of ideals in quotients of
//! polynomial rings over prime fields, with Cohen–Macaulay detection and an experiment
//! layer checking sign laws and inequalities for the Chern coefficient `e_1`.

pub mod alg;
pub mod config;
pub mod error;
pub mod graded;
pub mod groebner;
pub mod hilbert;
pub mod io;
pub mod lab;
pub mod linalg;
pub mod rng;
pub mod structure;

pub use error::{Error, Result};
