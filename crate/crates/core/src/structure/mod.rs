//! Depth, Cohen–Macaulayness, systems of parameters, reductions and superficial elements.

mod depth;
mod reduction;
mod sop;
mod superficial;

pub use depth::{depth, is_cohen_macaulay, CmStatus};
pub use reduction::{reduction_check, ReductionCertificate, ReductionOutcome};
pub use sop::{lift_sop, random_sop, LiftedSop, Sop};
pub use superficial::{
    colon_length, find_superficial, superficial_descent_check, verify_superficial, DescentReport,
    SuperficialCertificate,
};
