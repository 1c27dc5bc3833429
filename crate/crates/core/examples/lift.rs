//! Lifting a system of parameters of S/p to a parameter sequence of S.

use chern::alg::{PolyRing, RingDesc};
use chern::groebner::IdealHandle;
use chern::structure::lift_sop;

fn main() -> chern::Result<()> {
    let s = PolyRing::new(32003, &["x1", "x2", "x3", "x4"])?;
    let p = IdealHandle::from_strs(&s, &["x1", "x2"])?;
    let x = s.parse_all(&["x3", "x4"])?;
    for seed in 0..3 {
        let lift = lift_sop(&RingDesc::polynomial(&s), &p, &x, seed, 8)?;
        let shown: Vec<String> = lift.elements.iter().map(|a| a.to_string()).collect();
        println!("seed {seed}: [{}] dims {:?}", shown.join(", "), lift.dims);
    }
    Ok(())
}
