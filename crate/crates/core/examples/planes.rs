//! Unions of planes through the origin: e_1 equals minus the length of the cokernel
//! of R -> ⊕ S/P_i, and e_2 vanishes.

use chern::alg::PolyRing;
use chern::config::Config;
use chern::groebner::IdealHandle;
use chern::lab::plane_union_check;

fn main() -> chern::Result<()> {
    let s = PolyRing::new(32003, &["x1", "x2", "x3", "x4"])?;
    let planes = [
        IdealHandle::from_strs(&s, &["x1", "x2"])?,
        IdealHandle::from_strs(&s, &["x3", "x4"])?,
        IdealHandle::from_strs(&s, &["x1 - x3", "x2 - x4"])?,
        IdealHandle::from_strs(&s, &["x1 - 2*x3", "x2 - 3*x4"])?,
    ];
    for k in 2..=planes.len() {
        let rep = plane_union_check(&format!("{k} planes"), &planes[..k], &Config::default(), 7)?;
        println!(
            "{k} planes: e = {:?}, lambda = {:?}, verdict {}",
            rep.e,
            rep.lambda(),
            rep.verdict.as_str()
        );
    }
    Ok(())
}
