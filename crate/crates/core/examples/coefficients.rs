//! Hilbert-Samuel tables and the coefficients e_0..e_d they determine.

use chern::alg::{PolyRing, RingDesc};
use chern::groebner::IdealHandle;
use chern::hilbert::{coefficients, hs_sample};

fn main() -> chern::Result<()> {
    let s = PolyRing::new(32003, &["x1", "x2", "x3", "x4"])?;
    // Two planes meeting in a point.
    let r = RingDesc::quotient(&s, s.parse_all(&["x1*x3", "x1*x4", "x2*x3", "x2*x4"])?)?;
    let j = IdealHandle::from_strs(&s, &["x1 + x3", "x2 + x4"])?;

    let table = hs_sample(&r, &j, 6)?;
    println!("lambda(R/J^(n+1)), n = 0..6: {:?}", table.values);

    let co = coefficients(&r, &j, None)?;
    println!("e = {:?} (stable from n = {})", co.evector.e, co.evector.n0);

    // Non-homogeneous data goes through the local Gröbner route.
    let k2 = PolyRing::new(32003, &["x", "y"])?;
    let node = RingDesc::quotient(&k2, k2.parse_all(&["y^2 - x^3 - x^2"])?)?;
    let m = IdealHandle::maximal(&k2);
    println!(
        "node y^2 = x^2 + x^3 at m: e = {:?}",
        coefficients(&node, &m, None)?.evector.e
    );
    Ok(())
}
