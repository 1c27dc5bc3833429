//! Certified superficial elements and the descent of coefficients to R/hR.

use chern::alg::{PolyRing, RingDesc};
use chern::groebner::IdealHandle;
use chern::structure::{find_superficial, superficial_descent_check};

fn main() -> chern::Result<()> {
    let k3 = PolyRing::new(32003, &["x", "y", "z"])?;
    // k[x,y,z]/(x^2, xy, xz) has finite-length torsion, so h is a zero divisor.
    let r = RingDesc::quotient(&k3, k3.parse_all(&["x^2", "x*y", "x*z"])?)?;
    let m = IdealHandle::maximal(&k3);
    let cert = find_superficial(&r, &m, 42, None, 5, 8)?;
    println!(
        "h = {} superficial for n >= {} (checked to {})",
        cert.h, cert.c, cert.range.1
    );
    println!("certificate replays: {}", cert.replay(&r)?);

    let report = superficial_descent_check(&r, &cert, None)?;
    println!("e(R)     = {:?}", report.full.e);
    println!("e(R/hR)  = {:?}", report.cut.e);
    println!("lambda(0 : h) = {}", report.lambda_colon);
    println!("identities hold: {}", report.holds());
    Ok(())
}
