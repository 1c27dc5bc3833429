//! Classical bounds on e_1: Northcott, Goto-Nishida and Huckaba-Marley.

use chern::alg::{PolyRing, RingDesc};
use chern::config::Config;
use chern::groebner::IdealHandle;
use chern::io::report::summary_line;
use chern::lab::{goto_nishida_check, huckaba_marley_check, northcott_check};

fn main() -> chern::Result<()> {
    let cfg = Config::default();
    let k2 = PolyRing::new(32003, &["x", "y"])?;
    let poly = RingDesc::polynomial(&k2);
    let m2 = IdealHandle::from_strs(&k2, &["x^2", "x*y", "y^2"])?;
    let j = IdealHandle::from_strs(&k2, &["x^2", "y^2"])?;
    println!(
        "{}",
        summary_line(&northcott_check("k[x,y]/m^2", &poly, &m2, &cfg, 1)?)
    );
    println!(
        "{}",
        summary_line(&huckaba_marley_check(
            "k[x,y]/m^2",
            &poly,
            &m2,
            Some(&j),
            &cfg,
            1
        )?)
    );

    let k4 = PolyRing::new(32003, &["x1", "x2", "x3", "x4"])?;
    let planes = RingDesc::quotient(&k4, k4.parse_all(&["x1*x3", "x1*x4", "x2*x3", "x2*x4"])?)?;
    let m = IdealHandle::maximal(&k4);
    println!(
        "{}",
        summary_line(&goto_nishida_check(
            "two-planes/m",
            &planes,
            &m,
            None,
            &cfg,
            1
        )?)
    );
    Ok(())
}
