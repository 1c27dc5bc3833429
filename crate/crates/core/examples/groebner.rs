//! Reduced Gröbner bases, normal forms, colon ideals and saturation.

use chern::alg::{PolyRing, TermOrder};
use chern::groebner::{buchberger, colon, krull_dim, saturate, IdealHandle};

fn main() -> chern::Result<()> {
    let s = PolyRing::new(32003, &["x", "y", "z"])?;
    let i = IdealHandle::from_strs(&s, &["x^2 - y*z", "x*y - z^2", "y^2 - x*z"])?;

    for (name, order) in [("grevlex", TermOrder::grevlex()), ("lex", TermOrder::lex())] {
        let gb = buchberger(&i, &order);
        println!("{name}: {} elements", gb.polys().len());
        for g in gb.polys() {
            println!("  {g}");
        }
    }

    let f = s.parse("x^3 + y^3 + z^3")?;
    println!("normal form of {f}: {}", i.normal_form(&f));
    println!("dim S/I = {}", krull_dim(&i)?);

    // An embedded component at the origin disappears under saturation by m.
    let j = IdealHandle::from_strs(&s, &["x^2", "x*y", "x*z"])?;
    let m = IdealHandle::maximal(&s);
    println!("(J : x) = {}", colon(&j, &s.var(0))?);
    let sat = saturate(&j, &m)?;
    println!("J : m^inf = {} after {} steps", sat.ideal, sat.exponent);
    Ok(())
}
