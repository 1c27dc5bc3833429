//! Depth, dimension and the Cohen-Macaulay test.

use chern::alg::{PolyRing, RingDesc};
use chern::structure::is_cohen_macaulay;

fn main() -> chern::Result<()> {
    let k3 = PolyRing::new(32003, &["x", "y", "z"])?;
    let k4 = PolyRing::new(32003, &["x1", "x2", "x3", "x4"])?;
    let rings = [
        ("k[x,y,z]", RingDesc::polynomial(&k3)),
        (
            "curve (t^3,t^4,t^5)",
            RingDesc::quotient(
                &k3,
                k3.parse_all(&["y^2 - x*z", "x^3 - y*z", "x^2*y - z^2"])?,
            )?,
        ),
        (
            "two planes",
            RingDesc::quotient(&k4, k4.parse_all(&["x1*x3", "x1*x4", "x2*x3", "x2*x4"])?)?,
        ),
        (
            "embedded point",
            RingDesc::quotient(&k3, k3.parse_all(&["x^2", "x*y", "x*z"])?)?,
        ),
    ];
    for (name, r) in &rings {
        let cm = is_cohen_macaulay(r, 42, 8)?;
        println!(
            "{name:22} dim {} depth {} CM {}",
            cm.dim, cm.depth, cm.is_cm
        );
    }
    Ok(())
}
