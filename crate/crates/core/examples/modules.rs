//! Graded submodules of free modules: coefficients, the shift law and freeness.

use chern::alg::{PolyRing, RingDesc};
use chern::graded::Graded;
use chern::graded::{freeness_probe, GradedSubmodule};
use chern::hilbert::{graded_evector, Convention};

fn main() -> chern::Result<()> {
    let k2 = PolyRing::new(32003, &["x", "y"])?;
    let r = RingDesc::polynomial(&k2);
    let col = |gens: &[&str]| -> chern::Result<Vec<Vec<_>>> {
        gens.iter().map(|g| Ok(vec![k2.parse(g)?])).collect()
    };
    let modules = [
        ("(x, y)", GradedSubmodule::new(&r, 1, col(&["x", "y"])?)?),
        (
            "(x^2, xy, y^2)",
            GradedSubmodule::new(&r, 1, col(&["x^2", "x*y", "y^2"])?)?,
        ),
        ("(x)", GradedSubmodule::new(&r, 1, col(&["x"])?)?),
        ("S^2", GradedSubmodule::free(&r, 2)?),
    ];
    for (name, m) in &modules {
        let a = m.degrees().iter().copied().min().unwrap_or(0);
        let natural = graded_evector(Graded::Module(m), Convention::Natural, None)?;
        let shifted = graded_evector(Graded::Module(m), Convention::Shifted(a), None)?;
        let free = freeness_probe(m, a + 8)?;
        println!(
            "{name:16} a={a} e(M)={:?} e(M[a])={:?} {free:?}",
            natural.e, shifted.e
        );
    }
    Ok(())
}
