use crate::config::Config;
use crate::error::{Error, Result};
use crate::graded::{freeness_probe, Graded, GradedSubmodule};
use crate::groebner::krull_dim;
use crate::hilbert::{graded_evector, Convention};

use super::{guarded, Claim, ExperimentReport, Verdict};

/// For `M` generated in degree `a`: the shift law `e_1(M[a]) = e_1(M) − a·e_0(M)`, the
/// bound `e_1(M) ≤ a·e_0(M)`, and equality exactly when `M` is free.
pub fn module_check(
    name: &str,
    m: &GradedSubmodule,
    config: &Config,
    seed: u64,
) -> Result<ExperimentReport> {
    let Some(a) = m
        .generation_degree()
        .filter(|_| m.is_generated_in_single_degree())
    else {
        return Err(Error::input(
            "the module must be generated in a single degree",
        ));
    };
    let d = krull_dim(m.ring().relations())?;
    if d < 2 {
        return Err(Error::input(format!(
            "need an ambient ring of dimension ≥ 2, found {d}"
        )));
    }
    guarded(Claim::ModuleCheck, name, seed, config, |rep| {
        rep.input("ring", m.ring());
        let gens: Vec<String> = m
            .generators()
            .iter()
            .map(|v| {
                let parts: Vec<String> = v.iter().map(|p| p.to_string()).collect();
                format!("[{}]", parts.join(", "))
            })
            .collect();
        rep.input("generators", gens.join(", "));
        rep.length("a", a as i64);
        let natural = graded_evector(Graded::Module(m), Convention::Natural, config.nmax)?;
        let shifted = graded_evector(Graded::Module(m), Convention::Shifted(a), config.nmax)?;
        rep.e = natural.e.clone();
        rep.evector("natural", &natural.e);
        rep.evector("shifted", &shifted.e);
        let a = a as i64;
        let shift_law = shifted.e1() == natural.e1() - a * natural.e0();
        let bound = natural.e1() <= a * natural.e0();
        let equality = natural.e1() == a * natural.e0();
        let probe_bound = (a as u32) + 2 * d as u32 + 4;
        let probe = freeness_probe(m, probe_bound)?;
        let free = probe.is_free_up_to_bound();
        rep.length("slack", a * natural.e0() - natural.e1());
        rep.length("free", free as i64);
        if !shift_law {
            rep.note("shift law violated");
        }
        if !bound {
            rep.note("e_1(M) exceeds a·e_0(M)");
        }
        if equality != free {
            rep.note(format!(
                "equality e_1 = a·e_0 is {equality} but the freeness probe says {probe:?}"
            ));
        }
        Ok(Verdict::from_bool(shift_law && bound && equality == free))
    })
}
