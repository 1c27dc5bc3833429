//! Evaluates a parsed script: declarations build rings, ideals and modules; tasks run
//! checks and produce reports.

use std::collections::HashMap;

use super::dsl::{Pos, Script, Stmt, StmtKind};
use crate::alg::{PolyRing, Polynomial, RingDesc, TermOrder};
use crate::config::{Config, Overrides};
use crate::error::{Error, Result};
use crate::graded::GradedSubmodule;
use crate::groebner::{krull_dim, local_length_at_origin, sum, IdealHandle};
use crate::hilbert::coefficients;
use crate::lab::{self, guarded, Claim, CorpusEntry, EntryFlags, ExperimentReport, Verdict};
use crate::rng::derive_seed;
use crate::structure::{self, ReductionOutcome};

fn at(pos: Pos, message: impl Into<String>) -> Error {
    Error::Parse {
        line: pos.line,
        column: pos.column,
        message: message.into(),
    }
}

/// Attaches a statement position to errors that carry no location of their own.
fn locate(pos: Pos, e: Error) -> Error {
    match e {
        Error::Input(m) => Error::Input(format!("{}:{}: {m}", pos.line, pos.column)),
        other => other,
    }
}

#[derive(Clone, Default)]
struct Flags {
    cm_expected: Option<bool>,
    unmixed: Option<bool>,
    domain: Option<bool>,
}

#[derive(Default)]
struct Env {
    rings: HashMap<String, RingDesc>,
    flags: HashMap<String, Flags>,
    ideals: HashMap<String, IdealHandle>,
    modules: HashMap<String, GradedSubmodule>,
    current: Option<RingDesc>,
}

impl Env {
    fn ring(&self, name: &str, pos: Pos) -> Result<&RingDesc> {
        self.rings
            .get(name)
            .ok_or_else(|| at(pos, format!("undeclared ring `{name}`")))
    }

    fn ideal(&self, name: &str, pos: Pos) -> Result<&IdealHandle> {
        self.ideals
            .get(name)
            .ok_or_else(|| at(pos, format!("undeclared ideal `{name}`")))
    }

    fn module(&self, name: &str, pos: Pos) -> Result<&GradedSubmodule> {
        self.modules
            .get(name)
            .ok_or_else(|| at(pos, format!("undeclared module `{name}`")))
    }

    fn current(&self, pos: Pos) -> Result<&RingDesc> {
        self.current
            .as_ref()
            .ok_or_else(|| at(pos, "no ring declared yet"))
    }

    fn is_declared(&self, name: &str) -> bool {
        self.rings.contains_key(name)
            || self.ideals.contains_key(name)
            || self.modules.contains_key(name)
    }
}

/// Runs every task of `script`. `cli` overrides script directives, which override defaults.
pub fn run_script(script: &Script, cli: &Overrides) -> Result<Vec<ExperimentReport>> {
    let mut env = Env::default();
    let mut directives = Overrides::default();
    let mut reports = Vec::new();
    for stmt in &script.statements {
        match &stmt.kind {
            StmtKind::Set { key, value } => {
                directives.set(key, *value).map_err(|m| at(stmt.pos, m))?
            }
            StmtKind::Task { .. } => {
                reports.extend(run_task(&env, stmt, cli, &directives)?);
            }
            _ => declare(&mut env, stmt, cli)?,
        }
    }
    Ok(reports)
}

fn declare(env: &mut Env, stmt: &Stmt, cli: &Overrides) -> Result<()> {
    let pos = stmt.pos;
    let fresh = |env: &Env, name: &str| {
        if env.is_declared(name) {
            Err(at(pos, format!("`{name}` is already declared")))
        } else {
            Ok(())
        }
    };
    match &stmt.kind {
        StmtKind::Ring {
            name,
            characteristic,
            vars,
        } => {
            fresh(env, name)?;
            let p = cli.characteristic.unwrap_or(*characteristic);
            let base = PolyRing::with_names(p, vars.clone(), TermOrder::grevlex())
                .map_err(|e| at(pos, e.to_string()))?;
            let desc = RingDesc::polynomial(&base);
            env.rings.insert(name.clone(), desc.clone());
            env.current = Some(desc);
        }
        StmtKind::Ideal { name, gens } => {
            fresh(env, name)?;
            let base = env.current(pos)?.base().clone();
            let polys = gens
                .iter()
                .map(|g| g.evaluate(&base))
                .collect::<Result<Vec<_>>>()?;
            env.ideals
                .insert(name.clone(), IdealHandle::new(&base, polys));
        }
        StmtKind::Quotient { name, base, ideal } => {
            fresh(env, name)?;
            let r = env.ring(base, pos)?.clone();
            let i = env.ideal(ideal, pos)?.clone();
            i.check_same_ring(r.relations())
                .map_err(|e| locate(pos, e))?;
            let desc = r.modulo(i.generators());
            env.rings.insert(name.clone(), desc.clone());
            env.current = Some(desc);
        }
        StmtKind::Module { name, gens } => {
            fresh(env, name)?;
            let ring = env.current(pos)?.clone();
            let rank = gens.first().map_or(0, |v| v.len());
            if gens.iter().any(|v| v.len() != rank) {
                return Err(at(pos, "module generators must all have the same length"));
            }
            let vectors = gens
                .iter()
                .map(|v| v.iter().map(|g| g.evaluate(ring.base())).collect())
                .collect::<Result<Vec<Vec<Polynomial>>>>()?;
            let m = GradedSubmodule::new(&ring, rank, vectors).map_err(|e| locate(pos, e))?;
            env.modules.insert(name.clone(), m);
        }
        StmtKind::Flags { target, flags } => {
            env.ring(target, pos)?;
            let entry = env.flags.entry(target.clone()).or_default();
            for (key, value) in flags {
                match key.as_str() {
                    "cm_expected" => entry.cm_expected = Some(*value),
                    "unmixed" | "constructed_unmixed" => entry.unmixed = Some(*value),
                    "domain" => entry.domain = Some(*value),
                    other => return Err(at(pos, format!("unknown flag `{other}`"))),
                }
            }
        }
        StmtKind::Set { .. } | StmtKind::Task { .. } => unreachable!("handled by run_script"),
    }
    Ok(())
}

fn arity(pos: Pos, kind: &str, args: &[String], min: usize, max: usize) -> Result<()> {
    if args.len() < min || args.len() > max {
        let want = if min == max {
            min.to_string()
        } else if max == usize::MAX {
            format!("at least {min}")
        } else {
            format!("{min} to {max}")
        };
        return Err(at(
            pos,
            format!("task `{kind}` takes {want} arguments, got {}", args.len()),
        ));
    }
    Ok(())
}

fn run_task(
    env: &Env,
    stmt: &Stmt,
    cli: &Overrides,
    directives: &Overrides,
) -> Result<Vec<ExperimentReport>> {
    let StmtKind::Task {
        kind,
        args,
        options,
    } = &stmt.kind
    else {
        unreachable!()
    };
    let pos = stmt.pos;
    let mut task_opts = directives.clone();
    for (k, v) in options {
        task_opts.set(k, *v).map_err(|m| at(pos, m))?;
    }
    let config = cli.apply(&task_opts.apply(&Config::default()));
    let label = args.join(" ");
    let seed = derive_seed(config.seed, &[kind, &label]);
    let a = |i: usize| args[i].as_str();
    let one = |r| Ok(vec![r]);
    let result: Result<Vec<ExperimentReport>> = match kind.as_str() {
        "coeffs" => {
            arity(pos, kind, args, 2, 2)?;
            let ring = env.ring(a(0), pos)?;
            let ideal = env.ideal(a(1), pos)?;
            one(guarded(
                Claim::Coefficients,
                &label,
                seed,
                &config,
                |rep| {
                    rep.input("ring", ring);
                    rep.input("ideal", ideal);
                    let co = coefficients(ring, ideal, config.nmax)?;
                    rep.e = co.evector.e.clone();
                    rep.length("lambda", co.table.values[0] as i64);
                    rep.length("n0", co.evector.n0 as i64);
                    let values: Vec<String> =
                        co.table.values.iter().map(|v| v.to_string()).collect();
                    rep.input("values", values.join(" "));
                    Ok(Verdict::Pass)
                },
            )?)
        }
        "gb" => {
            arity(pos, kind, args, 1, 1)?;
            let ideal = env.ideal(a(0), pos)?;
            one(guarded(
                Claim::GroebnerBasis,
                &label,
                seed,
                &config,
                |rep| {
                    rep.input("ideal", ideal);
                    let gb = ideal.groebner_basis();
                    let polys: Vec<String> = gb.polys().iter().map(|p| p.to_string()).collect();
                    rep.input("basis", polys.join(", "));
                    rep.length("size", gb.len() as i64);
                    Ok(Verdict::Pass)
                },
            )?)
        }
        "dim" => {
            arity(pos, kind, args, 1, 1)?;
            let target = if let Some(r) = env.rings.get(a(0)) {
                r.relations().clone()
            } else {
                env.ideal(a(0), pos)?.clone()
            };
            one(guarded(Claim::Dimension, &label, seed, &config, |rep| {
                rep.input("ideal", &target);
                rep.length("dim", krull_dim(&target)? as i64);
                Ok(Verdict::Pass)
            })?)
        }
        "depth" | "cm" => {
            arity(pos, kind, args, 1, 1)?;
            let ring = env.ring(a(0), pos)?;
            let flags = env.flags.get(a(0)).cloned().unwrap_or_default();
            let claim = if kind == "cm" {
                Claim::CohenMacaulay
            } else {
                Claim::Depth
            };
            one(guarded(claim, &label, seed, &config, |rep| {
                rep.input("ring", ring);
                let st = structure::is_cohen_macaulay(ring, seed, config.genericity_trials)?;
                rep.length("depth", st.depth as i64);
                rep.length("dim", st.dim as i64);
                rep.length("cohen_macaulay", st.is_cm as i64);
                match flags.cm_expected {
                    Some(expected) if kind == "cm" && expected != st.is_cm => {
                        rep.note(format!(
                            "cm_expected = {expected} but the test says {}",
                            st.is_cm
                        ));
                        Ok(Verdict::Fail)
                    }
                    _ => Ok(Verdict::Pass),
                }
            })?)
        }
        "length" => {
            arity(pos, kind, args, 1, 2)?;
            let (ring, ideal) = if args.len() == 2 {
                (env.ring(a(0), pos)?.clone(), env.ideal(a(1), pos)?.clone())
            } else {
                let i = env.ideal(a(0), pos)?.clone();
                (RingDesc::polynomial(i.ring()), i)
            };
            one(guarded(Claim::Length, &label, seed, &config, |rep| {
                rep.input("ring", &ring);
                rep.input("ideal", &ideal);
                let total = sum(ring.relations(), &ideal);
                let total = IdealHandle::new(total.ring(), total.groebner_basis().polys().to_vec());
                rep.length(
                    "lambda",
                    local_length_at_origin(&total).map_err(|e| locate(pos, e))? as i64,
                );
                Ok(Verdict::Pass)
            })?)
        }
        "sign" => {
            arity(pos, kind, args, 1, 1)?;
            let ring = env.ring(a(0), pos)?.clone();
            let f = env.flags.get(a(0)).cloned().unwrap_or_default();
            let cm_expected = match f.cm_expected {
                Some(v) => v,
                None => {
                    structure::is_cohen_macaulay(
                        &ring,
                        derive_seed(seed, &["cm"]),
                        config.genericity_trials,
                    )
                    .map_err(|e| locate(pos, e))?
                    .is_cm
                }
            };
            let entry = CorpusEntry::new(
                a(0),
                ring,
                EntryFlags {
                    cm_expected,
                    constructed_unmixed: f.unmixed.unwrap_or(false),
                    domain: f.domain.unwrap_or(false),
                },
                "script input",
            );
            one(lab::sign_test(&entry, &config, seed).map_err(|e| locate(pos, e))?)
        }
        "ses" => {
            arity(pos, kind, args, 2, 2)?;
            let l0 = env.ideal(a(0), pos)?;
            let ideal = env.ideal(a(1), pos)?;
            one(
                lab::ses_e1_check(&label, l0.ring(), l0, ideal, &config, seed)
                    .map_err(|e| locate(pos, e))?,
            )
        }
        "descent" => {
            arity(pos, kind, args, 2, 2)?;
            let ring = env.ring(a(0), pos)?;
            let ideal = env.ideal(a(1), pos)?;
            one(lab::descent_check(&label, ring, ideal, &config, seed)
                .map_err(|e| locate(pos, e))?)
        }
        "northcott" => {
            arity(pos, kind, args, 2, 2)?;
            let ring = env.ring(a(0), pos)?;
            let ideal = env.ideal(a(1), pos)?;
            one(lab::northcott_check(&label, ring, ideal, &config, seed)
                .map_err(|e| locate(pos, e))?)
        }
        "gotonishida" | "huckaba" => {
            arity(pos, kind, args, 2, 3)?;
            let ring = env.ring(a(0), pos)?;
            let ideal = env.ideal(a(1), pos)?;
            let j = if args.len() == 3 {
                Some(env.ideal(a(2), pos)?)
            } else {
                None
            };
            let r = if kind == "gotonishida" {
                lab::goto_nishida_check(&label, ring, ideal, j, &config, seed)
            } else {
                lab::huckaba_marley_check(&label, ring, ideal, j, &config, seed)
            };
            one(r.map_err(|e| locate(pos, e))?)
        }
        "planes" => {
            arity(pos, kind, args, 1, usize::MAX)?;
            let primes = args
                .iter()
                .map(|n| env.ideal(n, pos).cloned())
                .collect::<Result<Vec<_>>>()?;
            one(lab::plane_union_check(&label, &primes, &config, seed)
                .map_err(|e| locate(pos, e))?)
        }
        "module" => {
            arity(pos, kind, args, 1, 1)?;
            let m = env.module(a(0), pos)?;
            one(lab::module_check(&label, m, &config, seed).map_err(|e| locate(pos, e))?)
        }
        "reduction" => {
            arity(pos, kind, args, 3, 3)?;
            let ring = env.ring(a(0), pos)?;
            let j = env.ideal(a(1), pos)?;
            let i = env.ideal(a(2), pos)?;
            let outcome =
                structure::reduction_check(ring, j, i, config.s_max).map_err(|e| locate(pos, e))?;
            one(guarded(Claim::Reduction, &label, seed, &config, |rep| {
                rep.input("ring", ring);
                rep.input("J", j);
                rep.input("ideal", i);
                match outcome {
                    ReductionOutcome::Certified(c) => {
                        rep.length("s", c.s as i64);
                        Ok(Verdict::Pass)
                    }
                    ReductionOutcome::NotWithinBound { s_max } => {
                        rep.note(format!("no reduction number ≤ {s_max}"));
                        Ok(Verdict::Unstable)
                    }
                }
            })?)
        }
        "superficial" => {
            arity(pos, kind, args, 2, 2)?;
            let ring = env.ring(a(0), pos)?;
            let ideal = env.ideal(a(1), pos)?;
            one(guarded(Claim::Superficial, &label, seed, &config, |rep| {
                rep.input("ring", ring);
                rep.input("ideal", ideal);
                let cert = structure::find_superficial(
                    ring,
                    ideal,
                    seed,
                    config.nmax,
                    config.c_max,
                    config.genericity_trials,
                )?;
                rep.input("h", &cert.h);
                rep.length("c", cert.c as i64);
                rep.length("range_end", cert.range.1 as i64);
                Ok(Verdict::Pass)
            })?)
        }
        "lift" => {
            arity(pos, kind, args, 3, 3)?;
            let ring = env.ring(a(0), pos)?;
            let p = env.ideal(a(1), pos)?;
            let x = env.ideal(a(2), pos)?;
            one(guarded(Claim::Lift, &label, seed, &config, |rep| {
                rep.input("ring", ring);
                rep.input("p", p);
                rep.input("x", x);
                let lift =
                    structure::lift_sop(ring, p, x.generators(), seed, config.genericity_trials)
                        .map_err(|e| locate(pos, e))?;
                let lifted = IdealHandle::new(ring.base(), lift.elements.clone());
                rep.input("lift", &lifted);
                for (i, d) in lift.dims.iter().enumerate() {
                    rep.length(&format!("dim_{i}"), *d as i64);
                }
                let reduces = lift
                    .elements
                    .iter()
                    .zip(x.generators())
                    .all(|(a, b)| sum(ring.relations(), p).contains(&(a - b)));
                Ok(Verdict::from_bool(reduces))
            })?)
        }
        other => Err(at(
            pos,
            format!(
                "unknown task `{other}`; expected one of coeffs, gb, dim, depth, cm, length, \
                 sign, ses, descent, northcott, gotonishida, huckaba, planes, module, \
                 reduction, superficial, lift"
            ),
        )),
    };
    result
}

/// Parses and runs `text`.
pub fn run_text(text: &str, cli: &Overrides) -> Result<Vec<ExperimentReport>> {
    let script = super::dsl::parse_script(text)?;
    run_script(&script, cli)
}
