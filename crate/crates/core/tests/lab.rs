mod common;

use chern::alg::RingDesc;
use chern::config::Config;
use chern::error::Error;
use chern::graded::GradedSubmodule;
use chern::groebner::IdealHandle;
use chern::lab::{
    goto_nishida_check, huckaba_marley_check, module_check, northcott_check, plane_union_check,
    run_corpus, run_suite, ses_e1_check, sign_test, Claim, Corpus, CorpusEntry, EntryFlags,
    Verdict,
};
use common::*;

fn cfg() -> Config {
    Config::default()
}

fn entry(name: &str, ring: RingDesc, cm: bool, unmixed: bool) -> CorpusEntry {
    CorpusEntry::new(
        name,
        ring,
        EntryFlags {
            cm_expected: cm,
            constructed_unmixed: unmixed,
            domain: false,
        },
        "test",
    )
}

#[test]
fn sign_test_on_two_planes_and_curve() {
    let r = sign_test(&entry("tp", two_planes(), false, true), &cfg(), 1).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.lengths["trials_passed"], 20);
    assert!(r.evectors.values().all(|e| e == &vec![2, -1, 0]));

    let r = sign_test(&entry("curve", curve345(), true, true), &cfg(), 1).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.lengths["binomial_law"], 1);
    assert!(r.evectors.values().all(|e| e[1] == 0));
}

#[test]
fn sign_test_flags() {
    let mut c = cfg();
    c.trials = 3;
    let wrong = sign_test(&entry("tp", two_planes(), true, true), &c, 1).unwrap();
    assert_eq!(wrong.verdict, Verdict::Fail);
    let unflagged = sign_test(&entry("tp", two_planes(), false, false), &c, 1).unwrap();
    assert_eq!(unflagged.verdict, Verdict::HypothesisUnverified);
    let art = quotient(&ring(&["x"]), &["x^2"]);
    assert!(matches!(
        sign_test(&entry("a", art, true, true), &c, 1),
        Err(Error::Input(_))
    ));
}

#[test]
fn too_few_samples_is_unstable_not_fail() {
    let mut c = cfg();
    c.trials = 2;
    c.nmax = Some(3);
    let r = sign_test(&entry("tp", two_planes(), false, true), &c, 1).unwrap();
    assert_eq!(r.verdict, Verdict::Unstable);
    assert!(r.notes[0].contains("unstable"), "{:?}", r.notes);
}

#[test]
fn short_exact_sequence_with_torsion() {
    let s = ring(&["x", "y", "z"]);
    let m = IdealHandle::maximal(&s);
    let r = ses_e1_check("ses", &s, &ideal(&s, &["x^2", "x*y", "x*z"]), &m, &cfg(), 1).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.evectors["M"], vec![1, 0, 1]);
    assert_eq!(r.evectors["N"], vec![1, 0, 0]);
    assert_eq!(r.lambda(), Some(1));

    let r = ses_e1_check(
        "ses2",
        &s,
        &ideal(&s, &["x^3", "x*y", "x*z"]),
        &m,
        &cfg(),
        1,
    )
    .unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.lambda(), Some(2));

    let err = ses_e1_check("none", &s, &ideal(&s, &["x"]), &m, &cfg(), 1).unwrap_err();
    assert!(err.to_string().contains("no finite-length torsion"));
}

#[test]
fn northcott_examples() {
    let s = ring(&["x", "y"]);
    let r = RingDesc::polynomial(&s);
    let rep = northcott_check("m2", &r, &ideal(&s, &["x^2", "x*y", "y^2"]), &cfg(), 1).unwrap();
    assert_eq!(rep.e, vec![4, 1, 0]);
    assert_eq!(rep.lengths["slack"], 0);
    assert_eq!(rep.verdict, Verdict::Pass);
    let rep = northcott_check("m", &r, &IdealHandle::maximal(&s), &cfg(), 1).unwrap();
    assert_eq!(rep.lengths["slack"], 0);

    let c = curve345();
    let rep = northcott_check("curve", &c, &IdealHandle::maximal(c.base()), &cfg(), 1).unwrap();
    assert_eq!(rep.e[0], 3);
    assert!(rep.e[1] >= 2);
    assert_eq!(rep.verdict, Verdict::Pass);

    let tp = two_planes();
    let rep = northcott_check("tp", &tp, &IdealHandle::maximal(tp.base()), &cfg(), 1).unwrap();
    assert_eq!(rep.verdict, Verdict::HypothesisUnverified);
}

#[test]
fn goto_nishida_examples() {
    let tp = two_planes();
    let m = IdealHandle::maximal(tp.base());
    let rep = goto_nishida_check("tp", &tp, &m, None, &cfg(), 1).unwrap();
    assert_eq!(rep.verdict, Verdict::Pass);
    assert_eq!(rep.evectors["I"][1] - rep.evectors["J"][1], 1);
    assert_eq!(rep.lengths["slack"], 0);

    // I = J: 0 ≥ e_0 − λ(R/J), an equality on a CM ring.
    let s = ring(&["x", "y"]);
    let r = RingDesc::polynomial(&s);
    let j = ideal(&s, &["x^2", "y^3"]);
    let rep = goto_nishida_check("pp", &r, &j, Some(&j), &cfg(), 1).unwrap();
    assert_eq!(rep.lengths["slack"], 0);
    assert_eq!(rep.lengths["s"], 0);
}

#[test]
fn huckaba_marley_examples() {
    let s = ring(&["x", "y"]);
    let r = RingDesc::polynomial(&s);
    let i = ideal(&s, &["x^2", "x*y", "y^2"]);
    let j = ideal(&s, &["x^2", "y^2"]);
    let rep = huckaba_marley_check("m2", &r, &i, Some(&j), &cfg(), 1).unwrap();
    assert_eq!(rep.e[1], 1);
    assert_eq!(rep.lengths["bound"], 1);
    assert_eq!(rep.verdict, Verdict::Pass);

    let rep = huckaba_marley_check("pp", &r, &j, Some(&j), &cfg(), 1).unwrap();
    assert_eq!((rep.e[1], rep.lengths["bound"]), (0, 0));

    let c = curve345();
    let rep = huckaba_marley_check(
        "curve",
        &c,
        &IdealHandle::maximal(c.base()),
        Some(&ideal(c.base(), &["x"])),
        &cfg(),
        1,
    )
    .unwrap();
    assert_eq!(rep.verdict, Verdict::Pass);
    assert!(rep.lengths["slack"] >= 0);
}

#[test]
fn plane_union_instances() {
    let s = x4();
    let p1 = ideal(&s, &["x1", "x2"]);
    let p2 = ideal(&s, &["x3", "x4"]);
    let p3 = ideal(&s, &["x1 - x3", "x2 - x4"]);
    let rep = plane_union_check("two", &[p1.clone(), p2.clone()], &cfg(), 1).unwrap();
    assert_eq!(
        (rep.e.clone(), rep.lambda(), rep.verdict),
        (vec![2, -1, 0], Some(1), Verdict::Pass)
    );

    let rep = plane_union_check("one", std::slice::from_ref(&p1), &cfg(), 1).unwrap();
    assert_eq!((rep.e.clone(), rep.lambda()), (vec![1, 0, 0], Some(0)));

    let rep = plane_union_check("three", &[p1.clone(), p2, p3], &cfg(), 1).unwrap();
    assert_eq!(rep.verdict, Verdict::Pass);
    assert_eq!(rep.e[1], -rep.lambda().unwrap());
    assert_eq!(rep.e[2], 0);

    // Planes sharing a line are rejected.
    let bad = ideal(&s, &["x1", "x3"]);
    assert!(matches!(
        plane_union_check("bad", &[p1, bad], &cfg(), 1),
        Err(Error::Input(_))
    ));
}

#[test]
fn module_examples() {
    let s = ring(&["x", "y"]);
    let r = RingDesc::polynomial(&s);
    let m = |gens: &[&str]| {
        let v = gens.iter().map(|g| vec![s.parse(g).unwrap()]).collect();
        GradedSubmodule::new(&r, 1, v).unwrap()
    };
    let rep = module_check("m", &m(&["x", "y"]), &cfg(), 1).unwrap();
    assert_eq!(rep.evectors["natural"][..2], [1, 0]);
    assert_eq!(rep.evectors["shifted"][1], -1);
    assert_eq!(rep.lengths["free"], 0);
    assert_eq!(rep.verdict, Verdict::Pass);

    let rep = module_check("m2", &m(&["x^2", "x*y", "y^2"]), &cfg(), 1).unwrap();
    assert!(rep.lengths["slack"] > 0);
    assert_eq!(rep.verdict, Verdict::Pass);

    let free = GradedSubmodule::free(&r, 2).unwrap();
    let rep = module_check("free", &free, &cfg(), 1).unwrap();
    assert_eq!((rep.lengths["slack"], rep.lengths["free"]), (0, 1));

    let mixed = m(&["x", "y^2"]);
    assert!(matches!(
        module_check("mixed", &mixed, &cfg(), 1),
        Err(Error::Input(_))
    ));
}

#[test]
fn corpus_runs() {
    let reps = run_corpus("paper", &cfg()).unwrap();
    assert!(reps
        .iter()
        .all(|r| r.verdict != Verdict::Fail && r.verdict != Verdict::Unstable));
    assert!(reps.iter().any(|r| r.claim == Claim::Planes));

    let again = run_corpus("paper", &cfg()).unwrap();
    assert_eq!(reps, again);

    let mut corpus = Corpus::builtin(32003).unwrap();
    corpus.flip_cm_expected("two-planes").unwrap();
    let flipped = run_suite(&corpus, "paper".parse().unwrap(), &cfg()).unwrap();
    let changed: Vec<_> = reps
        .iter()
        .zip(&flipped)
        .filter(|(a, b)| a.verdict != b.verdict)
        .map(|(_, b)| (b.claim, b.entry.clone(), b.verdict))
        .collect();
    assert_eq!(
        changed,
        vec![(Claim::SignTest, "two-planes".to_string(), Verdict::Fail)]
    );

    assert!(matches!(run_corpus("nope", &cfg()), Err(Error::Input(_))));
    let empty = Corpus {
        rings: Vec::new(),
        modules: Vec::new(),
    };
    assert!(run_suite(&empty, "all".parse().unwrap(), &cfg())
        .unwrap()
        .is_empty());
}
