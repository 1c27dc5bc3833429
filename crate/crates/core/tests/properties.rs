use std::sync::Arc;

use chern::alg::{Monomial, PolyRing, Polynomial, TermOrder};
use chern::groebner::{colon, IdealHandle};
use chern::hilbert::{fit_evector, EVector, FIT_WINDOW};
use chern::io::dsl::parse_script;
use proptest::prelude::*;

const P: u32 = 32003;

fn ring(order: TermOrder) -> Arc<PolyRing> {
    PolyRing::with_names(P, vec!["x".into(), "y".into(), "z".into()], order).unwrap()
}

fn exps(max: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=max, 3)
}

fn terms(max_deg: u32, max_terms: usize) -> impl Strategy<Value = Vec<(i64, Vec<u32>)>> {
    prop::collection::vec((-50i64..50, exps(max_deg)), 0..=max_terms)
}

fn build(r: &Arc<PolyRing>, t: &[(i64, Vec<u32>)]) -> Polynomial {
    Polynomial::from_terms(
        r,
        t.iter()
            .map(|(c, e)| (*c, Monomial::from_exponents(e)))
            .collect(),
    )
}

fn orders() -> impl Strategy<Value = TermOrder> {
    prop_oneof![
        Just(TermOrder::grevlex()),
        Just(TermOrder::lex()),
        Just(TermOrder::elimination(1)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in terms(3, 5), b in terms(3, 5), c in terms(3, 5)) {
        let r = ring(TermOrder::grevlex());
        let (a, b, c) = (build(&r, &a), build(&r, &b), build(&r, &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn orders_are_multiplicative(ord in orders(), a in exps(4), b in exps(4), m in exps(4)) {
        let (a, b, m) = (
            Monomial::from_exponents(&a),
            Monomial::from_exponents(&b),
            Monomial::from_exponents(&m),
        );
        prop_assert_eq!(ord.cmp(&a, &b), ord.cmp(&a.mul(&m), &b.mul(&m)));
        if !m.is_one() {
            prop_assert_eq!(ord.cmp(&a.mul(&m), &a), std::cmp::Ordering::Greater);
        }
    }

    #[test]
    fn leading_term_of_product(ord in orders(), a in terms(3, 4), b in terms(3, 4)) {
        let r = ring(ord);
        let (a, b) = (build(&r, &a), build(&r, &b));
        prop_assume!(!a.is_zero() && !b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(
            prod.leading_monomial().unwrap().clone(),
            a.leading_monomial().unwrap().mul(b.leading_monomial().unwrap())
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn groebner_bases_are_canonical(gens in prop::collection::vec(terms(2, 3), 1..4), f in terms(3, 4)) {
        let r = ring(TermOrder::grevlex());
        let gens: Vec<Polynomial> = gens.iter().map(|t| build(&r, t)).collect();
        let mut rev = gens.clone();
        rev.reverse();
        let i = IdealHandle::new(&r, gens.clone());
        let j = IdealHandle::new(&r, rev);
        let (gi, gj) = (i.groebner_basis(), j.groebner_basis());
        prop_assert_eq!(gi.polys(), gj.polys());
        let f = build(&r, &f);
        let nf = i.normal_form(&f);
        prop_assert_eq!(i.normal_form(&nf), nf.clone());
        prop_assert!(i.contains(&(&f - &nf)));
        for g in &gens {
            prop_assert!(i.contains(g));
        }
    }

    #[test]
    fn colon_laws(gens in prop::collection::vec(terms(2, 2), 1..3), f in terms(1, 2)) {
        let r = ring(TermOrder::grevlex());
        let i = IdealHandle::new(&r, gens.iter().map(|t| build(&r, t)).collect());
        let f = build(&r, &f);
        prop_assume!(!f.is_zero());
        let c = colon(&i, &f).unwrap();
        prop_assert!(c.contains_ideal(&i));
        for g in c.generators() {
            prop_assert!(i.contains(&(g * &f)));
        }
    }

    #[test]
    fn fit_recovers_random_evectors(d in 0usize..4, tail in prop::collection::vec(-6i64..6, 3), e0 in 1i64..6, extra in 0usize..4) {
        let mut e = vec![e0];
        e.extend(tail.iter().take(d).copied());
        let target = EVector { d, e: e.clone(), n0: 0, window: FIT_WINDOW, samples: 0 };
        // Clamping the early values to 0 changes only finitely many terms, which leaves the
        // coefficients alone; the fit needs a stretch of honest samples at the end.
        let last_bad = (0..200u64).rev().find(|&n| target.evaluate(n) < 0).map_or(0, |n| n as usize + 1);
        let len = last_bad + d + FIT_WINDOW + 3 + extra;
        let values: Vec<u64> = (0..len as u64).map(|n| target.evaluate(n).max(0) as u64).collect();
        let ev = fit_evector(&values, d).unwrap();
        prop_assert_eq!(ev.e, e);
    }

    #[test]
    fn printed_scripts_parse_back(a in terms(3, 4), b in terms(2, 3), n in 0u64..30) {
        let r = ring(TermOrder::grevlex());
        let (a, b) = (build(&r, &a), build(&r, &b));
        let text = format!(
            "ring S = char {P}, vars x y z;\nideal I = {}, {};\nset nmax={n};\ntask coeffs S I trials=3;\n",
            if a.is_zero() { "x".to_string() } else { a.to_string() },
            if b.is_zero() { "y".to_string() } else { b.to_string() },
        );
        let s = parse_script(&text).unwrap();
        let again = parse_script(&s.to_string()).unwrap();
        prop_assert_eq!(s, again);
    }
}
