mod common;

use chern::alg::RingDesc;
use chern::error::Error;
use chern::graded::{Graded, GradedSubmodule};
use chern::groebner::{length_zero_dim, power, sum, IdealHandle};
use chern::hilbert::{
    coefficients, fit_evector, graded_evector, hs_sample, hs_sample_by_gb, hs_sample_graded,
    Convention, Engine,
};
use common::*;

#[test]
fn polynomial_ring_maximal_ideal() {
    let r = ring(&["x", "y"]);
    let s = RingDesc::polynomial(&r);
    let t = hs_sample(&s, &IdealHandle::maximal(&r), 6).unwrap();
    assert_eq!(
        t.values,
        (0..=6).map(|n| binom(n + 2, 2)).collect::<Vec<_>>()
    );
    assert_eq!(t.engine, Engine::Graded);
}

#[test]
fn two_planes_table_and_fit() {
    let r = two_planes();
    let j = ideal(r.base(), &["x1 + x3", "x2 + x4"]);
    let t = hs_sample(&r, &j, 12).unwrap();
    let expected: Vec<u64> = (0..=12u64).map(|n| (n + 1) * (n + 3)).collect();
    assert_eq!(t.values, expected);
    // Oracle: direct zero-dimensional lengths of L + J^{n+1}.
    for n in 0..5u32 {
        let k = sum(r.relations(), &power(&j, n + 1));
        assert_eq!(length_zero_dim(&k).unwrap(), t.values[n as usize]);
    }
    let c = coefficients(&r, &j, None).unwrap();
    assert_eq!(c.evector.e, vec![2, -1, 0]);
    assert_eq!(c.evector.e, expand_in_binomial_basis(&t.values, 2));
}

#[test]
fn engines_agree_on_homogeneous_data() {
    let r = two_planes();
    for gens in [
        &["x1 + x3", "x2 + x4"][..],
        &["x1", "x2", "x3", "x4"],
        &["x1 + 2*x2 - x3", "x2 + x4"],
    ] {
        let j = ideal(r.base(), gens);
        let a = hs_sample_graded(&r, &j, 5).unwrap();
        let b = hs_sample_by_gb(&r, &j, 5).unwrap();
        assert_eq!(a.values, b.values, "{gens:?}");
    }
}

#[test]
fn monomial_curve_principal_ideal() {
    let r = curve345();
    let x = ideal(r.base(), &["x"]);
    let t = hs_sample(&r, &x, 8).unwrap();
    assert_eq!(t.engine, Engine::GroebnerLocal);
    assert_eq!(t.values, (1..=9).map(|n| 3 * n).collect::<Vec<_>>());
    let c = coefficients(&r, &x, None).unwrap();
    assert_eq!(c.evector.e, vec![3, 0]);
}

#[test]
fn monomial_curve_generic_linear_parameter_is_local() {
    let r = curve345();
    let j = ideal(r.base(), &["x + 3*y - 5*z"]);
    let c = coefficients(&r, &j, None).unwrap();
    assert_eq!(c.evector.e, vec![3, 0]);
}

#[test]
fn square_of_maximal_ideal() {
    let r = ring(&["x", "y"]);
    let m2 = ideal(&r, &["x^2", "x*y", "y^2"]);
    let c = coefficients(&RingDesc::polynomial(&r), &m2, None).unwrap();
    assert_eq!(c.evector.e, vec![4, 1, 0]);
    assert_eq!(c.table.values[..4], [3, 10, 21, 36]);
}

#[test]
fn monomial_complete_intersections() {
    let r = ring(&["x", "y", "z"]);
    let s = RingDesc::polynomial(&r);
    for (a, b, c) in [(1, 2, 3), (2, 2, 1), (3, 1, 2)] {
        let i = ideal(
            &r,
            &[&format!("x^{a}"), &format!("y^{b}"), &format!("z^{c}")],
        );
        let ev = coefficients(&s, &i, None).unwrap().evector;
        assert_eq!(ev.e, vec![(a * b * c) as i64, 0, 0, 0]);
    }
}

#[test]
fn not_m_primary_is_an_error() {
    let r = ring(&["x", "y"]);
    let err = hs_sample(&RingDesc::polynomial(&r), &ideal(&r, &["x"]), 5).unwrap_err();
    assert!(matches!(err, Error::NotZeroDimensional(_)));
}

#[test]
fn graded_conventions_for_the_maximal_ideal_module() {
    let r = ring(&["x", "y"]);
    let s = RingDesc::polynomial(&r);
    let m = GradedSubmodule::new(
        &s,
        1,
        vec![r.parse_all(&["x"]).unwrap(), r.parse_all(&["y"]).unwrap()],
    )
    .unwrap();
    let natural = graded_evector(Graded::Module(&m), Convention::Natural, None).unwrap();
    assert_eq!(natural.e, vec![1, 0, -1]);
    let shifted = graded_evector(Graded::Module(&m), Convention::Shifted(1), None).unwrap();
    assert_eq!(shifted.e1(), natural.e1() - natural.e0());
    let free = graded_evector(Graded::Quotient(&s), Convention::Natural, None).unwrap();
    assert_eq!(free.e, vec![1, 0, 0]);
}

#[test]
fn adic_and_graded_agree_for_the_maximal_ideal() {
    let r = two_planes();
    let m = IdealHandle::maximal(r.base());
    let adic = coefficients(&r, &m, None).unwrap().evector;
    let graded = graded_evector(Graded::Quotient(&r), Convention::Natural, None).unwrap();
    assert_eq!(adic.e, graded.e);
    assert_eq!(adic.e, vec![2, 0, -1]);
}

#[test]
fn truncated_table_is_unstable() {
    let err = fit_evector(&[3, 8, 15], 2).unwrap_err();
    assert!(err.is_computational_shortfall());
}
