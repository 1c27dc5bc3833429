mod common;

use chern::alg::RingDesc;
use chern::error::Error;
use chern::groebner::{krull_dim, sum, IdealHandle};
use chern::hilbert::coefficients;
use chern::structure::{
    colon_length, depth, find_superficial, is_cohen_macaulay, lift_sop, random_sop,
    reduction_check, superficial_descent_check, verify_superficial, ReductionOutcome,
    SuperficialCertificate,
};
use common::*;

const T: usize = 8;

#[test]
fn depth_of_standard_examples() {
    let r = ring(&["x", "y"]);
    assert_eq!(depth(&RingDesc::polynomial(&r), 1, T).unwrap(), 2);
    assert_eq!(depth(&two_planes(), 1, T).unwrap(), 1);
    assert_eq!(depth(&quotient(&r, &["x^2", "y^3"]), 1, T).unwrap(), 0);
    // m is associated to (x^2, xy, xz): depth 0 in dimension 2.
    let s = ring(&["x", "y", "z"]);
    assert_eq!(
        depth(&quotient(&s, &["x^2", "x*y", "x*z"]), 1, T).unwrap(),
        0
    );
}

#[test]
fn cohen_macaulay_status() {
    let c = is_cohen_macaulay(&curve345(), 3, T).unwrap();
    assert_eq!((c.dim, c.depth, c.is_cm), (1, 1, true));
    let p = is_cohen_macaulay(&two_planes(), 3, T).unwrap();
    assert_eq!((p.dim, p.depth, p.is_cm), (2, 1, false));
    let r = ring(&["x", "y", "z"]);
    assert!(
        is_cohen_macaulay(&RingDesc::polynomial(&r), 3, T)
            .unwrap()
            .is_cm
    );
    let hyper = quotient(&r, &["x^3 + y^3 + z^3"]);
    assert!(is_cohen_macaulay(&hyper, 3, T).unwrap().is_cm);
}

#[test]
fn random_sops_are_parameter_ideals() {
    for seed in 0..5 {
        let r = two_planes();
        let sop = random_sop(&r, seed, T).unwrap();
        assert_eq!(sop.elements.len(), 2);
        let total = sum(r.relations(), &sop.ideal(&r));
        assert_eq!(krull_dim(&total).unwrap(), 0);
        assert!(sop.elements.iter().all(|e| e.degree() == Some(1)));
    }
    let art = quotient(&ring(&["x", "y"]), &["x^2", "y^2"]);
    assert!(random_sop(&art, 0, T).unwrap().elements.is_empty());
}

#[test]
fn lifting_parameters_through_a_prime() {
    let s = x4();
    let amb = RingDesc::polynomial(&s);
    let p = ideal(&s, &["x1", "x2"]);
    let x = s.parse_all(&["x3", "x4"]).unwrap();
    for seed in 0..4 {
        let lift = lift_sop(&amb, &p, &x, seed, T).unwrap();
        assert_eq!(lift.dims, vec![4, 3, 2]);
        for (a, b) in lift.elements.iter().zip(&x) {
            assert!(p.contains(&(a - b)));
        }
        // a_i = x_{i+2} + λ x1 + λ² x2
        let field = s.field();
        for (a, &l) in lift.elements.iter().zip(&lift.lambdas) {
            let expected =
                &(&s.parse("0").unwrap() + &s.var(0).scale(l)) + &s.var(1).scale(field.mul(l, l));
            let b = a - &expected;
            assert!(b.is_homogeneous() && b.terms().len() == 1);
        }
    }
    // p = 0 leaves the parameters alone.
    let zero = IdealHandle::zero(&s);
    let all = s.vars();
    let lift = lift_sop(&amb, &zero, &all, 0, T).unwrap();
    assert_eq!(lift.elements, all);
    // Not a system of parameters of S/p.
    let bad = s.parse_all(&["x3"]).unwrap();
    assert!(matches!(
        lift_sop(&amb, &p, &bad, 0, T),
        Err(Error::Input(_))
    ));
}

#[test]
fn principal_prime_lift() {
    let s = ring(&["x", "y"]);
    let amb = RingDesc::polynomial(&s);
    let p = ideal(&s, &["x"]);
    let lift = lift_sop(&amb, &p, &s.parse_all(&["y"]).unwrap(), 5, T).unwrap();
    let l = lift.lambdas[0];
    assert_eq!(lift.elements[0], &s.var(1) + &s.var(0).scale(l));
}

#[test]
fn reduction_numbers() {
    let s = ring(&["x", "y"]);
    let r = RingDesc::polynomial(&s);
    let i = ideal(&s, &["x^2", "x*y", "y^2"]);
    let j = ideal(&s, &["x^2", "y^2"]);
    assert_eq!(
        reduction_check(&r, &j, &i, 10)
            .unwrap()
            .certificate()
            .unwrap()
            .s,
        1
    );
    assert_eq!(
        reduction_check(&r, &i, &i, 10)
            .unwrap()
            .certificate()
            .unwrap()
            .s,
        0
    );
    // (x^2) is not a reduction of m^2.
    let bad = ideal(&s, &["x^2"]);
    assert_eq!(
        reduction_check(&r, &bad, &i, 3).unwrap(),
        ReductionOutcome::NotWithinBound { s_max: 3 }
    );
    let outside = ideal(&s, &["x"]);
    assert!(matches!(
        reduction_check(&r, &outside, &i, 3),
        Err(Error::Input(_))
    ));

    let tp = two_planes();
    let j = ideal(tp.base(), &["x1 + x3", "x2 + x4"]);
    let m = IdealHandle::maximal(tp.base());
    let s = reduction_check(&tp, &j, &m, 10)
        .unwrap()
        .certificate()
        .unwrap()
        .s;
    assert!(s <= 2);
    let ej = coefficients(&tp, &j, None).unwrap().evector;
    let em = coefficients(&tp, &m, None).unwrap().evector;
    assert_eq!(ej.e0(), em.e0());

    let c = curve345();
    let m = IdealHandle::maximal(c.base());
    let x = ideal(c.base(), &["x"]);
    assert_eq!(
        reduction_check(&c, &x, &m, 10)
            .unwrap()
            .certificate()
            .unwrap()
            .s,
        1
    );
}

#[test]
fn superficial_elements() {
    let s = ring(&["x", "y"]);
    let r = RingDesc::polynomial(&s);
    let m = IdealHandle::maximal(&s);
    assert!(verify_superficial(&r, &m, &s.var(0), 1, 12).unwrap());
    let cert = find_superficial(&r, &m, 9, Some(12), 5, T).unwrap();
    assert_eq!(cert.c, 1);
    assert!(cert.replay(&r).unwrap());

    let tp = two_planes();
    let j = ideal(tp.base(), &["x1 + x3", "x2 + x4"]);
    let cert = find_superficial(&tp, &j, 9, None, 5, T).unwrap();
    assert!(cert.replay(&tp).unwrap());
    assert_eq!(cert.range.1, 12);

    let c = curve345();
    let x = ideal(c.base(), &["x"]);
    assert!(verify_superficial(&c, &x, &c.base().var(0), 1, 8).unwrap());
    // y is not in (x).
    assert!(matches!(
        verify_superficial(&c, &x, &c.base().var(1), 1, 8),
        Err(Error::Input(_))
    ));
}

#[test]
fn descent_in_a_polynomial_ring() {
    let s = ring(&["x", "y"]);
    let r = RingDesc::polynomial(&s);
    let cert = SuperficialCertificate {
        h: s.var(0),
        ideal: IdealHandle::maximal(&s),
        c: 1,
        range: (1, 12),
        draws: 0,
    };
    let rep = superficial_descent_check(&r, &cert, None).unwrap();
    assert_eq!(rep.full.e, vec![1, 0, 0]);
    assert_eq!(rep.cut.e, vec![1, 0]);
    assert_eq!(rep.lambda_colon, 0);
    assert!(rep.holds());
}

#[test]
fn descent_with_torsion_uses_the_signed_correction() {
    let s = ring(&["x", "y", "z"]);
    let r = quotient(&s, &["x^2", "x*y", "x*z"]);
    let m = IdealHandle::maximal(&s);
    let cert = find_superficial(&r, &m, 4, None, 5, T).unwrap();
    let rep = superficial_descent_check(&r, &cert, None).unwrap();
    assert_eq!(rep.full.e, vec![1, 0, 1]);
    assert_eq!(rep.cut.e, vec![1, -1]);
    assert_eq!(rep.lambda_colon, 1);
    assert!(rep.holds());
    assert_eq!(colon_length(&r, &cert.h).unwrap(), 1);
}

#[test]
fn descent_on_two_planes_and_curve() {
    let tp = two_planes();
    let j = ideal(tp.base(), &["x1 + x3", "x2 + x4"]);
    let cert = find_superficial(&tp, &j, 2, None, 5, T).unwrap();
    let rep = superficial_descent_check(&tp, &cert, None).unwrap();
    assert_eq!(rep.full.e, vec![2, -1, 0]);
    assert_eq!(rep.full.e0(), rep.cut.e0());
    assert_eq!(rep.lambda_colon, 0);
    assert!(rep.holds());

    let c = curve345();
    let m = IdealHandle::maximal(c.base());
    let cert = find_superficial(&c, &m, 2, Some(8), 5, T).unwrap();
    let rep = superficial_descent_check(&c, &cert, Some(8)).unwrap();
    assert_eq!(rep.full.e0(), 3);
    assert!(rep.holds());
}
