mod common;

use chern::alg::RingDesc;
use chern::graded::{
    freeness_probe, graded_dim, graded_dim_by_rank, hilbert_function, length_between,
    partial_sum_table, FreenessVerdict, Graded, GradedSubmodule, HilbertFunctionTable,
};
use chern::groebner::{intersection, length_zero_dim, IdealHandle};
use common::*;

fn module(
    r: &std::sync::Arc<chern::alg::PolyRing>,
    rank: usize,
    gens: &[&[&str]],
) -> GradedSubmodule {
    let ring = RingDesc::polynomial(r);
    let gens = gens.iter().map(|v| r.parse_all(v).unwrap()).collect();
    GradedSubmodule::new(&ring, rank, gens).unwrap()
}

#[test]
fn cubics_in_two_variables() {
    let r = ring(&["x", "y"]);
    let s = RingDesc::polynomial(&r);
    assert_eq!(graded_dim(Graded::Quotient(&s), 3).unwrap(), 4);
}

#[test]
fn two_planes_hilbert_function() {
    let r = two_planes();
    let h = hilbert_function(Graded::Quotient(&r), 8).unwrap();
    // Oracle: R embeds in S/(x1,x2) ⊕ S/(x3,x4) with cokernel k in degree 0.
    let expected: Vec<u64> = (0..=8u64)
        .map(|n| if n == 0 { 1 } else { 2 * (n + 1) })
        .collect();
    assert_eq!(h.entries, expected);
}

#[test]
fn engines_agree() {
    let x = x4();
    let cases = [
        two_planes(),
        quotient(&x, &["x1^2 - x2*x3", "x3^3 + x1*x2*x4"]),
        quotient(&x, &["x1*x2", "x2*x3", "x3*x4", "x4*x1"]),
    ];
    for r in &cases {
        for n in 0..7 {
            assert_eq!(
                graded_dim(Graded::Quotient(r), n).unwrap(),
                graded_dim_by_rank(r, n).unwrap() as u64,
                "{r} n={n}"
            );
        }
    }
}

#[test]
fn zero_dimensional_sum_matches_length() {
    let r = ring(&["x", "y", "z"]);
    let gens = ["x^2 + y*z", "y^3 - x*z^2", "z^4", "x*y*z"];
    let q = quotient(&r, &gens);
    let h = hilbert_function(Graded::Quotient(&q), 20).unwrap();
    assert_eq!(*h.entries.last().unwrap(), 0);
    let total: u64 = h.entries.iter().sum();
    assert_eq!(total, length_zero_dim(&ideal(&r, &gens)).unwrap());
}

#[test]
fn maximal_ideal_as_module() {
    let r = ring(&["x", "y"]);
    let m = module(&r, 1, &[&["x"], &["y"]]);
    assert_eq!(graded_dim(Graded::Module(&m), 0).unwrap(), 0);
    assert_eq!(graded_dim(Graded::Module(&m), 2).unwrap(), 3);
    let h = hilbert_function(Graded::Module(&m), 4).unwrap();
    assert_eq!(h.entries, vec![0, 2, 3, 4, 5]);
    assert_eq!(partial_sum_table(&h).entries, vec![0, 2, 5, 9, 14]);
}

#[test]
fn free_module_hilbert_function() {
    let r = ring(&["x", "y"]);
    let f = GradedSubmodule::free(&RingDesc::polynomial(&r), 2).unwrap();
    assert_eq!(
        hilbert_function(Graded::Module(&f), 3).unwrap().entries,
        vec![2, 4, 6, 8]
    );
}

#[test]
fn partial_sums() {
    let zero = HilbertFunctionTable {
        entries: vec![0; 5],
    };
    assert_eq!(partial_sum_table(&zero).entries, vec![0; 5]);
    let r = ring(&["x", "y"]);
    let h = hilbert_function(Graded::Quotient(&RingDesc::polynomial(&r)), 5).unwrap();
    let sums = partial_sum_table(&h).entries;
    assert_eq!(sums, (0..=5).map(|n| binom(n + 2, 2)).collect::<Vec<_>>());
}

#[test]
fn freeness_probes() {
    let r = ring(&["x", "y"]);
    let diag = module(&r, 2, &[&["x", "0"], &["0", "y"]]);
    assert!(freeness_probe(&diag, 10).unwrap().is_free_up_to_bound());
    let m = module(&r, 1, &[&["x"], &["y"]]);
    assert_eq!(
        freeness_probe(&m, 10).unwrap(),
        FreenessVerdict::NotFree {
            witness_degree: 2,
            minimal_generators: 2
        }
    );
    let empty = GradedSubmodule::new(&RingDesc::polynomial(&r), 1, vec![]).unwrap();
    assert!(freeness_probe(&empty, 5).unwrap().is_free_up_to_bound());
}

#[test]
fn module_below_generation_degree_vanishes() {
    let r = ring(&["x", "y"]);
    let m = module(&r, 1, &[&["x^2"], &["x*y"], &["y^2"]]);
    let h = hilbert_function(Graded::Module(&m), 5).unwrap();
    assert_eq!(h.entries, vec![0, 0, 3, 4, 5, 6]);
}

#[test]
fn finite_cokernel_length_of_two_planes() {
    let s = x4();
    let p1 = ideal(&s, &["x1", "x2"]);
    let p2 = ideal(&s, &["x3", "x4"]);
    let l = intersection(&p1, &p2);
    // λ(L) = Σ_n [H_{S/P1} + H_{S/P2} − H_R]: computed from Hilbert functions.
    let r = RingDesc::from_ideal(&l);
    let h = hilbert_function(Graded::Quotient(&r), 10).unwrap();
    let h1 = hilbert_function(Graded::Quotient(&RingDesc::from_ideal(&p1)), 10).unwrap();
    let h2 = hilbert_function(Graded::Quotient(&RingDesc::from_ideal(&p2)), 10).unwrap();
    let diff: u64 = (0..=10).map(|n| h1.get(n) + h2.get(n) - h.get(n)).sum();
    assert_eq!(diff, 1);
    // Torsion of S/(x^2, xy, xz) has length 1.
    let r3 = ring(&["x", "y", "z"]);
    let l0 = ideal(&r3, &["x^2", "x*y", "x*z"]);
    assert_eq!(length_between(&l0, &ideal(&r3, &["x"])).unwrap(), 1);
    assert!(length_between(&IdealHandle::zero(&r3), &ideal(&r3, &["x"])).is_err());
}

#[test]
fn inhomogeneous_relations_are_rejected() {
    assert!(graded_dim(Graded::Quotient(&curve345()), 2).is_err());
}
