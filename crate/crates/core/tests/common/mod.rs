#![allow(dead_code)]

use std::sync::Arc;

use chern::alg::{PolyRing, RingDesc};
use chern::groebner::IdealHandle;

pub fn ring(vars: &[&str]) -> Arc<PolyRing> {
    PolyRing::new(32003, vars).unwrap()
}

pub fn ideal(r: &Arc<PolyRing>, gens: &[&str]) -> IdealHandle {
    IdealHandle::from_strs(r, gens).unwrap()
}

pub fn quotient(r: &Arc<PolyRing>, gens: &[&str]) -> RingDesc {
    RingDesc::quotient(r, r.parse_all(gens).unwrap()).unwrap()
}

pub fn x4() -> Arc<PolyRing> {
    ring(&["x1", "x2", "x3", "x4"])
}

pub fn two_planes() -> RingDesc {
    quotient(&x4(), &["x1*x3", "x1*x4", "x2*x3", "x2*x4"])
}

pub fn curve345() -> RingDesc {
    quotient(
        &ring(&["x", "y", "z"]),
        &["y^2 - x*z", "x^3 - y*z", "x^2*y - z^2"],
    )
}

pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Exact binomial-basis expansion of a sampled table by solving the triangular system
/// on the last `d + 1` samples; independent of the library's difference method.
pub fn expand_in_binomial_basis(values: &[u64], d: usize) -> Vec<i64> {
    // P(n) = Σ (-1)^i e_i binom(n + d - i, d - i): evaluate at the last d + 1 points and
    // solve by Gaussian elimination over the rationals (exact in i128 with fraction-free steps).
    let n = values.len();
    let pts: Vec<usize> = (n - d - 1..n).collect();
    let mut a: Vec<Vec<i128>> = pts
        .iter()
        .map(|&p| {
            let mut row: Vec<i128> = (0..=d)
                .map(|i| {
                    let s = if i % 2 == 0 { 1 } else { -1 };
                    s * binom((p + d - i) as u64, (d - i) as u64) as i128
                })
                .collect();
            row.push(values[p] as i128);
            row
        })
        .collect();
    let m = d + 1;
    for c in 0..m {
        let piv = (c..m).find(|&r| a[r][c] != 0).unwrap();
        a.swap(c, piv);
        for r in 0..m {
            if r != c && a[r][c] != 0 {
                let (f, g) = (a[r][c], a[c][c]);
                let pivot_row = a[c].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x = *x * g - y * f;
                }
            }
        }
    }
    (0..m)
        .map(|i| {
            assert_eq!(a[i][m] % a[i][i], 0);
            (a[i][m] / a[i][i]) as i64
        })
        .collect()
}
