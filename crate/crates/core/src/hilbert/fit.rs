use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Stabilization window: the `(d+1)`-th differences must vanish on this many trailing samples.
pub const FIT_WINDOW: usize = 3;

/// Hilbert coefficients `e_0..e_d` with the evidence of the fit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EVector {
    pub d: usize,
    pub e: Vec<i64>,
    /// First sample index from which the polynomial reproduces every later sample.
    pub n0: usize,
    pub window: usize,
    /// Number of samples the fit used.
    pub samples: usize,
}

impl EVector {
    pub fn e0(&self) -> i64 {
        self.e[0]
    }

    pub fn e1(&self) -> i64 {
        self.e.get(1).copied().unwrap_or(0)
    }

    pub fn get(&self, i: usize) -> i64 {
        self.e.get(i).copied().unwrap_or(0)
    }

    /// `Σ (-1)^i e_i binom(n + d - i, d - i)`.
    pub fn evaluate(&self, n: u64) -> i128 {
        self.e
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                sign * *e as i128 * binom(n as i128 + (self.d - i) as i128, (self.d - i) as u32)
            })
            .sum()
    }
}

pub(crate) fn binom(n: i128, k: u32) -> i128 {
    if n < 0 {
        return 0;
    }
    let mut acc: i128 = 1;
    for i in 0..k as i128 {
        acc = acc * (n - i) / (i + 1);
    }
    acc.max(0)
}

/// Fits the Hilbert–Samuel polynomial of dimension `d` to `values[n] = λ(M/I^{n+1}M)`.
///
/// The sequence is multiplied by `(1 - t)^{d+1}`; the result must vanish on the last
/// [`FIT_WINDOW`] indices, and the surviving polynomial `Q` gives `e_i = Σ_k q_k binom(k, i)`.
pub fn fit_evector(values: &[u64], d: usize) -> Result<EVector> {
    let needed = d + FIT_WINDOW + 2;
    if values.len() < needed {
        return Err(Error::Unstable(format!(
            "{} samples are too few for a dimension-{d} fit (need {needed}); increase N",
            values.len()
        )));
    }
    let n = values.len();
    let q: Vec<i128> = (0..n)
        .map(|k| {
            (0..=(d + 1).min(k))
                .map(|j| {
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    sign * binom((d + 1) as i128, j as u32) * values[k - j] as i128
                })
                .sum()
        })
        .collect();
    if q[n - FIT_WINDOW..].iter().any(|c| *c != 0) {
        return Err(Error::Unstable(format!(
            "order-{} differences do not vanish on the last {FIT_WINDOW} of {n} samples; increase N",
            d + 1
        )));
    }
    let e: Vec<i64> = (0..=d)
        .map(|i| {
            q[..n - FIT_WINDOW]
                .iter()
                .enumerate()
                .map(|(k, c)| c * binom(k as i128, i as u32))
                .sum::<i128>() as i64
        })
        .collect();
    let mut ev = EVector {
        d,
        e,
        n0: 0,
        window: FIT_WINDOW,
        samples: n,
    };
    let mut n0 = n;
    while n0 > 0 && ev.evaluate((n0 - 1) as u64) == values[n0 - 1] as i128 {
        n0 -= 1;
    }
    if n0 + FIT_WINDOW > n {
        return Err(Error::Unstable(format!(
            "fitted polynomial matches only {} trailing samples",
            n - n0
        )));
    }
    ev.n0 = n0;
    if ev.e0() < 1 {
        return Err(Error::input(format!(
            "fit gives e_0 = {}; the dimension {d} does not match the samples",
            ev.e0()
        )));
    }
    Ok(ev)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(f: impl Fn(u64) -> u64, n: u64) -> Vec<u64> {
        (0..=n).map(f).collect()
    }

    #[test]
    fn polynomial_ring() {
        let v = table(|n| (n + 1) * (n + 2) / 2, 12);
        assert_eq!(fit_evector(&v, 2).unwrap().e, vec![1, 0, 0]);
    }

    #[test]
    fn product_of_two_lines() {
        let v = table(|n| (n + 1) * (n + 3), 12);
        let ev = fit_evector(&v, 2).unwrap();
        assert_eq!(ev.e, vec![2, -1, 0]);
        assert_eq!(ev.n0, 0);
    }

    #[test]
    fn square_of_the_maximal_ideal() {
        let v = table(|n| 2 * n * n + 5 * n + 3, 12);
        assert_eq!(fit_evector(&v, 2).unwrap().e, vec![4, 1, 0]);
    }

    #[test]
    fn late_stabilization_is_recorded() {
        let mut v = table(|n| n + 1, 10);
        v[0] = 0;
        v[1] = 1;
        let ev = fit_evector(&v, 1).unwrap();
        assert_eq!(ev.e, vec![1, 0]);
        assert_eq!(ev.n0, 2);
    }

    #[test]
    fn too_few_samples_is_unstable() {
        let v = table(|n| n + 1, 3);
        assert!(matches!(fit_evector(&v, 2), Err(Error::Unstable(_))));
    }

    #[test]
    fn wrong_shape_is_unstable() {
        let v = table(|n| n * n * n, 12);
        assert!(matches!(fit_evector(&v, 2), Err(Error::Unstable(_))));
    }
}
