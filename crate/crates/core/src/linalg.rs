//! Dense linear algebra over `F_p`: matrices, row reduction, kernels and subspaces in
//! reduced row echelon form.

use crate::alg::PrimeField;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a `rows x columns.len()` matrix from column vectors.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, *v);
            }
        }
        m
    }

    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend_from_slice(r);
        }
        Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let f = self.field;
        let p = f.modulus() as u64;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            let mut acc = vec![0u64; other.cols];
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                for (slot, b) in acc.iter_mut().zip(orow) {
                    *slot = (*slot + a * *b as u64) % p;
                }
            }
            for (j, v) in acc.into_iter().enumerate() {
                out.set(i, j, v as u32);
            }
        }
        out
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let p = self.field.modulus() as u64;
        (0..self.rows)
            .map(|i| {
                let s = self
                    .row(i)
                    .iter()
                    .zip(v)
                    .fold(0u64, |s, (a, b)| (s + *a as u64 * *b as u64) % p);
                s as u32
            })
            .collect()
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn rank(&self) -> usize {
        Subspace::span(
            self.field,
            self.cols,
            (0..self.rows).map(|i| self.row(i).to_vec()),
        )
        .dim()
    }

    /// Basis of `{ v : A v = 0 }`.
    pub fn kernel(&self) -> Vec<Vec<u32>> {
        let f = self.field;
        let echelon = Subspace::span(f, self.cols, (0..self.rows).map(|i| self.row(i).to_vec()));
        let pivots: Vec<usize> = echelon.pivots.clone();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !is_pivot[*c]) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (row, &p) in echelon.rows.iter().zip(&pivots) {
                v[p] = f.neg(row[free]);
            }
            basis.push(v);
        }
        basis
    }
}

/// A linear subspace of `F_p^n`, stored as a reduced row echelon basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.dim() == other.dim() && self.contains_space(other)
    }
}

impl Eq for Subspace {}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        let mut s = Subspace::zero(field, ambient);
        for i in 0..ambient {
            let mut v = vec![0; ambient];
            v[i] = 1;
            s.rows.push(v);
            s.pivots.push(i);
        }
        s
    }

    pub fn span<I: IntoIterator<Item = Vec<u32>>>(
        field: PrimeField,
        ambient: usize,
        vecs: I,
    ) -> Self {
        let mut s = Subspace::zero(field, ambient);
        for v in vecs {
            s.insert(v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Residue of `v` after eliminating the pivot coordinates.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let mut v = v.to_vec();
        self.reduce_in_place(&mut v);
        v
    }

    fn reduce_in_place(&self, v: &mut [u32]) {
        let f = self.field;
        let p = f.modulus() as u64;
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v[piv];
            if c == 0 {
                continue;
            }
            let m = (p - c as u64) % p;
            for (x, r) in v.iter_mut().zip(row) {
                if *r != 0 {
                    *x = ((*x as u64 + m * *r as u64) % p) as u32;
                }
            }
        }
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, mut v: Vec<u32>) -> bool {
        assert_eq!(v.len(), self.ambient);
        self.reduce_in_place(&mut v);
        let Some(piv) = v.iter().position(|x| *x != 0) else {
            return false;
        };
        let f = self.field;
        let inv = f.inv(v[piv]).unwrap();
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        let p = f.modulus() as u64;
        for row in self.rows.iter_mut() {
            let c = row[piv];
            if c == 0 {
                continue;
            }
            let m = (p - c as u64) % p;
            for (x, r) in row.iter_mut().zip(&v) {
                if *r != 0 {
                    *x = ((*x as u64 + m * *r as u64) % p) as u32;
                }
            }
        }
        let at = self.pivots.partition_point(|q| *q < piv);
        self.pivots.insert(at, piv);
        self.rows.insert(at, v);
        true
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|x| *x == 0)
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r.clone());
        }
        s
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let f = self.field;
        let residues: Vec<Vec<u32>> = self.rows.iter().map(|r| other.reduce(r)).collect();
        let m = Matrix::from_columns(f, self.ambient, &residues);
        let combos = m.kernel();
        Subspace::span(
            f,
            self.ambient,
            combos
                .into_iter()
                .map(|alpha| combine_rows(f, &self.rows, &alpha, self.ambient)),
        )
    }

    /// `{ v : A v in target }` for `A` mapping into `target`'s ambient space.
    pub fn preimage(a: &Matrix, target: &Subspace) -> Subspace {
        assert_eq!(a.rows(), target.ambient);
        let f = a.field();
        let residues: Vec<Vec<u32>> = (0..a.cols()).map(|j| target.reduce(&a.column(j))).collect();
        let m = Matrix::from_columns(f, a.rows(), &residues);
        Subspace::span(f, a.cols(), m.kernel())
    }

    /// Image of the subspace under `A`.
    pub fn image(&self, a: &Matrix) -> Subspace {
        assert_eq!(a.cols(), self.ambient);
        Subspace::span(self.field, a.rows(), self.rows.iter().map(|r| a.apply(r)))
    }
}

fn combine_rows(f: PrimeField, rows: &[Vec<u32>], alpha: &[u32], n: usize) -> Vec<u32> {
    let p = f.modulus() as u64;
    let mut out = vec![0u64; n];
    for (r, a) in rows.iter().zip(alpha) {
        if *a == 0 {
            continue;
        }
        for (o, x) in out.iter_mut().zip(r) {
            *o = (*o + *a as u64 * *x as u64) % p;
        }
    }
    out.into_iter().map(|x| x as u32).collect()
}
