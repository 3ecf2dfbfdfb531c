//! Dense exact linear algebra over a field: reduced row echelon forms,
//! kernels, preimages and intersections of subspaces.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Exact;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Exact> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|v| v.to_ratio_string()).collect())
            .collect();
        f.debug_struct("Matrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("data", &rows)
            .finish()
    }
}

impl<S: Exact> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    /// Rows must share the length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<S>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a matrix with {cols} columns",
                    r.len()
                )));
            }
            data.extend(r);
        }
        Ok(Matrix {
            rows: n,
            cols,
            data,
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| S::from_int(v)).collect())
                .collect(),
        )
        .expect("rows of equal length")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).clone() + a.clone() * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| dot(self.row(i), v))
            .collect())
    }

    /// Reduced row echelon form of the row space.
    pub fn rref(&self) -> Echelon<S> {
        let mut e = Echelon::new(self.cols);
        for i in 0..self.rows {
            e.insert(self.row(i).to_vec());
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// `{x : Mx = 0}`.
    pub fn kernel(&self) -> Subspace<S> {
        self.rref().kernel()
    }
}

pub fn dot<S: Exact>(a: &[S], b: &[S]) -> S {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y)
}

/// An incrementally maintained reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon<S> {
    cols: usize,
    rows: Vec<Vec<S>>,
    pivots: Vec<usize>,
}

impl<S: Exact> Echelon<S> {
    pub fn new(cols: usize) -> Self {
        Echelon {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<S>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce `v` against the current rows.
    pub fn reduce(&self, mut v: Vec<S>) -> Vec<S> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= f.clone() * r;
                }
            }
        }
        v
    }

    /// Add a row; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<S>) -> bool {
        assert_eq!(v.len(), self.cols, "row length must match column count");
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = S::one() / v[p].clone();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x *= inv.clone();
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                if !r.is_zero() {
                    *x -= f.clone() * r;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, v);
        self.pivots.insert(at, p);
        true
    }

    pub fn contains(&self, v: &[S]) -> bool {
        self.reduce(v.to_vec()).iter().all(|x| x.is_zero())
    }

    /// Null space of the rows.
    pub fn kernel(&self) -> Subspace<S> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Echelon::new(self.cols);
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![S::zero(); self.cols];
            v[f] = S::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                v[p] = -row[f].clone();
            }
            basis.insert(v);
        }
        Subspace { echelon: basis }
    }

    pub fn into_subspace(self) -> Subspace<S> {
        Subspace { echelon: self }
    }
}

/// A subspace of `S^n`, stored by its reduced echelon basis (so equal
/// subspaces have identical representations).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<S> {
    echelon: Echelon<S>,
}

impl<S: Exact> Subspace<S> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            echelon: Echelon::new(ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, (0..ambient).map(|i| unit(ambient, i)))
    }

    pub fn span<I: IntoIterator<Item = Vec<S>>>(ambient: usize, vectors: I) -> Self {
        let mut e = Echelon::new(ambient);
        for v in vectors {
            e.insert(v);
        }
        Subspace { echelon: e }
    }

    pub fn ambient(&self) -> usize {
        self.echelon.cols
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn basis(&self) -> &[Vec<S>] {
        self.echelon.rows()
    }

    pub fn pivots(&self) -> &[usize] {
        self.echelon.pivots()
    }

    pub fn contains(&self, v: &[S]) -> bool {
        v.len() == self.ambient() && self.echelon.contains(v)
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.basis().iter().all(|v| other.contains(v))
    }

    pub fn as_matrix(&self) -> Matrix<S> {
        Matrix::from_rows(self.ambient(), self.basis().to_vec()).expect("consistent rows")
    }

    /// Vectors pairing to zero with every basis vector.
    pub fn annihilator(&self) -> Self {
        self.echelon.kernel()
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient() == other.ambient() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "subspaces of dimension {} and {}",
                self.ambient(),
                other.ambient()
            )))
        }
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut e = self.echelon.clone();
        for v in other.basis() {
            e.insert(v.clone());
        }
        Ok(Subspace { echelon: e })
    }

    /// `U ∩ W` from the kernel of `(a, b) ↦ Σ aᵢuᵢ − Σ bⱼwⱼ`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let (u, w) = (self.basis(), other.basis());
        let n = self.ambient();
        let cols = u.len() + w.len();
        let rows: Vec<Vec<S>> = (0..n)
            .map(|k| {
                u.iter()
                    .map(|v| v[k].clone())
                    .chain(w.iter().map(|v| -v[k].clone()))
                    .collect()
            })
            .collect();
        let kernel = Matrix::from_rows(cols, rows)?.kernel();
        let vectors = kernel.basis().iter().map(|coeffs| {
            let mut x = vec![S::zero(); n];
            for (a, v) in coeffs.iter().zip(u) {
                if a.is_zero() {
                    continue;
                }
                for (xi, vi) in x.iter_mut().zip(v) {
                    *xi += a.clone() * vi;
                }
            }
            x
        });
        Ok(Self::span(n, vectors.collect::<Vec<_>>()))
    }

    /// Pad every basis vector with zeros up to `ambient` coordinates.
    pub fn embed(&self, ambient: usize) -> Self {
        assert!(ambient >= self.ambient(), "embedding must not shrink");
        Self::span(
            ambient,
            self.basis().iter().map(|v| {
                let mut w = v.clone();
                w.resize(ambient, S::zero());
                w
            }),
        )
    }
}

fn unit<S: Exact>(n: usize, i: usize) -> Vec<S> {
    let mut v = vec![S::zero(); n];
    v[i] = S::one();
    v
}

pub fn kernel<S: Exact>(m: &Matrix<S>) -> Subspace<S> {
    m.kernel()
}

/// `{x : Lx ∈ W}`, computed as the kernel of `A·L` where the rows of `A`
/// span the annihilator of `W`.
pub fn preimage<S: Exact>(l: &Matrix<S>, w: &Subspace<S>) -> Result<Subspace<S>> {
    if l.rows() != w.ambient() {
        return Err(Error::DimensionMismatch(format!(
            "map into dimension {} but subspace of dimension {}",
            l.rows(),
            w.ambient()
        )));
    }
    let ann = w.annihilator();
    let mut e = Echelon::new(l.cols());
    for a in ann.basis() {
        let row: Vec<S> = (0..l.cols())
            .map(|j| {
                a.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .fold(S::zero(), |acc, (i, x)| acc + x.clone() * l.get(i, j))
            })
            .collect();
        e.insert(row);
    }
    Ok(e.kernel())
}

pub fn intersect<S: Exact>(u: &Subspace<S>, w: &Subspace<S>) -> Result<Subspace<S>> {
    u.intersect(w)
}
