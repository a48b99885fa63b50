use alloc::vec;
use alloc::vec::Vec;
use core::ops::Index;

use crate::scalar::Scalar;
use crate::signal::Signal;

/// Dense square matrix, row-major, 0-based `(row, col)` indexing.
///
/// Products skip zero entries, so the sparse shift operators and their
/// Kronecker products stay cheap without a separate sparse type.
#[derive(Clone, Debug, PartialEq)]
pub struct KMatrix<S> {
    dim: usize,
    data: Vec<S>,
}

impl<S: Scalar> KMatrix<S> {
    pub fn zeros(dim: usize) -> Self {
        KMatrix {
            dim,
            data: vec![S::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        KMatrix { dim, data }
    }

    /// Builds from rows; panics unless the rows form a square.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            assert_eq!(row.len(), dim, "matrix rows must form a square");
            data.extend(row);
        }
        KMatrix { dim, data }
    }

    pub fn diagonal(entries: Vec<S>) -> Self {
        let dim = entries.len();
        let mut m = Self::zeros(dim);
        for (i, v) in entries.into_iter().enumerate() {
            m.data[i * dim + i] = v;
        }
        m
    }

    /// Nilpotent shift: ones on the first superdiagonal, so `(T f)(n) = f(n + 1)`.
    pub fn shift(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if j == i + 1 { S::one() } else { S::zero() })
    }

    /// Anti-identity `J`.
    pub fn exchange(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| {
            if i + j + 1 == dim {
                S::one()
            } else {
                S::zero()
            }
        })
    }

    /// Upper-triangular Toeplitz matrix with `coeffs[d]` on superdiagonal `d`.
    pub fn upper_toeplitz(dim: usize, coeffs: &[S]) -> Self {
        Self::from_fn(dim, |i, j| {
            if j >= i && j - i < coeffs.len() {
                coeffs[j - i].clone()
            } else {
                S::zero()
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: S) {
        self.data[i * self.dim + j] = value;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn col(&self, j: usize) -> Vec<S> {
        (0..self.dim).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.data.chunks(self.dim.max(1)).take(self.dim)
    }

    /// Entries along superdiagonal `d`.
    pub fn superdiagonal(&self, d: usize) -> Vec<S> {
        (0..self.dim.saturating_sub(d))
            .map(|i| self.get(i, i + d).clone())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, factor: &S) -> Self {
        KMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .map(|v| v.clone() * factor.clone())
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        KMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-S::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * n + j;
                    out.data[idx] = out.data[idx].clone() + a.clone() * b.clone();
                }
            }
        }
        out
    }

    /// `self^exp` by repeated squaring.
    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = Self::identity(self.dim);
        let mut base = self.clone();
        let mut e = exp;
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

    /// Column action `M v`.
    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.dim);
        self.rows()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    /// Row action `v^T M`.
    pub fn vec_mul(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.dim);
        let mut out = vec![S::zero(); self.dim];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                out[j] = out[j].clone() + vi.clone() * a.clone();
            }
        }
        out
    }

    pub fn mul_signal(&self, v: &Signal<S>) -> Signal<S> {
        Signal::new(self.mul_vec(v.values()))
    }

    /// Kronecker product associated to the left: entry
    /// `((a, b), (c, d))` at row `a * other.dim + b`, column `c * other.dim + d`.
    pub fn kron(&self, other: &Self) -> Self {
        let (m, n) = (self.dim, other.dim);
        let dim = m * n;
        let mut out = Self::zeros(dim);
        for a in 0..m {
            for c in 0..m {
                let x = self.get(a, c);
                if x.is_zero() {
                    continue;
                }
                for b in 0..n {
                    for d in 0..n {
                        let y = other.get(b, d);
                        if y.is_zero() {
                            continue;
                        }
                        out.data[(a * n + b) * dim + c * n + d] = x.clone() * y.clone();
                    }
                }
            }
        }
        out
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Every entry off the anti-diagonal `i + j = dim - 1` is zero.
    pub fn is_antidiagonal(&self) -> bool {
        (0..self.dim)
            .all(|i| (0..self.dim).all(|j| i + j + 1 == self.dim || self.get(i, j).is_zero()))
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn max_abs(&self) -> f64 {
        self.data
            .iter()
            .map(|v| v.to_f64().abs())
            .fold(0.0, f64::max)
    }

    /// Entrywise [`Scalar::approx_eq`], scaled by the larger matrix norm.
    pub fn approx_eq(&self, other: &Self, rel_tol: f64) -> bool {
        if self.dim != other.dim {
            return false;
        }
        if S::EXACT {
            return self == other;
        }
        let scale = self.max_abs().max(other.max_abs());
        self.data
            .iter()
            .zip(&other.data)
            .all(|(a, b)| a.approx_eq(b, rel_tol, scale))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> KMatrix<T> {
        KMatrix {
            dim: self.dim,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<S: Scalar> Index<(usize, usize)> for KMatrix<S> {
    type Output = S;

    fn index(&self, (i, j): (usize, usize)) -> &S {
        self.get(i, j)
    }
}
