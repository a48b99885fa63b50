use alloc::vec;
use alloc::vec::Vec;
use core::ops::Index;

use crate::error::{Error, Result};
use crate::params::Params;
use crate::scalar::Scalar;

/// A function on `{0, 1, ..., N}`, stored as its `N + 1` values.
#[derive(Clone, Debug, PartialEq)]
pub struct Signal<S>(Vec<S>);

impl<S: Scalar> Signal<S> {
    pub fn new(values: Vec<S>) -> Self {
        Signal(values)
    }

    pub fn zeros(len: usize) -> Self {
        Signal(vec![S::zero(); len])
    }

    /// Indicator of `k` on a signal of length `len`.
    pub fn unit(len: usize, k: usize) -> Self {
        let mut s = Self::zeros(len);
        s.0[k] = S::one();
        s
    }

    pub fn from_fn(len: usize, f: impl FnMut(usize) -> S) -> Self {
        Signal((0..len).map(f).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[S] {
        &self.0
    }

    pub fn into_values(self) -> Vec<S> {
        self.0
    }

    pub fn iter(&self) -> core::slice::Iter<'_, S> {
        self.0.iter()
    }

    /// Value at a signed index, `None` outside `0..len`.
    pub fn at(&self, index: i64) -> Option<&S> {
        if index < 0 {
            None
        } else {
            self.0.get(index as usize)
        }
    }

    pub fn check_len(&self, params: &Params<S>) -> Result<()> {
        if self.len() != params.dim() {
            Err(Error::LengthMismatch {
                expected: params.dim(),
                found: self.len(),
            })
        } else {
            Ok(())
        }
    }

    /// Pointwise product.
    pub fn hadamard(&self, other: &Self) -> Self {
        Signal(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.clone() * b.clone())
                .collect(),
        )
    }

    /// Kronecker product, index `(a, b)` at `a * other.len() + b`.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.len() * other.len());
        for a in &self.0 {
            for b in &other.0 {
                out.push(a.clone() * b.clone());
            }
        }
        Signal(out)
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|v| v.to_f64().abs()).fold(0.0, f64::max)
    }

    /// Entrywise [`Scalar::approx_eq`] with the vector's magnitude as scale.
    pub fn approx_eq(&self, other: &Self, rel_tol: f64) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let scale = self.max_abs().max(other.max_abs());
        self.0
            .iter()
            .zip(&other.0)
            .all(|(a, b)| a.approx_eq(b, rel_tol, scale))
    }
}

impl<S> Index<usize> for Signal<S> {
    type Output = S;

    fn index(&self, index: usize) -> &S {
        &self.0[index]
    }
}

impl<S> From<Vec<S>> for Signal<S> {
    fn from(values: Vec<S>) -> Self {
        Signal(values)
    }
}
