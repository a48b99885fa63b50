//! Field elements the transforms are generic over.
//!
//! Two realizations exist: [`Rational`] (arbitrary precision, the reference
//! semantics) and `f64`. Every algorithm in the crate is written once against
//! [`Scalar`]; comparisons go through [`Scalar::approx_eq`], which is plain
//! equality for exact backends.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{Debug, Display};
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar.
pub type Rational = BigRational;

/// Default relative tolerance for floating-point comparisons.
pub const DEFAULT_REL_TOL: f64 = 1e-9;

pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + PartialOrd
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    /// `true` when arithmetic is closed and exact.
    const EXACT: bool;

    fn from_i64(value: i64) -> Self;

    /// `num / den`; `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;

    fn to_f64(&self) -> f64;

    fn abs(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// `self^exp` by repeated squaring.
    fn powu(&self, exp: usize) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    /// Integer power allowing negative exponents. `self` must be nonzero
    /// when `exp < 0`.
    fn powi(&self, exp: i64) -> Self {
        if exp >= 0 {
            self.powu(exp as usize)
        } else {
            Self::one() / self.powu(exp.unsigned_abs() as usize)
        }
    }

    /// Equality for exact scalars; for floats,
    /// `|a - b| <= rel_tol * max(|a|, |b|, scale)`.
    fn approx_eq(&self, other: &Self, rel_tol: f64, scale: f64) -> bool;
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }

    fn approx_eq(&self, other: &Self, _rel_tol: f64, _scale: f64) -> bool {
        self == other
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_i64(value: i64) -> Self {
        value as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn approx_eq(&self, other: &Self, rel_tol: f64, scale: f64) -> bool {
        let bound = f64::abs(*self).max(f64::abs(*other)).max(scale);
        f64::abs(self - other) <= rel_tol * bound
    }
}

/// Binomial coefficient `C(n, k)` built by the Pascal-triangle recurrence.
/// Zero when `k > n`.
pub fn binomial<S: Scalar>(n: usize, k: usize) -> S {
    if k > n {
        return S::zero();
    }
    let k = k.min(n - k);
    // row[i] holds C(r, i) for the current row r, truncated to i <= k.
    let mut row: Vec<S> = vec![S::zero(); k + 1];
    row[0] = S::one();
    for r in 1..=n {
        let upper = r.min(k);
        for i in (1..=upper).rev() {
            row[i] = row[i].clone() + row[i - 1].clone();
        }
    }
    row[k].clone()
}

/// Full Pascal triangle up to row `max_n`, for callers needing many
/// binomials at once.
#[derive(Clone, Debug)]
pub struct BinomialTable<S> {
    rows: Vec<Vec<S>>,
}

impl<S: Scalar> BinomialTable<S> {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<S>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![S::one()]);
        for r in 1..=max_n {
            let prev = &rows[r - 1];
            let mut row = Vec::with_capacity(r + 1);
            row.push(S::one());
            for i in 1..r {
                row.push(prev[i - 1].clone() + prev[i].clone());
            }
            row.push(S::one());
            rows.push(row);
        }
        BinomialTable { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `C(n, k)`, zero when `k > n`. Panics if `n` exceeds the table.
    pub fn get(&self, n: usize, k: usize) -> S {
        if k > n {
            S::zero()
        } else {
            self.rows[n][k].clone()
        }
    }

    /// Binomial with signed arguments, zero whenever either is negative or
    /// `k > n`.
    pub fn get_signed(&self, n: i64, k: i64) -> S {
        if n < 0 || k < 0 || k > n {
            S::zero()
        } else {
            self.get(n as usize, k as usize)
        }
    }
}
