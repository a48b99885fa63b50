//! Dual (column-action) transforms and binomial bases in which the
//! Krawtchouk matrix becomes anti-diagonal.

use alloc::vec::Vec;

use crate::error::{check_index, Error, Result};
use crate::matrix::KMatrix;
use crate::params::Params;
use crate::polynomial::expect_symmetric;
use crate::scalar::{BinomialTable, Scalar, DEFAULT_REL_TOL};
use crate::signal::Signal;
use crate::transform::{forward_transform, phi_matrix};

/// `F(n) = sum_j k_n(j) f(j)`, i.e. `F = Phi f`.
pub fn dual_transform<S: Scalar>(f: &Signal<S>, params: &Params<S>) -> Result<Signal<S>> {
    f.check_len(params)?;
    Ok(phi_matrix(params).mul_signal(f))
}

/// Weighted binomial function `f_m(j) = C(m, j) p^(m-j) q^j`.
pub fn binomial_function<S: Scalar>(m: usize, params: &Params<S>) -> Result<Signal<S>> {
    check_index("basis index", m, params.n())?;
    let binom = BinomialTable::<S>::new(params.n());
    let (p, q) = (params.p(), params.q());
    Ok(Signal::from_fn(params.dim(), |j| {
        if j > m {
            S::zero()
        } else {
            binom.get(m, j) * p.powu(m - j) * q.powu(j)
        }
    }))
}

/// Dual transform of [`binomial_function`], checked against the closed form
/// `F_m(n) = C(N - m, n) (lambda q)^n`.
pub fn binomial_image<S: Scalar>(m: usize, params: &Params<S>) -> Result<Signal<S>> {
    let f = binomial_function(m, params)?;
    let image = dual_transform(&f, params)?;
    let big_n = params.n();
    let binom = BinomialTable::<S>::new(big_n);
    let lq = params.lambda_q();
    let closed = Signal::from_fn(params.dim(), |n| binom.get(big_n - m, n) * lq.powu(n));
    if !image.approx_eq(&closed, DEFAULT_REL_TOL) {
        return Err(Error::IdentityViolated("dual binomial image"));
    }
    Ok(image)
}

/// `f_i(n) = C(N - n, N - i) p^(i-n) lambda^(-n)`, zero for `n > i`.
pub fn row_binomial_function<S: Scalar>(i: usize, params: &Params<S>) -> Result<Signal<S>> {
    let big_n = params.n();
    check_index("basis index", i, big_n)?;
    let binom = BinomialTable::<S>::new(big_n);
    let inv_lambda = S::one() / params.lambda().clone();
    Ok(Signal::from_fn(params.dim(), |n| {
        if n > i {
            S::zero()
        } else {
            binom.get(big_n - n, big_n - i) * params.p().powu(i - n) * inv_lambda.powu(n)
        }
    }))
}

/// Forward (row-action) transform of [`row_binomial_function`], checked
/// against `F_i(j) = C(N - j, i)`.
pub fn row_binomial_image<S: Scalar>(i: usize, params: &Params<S>) -> Result<Signal<S>> {
    let f = row_binomial_function(i, params)?;
    let image = forward_transform(&f, params)?;
    let big_n = params.n();
    let binom = BinomialTable::<S>::new(big_n);
    let closed = Signal::from_fn(params.dim(), |j| binom.get(big_n - j, i));
    if !image.approx_eq(&closed, DEFAULT_REL_TOL) {
        return Err(Error::IdentityViolated("row binomial image"));
    }
    Ok(image)
}

/// Pascal basis `B[j][m] = C(m, j)` (upper triangular), anti-identity `J`,
/// and `D = diag(1, 2, ..., 2^N)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BinomialBasis<S> {
    pub pascal: KMatrix<S>,
    pub j: KMatrix<S>,
    pub d: KMatrix<S>,
}

impl<S: Scalar> BinomialBasis<S> {
    pub fn new(big_n: usize) -> Self {
        let dim = big_n + 1;
        let binom = BinomialTable::<S>::new(big_n);
        BinomialBasis {
            pascal: KMatrix::from_fn(dim, |row, col| binom.get(col, row)),
            j: KMatrix::exchange(dim),
            d: KMatrix::diagonal((0..dim).map(|k| S::from_i64(2).powu(k)).collect()),
        }
    }

    /// `B^-1[j][m] = (-1)^(m+j) C(m, j)`.
    pub fn pascal_inverse(&self) -> KMatrix<S> {
        KMatrix::from_fn(self.pascal.dim(), |row, col| {
            let v = self.pascal.get(row, col).clone();
            if (row + col) % 2 == 0 {
                v
            } else {
                -v
            }
        })
    }

    /// `J D`, the symmetric Krawtchouk matrix in the binomial basis.
    pub fn jd(&self) -> KMatrix<S> {
        self.j.mul(&self.d)
    }

    /// `J B J`.
    pub fn reflected(&self) -> KMatrix<S> {
        self.j.mul(&self.pascal).mul(&self.j)
    }

    /// `B^-1 Phi B`.
    pub fn conjugate(&self, phi: &KMatrix<S>) -> KMatrix<S> {
        self.pascal_inverse().mul(phi).mul(&self.pascal)
    }
}

/// Builds the Pascal basis for the symmetric case and checks both
/// `Phi B = B J D` and `J B J Phi = D B J`.
pub fn antidiagonal_factorization<S: Scalar>(params: &Params<S>) -> Result<BinomialBasis<S>> {
    expect_symmetric(
        params,
        "the binomial-basis factorization needs p = 1/2, lambda = 2",
    )?;
    let basis = BinomialBasis::new(params.n());
    let phi = phi_matrix(params);
    let lhs = phi.mul(&basis.pascal);
    let rhs = basis.pascal.mul(&basis.jd());
    if !lhs.approx_eq(&rhs, DEFAULT_REL_TOL) {
        return Err(Error::IdentityViolated("Phi B = B J D"));
    }
    let lhs = basis.reflected().mul(&phi);
    let rhs = basis.d.mul(&basis.pascal).mul(&basis.j);
    if !lhs.approx_eq(&rhs, DEFAULT_REL_TOL) {
        return Err(Error::IdentityViolated("J B J Phi = D B J"));
    }
    Ok(basis)
}

/// Largest index with a nonzero value, `None` for the zero signal.
pub fn support_end<S: Scalar>(f: &Signal<S>) -> Option<usize> {
    f.values().iter().rposition(|v| !v.is_zero())
}

/// Columns of the Pascal basis as signals.
pub fn pascal_columns<S: Scalar>(big_n: usize) -> Vec<Signal<S>> {
    let basis = BinomialBasis::<S>::new(big_n);
    (0..=big_n)
        .map(|m| Signal::new(basis.pascal.col(m)))
        .collect()
}
