//! The Krawtchouk matrix `Phi`, the forward transform (row-vector action
//! `F^T = f^T Phi`) by direct product and by shift-operator iteration, and
//! exact inversion through `Phi^-1 = lambda^-N P Phi P'^-1`.

use alloc::vec::Vec;

use crate::error::Result;
use crate::matrix::KMatrix;
use crate::params::Params;
use crate::polynomial::gen_coeffs;
use crate::scalar::Scalar;
use crate::signal::Signal;

/// `Phi[n][j] = k_n(j, N)`: row index is the degree, column index the point.
pub fn phi_matrix<S: Scalar>(params: &Params<S>) -> KMatrix<S> {
    let dim = params.dim();
    let cols: Vec<Signal<S>> = (0..dim)
        .map(|j| gen_coeffs(j, params).expect("column index within range"))
        .collect();
    KMatrix::from_fn(dim, |n, j| cols[j][n].clone())
}

/// `F(j) = sum_n f(n) k_n(j, N)`.
pub fn forward_transform<S: Scalar>(f: &Signal<S>, params: &Params<S>) -> Result<Signal<S>> {
    f.check_len(params)?;
    Ok(apply_phi(f, &phi_matrix(params)))
}

fn apply_phi<S: Scalar>(f: &Signal<S>, phi: &KMatrix<S>) -> Signal<S> {
    Signal::new(phi.vec_mul(f.values()))
}

/// Operators driving the shift-operator transform.
///
/// With `T` the shift, `tn = (I + lambda q T)^N` and
/// `u = (I + lambda q T)^-1 (I - lambda p T)`. Both are upper triangular with
/// unit diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct ShiftKit<S> {
    pub t: KMatrix<S>,
    pub tn: KMatrix<S>,
    pub u: KMatrix<S>,
}

impl<S: Scalar> ShiftKit<S> {
    /// The matrices `U^j T(N)` for `j = 0..=N`. The top row of the `j`-th
    /// one is column `j` of `Phi`.
    pub fn iterates(&self) -> Vec<KMatrix<S>> {
        let n = self.t.dim() - 1;
        let mut out = Vec::with_capacity(n + 1);
        let mut cur = self.tn.clone();
        for _ in 0..n {
            let next = self.u.mul(&cur);
            out.push(cur);
            cur = next;
        }
        out.push(cur);
        out
    }
}

/// `U` is built from its expansion `I - lambda T + lambda^2 q T^2 - ...`,
/// i.e. superdiagonal `d >= 1` holds `-lambda (-lambda q)^(d-1)`; no
/// inversion is performed.
pub fn build_shift_kit<S: Scalar>(params: &Params<S>) -> ShiftKit<S> {
    let dim = params.dim();
    let t = KMatrix::shift(dim);
    let base = KMatrix::identity(dim).add(&t.scale(&params.lambda_q()));
    let tn = base.pow(params.n());

    let lambda = params.lambda().clone();
    let ratio = -params.lambda_q();
    let mut coeffs = Vec::with_capacity(dim);
    coeffs.push(S::one());
    let mut c = -lambda;
    for _ in 1..dim {
        coeffs.push(c.clone());
        c = c * ratio.clone();
    }
    let u = KMatrix::upper_toeplitz(dim, &coeffs);
    ShiftKit { t, tn, u }
}

/// Forward transform by iterating `T(N) f, U T(N) f, ..., U^N T(N) f` and
/// reading off the top entry of each vector.
pub fn shift_transform<S: Scalar>(f: &Signal<S>, params: &Params<S>) -> Result<Signal<S>> {
    f.check_len(params)?;
    let kit = build_shift_kit(params);
    Ok(shift_transform_with(&kit, f))
}

pub fn shift_transform_with<S: Scalar>(kit: &ShiftKit<S>, f: &Signal<S>) -> Signal<S> {
    let dim = kit.tn.dim();
    let mut out = Vec::with_capacity(dim);
    let mut v = kit.tn.mul_vec(f.values());
    out.push(v[0].clone());
    for _ in 1..dim {
        v = kit.u.mul_vec(&v);
        out.push(v[0].clone());
    }
    Signal::new(out)
}

/// Recovers `f` from `F` through `Phi^-1 = lambda^-N P Phi P'^-1`: scale by
/// `(lambda p)^(N-j)`, transform, then scale by `lambda^-N (lambda p)^-n`.
/// In the symmetric case both scalings are trivial and this is
/// `2^-N Phi`.
pub fn inverse_transform<S: Scalar>(big_f: &Signal<S>, params: &Params<S>) -> Result<Signal<S>> {
    big_f.check_len(params)?;
    let phi = phi_matrix(params);
    Ok(inverse_with(&phi, big_f, params))
}

pub(crate) fn inverse_with<S: Scalar>(
    phi: &KMatrix<S>,
    big_f: &Signal<S>,
    params: &Params<S>,
) -> Signal<S> {
    let big_n = params.n();
    let lambda_n_inv = S::one() / params.lambda().powu(big_n);
    if params.is_symmetric() {
        let h = apply_phi(big_f, phi);
        return Signal::from_fn(h.len(), |n| h[n].clone() * lambda_n_inv.clone());
    }
    let lp = params.lambda_p();
    let scaled = Signal::from_fn(big_f.len(), |j| big_f[j].clone() * lp.powu(big_n - j));
    let h = apply_phi(&scaled, phi);
    let lp_inv = S::one() / lp;
    Signal::from_fn(h.len(), |n| {
        h[n].clone() * lambda_n_inv.clone() * lp_inv.powu(n)
    })
}

/// The matrix `lambda^-N P Phi P'^-1`.
pub fn inverse_phi_matrix<S: Scalar>(params: &Params<S>) -> KMatrix<S> {
    let big_n = params.n();
    let phi = phi_matrix(params);
    let lp = params.lambda_p();
    let lambda_n_inv = S::one() / params.lambda().powu(big_n);
    KMatrix::from_fn(params.dim(), |i, j| {
        phi.get(i, j).clone() * lp.powi(big_n as i64 - i as i64 - j as i64) * lambda_n_inv.clone()
    })
}
