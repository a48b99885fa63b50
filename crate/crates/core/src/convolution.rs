//! Linearization of products `k_l k_m` and the Krawtchouk convolution
//! `f * g`, characterized by `F(j) G(j) = sum_n (f * g)(n) k_n(j)`.
//!
//! Three independent routes compute the convolution: the closed triple sum
//! ([`convolve`]), shift operators on the Kronecker square
//! ([`convolve_via_shift`]), and transform / multiply / invert
//! ([`convolve_via_inversion`]).

use alloc::vec::Vec;

use crate::error::{check_index, Error, Result};
use crate::matrix::KMatrix;
use crate::params::Params;
use crate::scalar::{BinomialTable, Scalar};
use crate::signal::Signal;
use crate::transform::{forward_transform, inverse_with, phi_matrix};

/// Default cap on `N` for [`convolve_via_shift`]; operators there have
/// dimension `(N + 1)^2`.
pub const DEFAULT_SHIFT_CAP: usize = 64;

/// Coefficients `c_n` with `k_l k_m = sum_n c_n k_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinTable<S> {
    pub l: usize,
    pub m: usize,
    pub coeffs: Vec<S>,
}

impl<S: Scalar> LinTable<S> {
    /// `sum_n c_n k_n(j, N)`, given column `j` of `Phi`.
    pub fn evaluate(&self, column: &[S]) -> S {
        self.coeffs
            .iter()
            .zip(column)
            .fold(S::zero(), |acc, (c, k)| acc + c.clone() * k.clone())
    }
}

/// `n! / (a! b! c!)` for `a + b + c = n`, zero if any part is negative.
fn multinomial<S: Scalar>(binom: &BinomialTable<S>, a: i64, b: i64, c: i64) -> S {
    if a < 0 || b < 0 || c < 0 {
        return S::zero();
    }
    let n = a + b + c;
    binom.get_signed(n, a) * binom.get_signed(n - a, b)
}

/// General linearization coefficients: the coefficient of `k_n` is
///
/// `sum_delta n! / ((n-m+delta)! (n-l+delta)! (l+m-n-2 delta)!) C(N-n, delta)
///   (lambda (q - p))^(l+m-n-2 delta) sigma2^delta`,
///
/// skipping any term with a negative factorial argument.
pub fn linearization_coeffs<S: Scalar>(
    l: usize,
    m: usize,
    params: &Params<S>,
) -> Result<LinTable<S>> {
    let big_n = params.n();
    check_index("degree", l, big_n)?;
    check_index("degree", m, big_n)?;
    let binom = BinomialTable::<S>::new(big_n);
    let drift = params.drift();
    let sigma2 = params.sigma2();
    let (li, mi) = (l as i64, m as i64);
    let coeffs = (0..=big_n)
        .map(|n| {
            let ni = n as i64;
            (0..=(big_n - n) as i64).fold(S::zero(), |acc, delta| {
                let a = ni - mi + delta;
                let b = ni - li + delta;
                let c = li + mi - ni - 2 * delta;
                let w = multinomial(&binom, a, b, c);
                if w.is_zero() {
                    return acc;
                }
                acc + w
                    * binom.get(big_n - n, delta as usize)
                    * drift.powu(c as usize)
                    * sigma2.powu(delta as usize)
            })
        })
        .collect();
    Ok(LinTable { l, m, coeffs })
}

/// Multinomial `((l+m+n)/2)! / (((-l+m+n)/2)! ((l-m+n)/2)! ((l+m-n)/2)!)`.
/// Zero on parity or triangle-inequality violations.
pub fn triangle_function<S: Scalar>(l: i64, m: i64, n: i64) -> S {
    let perimeter = l + m + n;
    if l < 0 || m < 0 || n < 0 || perimeter % 2 != 0 {
        return S::zero();
    }
    let (a, b, c) = ((-l + m + n) / 2, (l - m + n) / 2, (l + m - n) / 2);
    if a < 0 || b < 0 || c < 0 {
        return S::zero();
    }
    let binom = BinomialTable::<S>::new((perimeter / 2) as usize);
    multinomial(&binom, a, b, c)
}

/// Symmetric-case coefficients `C(n, (l-m+n)/2) C(N-n, (l+m-n)/2)`.
///
/// The triangle form `C(N, (l+m+n)/2) Delta(l, m, n) / C(N, n)` is computed
/// alongside and must agree term by term whenever `l + m < N`.
pub fn linearization_coeffs_symmetric<S: Scalar>(
    l: usize,
    m: usize,
    big_n: usize,
) -> Result<LinTable<S>> {
    check_index("degree", l, big_n)?;
    check_index("degree", m, big_n)?;
    let binomial = symmetric_binomial_form::<S>(l, m, big_n);
    if l + m < big_n {
        let triangle = symmetric_triangle_form::<S>(l, m, big_n);
        let agree = binomial
            .iter()
            .zip(&triangle)
            .all(|(a, b)| a.approx_eq(b, crate::DEFAULT_REL_TOL, 1.0));
        if !agree {
            return Err(Error::IdentityViolated("symmetric linearization forms"));
        }
    }
    Ok(LinTable {
        l,
        m,
        coeffs: binomial,
    })
}

pub fn symmetric_binomial_form<S: Scalar>(l: usize, m: usize, big_n: usize) -> Vec<S> {
    let binom = BinomialTable::<S>::new(big_n);
    let (li, mi) = (l as i64, m as i64);
    (0..=big_n as i64)
        .map(|n| {
            if (li + mi + n) % 2 != 0 {
                return S::zero();
            }
            binom.get_signed(n, (li - mi + n) / 2)
                * binom.get_signed(big_n as i64 - n, (li + mi - n) / 2)
        })
        .collect()
}

pub fn symmetric_triangle_form<S: Scalar>(l: usize, m: usize, big_n: usize) -> Vec<S> {
    let binom = BinomialTable::<S>::new(big_n);
    let (li, mi) = (l as i64, m as i64);
    (0..=big_n as i64)
        .map(|n| {
            if (li + mi + n) % 2 != 0 {
                return S::zero();
            }
            let delta: S = triangle_function(li, mi, n);
            if delta.is_zero() {
                return S::zero();
            }
            binom.get_signed(big_n as i64, (li + mi + n) / 2) * delta / binom.get(big_n, n as usize)
        })
        .collect()
}

fn check_pair<S: Scalar>(f: &Signal<S>, g: &Signal<S>, params: &Params<S>) -> Result<()> {
    f.check_len(params)?;
    g.check_len(params)
}

/// `(f * g)(n) = sum_{alpha, beta, delta} C(n; alpha, beta, n-alpha-beta)
///   C(N-n, delta) (lambda (q-p))^(n-alpha-beta) sigma2^delta
///   f(n - beta + delta) g(n - alpha + delta)`;
/// terms whose `f` or `g` argument falls outside `0..=N` are skipped.
pub fn convolve<S: Scalar>(f: &Signal<S>, g: &Signal<S>, params: &Params<S>) -> Result<Signal<S>> {
    check_pair(f, g, params)?;
    let big_n = params.n();
    let binom = BinomialTable::<S>::new(big_n);
    let drift_pows: Vec<S> = (0..=big_n).map(|k| params.drift().powu(k)).collect();
    let sigma_pows: Vec<S> = (0..=big_n).map(|k| params.sigma2().powu(k)).collect();
    let out = (0..=big_n)
        .map(|n| {
            let mut acc = S::zero();
            for delta in 0..=big_n - n {
                let cd = binom.get(big_n - n, delta);
                for alpha in 0..=n {
                    let Some(gv) = g.at((n - alpha + delta) as i64) else {
                        continue;
                    };
                    for beta in 0..=n - alpha {
                        let gamma = n - alpha - beta;
                        if gamma > 0 && drift_pows[1].is_zero() {
                            continue;
                        }
                        let Some(fv) = f.at((n - beta + delta) as i64) else {
                            continue;
                        };
                        if fv.is_zero() || gv.is_zero() {
                            continue;
                        }
                        let w = binom.get(n, alpha) * binom.get(n - alpha, beta);
                        acc = acc
                            + w * cd.clone()
                                * drift_pows[gamma].clone()
                                * sigma_pows[delta].clone()
                                * fv.clone()
                                * gv.clone();
                    }
                }
            }
            acc
        })
        .collect();
    Ok(Signal::new(out))
}

/// Symmetric-case convolution
/// `(f * g)(n) = sum_{a, b} C(n, a) C(N-n, b) f(a + b) g(n - a + b)`.
pub fn convolve_symmetric<S: Scalar>(
    f: &Signal<S>,
    g: &Signal<S>,
    big_n: usize,
) -> Result<Signal<S>> {
    let params = Params::<S>::symmetric(big_n);
    check_pair(f, g, &params)?;
    let binom = BinomialTable::<S>::new(big_n);
    let out = (0..=big_n)
        .map(|n| {
            let mut acc = S::zero();
            for a in 0..=n {
                for b in 0..=big_n - n {
                    let (Some(fv), Some(gv)) = (f.at((a + b) as i64), g.at((n - a + b) as i64))
                    else {
                        continue;
                    };
                    acc = acc + binom.get(n, a) * binom.get(big_n - n, b) * fv.clone() * gv.clone();
                }
            }
            acc
        })
        .collect();
    Ok(Signal::new(out))
}

/// Operators on the Kronecker square driving [`convolve_via_shift`].
///
/// With `T_n = T (x) I`, `T_m = I (x) T`:
/// `tn = (I + sigma2 T_n T_m)^N` and
/// `u = (I + sigma2 T_n T_m)^-1 (T_n + T_m + lambda (q-p) T_n T_m)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvolutionKit<S> {
    pub n: usize,
    pub tn: KMatrix<S>,
    pub u: KMatrix<S>,
}

impl<S: Scalar> ConvolutionKit<S> {
    pub fn new(params: &Params<S>) -> Result<Self> {
        Self::with_cap(params, DEFAULT_SHIFT_CAP)
    }

    /// Refuses `N > cap`.
    pub fn with_cap(params: &Params<S>, cap: usize) -> Result<Self> {
        let big_n = params.n();
        if big_n > cap {
            return Err(Error::TooLarge { n: big_n, cap });
        }
        let dim = params.dim();
        let t = KMatrix::<S>::shift(dim);
        let id = KMatrix::<S>::identity(dim);
        let tn_op = t.kron(&id);
        let tm_op = id.kron(&t);
        let both = t.kron(&t);
        let sigma2 = params.sigma2();

        let big_id = KMatrix::identity(dim * dim);
        let base = big_id.add(&both.scale(&sigma2));
        // (I + s X)^-1 = sum_k (-s)^k X^k, with X^k = T^k (x) T^k nilpotent.
        let mut base_inv = big_id;
        let mut t_pow = t.clone();
        let mut coeff = -sigma2;
        for _ in 1..dim {
            base_inv = base_inv.add(&t_pow.kron(&t_pow).scale(&coeff));
            t_pow = t_pow.mul(&t);
            coeff = coeff * -params.sigma2();
        }
        let step = tn_op.add(&tm_op).add(&both.scale(&params.drift()));
        let u = base_inv.mul(&step);
        let tn = base.pow(big_n);
        Ok(ConvolutionKit { n: big_n, tn, u })
    }

    pub fn apply(&self, f: &Signal<S>, g: &Signal<S>) -> Signal<S> {
        let mut v = self.tn.mul_vec(f.kron(g).values());
        let mut out = Vec::with_capacity(self.n + 1);
        out.push(v[0].clone());
        for _ in 0..self.n {
            v = self.u.mul_vec(&v);
            out.push(v[0].clone());
        }
        Signal::new(out)
    }

    /// Top rows of `U^n T(N)` for `n = 0..=N`, stacked: an
    /// `(N + 1) x (N + 1)^2` matrix mapping `f (x) g` to `f * g`.
    pub fn top_rows(&self) -> Vec<Vec<S>> {
        let big_dim = self.tn.dim();
        let mut e0 = alloc::vec![S::zero(); big_dim];
        e0[0] = S::one();
        let mut selector = e0;
        let mut rows = Vec::with_capacity(self.n + 1);
        for k in 0..=self.n {
            if k > 0 {
                selector = self.u.vec_mul(&selector);
            }
            rows.push(self.tn.vec_mul(&selector));
        }
        rows
    }
}

/// Convolution by shift operators on the `(N + 1)^2`-dimensional Kronecker
/// square, iterated like the shift transform. Refused above
/// [`DEFAULT_SHIFT_CAP`].
pub fn convolve_via_shift<S: Scalar>(
    f: &Signal<S>,
    g: &Signal<S>,
    params: &Params<S>,
) -> Result<Signal<S>> {
    check_pair(f, g, params)?;
    Ok(ConvolutionKit::new(params)?.apply(f, g))
}

/// Convolution as `inverse_transform(F . G)`.
pub fn convolve_via_inversion<S: Scalar>(
    f: &Signal<S>,
    g: &Signal<S>,
    params: &Params<S>,
) -> Result<Signal<S>> {
    check_pair(f, g, params)?;
    let phi = phi_matrix(params);
    let big_f = Signal::new(phi.vec_mul(f.values()));
    let big_g = Signal::new(phi.vec_mul(g.values()));
    Ok(inverse_with(&phi, &big_f.hadamard(&big_g), params))
}

/// Checks `transform(f * g) = F . G` for a computed convolution.
pub fn satisfies_convolution_theorem<S: Scalar>(
    f: &Signal<S>,
    g: &Signal<S>,
    conv: &Signal<S>,
    params: &Params<S>,
    rel_tol: f64,
) -> Result<bool> {
    let lhs = forward_transform(conv, params)?;
    let rhs = forward_transform(f, params)?.hadamard(&forward_transform(g, params)?);
    Ok(lhs.approx_eq(&rhs, rel_tol))
}
