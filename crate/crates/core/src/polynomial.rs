//! Krawtchouk polynomials `k_n(j, N)` and the diagonal weight matrices of
//! their orthogonality relations.
//!
//! `k_n(j, N)` is the coefficient of `v^n` in
//! `(1 + lambda q v)^(N - j) (1 - lambda p v)^j`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{check_index, Error, Result};
use crate::matrix::KMatrix;
use crate::params::Params;
use crate::scalar::{BinomialTable, Scalar};
use crate::signal::Signal;

/// `k_n(j, N)` by the explicit alternating binomial sum
/// `lambda^n sum_i C(N-j, n-i) C(j, i) (-1)^i p^i q^(n-i)`.
pub fn eval_k<S: Scalar>(n: usize, j: usize, params: &Params<S>) -> Result<S> {
    let big_n = params.n();
    check_index("degree", n, big_n)?;
    check_index("point", j, big_n)?;
    let binom = BinomialTable::<S>::new(big_n);
    let p = params.p();
    let q = params.q();
    let mut sum = S::zero();
    for i in 0..=n {
        let c = binom.get(big_n - j, n - i) * binom.get(j, i);
        if c.is_zero() {
            continue;
        }
        let term = c * p.powu(i) * q.powu(n - i);
        sum = if i % 2 == 0 { sum + term } else { sum - term };
    }
    Ok(params.lambda().powu(n) * sum)
}

/// Symmetric-case polynomial `K_n(x, N) = n! k_n(j, N)` with `x = N - 2j`,
/// from `x K_n = K_(n+1) + n (N + 1 - n) K_(n-1)`, `K_0 = 1`, `K_1 = x`.
///
/// Any integer `x` is accepted; the identities relating `K_n` to `k_n` are
/// only guaranteed on the spectrum `x in {-N, -N + 2, ..., N}`.
pub fn eval_k_symmetric<S: Scalar>(n: usize, x: i64, big_n: usize) -> Result<S> {
    check_index("degree", n, big_n)?;
    let x = S::from_i64(x);
    let mut prev = S::one();
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = x.clone();
    for m in 1..n {
        let c = S::from_i64((m * (big_n + 1 - m)) as i64);
        let next = x.clone() * cur.clone() - c * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Coefficient vector `(k_0(j, N), ..., k_N(j, N))`, obtained by multiplying
/// out the two binomial factors of the generating function. This is column
/// `j` of the Krawtchouk matrix.
pub fn gen_coeffs<S: Scalar>(j: usize, params: &Params<S>) -> Result<Signal<S>> {
    let big_n = params.n();
    check_index("point", j, big_n)?;
    let up = params.lambda_q();
    let down = -params.lambda_p();
    let mut coeffs: Vec<S> = vec![S::zero(); big_n + 1];
    coeffs[0] = S::one();
    let factors = core::iter::repeat(&up)
        .take(big_n - j)
        .chain(core::iter::repeat(&down).take(j));
    for (deg, a) in factors.enumerate() {
        // multiply the degree-`deg` polynomial by (1 + a v)
        for i in (1..=deg + 1).rev() {
            coeffs[i] = coeffs[i].clone() + a.clone() * coeffs[i - 1].clone();
        }
    }
    Ok(Signal::new(coeffs))
}

/// `||k_n||^2 = C(N, n) sigma2^n`.
pub fn squared_norm<S: Scalar>(n: usize, params: &Params<S>) -> Result<S> {
    check_index("degree", n, params.n())?;
    Ok(crate::scalar::binomial::<S>(params.n(), n) * params.sigma2().powu(n))
}

/// The diagonal matrices `B` (binomial distribution), `Gamma` (squared
/// norms), `P` and `P'` (inversion scalings).
#[derive(Clone, Debug, PartialEq)]
pub struct WeightMatrices<S> {
    pub b: KMatrix<S>,
    pub gamma: KMatrix<S>,
    pub p: KMatrix<S>,
    pub p_prime: KMatrix<S>,
}

/// `B_jj = C(N, j) p^(N-j) q^j`, `Gamma_nn = C(N, n) sigma2^n`,
/// `P_jj = (lambda p)^(N-j)`, `P'_jj = (lambda p)^j`.
pub fn weight_matrices<S: Scalar>(params: &Params<S>) -> WeightMatrices<S> {
    let big_n = params.n();
    let binom = BinomialTable::<S>::new(big_n);
    let (p, q) = (params.p().clone(), params.q());
    let sigma2 = params.sigma2();
    let lp = params.lambda_p();
    let b = (0..=big_n)
        .map(|j| binom.get(big_n, j) * p.powu(big_n - j) * q.powu(j))
        .collect();
    let gamma = (0..=big_n)
        .map(|n| binom.get(big_n, n) * sigma2.powu(n))
        .collect();
    let pm = (0..=big_n).map(|j| lp.powu(big_n - j)).collect();
    let pp = (0..=big_n).map(|j| lp.powu(j)).collect();
    WeightMatrices {
        b: KMatrix::diagonal(b),
        gamma: KMatrix::diagonal(gamma),
        p: KMatrix::diagonal(pm),
        p_prime: KMatrix::diagonal(pp),
    }
}

/// `n!` as a scalar.
pub(crate) fn factorial<S: Scalar>(n: usize) -> S {
    (1..=n).fold(S::one(), |acc, k| acc * S::from_i64(k as i64))
}

/// Converts a symmetric-case point `j` to its spectral value `x = N - 2j`.
pub fn spectral_point(j: usize, big_n: usize) -> i64 {
    big_n as i64 - 2 * j as i64
}

/// Inverse of [`spectral_point`]; `None` off the spectrum.
pub fn spectral_index(x: i64, big_n: usize) -> Option<usize> {
    let n = big_n as i64;
    if x < -n || x > n || (n - x) % 2 != 0 {
        None
    } else {
        Some(((n - x) / 2) as usize)
    }
}

pub(crate) fn expect_symmetric<S: Scalar>(params: &Params<S>, what: &'static str) -> Result<()> {
    if params.is_symmetric() {
        Ok(())
    } else {
        Err(Error::UnsupportedParams(what))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn r(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn quarter_n4() -> Params<Rational> {
        Params::new(4, r(1, 4), r(2, 1)).unwrap()
    }

    #[test]
    fn degree_zero_and_one() {
        let params = Params::new(5, r(1, 3), r(3, 1)).unwrap();
        for j in 0..=5 {
            assert_eq!(eval_k(0, j, &params).unwrap(), r(1, 1));
            let expected = r(3, 1) * (r(5, 1) * params.q() - r(j as i64, 1));
            assert_eq!(eval_k(1, j, &params).unwrap(), expected);
        }
    }

    #[test]
    fn quarter_n4_values() {
        let params = quarter_n4();
        assert_eq!(eval_k(2, 0, &params).unwrap(), r(27, 2));
        assert_eq!(eval_k(4, 4, &params).unwrap(), r(1, 16));
        assert_eq!(eval_k(4, 1, &params).unwrap(), r(-27, 16));
    }

    #[test]
    fn out_of_range_indices() {
        let params = quarter_n4();
        assert!(matches!(
            eval_k(5, 0, &params),
            Err(Error::IndexOutOfRange { what: "degree", .. })
        ));
        assert!(matches!(
            eval_k(0, 5, &params),
            Err(Error::IndexOutOfRange { what: "point", .. })
        ));
        assert!(gen_coeffs(5, &params).is_err());
        assert!(squared_norm(5, &params).is_err());
        assert!(eval_k_symmetric::<Rational>(3, 0, 2).is_err());
    }

    #[test]
    fn symmetric_low_degrees() {
        for big_n in 4..9usize {
            let nn = big_n as i64;
            for x in -12..=12i64 {
                let k2: Rational = eval_k_symmetric(2, x, big_n).unwrap();
                let k3: Rational = eval_k_symmetric(3, x, big_n).unwrap();
                let k4: Rational = eval_k_symmetric(4, x, big_n).unwrap();
                assert_eq!(k2, r(x * x - nn, 1));
                assert_eq!(k3, r(x * x * x + (2 - 3 * nn) * x, 1));
                assert_eq!(
                    k4,
                    r(x.pow(4) + (8 - 6 * nn) * x * x + 3 * nn * nn - 6 * nn, 1)
                );
            }
        }
    }

    #[test]
    fn symmetric_matches_general_on_spectrum() {
        for big_n in 0..9usize {
            let params = Params::<Rational>::symmetric(big_n);
            for j in 0..=big_n {
                let x = spectral_point(j, big_n);
                assert_eq!(spectral_index(x, big_n), Some(j));
                for n in 0..=big_n {
                    let big_k: Rational = eval_k_symmetric(n, x, big_n).unwrap();
                    assert_eq!(
                        big_k / factorial::<Rational>(n),
                        eval_k(n, j, &params).unwrap()
                    );
                }
            }
        }
        assert_eq!(spectral_index(1, 4), None);
        assert_eq!(spectral_index(6, 4), None);
    }

    #[test]
    fn gen_coeffs_examples() {
        let params = Params::new(2, r(1, 4), r(2, 1)).unwrap();
        assert_eq!(
            gen_coeffs(1, &params).unwrap().values(),
            [r(1, 1), r(1, 1), r(-3, 4)]
        );
        let params = Params::new(6, r(2, 3), r(-3, 1)).unwrap();
        let col0 = gen_coeffs(0, &params).unwrap();
        for n in 0..=6 {
            let expected = crate::scalar::binomial::<Rational>(6, n) * params.lambda_q().powu(n);
            assert_eq!(col0[n], expected);
        }
    }

    #[test]
    fn squared_norm_examples() {
        let params = Params::new(6, r(1, 3), r(2, 1)).unwrap();
        assert_eq!(squared_norm(0, &params).unwrap(), r(1, 1));
        let sym = Params::<Rational>::symmetric(7);
        for n in 0..=7 {
            assert_eq!(
                squared_norm(n, &sym).unwrap(),
                crate::scalar::binomial::<Rational>(7, n)
            );
        }
    }

    #[test]
    fn weight_matrix_shapes() {
        let w = weight_matrices(&Params::new(0, r(1, 4), r(2, 1)).unwrap());
        for m in [&w.b, &w.gamma, &w.p, &w.p_prime] {
            assert_eq!(*m, KMatrix::identity(1));
        }
        let params = quarter_n4();
        let w = weight_matrices(&params);
        let total = (0..=4).fold(r(0, 1), |acc, j| acc + w.b.get(j, j).clone());
        assert_eq!(total, r(1, 1));
        let half = r(1, 2);
        for j in 0..=4 {
            assert_eq!(*w.p.get(j, j), half.powu(4 - j));
            assert_eq!(*w.p_prime.get(j, j), half.powu(j));
        }
        assert!(w.b.is_diagonal() && w.gamma.is_diagonal());
    }
}
