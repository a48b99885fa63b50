//! Krawtchouk polynomial operator calculus.
//!
//! Krawtchouk polynomials `k_n(j, N)` come from the generating function
//! `(1 + lambda q v)^(N - j) (1 - lambda p v)^j = sum_n v^n k_n(j, N)`.
//! Arranged as the matrix `Phi[n][j] = k_n(j, N)` they give a discrete
//! transform on functions over `{0, ..., N}` with an exact inverse and a
//! convolution that the transform turns into a pointwise product.
//!
//! Everything is generic over [`Scalar`]: [`Rational`] for exact results,
//! `f64` for speed. The crate is `no_std` and needs only `alloc`.
//!
//! ```
//! use krawtchouk_core::{forward_transform, inverse_transform, Params, Rational, Scalar, Signal};
//!
//! let params = Params::new(4, Rational::from_ratio(1, 4), Rational::from_i64(2)).unwrap();
//! let f = Signal::new((0..5).map(|n| Rational::from_i64(n)).collect());
//! let big_f = forward_transform(&f, &params).unwrap();
//! assert_eq!(inverse_transform(&big_f, &params).unwrap(), f);
//! ```

#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod bases;
pub mod convolution;
mod error;
pub mod matrix;
mod params;
pub mod polynomial;
pub mod scalar;
mod signal;
pub mod transform;
pub mod verify;

pub use bases::{
    antidiagonal_factorization, binomial_image, dual_transform, row_binomial_image, BinomialBasis,
};
pub use convolution::{
    convolve, convolve_symmetric, convolve_via_inversion, convolve_via_shift, linearization_coeffs,
    linearization_coeffs_symmetric, triangle_function, ConvolutionKit, LinTable,
};
pub use error::{Error, Result};
pub use matrix::KMatrix;
pub use params::Params;
pub use polynomial::{
    eval_k, eval_k_symmetric, gen_coeffs, squared_norm, weight_matrices, WeightMatrices,
};
pub use scalar::{Rational, Scalar, DEFAULT_REL_TOL};
pub use signal::Signal;
pub use transform::{
    build_shift_kit, forward_transform, inverse_transform, phi_matrix, shift_transform, ShiftKit,
};
