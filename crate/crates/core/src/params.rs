use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Parameters of the underlying Bernoulli walk: `n` steps, success
/// probability `p`, jump size `lambda`.
///
/// The standard model takes values `lambda` and `0`, so the mean is
/// `mu = lambda p` and the variance `sigma2 = lambda^2 p q`.
#[derive(Clone, Debug, PartialEq)]
pub struct Params<S> {
    n: usize,
    p: S,
    lambda: S,
}

impl<S: Scalar> Params<S> {
    /// Rejects `p` outside (0, 1) and `lambda == 0`: both make the
    /// variance vanish and the norm matrix singular.
    pub fn new(n: usize, p: S, lambda: S) -> Result<Self> {
        if !(p > S::zero() && p < S::one()) {
            return Err(Error::ProbabilityOutOfRange);
        }
        if lambda.is_zero() {
            return Err(Error::ZeroLambda);
        }
        if !S::EXACT && !lambda.to_f64().is_finite() {
            return Err(Error::ZeroLambda);
        }
        Ok(Params { n, p, lambda })
    }

    /// The symmetric "signs" walk: `p = 1/2`, `lambda = 2`.
    pub fn symmetric(n: usize) -> Self {
        Params {
            n,
            p: S::from_ratio(1, 2),
            lambda: S::from_i64(2),
        }
    }

    /// Same `p` and `lambda`, different `n`.
    pub fn with_n(&self, n: usize) -> Self {
        Params {
            n,
            p: self.p.clone(),
            lambda: self.lambda.clone(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Signal length `N + 1`.
    pub fn dim(&self) -> usize {
        self.n + 1
    }

    pub fn p(&self) -> &S {
        &self.p
    }

    pub fn q(&self) -> S {
        S::one() - self.p.clone()
    }

    pub fn lambda(&self) -> &S {
        &self.lambda
    }

    pub fn mu(&self) -> S {
        self.lambda.clone() * self.p.clone()
    }

    pub fn sigma2(&self) -> S {
        self.lambda.clone() * self.lambda.clone() * self.p.clone() * self.q()
    }

    /// `lambda (q - p)`, the drift coefficient in the linearization formulas.
    pub fn drift(&self) -> S {
        self.lambda.clone() * (self.q() - self.p.clone())
    }

    pub fn lambda_q(&self) -> S {
        self.lambda.clone() * self.q()
    }

    pub fn lambda_p(&self) -> S {
        self.mu()
    }

    pub fn is_symmetric(&self) -> bool {
        self.p == S::from_ratio(1, 2) && self.lambda == S::from_i64(2)
    }
}
