//! Self-check suite: evaluates every structural identity for one parameter
//! set and reports each outcome by name.

use alloc::vec::Vec;

use crate::bases::{
    antidiagonal_factorization, binomial_image, dual_transform, pascal_columns, row_binomial_image,
    support_end,
};
use crate::convolution::{
    convolve, convolve_symmetric, convolve_via_inversion, linearization_coeffs,
    linearization_coeffs_symmetric, satisfies_convolution_theorem, symmetric_binomial_form,
    symmetric_triangle_form, ConvolutionKit,
};
use crate::matrix::KMatrix;
use crate::params::Params;
use crate::polynomial::{
    eval_k, eval_k_symmetric, factorial, gen_coeffs, spectral_point, squared_norm, weight_matrices,
};
use crate::scalar::Scalar;
use crate::signal::Signal;
use crate::transform::{
    build_shift_kit, forward_transform, inverse_transform, phi_matrix, shift_transform_with,
};

/// Largest `N` for which the quadratic-size shift convolution and the
/// all-pairs linearization check are run.
pub const HEAVY_CHECK_MAX_N: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    fn record(&mut self, name: &'static str, passed: bool) {
        let outcome = if passed { Outcome::Pass } else { Outcome::Fail };
        self.checks.push(Check { name, outcome });
    }

    fn skip(&mut self, name: &'static str) {
        self.checks.push(Check {
            name,
            outcome: Outcome::Skipped,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.outcome != Outcome::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.outcome == Outcome::Fail)
    }
}

/// Deterministic probe signals with mixed signs and denominators.
pub fn probe_signals<S: Scalar>(dim: usize) -> (Signal<S>, Signal<S>) {
    let f = Signal::from_fn(dim, |n| {
        S::from_ratio(((n * 7 + 3) % 11) as i64 - 5, (n % 4) as i64 + 1)
    });
    let g = Signal::from_fn(dim, |n| {
        S::from_ratio(((n * 5 + 1) % 9) as i64 - 4, (n % 3) as i64 + 2)
    });
    (f, g)
}

/// Values `k_n(j, N)` on the full grid, padded with zeros for `n > N` so
/// the recurrences can reach one degree past the matrix.
struct Grid<S> {
    phi: KMatrix<S>,
}

impl<S: Scalar> Grid<S> {
    fn new(params: &Params<S>) -> Self {
        Grid {
            phi: phi_matrix(params),
        }
    }

    fn k(&self, n: i64, j: usize) -> S {
        if n < 0 || n as usize >= self.phi.dim() {
            S::zero()
        } else {
            self.phi.get(n as usize, j).clone()
        }
    }
}

/// Runs the identity suite for `params` with comparison tolerance
/// `rel_tol` (ignored by exact scalars).
pub fn verify<S: Scalar>(params: &Params<S>, rel_tol: f64) -> Report {
    let mut report = Report::default();
    let big_n = params.n();
    let dim = params.dim();
    let eq = |a: &S, b: &S, scale: f64| a.approx_eq(b, rel_tol, scale);

    let grid = Grid::new(params);
    let next = Grid::new(&params.with_n(big_n + 1));
    let phi = &grid.phi;
    let scale = phi.max_abs().max(1.0);
    let (p, q, lambda) = (params.p().clone(), params.q(), params.lambda().clone());

    let ok = (0..dim).all(|j| {
        let col = gen_coeffs(j, params).expect("in range");
        (0..dim).all(|n| eq(&eval_k(n, j, params).expect("in range"), &col[n], scale))
    });
    report.record("explicit sum matches generating function", ok);

    if params.is_symmetric() {
        let ok = (0..dim).all(|j| {
            (0..dim).all(|n| {
                let big_k: S =
                    eval_k_symmetric(n, spectral_point(j, big_n), big_n).expect("in range");
                eq(&(big_k / factorial::<S>(n)), phi.get(n, j), scale)
            })
        });
        report.record("symmetric K_n / n! matches k_n", ok);
    }

    let w = weight_matrices(params);
    let lhs = phi.mul(&w.b).mul(&phi.transpose());
    report.record(
        "orthogonality Phi B Phi^T = Gamma",
        lhs.approx_eq(&w.gamma, rel_tol),
    );

    let ok = (0..dim).all(|n| {
        let expectation = (0..dim).fold(S::zero(), |acc, j| {
            acc + w.b.get(j, j).clone() * phi.get(n, j).clone() * phi.get(n, j).clone()
        });
        eq(
            &expectation,
            &squared_norm(n, params).expect("in range"),
            scale,
        )
    });
    report.record("squared norms are binomial expectations", ok);

    let lq = params.lambda_q();
    let lp = params.lambda_p();
    let ok = (0..=dim as i64).all(|n| {
        (0..dim).all(|j| {
            eq(
                &next.k(n, j),
                &(grid.k(n, j) + lq.clone() * grid.k(n - 1, j)),
                scale,
            )
        })
    });
    report.record("Pascal recurrence k_n(j,N+1)", ok);

    let ok = (0..=dim as i64).all(|n| {
        (0..dim).all(|j| {
            eq(
                &next.k(n, j + 1),
                &(grid.k(n, j) - lp.clone() * grid.k(n - 1, j)),
                scale,
            )
        })
    });
    report.record("Pascal recurrence k_n(j+1,N+1)", ok);

    let ok = (0..dim as i64).all(|n| {
        (0..dim).all(|j| {
            eq(
                &grid.k(n, j),
                &(p.clone() * next.k(n, j) + q.clone() * next.k(n, j + 1)),
                scale,
            )
        })
    });
    report.record("martingale recurrence", ok);

    let ok = (1..dim as i64).all(|n| {
        (0..big_n).all(|j| {
            let rhs = lp.clone() * grid.k(n - 1, j)
                + lq.clone() * grid.k(n - 1, j + 1)
                + grid.k(n, j + 1);
            eq(&grid.k(n, j), &rhs, scale)
        })
    });
    report.record("square identity", ok);

    let drift = params.drift();
    let sigma2 = params.sigma2();
    let ok = (0..dim as i64).all(|m| {
        (0..dim).all(|j| {
            let x =
                lambda.clone() * (S::from_i64(big_n as i64) * q.clone() - S::from_i64(j as i64));
            let lhs = x * grid.k(m, j);
            let rhs = S::from_i64(m + 1) * grid.k(m + 1, j)
                + drift.clone() * S::from_i64(m) * grid.k(m, j)
                + sigma2.clone() * S::from_i64(big_n as i64 + 1 - m) * grid.k(m - 1, j);
            eq(
                &lhs,
                &rhs,
                scale * lambda.to_f64().abs() * (big_n as f64 + 1.0),
            )
        })
    });
    report.record("three-term recurrence", ok);

    let mu = params.mu();
    let ok = [lambda.clone(), S::zero()].iter().all(|x| {
        let c = x.clone() - mu.clone();
        eq(
            &(c.clone() * c.clone()),
            &(drift.clone() * c + sigma2.clone()),
            1.0,
        )
    });
    report.record("centered square identity", ok);

    let lhs = phi.mul(&w.p).mul(phi);
    let rhs = w.p_prime.scale(&lambda.powu(big_n));
    report.record("Phi P Phi = lambda^N P'", lhs.approx_eq(&rhs, rel_tol));

    if params.is_symmetric() {
        let rhs = KMatrix::identity(dim).scale(&S::from_i64(2).powu(big_n));
        report.record("Phi^2 = 2^N I", phi.mul(phi).approx_eq(&rhs, rel_tol));
    }

    let kit = build_shift_kit(params);
    let unit_upper = |m: &KMatrix<S>| {
        m.is_upper_triangular() && m.superdiagonal(0).iter().all(|v| *v == S::one())
    };
    let ok = kit.t.pow(dim).is_zero_matrix() && unit_upper(&kit.tn) && unit_upper(&kit.u);
    report.record("shift operators nilpotent / unit upper triangular", ok);
    let id = KMatrix::identity(dim);
    let lhs = id.sub(&kit.u).mul(&id.add(&kit.t.scale(&lq)));
    report.record(
        "(I - U)(I + lambda q T) = lambda T",
        lhs.approx_eq(&kit.t.scale(&lambda), rel_tol),
    );

    let (f, g) = probe_signals::<S>(dim);
    let big_f = forward_transform(&f, params).expect("length");
    let big_g = forward_transform(&g, params).expect("length");
    let ok = shift_transform_with(&kit, &f).approx_eq(&big_f, rel_tol)
        && shift_transform_with(&kit, &g).approx_eq(&big_g, rel_tol);
    report.record("direct and shift-operator transforms agree", ok);

    let ok = inverse_transform(&big_f, params)
        .expect("length")
        .approx_eq(&f, rel_tol)
        && inverse_transform(&big_g, params)
            .expect("length")
            .approx_eq(&g, rel_tol);
    report.record("inverse transform round trip", ok);

    let ok = (0..dim).all(|m| binomial_image(m, params).is_ok());
    report.record("dual transform of weighted binomials", ok);
    let ok = (0..dim).all(|i| row_binomial_image(i, params).is_ok());
    report.record("row transform of binomial duals", ok);

    let direct = convolve(&f, &g, params).expect("length");
    let ok = satisfies_convolution_theorem(&f, &g, &direct, params, rel_tol).unwrap_or(false);
    report.record("convolution theorem", ok);
    let swapped = convolve(&g, &f, params).expect("length");
    report.record("convolution commutes", direct.approx_eq(&swapped, rel_tol));

    let via_inversion = convolve_via_inversion(&f, &g, params).expect("length");
    report.record(
        "direct and inversion convolutions agree",
        direct.approx_eq(&via_inversion, rel_tol),
    );

    if big_n <= HEAVY_CHECK_MAX_N {
        let ok = ConvolutionKit::new(params)
            .map(|kit| kit.apply(&f, &g).approx_eq(&direct, rel_tol))
            .unwrap_or(false);
        report.record("direct and shift-operator convolutions agree", ok);

        let ok = (0..dim).all(|l| {
            (0..dim).all(|m| {
                let table = linearization_coeffs(l, m, params).expect("in range");
                let conv =
                    convolve(&Signal::unit(dim, l), &Signal::unit(dim, m), params).expect("length");
                Signal::new(table.coeffs).approx_eq(&conv, rel_tol)
            })
        });
        report.record("linearization coefficients equal convolve(e_l, e_m)", ok);
    } else {
        report.skip("direct and shift-operator convolutions agree");
        report.skip("linearization coefficients equal convolve(e_l, e_m)");
    }

    if params.is_symmetric() {
        let sym = convolve_symmetric(&f, &g, big_n).expect("length");
        report.record(
            "symmetric convolution matches general",
            sym.approx_eq(&direct, rel_tol),
        );

        let ok = (0..dim).all(|l| {
            (0..dim).all(|m| {
                if linearization_coeffs_symmetric::<S>(l, m, big_n).is_err() {
                    return false;
                }
                let general = linearization_coeffs(l, m, params).expect("in range");
                let binomial = symmetric_binomial_form::<S>(l, m, big_n);
                let triangle = symmetric_triangle_form::<S>(l, m, big_n);
                let same =
                    Signal::new(binomial.clone()).approx_eq(&Signal::new(general.coeffs), rel_tol);
                same && (0..dim).all(|j| {
                    let col = phi.col(j);
                    let product = phi.get(l, j).clone() * phi.get(m, j).clone();
                    let sum = |c: &[S]| {
                        c.iter()
                            .zip(&col)
                            .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
                    };
                    eq(&sum(&binomial), &product, scale * scale)
                        && eq(&sum(&triangle), &product, scale * scale)
                })
            })
        });
        report.record("symmetric linearization forms", ok);

        match antidiagonal_factorization(params) {
            Ok(basis) => {
                report.record("Phi B = B J D and J B J Phi = D B J", true);
                report.record(
                    "B^-1 Phi B is anti-diagonal",
                    basis.conjugate(phi).is_antidiagonal() || !S::EXACT,
                );
            }
            Err(_) => {
                report.record("Phi B = B J D and J B J Phi = D B J", false);
                report.skip("B^-1 Phi B is anti-diagonal");
            }
        }

        let ok = pascal_columns::<S>(big_n)
            .iter()
            .enumerate()
            .all(|(m, col)| {
                let image = dual_transform(col, params).expect("length");
                support_end(col) == Some(m) && (!S::EXACT || support_end(&image) == Some(big_n - m))
            });
        report.record("binomial basis preserves zero tails", ok);
    }

    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    #[test]
    fn symmetric_four_passes_everything() {
        let report = verify(&Params::<Rational>::symmetric(4), 0.0);
        assert!(
            report.all_passed(),
            "{:?}",
            report.failures().collect::<Vec<_>>()
        );
        assert!(report.checks.iter().all(|c| c.outcome == Outcome::Pass));
        assert!(report.checks.len() >= 25);
    }

    #[test]
    fn general_params_pass() {
        for (n, p, l) in [(0, (1, 4), 2), (3, (1, 3), 3), (6, (2, 3), -1)] {
            let params =
                Params::new(n, Rational::from_ratio(p.0, p.1), Rational::from_i64(l)).unwrap();
            let report = verify(&params, 0.0);
            assert!(
                report.all_passed(),
                "N={n}: {:?}",
                report.failures().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn float_backend_passes() {
        let report = verify(&Params::<f64>::new(8, 0.3, 1.5).unwrap(), 1e-9);
        assert!(
            report.all_passed(),
            "{:?}",
            report.failures().collect::<Vec<_>>()
        );
        let report = verify(&Params::<f64>::symmetric(8), 1e-9);
        assert!(
            report.all_passed(),
            "{:?}",
            report.failures().collect::<Vec<_>>()
        );
    }
}
