//! The linearization DP and the recurrence evaluators against symbolic
//! polynomial arithmetic in the monomial basis.

mod common;

use num_complex::Complex;
use num_rational::BigRational;
use num_traits::Zero;

use common::*;
use hypertrig_core::polynomial::{Coefficients, Recurrence, RecurrenceKind};
use hypertrig_core::scalar::CRat;
use hypertrig_core::{linearization_table, RecurrenceError, Scalar};

/// Legendre polynomials normalized by `P_n(1) = 1`.
fn legendre(rows: usize) -> Recurrence {
    let coeffs = (0..rows as i64)
        .map(|n| Coefficients {
            a: rat(n + 1, 2 * n + 1),
            b: BigRational::zero(),
            c: rat(n, 2 * n + 1),
        })
        .collect();
    Recurrence::new("legendre", rat(1, 1), RecurrenceKind::Explicit(coeffs)).unwrap()
}

fn check_against_symbolic(r: &Recurrence, nmax: usize) {
    let table = linearization_table(r, nmax).unwrap();
    let basis = monomial_basis(r, nmax);
    for n in 0..=nmax {
        for m in 0..=nmax - n {
            let expected = symbolic_linearization(&basis, n, m);
            for (k, coef) in expected.iter().enumerate() {
                let got = table.coefficient(n, m, k).unwrap_or_else(BigRational::zero);
                assert_eq!(got, *coef, "{} c({n},{m},{k})", r.name());
            }
            for k in expected.len()..=nmax {
                assert!(table.coefficient(n, m, k).unwrap_or_else(BigRational::zero).is_zero());
            }
        }
    }
}

#[test]
fn chebyshev_dp_matches_symbolic_products() {
    check_against_symbolic(&Recurrence::chebyshev(), 14);
}

#[test]
fn cartier_dp_matches_symbolic_products() {
    for q in 1..=4 {
        check_against_symbolic(&Recurrence::cartier(q).unwrap(), 12);
    }
}

#[test]
fn legendre_dp_matches_symbolic_products() {
    check_against_symbolic(&legendre(12), 12);
}

#[test]
fn chebyshev_product_formula() {
    let (_, h) = chebyshev_table(20);
    let half = hypertrig_core::Real::Rational(rat(1, 2));
    for n in 1..=10 {
        for m in n..=20 - n {
            let mu = h.convolve(n, m).unwrap();
            let expected = if n == m {
                hypertrig_core::FiniteMeasure::new([(0, half.clone()), (2 * n, half.clone())])
            } else {
                hypertrig_core::FiniteMeasure::new([(m - n, half.clone()), (m + n, half.clone())])
            };
            assert_eq!(mu, &expected, "T_{n} T_{m}");
        }
    }
}

#[test]
fn shifted_recurrence_has_a_negative_coefficient() {
    // x P_n = P_{n+1}/2 + P_n/2 ... with b_n > 0 pushes mass below zero.
    let coeffs = (0..6)
        .map(|n| Coefficients {
            a: rat(1, 2),
            b: if n == 0 { rat(1, 2) } else { rat(0, 1) },
            c: if n == 0 { rat(0, 1) } else { rat(1, 2) },
        })
        .collect();
    let r = Recurrence::new("shifted", rat(1, 1), RecurrenceKind::Explicit(coeffs)).unwrap();
    let basis = monomial_basis(&r, 2);
    let sym = symbolic_linearization(&basis, 1, 1);
    assert!(sym.iter().any(|c| c < &BigRational::zero()));
    match linearization_table(&r, 5) {
        Err(RecurrenceError::NotAHypergroup { n, m, k, value }) => {
            let at = &sym[k];
            assert_eq!((n, m), (1, 1));
            assert_eq!(value, format!("{}/{}", at.numer(), at.denom()));
        }
        other => panic!("expected NotAHypergroup, got {other:?}"),
    }
}

#[test]
fn recurrence_evaluation_matches_horner() {
    let mut rng = rng(17);
    for r in [Recurrence::chebyshev(), Recurrence::cartier(3).unwrap(), legendre(25)] {
        let basis = monomial_basis(&r, 24);
        for _ in 0..5 {
            let z = grid_point(&mut rng);
            let Scalar::Exact(zc) = &z else { unreachable!() };
            for (n, p) in basis.iter().enumerate() {
                let expected = poly_eval(p, zc);
                assert_eq!(r.eval_poly(n, &z).unwrap(), Scalar::Exact(expected), "{} P_{n}({z})", r.name());
                // P_n' from the differentiated monomial coefficients.
                let dp: Vec<BigRational> = p
                    .iter()
                    .enumerate()
                    .skip(1)
                    .map(|(d, c)| c * BigRational::from_integer(d.into()))
                    .collect();
                let expected = if dp.is_empty() {
                    CRat::zero()
                } else {
                    poly_eval(&dp, zc)
                };
                assert_eq!(
                    r.eval_poly_derivative(n, &z).unwrap(),
                    Scalar::Exact(expected),
                    "{} P_{n}'({z})",
                    r.name()
                );
            }
        }
    }
}

#[test]
fn normalization_at_x0() {
    for r in [Recurrence::chebyshev(), Recurrence::cartier(5).unwrap(), legendre(30)] {
        let x0 = Scalar::Exact(Complex::new(r.x0().clone(), BigRational::zero()));
        for n in 0..30 {
            assert_eq!(r.eval_poly(n, &x0).unwrap(), Scalar::int(1));
        }
    }
}

#[test]
fn derivative_matches_central_difference() {
    let r = Recurrence::cartier(3).unwrap();
    for n in 1..=30 {
        let z = num_complex::Complex64::new(1.7, 0.4);
        let exact = r.eval_poly_derivative(n, &Scalar::float(z.re, z.im)).unwrap().to_c64();
        let fd = central_difference(&r, n, z, 1e-6);
        assert!((exact - fd).norm() <= 1e-5 * exact.norm(), "n={n}: {exact} vs {fd}");
    }
}
