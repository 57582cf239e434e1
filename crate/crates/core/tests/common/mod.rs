//! Independent oracles and seeded generators shared by the integration tests.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hypertrig_core::polynomial::Recurrence;
use hypertrig_core::scalar::{CRat, Values};
use hypertrig_core::{HFunction, Hypergroup, Scalar};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Point of the grid `(Z/4 + i Z/4) ∩ [-3, 3]²`.
pub fn grid_point(rng: &mut ChaCha8Rng) -> Scalar {
    let re = rng.random_range(-12i64..=12);
    let im = rng.random_range(-12i64..=12);
    Scalar::complex_ratio((re, 4), (im, 4))
}

pub fn nonzero_grid_point(rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let p = grid_point(rng);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Grid point avoiding the listed values.
pub fn grid_point_except(rng: &mut ChaCha8Rng, avoid: &[Scalar]) -> Scalar {
    loop {
        let p = grid_point(rng);
        if !avoid.contains(&p) {
            return p;
        }
    }
}

pub fn uniform_complex(rng: &mut ChaCha8Rng, radius: f64) -> Complex64 {
    Complex64::new(rng.random_range(-radius..radius), rng.random_range(-radius..radius))
}

/// `c · f` as a value table of length `len`.
pub fn scaled(f: &HFunction, c: &Scalar, len: usize) -> HFunction {
    let values = match (f.values(len).unwrap(), c) {
        (Values::Exact(v), Scalar::Exact(c)) => Values::Exact(v.into_iter().map(|z| z * c.clone()).collect()),
        (values, c) => {
            let c = c.to_c64();
            let v: Vec<Complex64> = values.to_field::<Complex64>().unwrap();
            Values::Float(v.into_iter().map(|z| z * c).collect())
        }
    };
    HFunction::table(format!("{c} * {}", f.label()), values)
}

/// Relative distance `|a - b| / max(1, |b|)`.
pub fn rel_dist(a: &Scalar, b: &Scalar) -> f64 {
    (a.to_c64() - b.to_c64()).norm() / b.norm().max(1.0)
}

pub fn dist(a: &Scalar, b: &Scalar) -> f64 {
    (a.to_c64() - b.to_c64()).norm()
}

/// Polynomial in the monomial basis, lowest degree first.
pub type Poly = Vec<BigRational>;

fn trim(mut p: Poly) -> Poly {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Monomial coefficients of `P_0, ..., P_n`, expanded symbolically.
pub fn monomial_basis(r: &Recurrence, n: usize) -> Vec<Poly> {
    let mut basis: Vec<Poly> = vec![vec![BigRational::one()]];
    for k in 0..n {
        let row = r.coefficients(k).unwrap();
        let pk = &basis[k];
        let mut next = vec![BigRational::zero(); pk.len() + 1];
        for (d, coef) in pk.iter().enumerate() {
            next[d + 1] += coef;
            next[d] -= &row.b * coef;
        }
        if k > 0 {
            for (d, coef) in basis[k - 1].iter().enumerate() {
                next[d] -= &row.c * coef;
            }
        }
        let next = next.into_iter().map(|c| c / &row.a).collect();
        basis.push(trim(next));
    }
    basis
}

/// Coefficients of `p` in the basis `P_0, P_1, ...` by peeling leading terms.
pub fn expand_in_basis(p: &Poly, basis: &[Poly]) -> Vec<BigRational> {
    let mut rest = p.clone();
    let mut out = vec![BigRational::zero(); p.len()];
    for k in (0..p.len()).rev() {
        let lead = &basis[k][k];
        let alpha = &rest[k] / lead;
        for (d, coef) in basis[k].iter().enumerate() {
            rest[d] -= &alpha * coef;
        }
        out[k] = alpha;
    }
    assert!(rest.iter().all(Zero::is_zero), "expansion left a remainder");
    out
}

/// `P_n P_m` re-expanded in the orthogonal basis.
pub fn symbolic_linearization(basis: &[Poly], n: usize, m: usize) -> Vec<BigRational> {
    expand_in_basis(&poly_mul(&basis[n], &basis[m]), basis)
}

/// Horner evaluation of a monomial polynomial at a complex rational.
pub fn poly_eval(p: &Poly, z: &CRat) -> CRat {
    p.iter().rev().fold(CRat::zero(), |acc, c| acc * z.clone() + Complex::new(c.clone(), BigRational::zero()))
}

/// Central difference `(P_n(z + h) - P_n(z - h)) / 2h` in float arithmetic.
pub fn central_difference(r: &Recurrence, n: usize, z: Complex64, h: f64) -> Complex64 {
    let at = |w: Complex64| r.eval_poly(n, &Scalar::float(w.re, w.im)).unwrap().to_c64();
    (at(z + h) - at(z - h)) / (2.0 * h)
}

pub fn chebyshev_table(nmax: usize) -> (Recurrence, Hypergroup) {
    let r = Recurrence::chebyshev();
    let h = hypertrig_core::linearization_table(&r, nmax).unwrap().to_hypergroup();
    (r, h)
}

pub fn cartier_table(q: u64, nmax: usize) -> (Recurrence, Hypergroup) {
    let r = Recurrence::cartier(q).unwrap();
    let h = hypertrig_core::linearization_table(&r, nmax).unwrap().to_hypergroup();
    (r, h)
}
