//! Polynomial hypergroups generated by three-term recurrences
//!
//! `x P_n = a_n P_{n+1} + b_n P_n + c_n P_{n-1}`, normalized so `P_n(x0) = 1`.
//! The linearization coefficients of `P_n P_m = Σ_k c(n,m,k) P_k` are computed
//! exactly; when they are all nonnegative they define the convolution
//! `δ_n * δ_m`. Exponentials on the resulting hypergroup are `n ↦ P_n(λ)` and
//! `n ↦ P_n'(λ)` is a sine function for that exponential.
//!
//! Additive functions are `n ↦ c·P_n'(x0)`. They are evaluated at the
//! normalization point `x0` rather than at `0`: only `x0` makes the
//! translate of `P_n'` split additively under the normalized table.

use std::collections::HashMap;
use std::sync::Arc;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{HypergroupError, RecurrenceError};
use crate::hypergroup::{Family, FiniteMeasure, HFunction, Hypergroup};
use crate::scalar::{ratio_string, CRat, Field, Mode, Real, Scalar, Values};

#[derive(Clone, Debug, PartialEq)]
pub struct Coefficients {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
}

#[derive(Clone, Debug, PartialEq)]
pub enum RecurrenceKind {
    /// `a_0 = 1`, `a_n = c_n = 1/2` for `n >= 1`, `b_n = 0`.
    Chebyshev,
    /// `a_0 = 1`, `a_n = q/(q+1)`, `c_n = 1/(q+1)` for `n >= 1`, `b_n = 0`.
    Cartier { q: u64 },
    /// Coefficient rows `(a_n, b_n, c_n)` listed explicitly.
    Explicit(Vec<Coefficients>),
}

/// Three-term recurrence data with normalization point `x0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Recurrence {
    name: String,
    x0: BigRational,
    kind: RecurrenceKind,
}

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

impl Recurrence {
    pub fn new(
        name: impl Into<String>,
        x0: BigRational,
        kind: RecurrenceKind,
    ) -> Result<Self, RecurrenceError> {
        if let RecurrenceKind::Cartier { q: 0 } = kind {
            return Err(RecurrenceError::Precondition("cartier preset needs q >= 1".into()));
        }
        let recurrence = Recurrence {
            name: name.into(),
            x0,
            kind,
        };
        // Presets are constant from n = 1 on, so rows 0 and 1 cover them.
        let rows = match &recurrence.kind {
            RecurrenceKind::Explicit(rows) => rows.len(),
            _ => 2,
        };
        for n in 0..rows {
            recurrence.validate_row(n)?;
        }
        Ok(recurrence)
    }

    pub fn chebyshev() -> Self {
        Self::new("chebyshev", BigRational::one(), RecurrenceKind::Chebyshev).expect("valid preset")
    }

    pub fn cartier(q: u64) -> Result<Self, RecurrenceError> {
        Self::new(format!("cartier(q={q})"), BigRational::one(), RecurrenceKind::Cartier { q })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn x0(&self) -> &BigRational {
        &self.x0
    }

    pub fn kind(&self) -> &RecurrenceKind {
        &self.kind
    }

    /// Number of explicit coefficient rows, if the recurrence is finite.
    pub fn rows_available(&self) -> Option<usize> {
        match &self.kind {
            RecurrenceKind::Explicit(rows) => Some(rows.len()),
            _ => None,
        }
    }

    fn validate_row(&self, n: usize) -> Result<(), RecurrenceError> {
        let Coefficients { a, b, c } = self.coefficients(n)?;
        if a.is_zero() {
            return Err(RecurrenceError::ZeroLeading { n });
        }
        if n == 0 && !c.is_zero() {
            return Err(RecurrenceError::NonzeroC0);
        }
        if a + b + c != self.x0 {
            return Err(RecurrenceError::RowSum { n });
        }
        Ok(())
    }

    pub fn coefficients(&self, n: usize) -> Result<Coefficients, RecurrenceError> {
        let zero = BigRational::zero;
        Ok(match &self.kind {
            RecurrenceKind::Chebyshev if n == 0 => Coefficients {
                a: BigRational::one(),
                b: zero(),
                c: zero(),
            },
            RecurrenceKind::Chebyshev => Coefficients {
                a: rat(1, 2),
                b: zero(),
                c: rat(1, 2),
            },
            RecurrenceKind::Cartier { .. } if n == 0 => Coefficients {
                a: BigRational::one(),
                b: zero(),
                c: zero(),
            },
            RecurrenceKind::Cartier { q } => {
                let q = *q as i64;
                Coefficients {
                    a: rat(q, q + 1),
                    b: zero(),
                    c: rat(1, q + 1),
                }
            }
            RecurrenceKind::Explicit(rows) => rows.get(n).cloned().ok_or(RecurrenceError::TooShort {
                needed: n + 1,
                have: rows.len(),
            })?,
        })
    }

    fn coefficient_rows(&self, count: usize) -> Result<Vec<Coefficients>, RecurrenceError> {
        (0..count).map(|n| self.coefficients(n)).collect()
    }

    /// `(P_n(z), P_n'(z))` for `n < len`, propagated through the recurrence and
    /// its derivative `P'_{k+1} = (P_k + (z - b_k) P'_k - c_k P'_{k-1}) / a_k`.
    pub fn values_and_derivatives<F: Field>(
        &self,
        len: usize,
        z: &F,
    ) -> Result<(Vec<F>, Vec<F>), RecurrenceError> {
        let rows = self.coefficient_rows(len.saturating_sub(1))?;
        let mut p = Vec::with_capacity(len);
        let mut dp = Vec::with_capacity(len);
        if len == 0 {
            return Ok((p, dp));
        }
        p.push(F::one());
        dp.push(F::zero());
        for (k, row) in rows.iter().enumerate() {
            let a = F::from_ratio(&row.a);
            let shifted = z.clone() - F::from_ratio(&row.b);
            let c = F::from_ratio(&row.c);
            let (prev, dprev) = if k == 0 {
                (F::zero(), F::zero())
            } else {
                (p[k - 1].clone(), dp[k - 1].clone())
            };
            let next = (shifted.clone() * p[k].clone() - c.clone() * prev) / a.clone();
            let dnext = (p[k].clone() + shifted * dp[k].clone() - c * dprev) / a;
            p.push(next);
            dp.push(dnext);
        }
        Ok((p, dp))
    }

    /// `P_n(z)`.
    pub fn eval_poly(&self, n: usize, z: &Scalar) -> Result<Scalar, RecurrenceError> {
        self.eval_pair(n, z).map(|(p, _)| p)
    }

    /// `P_n'(z)`.
    pub fn eval_poly_derivative(&self, n: usize, z: &Scalar) -> Result<Scalar, RecurrenceError> {
        self.eval_pair(n, z).map(|(_, dp)| dp)
    }

    fn eval_pair(&self, n: usize, z: &Scalar) -> Result<(Scalar, Scalar), RecurrenceError> {
        Ok(match z {
            Scalar::Exact(z) => {
                let (p, dp) = self.values_and_derivatives(n + 1, z)?;
                (p[n].to_scalar(), dp[n].to_scalar())
            }
            Scalar::Float(z) => {
                let (p, dp) = self.values_and_derivatives(n + 1, z)?;
                (p[n].to_scalar(), dp[n].to_scalar())
            }
        })
    }
}

/// Exact linearization coefficients `c(n,m,k)` for `n + m <= nmax`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearizationTable {
    nmax: usize,
    name: String,
    /// Keyed by `(min(n,m), max(n,m))`; entry `k` is `c(n,m,k)` for `k <= n+m`.
    rows: HashMap<(usize, usize), Vec<BigRational>>,
}

impl LinearizationTable {
    pub fn nmax(&self) -> usize {
        self.nmax
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// `c(n,m,·)` as a slice indexed by `k`, or `None` if `n + m > nmax`.
    pub fn row(&self, n: usize, m: usize) -> Option<&[BigRational]> {
        self.rows.get(&(n.min(m), n.max(m))).map(Vec::as_slice)
    }

    pub fn coefficient(&self, n: usize, m: usize, k: usize) -> Option<BigRational> {
        let row = self.row(n, m)?;
        Some(row.get(k).cloned().unwrap_or_else(BigRational::zero))
    }

    /// The polynomial hypergroup on `{0, ..., nmax}` with identity `0`.
    pub fn to_hypergroup(&self) -> Hypergroup {
        let rows = self.rows.iter().map(|(&(n, m), coeffs)| {
            let measure = FiniteMeasure::new(
                coeffs
                    .iter()
                    .enumerate()
                    .map(|(k, c)| (k, Real::Rational(c.clone()))),
            );
            (n, m, measure)
        });
        Hypergroup::new(self.nmax, 0, rows, self.name.clone()).expect("polynomial table is well formed")
    }
}

/// Runs the linearization recurrence
/// `P_{n+1} P_m = (x (P_n P_m) - b_n P_n P_m - c_n P_{n-1} P_m) / a_n`
/// row by row, for each `m` starting from the rows already known by symmetry.
pub fn linearization_table(
    recurrence: &Recurrence,
    nmax: usize,
) -> Result<LinearizationTable, RecurrenceError> {
    let coeffs = recurrence.coefficient_rows(nmax)?;
    let mut rows: HashMap<(usize, usize), Vec<BigRational>> = HashMap::new();
    for n in 0..=nmax {
        let mut unit = vec![BigRational::zero(); n + 1];
        unit[n] = BigRational::one();
        rows.insert((0, n), unit);
    }

    let times_x = |v: &[BigRational]| -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); v.len() + 1];
        for (k, vk) in v.iter().enumerate() {
            if vk.is_zero() {
                continue;
            }
            let Coefficients { a, b, c } = &coeffs[k];
            out[k + 1] += vk * a;
            out[k] += vk * b;
            if k > 0 {
                out[k - 1] += vk * c;
            }
        }
        out
    };

    let one = BigRational::one();
    let mut m = 1;
    while 2 * m <= nmax {
        // Rows (m-1, m) and (m-2, m) were produced while handling smaller m.
        let mut prev: Vec<BigRational> = if m >= 2 {
            rows[&(m - 2, m)].clone()
        } else {
            Vec::new()
        };
        let mut cur = rows[&(m - 1, m)].clone();
        for (n, Coefficients { a, b, c }) in coeffs.iter().enumerate().take(nmax - m).skip(m - 1) {
            let mut next = times_x(&cur);
            for (k, v) in cur.iter().enumerate() {
                next[k] -= v * b;
            }
            for (k, v) in prev.iter().enumerate() {
                next[k] -= v * c;
            }
            for v in next.iter_mut() {
                *v /= a;
            }
            let (rn, rm) = (n + 1, m);
            for (k, v) in next.iter().enumerate() {
                if v.is_negative() {
                    return Err(RecurrenceError::NotAHypergroup {
                        n: rn,
                        m: rm,
                        k,
                        value: ratio_string(v),
                    });
                }
                if k < rn.abs_diff(rm) && !v.is_zero() {
                    return Err(RecurrenceError::TableInvariant {
                        n: rn,
                        m: rm,
                        what: "support lower bound |n-m|",
                    });
                }
            }
            if next.iter().sum::<BigRational>() != one {
                return Err(RecurrenceError::TableInvariant {
                    n: rn,
                    m: rm,
                    what: "row sum 1",
                });
            }
            prev = std::mem::replace(&mut cur, next.clone());
            rows.insert((rm.min(rn), rm.max(rn)), next);
        }
        m += 1;
    }
    Ok(LinearizationTable {
        nmax,
        name: recurrence.name.clone(),
        rows,
    })
}

/// Which member of the polynomial families a [`PolyFamily`] evaluates.
#[derive(Clone, Debug, PartialEq)]
pub enum PolyFamilyKind {
    /// `n ↦ P_n(λ)`.
    Exponential { lambda: Scalar },
    /// `n ↦ P_n'(λ)`.
    Sine { lambda: Scalar },
    /// `n ↦ const · P_n'(x0)`.
    Additive { constant: Scalar },
}

#[derive(Clone, Debug)]
pub struct PolyFamily {
    recurrence: Arc<Recurrence>,
    kind: PolyFamilyKind,
}

impl PolyFamily {
    pub fn kind(&self) -> &PolyFamilyKind {
        &self.kind
    }

    fn values_in<F: Field>(&self, len: usize) -> Result<Vec<F>, RecurrenceError> {
        let r = &self.recurrence;
        Ok(match &self.kind {
            PolyFamilyKind::Exponential { lambda } => {
                r.values_and_derivatives(len, &lambda.to_field::<F>().expect("mode"))?.0
            }
            PolyFamilyKind::Sine { lambda } => {
                r.values_and_derivatives(len, &lambda.to_field::<F>().expect("mode"))?.1
            }
            PolyFamilyKind::Additive { constant } => {
                let c = constant.to_field::<F>().expect("mode");
                let (_, dp) = r.values_and_derivatives(len, &F::from_ratio(&r.x0))?;
                dp.into_iter().map(|v| c.clone() * v).collect()
            }
        })
    }

    fn parameter(&self) -> &Scalar {
        match &self.kind {
            PolyFamilyKind::Exponential { lambda } | PolyFamilyKind::Sine { lambda } => lambda,
            PolyFamilyKind::Additive { constant } => constant,
        }
    }
}

impl Family for PolyFamily {
    fn family_name(&self) -> &'static str {
        match self.kind {
            PolyFamilyKind::Exponential { .. } => "exponential",
            PolyFamilyKind::Sine { .. } => "sine",
            PolyFamilyKind::Additive { .. } => "additive",
        }
    }

    fn mode(&self) -> Mode {
        self.parameter().mode()
    }

    fn values(&self, len: usize) -> Result<Values, HypergroupError> {
        let short = |_| HypergroupError::DomainMismatch {
            len: self.recurrence.rows_available().map_or(0, |r| r + 1),
            expected: len,
        };
        Ok(match self.mode() {
            Mode::Exact => Values::from_field(&self.values_in::<CRat>(len).map_err(short)?),
            Mode::Float => Values::from_field(&self.values_in::<Complex64>(len).map_err(short)?),
        })
    }
}

fn poly_function(recurrence: &Recurrence, kind: PolyFamilyKind, label: String) -> HFunction {
    HFunction::family(
        label,
        Arc::new(PolyFamily {
            recurrence: Arc::new(recurrence.clone()),
            kind,
        }),
    )
}

/// The exponential `n ↦ P_n(λ)`.
pub fn exponential_fn(recurrence: &Recurrence, lambda: Scalar) -> HFunction {
    let label = format!("{} exponential λ={lambda}", recurrence.name);
    poly_function(recurrence, PolyFamilyKind::Exponential { lambda }, label)
}

/// The additive function `n ↦ const · P_n'(x0)`.
pub fn additive_fn(recurrence: &Recurrence, constant: Scalar) -> HFunction {
    let label = format!("{} additive const={constant}", recurrence.name);
    poly_function(recurrence, PolyFamilyKind::Additive { constant }, label)
}

/// The sine function `n ↦ P_n'(λ)` belonging to `exponential_fn(λ)`.
pub fn sine_fn(recurrence: &Recurrence, lambda: Scalar) -> HFunction {
    let label = format!("{} sine λ={lambda}", recurrence.name);
    poly_function(recurrence, PolyFamilyKind::Sine { lambda }, label)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FitMethod {
    /// Matched at `n = 1`.
    AtOne,
    /// Least squares over `1 <= n <= 3` (used when the `n = 1` fit divides by 0).
    LeastSquares,
}

impl FitMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            FitMethod::AtOne => "n=1",
            FitMethod::LeastSquares => "least_squares_n<=3",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Deviation {
    pub n: usize,
    /// `P_n'(λ) - const · P_n'(x0) · P_n(λ)`.
    pub difference: Scalar,
    pub modulus: f64,
}

/// Evidence that `n ↦ P_n'(λ)` is not `n ↦ const · P_n'(x0) · P_n(λ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CounterexampleReport {
    pub recurrence: String,
    pub lambda: Scalar,
    pub nmax: usize,
    pub mode: Mode,
    pub constant: Scalar,
    pub fit: FitMethod,
    pub deviations: Vec<Deviation>,
    /// Largest modulus over `2 <= n <= nmax`, with its index.
    pub max_deviation: f64,
    pub argmax: usize,
}

/// Fits the product form at `n = 1` and measures how far the sine function
/// strays from it on `2..=nmax`.
pub fn counterexample_report(
    recurrence: &Recurrence,
    lambda: &Scalar,
    nmax: usize,
) -> Result<CounterexampleReport, RecurrenceError> {
    if nmax < 3 {
        return Err(RecurrenceError::Precondition("nmax must be at least 3".into()));
    }
    match lambda {
        Scalar::Exact(l) => counterexample_in::<CRat>(recurrence, l.clone(), lambda, nmax),
        Scalar::Float(l) => counterexample_in::<Complex64>(recurrence, *l, lambda, nmax),
    }
}

fn counterexample_in<F: Field>(
    recurrence: &Recurrence,
    lambda: F,
    lambda_scalar: &Scalar,
    nmax: usize,
) -> Result<CounterexampleReport, RecurrenceError> {
    let x0 = F::from_ratio(&recurrence.x0);
    let coincides = if F::is_exact() {
        lambda == x0
    } else {
        (lambda.clone() - x0.clone()).norm() <= 1e-12 * (1.0 + x0.norm())
    };
    if coincides {
        return Err(RecurrenceError::Precondition(
            "lambda equals x0, where both forms coincide".into(),
        ));
    }
    let (p, dp) = recurrence.values_and_derivatives(nmax + 1, &lambda)?;
    let (_, dp0) = recurrence.values_and_derivatives(nmax + 1, &x0)?;
    let target = |n: usize| dp[n].clone();
    let basis = |n: usize| dp0[n].clone() * p[n].clone();

    let (constant, fit) = if !basis(1).is_zero() {
        (target(1) / basis(1), FitMethod::AtOne)
    } else {
        let (num, den) = (1..=3).fold((F::zero(), F::zero()), |(num, den), n| {
            (
                num + basis(n).conj() * target(n),
                den + basis(n).conj() * basis(n),
            )
        });
        if den.is_zero() {
            return Err(RecurrenceError::DegenerateFit(
                "P_n'(x0) P_n(λ) vanishes for n = 1, 2, 3".into(),
            ));
        }
        (num / den, FitMethod::LeastSquares)
    };

    let deviations: Vec<Deviation> = (1..=nmax)
        .map(|n| {
            let difference = target(n) - constant.clone() * basis(n);
            Deviation {
                n,
                modulus: difference.norm(),
                difference: difference.to_scalar(),
            }
        })
        .collect();
    let (argmax, max_deviation) = deviations
        .iter()
        .filter(|d| d.n >= 2)
        .fold((2, f64::NEG_INFINITY), |best, d| {
            if d.modulus > best.1 {
                (d.n, d.modulus)
            } else {
                best
            }
        });
    Ok(CounterexampleReport {
        recurrence: recurrence.name.clone(),
        lambda: lambda_scalar.clone(),
        nmax,
        mode: F::MODE,
        constant: constant.to_scalar(),
        fit,
        deviations,
        max_deviation,
        argmax,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> Scalar {
        Scalar::int(n)
    }

    #[test]
    fn chebyshev_evaluation() {
        let r = Recurrence::chebyshev();
        assert_eq!(r.eval_poly(2, &int(0)).unwrap(), int(-1));
        assert_eq!(r.eval_poly(0, &int(5)).unwrap(), int(1));
        assert_eq!(r.eval_poly_derivative(0, &int(5)).unwrap(), int(0));
        assert_eq!(r.eval_poly_derivative(3, &int(1)).unwrap(), int(9));
        for z in [-3, 0, 2, 7] {
            assert_eq!(r.eval_poly_derivative(1, &int(z)).unwrap(), int(1));
        }
        for n in 0..=50 {
            assert_eq!(r.eval_poly(n, &int(1)).unwrap(), int(1));
        }
    }

    #[test]
    fn cartier_is_normalized() {
        let r = Recurrence::cartier(2).unwrap();
        for n in 0..=50 {
            assert_eq!(r.eval_poly(n, &int(1)).unwrap(), int(1));
        }
        assert!(Recurrence::cartier(0).is_err());
    }

    #[test]
    fn chebyshev_linearization_rows() {
        let t = linearization_table(&Recurrence::chebyshev(), 16).unwrap();
        let half = rat(1, 2);
        for n in 1..=8 {
            for m in 1..=8 {
                let row = t.row(n, m).unwrap();
                for (k, c) in row.iter().enumerate() {
                    let expected = if k == n + m || k == n.abs_diff(m) {
                        half.clone()
                    } else {
                        BigRational::zero()
                    };
                    assert_eq!(c, &expected, "c({n},{m},{k})");
                }
            }
        }
        for m in 0..=16 {
            for k in 0..=m {
                let expected = if k == m { BigRational::one() } else { BigRational::zero() };
                assert_eq!(t.coefficient(0, m, k).unwrap(), expected);
            }
        }
        assert!(t.row(9, 8).is_none());
    }

    #[test]
    fn shifted_recurrence_is_not_a_hypergroup() {
        let mut rows = vec![Coefficients {
            a: rat(1, 2),
            b: rat(1, 2),
            c: rat(0, 1),
        }];
        rows.extend((1..10).map(|_| Coefficients {
            a: rat(1, 2),
            b: rat(0, 1),
            c: rat(1, 2),
        }));
        let r = Recurrence::new("shifted", BigRational::one(), RecurrenceKind::Explicit(rows)).unwrap();
        let err = linearization_table(&r, 6).unwrap_err();
        // P_1^2 = P_2 - P_1 + 1.
        assert_eq!(
            err,
            RecurrenceError::NotAHypergroup {
                n: 1,
                m: 1,
                k: 1,
                value: "-1/1".into()
            }
        );
    }

    #[test]
    fn invalid_recurrences_are_rejected() {
        let bad_sum = vec![Coefficients {
            a: rat(1, 1),
            b: rat(1, 1),
            c: rat(0, 1),
        }];
        assert_eq!(
            Recurrence::new("bad", BigRational::one(), RecurrenceKind::Explicit(bad_sum)).unwrap_err(),
            RecurrenceError::RowSum { n: 0 }
        );
        let zero_a = vec![Coefficients {
            a: rat(0, 1),
            b: rat(1, 1),
            c: rat(0, 1),
        }];
        assert_eq!(
            Recurrence::new("bad", BigRational::one(), RecurrenceKind::Explicit(zero_a)).unwrap_err(),
            RecurrenceError::ZeroLeading { n: 0 }
        );
        assert_eq!(
            Recurrence::new("bad", rat(2, 1), RecurrenceKind::Chebyshev).unwrap_err(),
            RecurrenceError::RowSum { n: 0 }
        );
    }

    #[test]
    fn explicit_recurrence_too_short_for_table() {
        let rows = vec![
            Coefficients {
                a: rat(1, 1),
                b: rat(0, 1),
                c: rat(0, 1),
            };
            1
        ];
        let r = Recurrence::new("short", BigRational::one(), RecurrenceKind::Explicit(rows)).unwrap();
        assert_eq!(
            linearization_table(&r, 4).unwrap_err(),
            RecurrenceError::TooShort { needed: 2, have: 1 }
        );
    }

    #[test]
    fn family_values_at_identity() {
        let r = Recurrence::chebyshev();
        assert_eq!(exponential_fn(&r, int(2)).eval(0).unwrap(), int(1));
        assert_eq!(sine_fn(&r, int(2)).eval(0).unwrap(), int(0));
        assert_eq!(additive_fn(&r, int(1)).eval(0).unwrap(), int(0));
        // λ = x0 gives the constant exponential.
        let ones = exponential_fn(&r, int(1)).values(10).unwrap();
        assert_eq!(ones, HFunction::constant(int(1)).values(10).unwrap());
        // Chebyshev additive function is n^2.
        let a = additive_fn(&r, int(1));
        for n in 0..10 {
            assert_eq!(a.eval(n).unwrap(), int((n * n) as i64));
        }
    }

    #[test]
    fn counterexample_chebyshev() {
        let report = counterexample_report(&Recurrence::chebyshev(), &int(2), 5).unwrap();
        assert_eq!(report.constant, Scalar::ratio(1, 2));
        assert_eq!(report.fit, FitMethod::AtOne);
        assert_eq!(report.deviations[0].difference, int(0));
        assert_eq!(report.deviations[1].n, 2);
        assert_eq!(report.deviations[1].difference, int(-6));
        assert_eq!(report.deviations[1].modulus, 6.0);
        assert!(report.max_deviation >= 6.0);
    }

    #[test]
    fn counterexample_rejects_x0_and_short_range() {
        let r = Recurrence::chebyshev();
        assert!(matches!(
            counterexample_report(&r, &int(1), 5),
            Err(RecurrenceError::Precondition(_))
        ));
        assert!(matches!(
            counterexample_report(&r, &int(2), 2),
            Err(RecurrenceError::Precondition(_))
        ));
    }

    #[test]
    fn counterexample_falls_back_when_p1_vanishes() {
        // P_1(0) = 0 for Chebyshev.
        let report = counterexample_report(&Recurrence::chebyshev(), &int(0), 6).unwrap();
        assert_eq!(report.fit, FitMethod::LeastSquares);
        assert!(report.max_deviation > 0.0);
    }
}
