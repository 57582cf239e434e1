//! Constructors for every solution family of the two addition theorems.
//!
//! Each builder validates its hypotheses, materializes `f` and `g` as value
//! tables over the ground set, and confirms the resulting pair solves its
//! equation before returning it.

use num_complex::Complex64;

use super::classify::CaseTag;
use super::{
    is_exponential_with, is_m_sine_with, residual_dispatch, Check, EvalOptions, Equation, Residual,
};
use crate::error::SolutionError;
use crate::hypergroup::{select_mode, HFunction, Hypergroup};
use crate::scalar::{CRat, Field, Mode, Scalar};

/// A pair `(f, g)` together with the equation it solves.
#[derive(Clone, Debug)]
pub struct SolutionPair {
    pub equation: Equation,
    pub case: CaseTag,
    pub f: HFunction,
    pub g: HFunction,
    pub mode: Mode,
    pub residual: Residual,
    pub notes: Vec<String>,
}

fn require(check: Check, name: &str) -> Result<(), SolutionError> {
    if check.holds {
        Ok(())
    } else {
        let detail = check.reason.map(|r| format!(" ({r})")).unwrap_or_default();
        Err(SolutionError::PreconditionFailed {
            check: format!("{name}{detail}"),
            residual: check.residual.max_abs,
        })
    }
}

fn require_exponential(h: &Hypergroup, m: &HFunction, opts: &EvalOptions, name: &str) -> Result<(), SolutionError> {
    require(is_exponential_with(h, m, opts)?, &format!("{name} is an exponential"))
}

fn require_nonzero_fn(h: &Hypergroup, f: &HFunction, opts: &EvalOptions) -> Result<(), SolutionError> {
    if super::vanishes(h, f, opts)? {
        return Err(SolutionError::PreconditionFailed {
            check: "f is not identically zero".into(),
            residual: 0.0,
        });
    }
    Ok(())
}

fn scalar_is_zero(s: &Scalar, opts: &EvalOptions) -> bool {
    match s {
        Scalar::Exact(z) if !opts.force_float => Field::is_zero(z),
        other => other.norm() <= opts.tol.atol,
    }
}

fn scalars_equal(a: &Scalar, b: &Scalar, opts: &EvalOptions) -> bool {
    match (a, b) {
        (Scalar::Exact(x), Scalar::Exact(y)) if !opts.force_float => x == y,
        _ => (a.to_c64() - b.to_c64()).norm() <= opts.tol.atol * (1.0 + a.norm().max(b.norm())),
    }
}

fn pair_mode(h: &Hypergroup, fns: &[&HFunction], scalars: &[&Scalar], opts: &EvalOptions) -> Mode {
    if select_mode(h, fns, opts.force_float) == Mode::Exact && scalars.iter().all(|s| s.is_exact()) {
        Mode::Exact
    } else {
        Mode::Float
    }
}

fn values<F: Field>(h: &Hypergroup, f: &HFunction) -> Result<Vec<F>, SolutionError> {
    Ok(f.field_values::<F>(h.size())?.expect("mode selected from inputs"))
}

fn finish(
    h: &Hypergroup,
    equation: Equation,
    case: CaseTag,
    f: HFunction,
    g: HFunction,
    opts: &EvalOptions,
    notes: Vec<String>,
) -> Result<SolutionPair, SolutionError> {
    let residual = residual_dispatch(h, equation, &f, Some(&g), opts)?;
    if !residual.pass {
        return Err(SolutionError::InternalInconsistency(format!(
            "{} pair fails its own equation (residual {:e})",
            case.as_str(),
            residual.max_abs
        )));
    }
    let mode = residual.mode;
    Ok(SolutionPair {
        equation,
        case,
        f,
        g,
        mode,
        residual,
        notes,
    })
}

/// `g = M` an exponential and `f` an `M`-sine function.
pub fn build_t1_i(h: &Hypergroup, m: &HFunction, f: &HFunction, opts: &EvalOptions) -> Result<SolutionPair, SolutionError> {
    require_exponential(h, m, opts, "M")?;
    require_nonzero_fn(h, f, opts)?;
    require(is_m_sine_with(h, f, m, opts)?, "f is an M-sine function")?;
    finish(h, Equation::SineCosine, CaseTag::T1I, f.clone(), m.clone(), opts, Vec::new())
}

pub(crate) fn t1_ii_in<F: Field>(m: &[F], c: &F) -> (Vec<F>, Vec<F>) {
    let two = F::from_i64(2);
    let f = m.iter().map(|v| v.clone() / (two.clone() * c.clone())).collect();
    let g = m.iter().map(|v| v.clone() / two.clone()).collect();
    (f, g)
}

/// `f = M/(2c)`, `g = M/2`.
pub fn build_t1_ii(h: &Hypergroup, m: &HFunction, c: &Scalar, opts: &EvalOptions) -> Result<SolutionPair, SolutionError> {
    require_exponential(h, m, opts, "M")?;
    if scalar_is_zero(c, opts) {
        return Err(SolutionError::PreconditionFailed {
            check: "c != 0".into(),
            residual: 0.0,
        });
    }
    let (f, g) = match pair_mode(h, &[m], &[c], opts) {
        Mode::Exact => {
            let (f, g) = t1_ii_in(&values::<CRat>(h, m)?, &c.to_field().unwrap());
            (HFunction::from_field("f", &f), HFunction::from_field("g", &g))
        }
        Mode::Float => {
            let (f, g) = t1_ii_in(&values::<Complex64>(h, m)?, &c.to_field().unwrap());
            (HFunction::from_field("f", &f), HFunction::from_field("g", &g))
        }
    };
    finish(h, Equation::SineCosine, CaseTag::T1II, f, g, opts, Vec::new())
}

pub(crate) fn t1_iii_in<F: Field>(m: &[F], n: &[F], c: &F) -> (Vec<F>, Vec<F>) {
    let two = F::from_i64(2);
    let f = m
        .iter()
        .zip(n)
        .map(|(a, b)| (a.clone() - b.clone()) / (two.clone() * c.clone()))
        .collect();
    let g = m
        .iter()
        .zip(n)
        .map(|(a, b)| (a.clone() + b.clone()) / two.clone())
        .collect();
    (f, g)
}

fn require_distinct(h: &Hypergroup, m: &HFunction, n: &HFunction, opts: &EvalOptions) -> Result<(), SolutionError> {
    let equal = match select_mode(h, &[m, n], opts.force_float) {
        Mode::Exact => values::<CRat>(h, m)? == values::<CRat>(h, n)?,
        Mode::Float => values::<Complex64>(h, m)?
            .iter()
            .zip(values::<Complex64>(h, n)?)
            .all(|(a, b)| (a - b).norm() <= opts.tol.bound(a.norm().max(b.norm()))),
    };
    if equal {
        Err(SolutionError::DegenerateEqual)
    } else {
        Ok(())
    }
}

/// `f = (M - N)/(2c)`, `g = (M + N)/2`.
pub fn build_t1_iii(
    h: &Hypergroup,
    m: &HFunction,
    n: &HFunction,
    c: &Scalar,
    opts: &EvalOptions,
) -> Result<SolutionPair, SolutionError> {
    require_exponential(h, m, opts, "M")?;
    require_exponential(h, n, opts, "N")?;
    if scalar_is_zero(c, opts) {
        return Err(SolutionError::PreconditionFailed {
            check: "c != 0".into(),
            residual: 0.0,
        });
    }
    require_distinct(h, m, n, opts)?;
    let (f, g) = match pair_mode(h, &[m, n], &[c], opts) {
        Mode::Exact => {
            let (f, g) = t1_iii_in(&values::<CRat>(h, m)?, &values::<CRat>(h, n)?, &c.to_field().unwrap());
            (HFunction::from_field("f", &f), HFunction::from_field("g", &g))
        }
        Mode::Float => {
            let (f, g) = t1_iii_in(
                &values::<Complex64>(h, m)?,
                &values::<Complex64>(h, n)?,
                &c.to_field().unwrap(),
            );
            (HFunction::from_field("f", &f), HFunction::from_field("g", &g))
        }
    };
    finish(h, Equation::SineCosine, CaseTag::T1III, f, g, opts, Vec::new())
}

pub(crate) fn t2_i_in<F: Field>(m: &[F], c: &F) -> (Vec<F>, Vec<F>) {
    let denom = F::one() - c.clone() * c.clone();
    let f = m.iter().map(|v| c.clone() * v.clone() / denom.clone()).collect();
    let g = m.iter().map(|v| v.clone() / denom.clone()).collect();
    (f, g)
}

/// `f = cM/(1 - c²)`, `g = M/(1 - c²)` with `c ∉ {0, 1, -1}`.
pub fn build_t2_i(h: &Hypergroup, m: &HFunction, c: &Scalar, opts: &EvalOptions) -> Result<SolutionPair, SolutionError> {
    require_exponential(h, m, opts, "M")?;
    for (bad, name) in [(0, "c != 0"), (1, "c != 1"), (-1, "c != -1")] {
        if scalars_equal(c, &Scalar::int(bad), opts) {
            return Err(SolutionError::PreconditionFailed {
                check: name.into(),
                residual: 0.0,
            });
        }
    }
    let (f, g) = match pair_mode(h, &[m], &[c], opts) {
        Mode::Exact => {
            let (f, g) = t2_i_in(&values::<CRat>(h, m)?, &c.to_field().unwrap());
            (HFunction::from_field("f", &f), HFunction::from_field("g", &g))
        }
        Mode::Float => {
            let (f, g) = t2_i_in(&values::<Complex64>(h, m)?, &c.to_field().unwrap());
            (HFunction::from_field("f", &f), HFunction::from_field("g", &g))
        }
    };
    finish(h, Equation::CosineSine, CaseTag::T2I, f, g, opts, Vec::new())
}

/// `f = M/(2c)`, `g = M/2`; solves the cosine-sine equation only for `c² = -1`.
pub fn build_t2_ii(h: &Hypergroup, m: &HFunction, c: &Scalar, opts: &EvalOptions) -> Result<SolutionPair, SolutionError> {
    require_exponential(h, m, opts, "M")?;
    if scalar_is_zero(c, opts) {
        return Err(SolutionError::PreconditionFailed {
            check: "c != 0".into(),
            residual: 0.0,
        });
    }
    // g(x*y) - g(x)g(y) + f(x)f(y) = -(1/4 - 1/(4c²) - 1/2) M(x)M(y).
    fn coefficient<F: Field>(c: &F) -> F {
        let four = F::from_i64(4);
        F::one() / four.clone() - F::one() / (four * c.clone() * c.clone()) - F::one() / F::from_i64(2)
    }
    let coefficient = match c {
        Scalar::Exact(z) if !opts.force_float => coefficient(z).to_scalar(),
        other => coefficient(&other.to_c64()).to_scalar(),
    };
    if !scalar_is_zero(&coefficient, opts) {
        return Err(SolutionError::NotASolutionForThisC {
            c: Box::new(c.clone()),
            coefficient: Box::new(coefficient),
        });
    }
    let (f, g) = match pair_mode(h, &[m], &[c], opts) {
        Mode::Exact => {
            let (f, g) = t1_ii_in(&values::<CRat>(h, m)?, &c.to_field().unwrap());
            (HFunction::from_field("f", &f), HFunction::from_field("g", &g))
        }
        Mode::Float => {
            let (f, g) = t1_ii_in(&values::<Complex64>(h, m)?, &c.to_field().unwrap());
            (HFunction::from_field("f", &f), HFunction::from_field("g", &g))
        }
    };
    let note = format!("same pair as T2_I with c' = 1/c = -c = {}", negate(c));
    finish(h, Equation::CosineSine, CaseTag::T2II, f, g, opts, vec![note])
}

fn negate(s: &Scalar) -> Scalar {
    match s {
        Scalar::Exact(z) => Scalar::Exact(-z.clone()),
        Scalar::Float(z) => Scalar::Float(-*z),
    }
}

/// `f` an `M`-sine function and `g = M + sign·f`.
pub fn build_t2_iii(
    h: &Hypergroup,
    m: &HFunction,
    f: &HFunction,
    sign: i8,
    opts: &EvalOptions,
) -> Result<SolutionPair, SolutionError> {
    assert!(sign == 1 || sign == -1, "sign must be ±1");
    require_exponential(h, m, opts, "M")?;
    require_nonzero_fn(h, f, opts)?;
    require(is_m_sine_with(h, f, m, opts)?, "f is an M-sine function")?;
    fn shift<F: Field>(m: &[F], f: &[F], sign: i8) -> Vec<F> {
        m.iter()
            .zip(f)
            .map(|(a, b)| {
                if sign > 0 {
                    a.clone() + b.clone()
                } else {
                    a.clone() - b.clone()
                }
            })
            .collect()
    }
    let g = match select_mode(h, &[m, f], opts.force_float) {
        Mode::Exact => HFunction::from_field("g", &shift(&values::<CRat>(h, m)?, &values::<CRat>(h, f)?, sign)),
        Mode::Float => HFunction::from_field(
            "g",
            &shift(&values::<Complex64>(h, m)?, &values::<Complex64>(h, f)?, sign),
        ),
    };
    finish(h, Equation::CosineSine, CaseTag::T2III, f.clone(), g, opts, Vec::new())
}

/// Coefficients of the case-iv family for a fixed `λ`, `d` and sign:
/// `f = s(M - N)/(2di)`, `g = s(s·di - λ)/(2di) M + s(s·di + λ)/(2di) N`.
pub(crate) struct IvCoefficients<F> {
    pub f_scale: F,
    pub m_coef: F,
    pub n_coef: F,
}

pub(crate) fn iv_coefficients<F: Field>(lambda: &F, d: &F, sign: i8) -> IvCoefficients<F> {
    let s = F::from_i64(sign as i64);
    let two_di = F::from_i64(2) * d.clone() * F::i();
    let sdi = s.clone() * d.clone() * F::i();
    IvCoefficients {
        f_scale: s.clone() / two_di.clone(),
        m_coef: s.clone() * (sdi.clone() - lambda.clone()) / two_di.clone(),
        n_coef: s * (sdi + lambda.clone()) / two_di,
    }
}

pub(crate) fn t2_iv_in<F: Field>(m: &[F], n: &[F], lambda: &F, d: &F, sign: i8) -> (Vec<F>, Vec<F>) {
    let k = iv_coefficients(lambda, d, sign);
    let f = m
        .iter()
        .zip(n)
        .map(|(a, b)| k.f_scale.clone() * (a.clone() - b.clone()))
        .collect();
    let g = m
        .iter()
        .zip(n)
        .map(|(a, b)| k.m_coef.clone() * a.clone() + k.n_coef.clone() * b.clone())
        .collect();
    (f, g)
}

/// The two algebraic identities that make the case-iv family solve the
/// cosine-sine equation, evaluated for the principal `d = sqrt(1 - λ²)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CaseIvIdentities {
    pub d: Scalar,
    /// `1 - d² - λ²` (cross terms `M(x)N(y)` cancel iff this vanishes).
    pub cross_term: Scalar,
    /// `((di - λ)² - 1)/(-4d²) - (di - λ)/(2di)` (the `M(x)M(y)` balance).
    pub mm_balance: Scalar,
}

impl CaseIvIdentities {
    pub fn max_deviation(&self) -> f64 {
        self.cross_term.norm().max(self.mm_balance.norm())
    }
}

fn iv_identities_in<F: Field>(lambda: &F, d: &F) -> (F, F) {
    let di = d.clone() * F::i();
    let cross = F::one() - d.clone() * d.clone() - lambda.clone() * lambda.clone();
    let shifted = di.clone() - lambda.clone();
    let mm = (shifted.clone() * shifted.clone() - F::one()) / (F::from_i64(-4) * d.clone() * d.clone())
        - shifted / (F::from_i64(2) * di);
    (cross, mm)
}

fn principal_d<F: Field>(lambda: &F) -> Option<F> {
    (F::one() - lambda.clone() * lambda.clone()).sqrt()
}

/// Evaluates the case-iv identities; exact when `λ` is exact and `1 - λ²` is
/// the square of a complex rational. `None` when `λ² = 1`.
pub fn case_iv_identities(lambda: &Scalar) -> Option<CaseIvIdentities> {
    fn run<F: Field>(lambda: &F, d: F) -> Option<CaseIvIdentities> {
        if d.is_zero() {
            return None;
        }
        let (cross, mm) = iv_identities_in(lambda, &d);
        Some(CaseIvIdentities {
            d: d.to_scalar(),
            cross_term: cross.to_scalar(),
            mm_balance: mm.to_scalar(),
        })
    }
    if let Scalar::Exact(l) = lambda {
        if let Some(d) = principal_d(l) {
            return run(l, d);
        }
    }
    let l = lambda.to_c64();
    run(&l, principal_d(&l).expect("float sqrt"))
}

/// The case-iv family with every `±` taken as `sign`.
pub fn build_t2_iv(
    h: &Hypergroup,
    m: &HFunction,
    n: &HFunction,
    lambda: &Scalar,
    sign: i8,
    opts: &EvalOptions,
) -> Result<SolutionPair, SolutionError> {
    assert!(sign == 1 || sign == -1, "sign must be ±1");
    require_exponential(h, m, opts, "M")?;
    require_exponential(h, n, opts, "N")?;
    require_distinct(h, m, n, opts)?;
    let lambda_sq_is_one = match lambda {
        Scalar::Exact(l) if !opts.force_float => l.clone() * l.clone() == <CRat as Field>::one(),
        other => {
            let l = other.to_c64();
            (l * l - 1.0).norm() <= opts.tol.atol
        }
    };
    if lambda_sq_is_one {
        return Err(SolutionError::DegenerateLambda);
    }

    fn run<F: Field>(
        h: &Hypergroup,
        m: &HFunction,
        n: &HFunction,
        lambda: &F,
        d: &F,
        sign: i8,
    ) -> Result<(HFunction, HFunction, Scalar), SolutionError> {
        let (cross, mm) = iv_identities_in(lambda, d);
        let ok = if F::is_exact() {
            cross.is_zero() && mm.is_zero()
        } else {
            cross.norm() <= 1e-12 * (1.0 + lambda.norm().powi(2)) && mm.norm() <= 1e-12 * (1.0 + lambda.norm())
        };
        if !ok {
            return Err(SolutionError::InternalInconsistency(format!(
                "case-iv identities fail: 1-d²-λ² = {:?}, MM balance = {:?}",
                cross.to_scalar(),
                mm.to_scalar()
            )));
        }
        let (f, g) = t2_iv_in(&values::<F>(h, m)?, &values::<F>(h, n)?, lambda, d, sign);
        Ok((HFunction::from_field("f", &f), HFunction::from_field("g", &g), d.to_scalar()))
    }

    let exact = pair_mode(h, &[m, n], &[lambda], opts) == Mode::Exact;
    let exact_d = match lambda {
        Scalar::Exact(l) if exact => principal_d(l).map(|d| (l.clone(), d)),
        _ => None,
    };
    let fell_back = exact && exact_d.is_none();
    let (f, g, d) = match exact_d {
        Some((l, d)) => run::<CRat>(h, m, n, &l, &d, sign)?,
        None => {
            let l = lambda.to_c64();
            run::<Complex64>(h, m, n, &l, &principal_d(&l).unwrap(), sign)?
        }
    };
    let mut notes = vec![format!("d = {d} (principal square root of 1 - λ²)")];
    if fell_back {
        notes.push("1 - λ² has no rational square root; built in float mode".into());
    }
    finish(h, Equation::CosineSine, CaseTag::T2IV, f, g, opts, notes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::{exponential_fn, linearization_table, sine_fn, Recurrence};
    use crate::solutions::residual_cosine;

    fn setup(nmax: usize) -> (Recurrence, Hypergroup) {
        let r = Recurrence::chebyshev();
        let h = linearization_table(&r, nmax).unwrap().to_hypergroup();
        (r, h)
    }

    fn opts() -> EvalOptions {
        EvalOptions::default()
    }

    #[test]
    fn t1_i_examples() {
        let (r, h) = setup(20);
        let m = exponential_fn(&r, Scalar::int(2));
        let f = sine_fn(&r, Scalar::int(2));
        let pair = build_t1_i(&h, &m, &f, &opts()).unwrap();
        assert!(pair.residual.is_exact_zero());
        let zero = HFunction::constant(Scalar::int(0));
        assert!(matches!(
            build_t1_i(&h, &m, &zero, &opts()),
            Err(SolutionError::PreconditionFailed { .. })
        ));
    }

    #[test]
    fn t1_ii_examples() {
        let (r, h) = setup(20);
        let m = exponential_fn(&r, Scalar::int(2));
        let pair = build_t1_ii(&h, &m, &Scalar::int(1), &opts()).unwrap();
        assert_eq!(pair.f.eval(1).unwrap(), Scalar::int(1));
        assert_eq!(pair.g.eval(1).unwrap(), Scalar::int(1));
        assert_eq!(pair.g.eval(0).unwrap(), Scalar::ratio(1, 2));
        assert!(pair.residual.is_exact_zero());
        assert!(build_t1_ii(&h, &m, &Scalar::int(0), &opts()).is_err());
    }

    #[test]
    fn t1_iii_examples() {
        let (r, h) = setup(20);
        let m = exponential_fn(&r, Scalar::int(2));
        let n = exponential_fn(&r, Scalar::int(3));
        let pair = build_t1_iii(&h, &m, &n, &Scalar::int(1), &opts()).unwrap();
        assert_eq!(pair.f.eval(1).unwrap(), Scalar::ratio(-1, 2));
        assert_eq!(pair.g.eval(1).unwrap(), Scalar::ratio(5, 2));
        assert!(pair.residual.is_exact_zero());
        let swapped = build_t1_iii(&h, &n, &m, &Scalar::int(-1), &opts()).unwrap();
        assert_eq!(pair.f.values(21).unwrap(), swapped.f.values(21).unwrap());
        assert_eq!(pair.g.values(21).unwrap(), swapped.g.values(21).unwrap());
        assert_eq!(
            build_t1_iii(&h, &m, &m, &Scalar::int(1), &opts()).unwrap_err(),
            SolutionError::DegenerateEqual
        );
    }

    #[test]
    fn t2_i_examples() {
        let (r, h) = setup(20);
        let m = exponential_fn(&r, Scalar::int(2));
        let i = Scalar::complex_ratio((0, 1), (1, 1));
        let pair = build_t2_i(&h, &m, &i, &opts()).unwrap();
        assert!(pair.residual.is_exact_zero());
        assert_eq!(pair.g.eval(0).unwrap(), Scalar::ratio(1, 2));
        assert_eq!(pair.f.eval(1).unwrap(), Scalar::complex_ratio((0, 1), (1, 1)));
        let pair = build_t2_i(&h, &m, &Scalar::int(2), &opts()).unwrap();
        assert_eq!(pair.g.eval(0).unwrap(), Scalar::ratio(-1, 3));
        for bad in [0, 1, -1] {
            assert!(build_t2_i(&h, &m, &Scalar::int(bad), &opts()).is_err());
        }
    }

    #[test]
    fn t2_ii_examples() {
        let (r, h) = setup(20);
        let m = exponential_fn(&r, Scalar::int(2));
        let i = Scalar::complex_ratio((0, 1), (1, 1));
        let minus_i = Scalar::complex_ratio((0, 1), (-1, 1));
        assert!(build_t2_ii(&h, &m, &i, &opts()).unwrap().residual.is_exact_zero());
        match build_t2_ii(&h, &m, &Scalar::int(1), &opts()).unwrap_err() {
            SolutionError::NotASolutionForThisC { coefficient, .. } => {
                assert_eq!(*coefficient, Scalar::ratio(-1, 2))
            }
            other => panic!("{other:?}"),
        }
        // c = -i coincides with T2_I at c' = i.
        let ii = build_t2_ii(&h, &m, &minus_i, &opts()).unwrap();
        let t2i = build_t2_i(&h, &m, &i, &opts()).unwrap();
        assert_eq!(ii.f.values(21).unwrap(), t2i.f.values(21).unwrap());
        assert_eq!(ii.g.values(21).unwrap(), t2i.g.values(21).unwrap());
    }

    #[test]
    fn t2_iii_examples() {
        let (r, h) = setup(20);
        let m = exponential_fn(&r, Scalar::int(2));
        let f = sine_fn(&r, Scalar::int(2));
        let plus = build_t2_iii(&h, &m, &f, 1, &opts()).unwrap();
        assert!(plus.residual.is_exact_zero());
        let neg_f = HFunction::from_field(
            "-f",
            &f.field_values::<CRat>(21).unwrap().unwrap().into_iter().map(|v| -v).collect::<Vec<_>>(),
        );
        let minus = build_t2_iii(&h, &m, &neg_f, -1, &opts()).unwrap();
        assert_eq!(plus.g.values(21).unwrap(), minus.g.values(21).unwrap());
    }

    #[test]
    fn t2_iv_examples() {
        let (r, h) = setup(30);
        let m = exponential_fn(&r, Scalar::int(2));
        let n = exponential_fn(&r, Scalar::int(3));
        let pair = build_t2_iv(&h, &m, &n, &Scalar::ratio(1, 2), 1, &opts()).unwrap();
        assert_eq!(pair.mode, Mode::Float);
        assert!(pair.residual.pass && pair.residual.max_rel <= 1e-9);
        let direct = residual_cosine(&h, &pair.f, &pair.g).unwrap();
        assert!(direct.pass);

        // λ = 0 gives d = 1 and the T1_III shape with c = i.
        let pair = build_t2_iv(&h, &m, &n, &Scalar::int(0), 1, &opts()).unwrap();
        assert!(pair.residual.is_exact_zero());
        let i = Scalar::complex_ratio((0, 1), (1, 1));
        let t1 = build_t1_iii(&h, &m, &n, &i, &opts()).unwrap();
        assert_eq!(pair.f.values(31).unwrap(), t1.f.values(31).unwrap());
        assert_eq!(pair.g.values(31).unwrap(), t1.g.values(31).unwrap());

        // λ = 3/5 has d = 4/5, so the whole pipeline stays exact.
        for sign in [1, -1] {
            let pair = build_t2_iv(&h, &m, &n, &Scalar::ratio(3, 5), sign, &opts()).unwrap();
            assert!(pair.residual.is_exact_zero());
        }
        assert_eq!(
            build_t2_iv(&h, &m, &n, &Scalar::int(1), 1, &opts()).unwrap_err(),
            SolutionError::DegenerateLambda
        );
    }

    #[test]
    fn case_iv_identities_exact_and_float() {
        let exact = case_iv_identities(&Scalar::ratio(3, 5)).unwrap();
        assert_eq!(exact.d, Scalar::ratio(4, 5));
        assert!(exact.cross_term.is_zero() && exact.mm_balance.is_zero());
        let float = case_iv_identities(&Scalar::float(0.3, 1.1)).unwrap();
        assert!(float.max_deviation() <= 1e-12);
        assert!(case_iv_identities(&Scalar::int(-1)).is_none());
    }
}
