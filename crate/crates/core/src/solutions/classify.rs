//! Classification of solution pairs by running the constructive proofs of the
//! two addition theorems as algorithms.
//!
//! Sine-cosine pairs: if `g(o) != 1` then `f` and `g` are proportional and
//! `2g` is an exponential. Otherwise either `g` is itself an exponential, or
//! the Cauchy difference forces `g(x*y) - g(x)g(y) = λ f(x) f(y)`; with
//! `d² = -λ` the functions `g ± i·d·f` are exponentials.
//!
//! Cosine-sine pairs: if `g(o) != 1` then `f = c·g` and `(1 - c²) g` is an
//! exponential. Otherwise `f(x*y) = f(x)g(y) + f(y)g(x) + 2λ f(x)f(y)`, and
//! `h = g + λf` turns `(f, h)` into a sine-cosine pair. `λ = 0` reduces to
//! the sine-cosine classification, `λ² = 1` makes `h` an exponential, and
//! otherwise `h ± i·d·f` with `d² = 1 - λ²` are exponentials.
//!
//! Parameters are estimated at the best-conditioned sample points and
//! cross-checked at the next four; disagreement is reported, not averaged.

use num_complex::Complex64;

use super::builders::{t1_ii_in, t1_iii_in, t2_i_in, t2_iv_in};
use super::{moduli, scan, EvalOptions, Equation, Residual};
use crate::error::{HypergroupError, SolutionError};
use crate::exec::Exec;
use crate::hypergroup::{select_mode, HFunction, Hypergroup, RowView};
use crate::polynomial::Recurrence;
use crate::scalar::{CRat, Field, Mode, Scalar, Tolerance};

/// Which family of the two theorems a pair belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// `g` an exponential, `f` a `g`-sine function.
    T1I,
    /// `f = M/(2c)`, `g = M/2`.
    T1II,
    /// `f = (M - N)/(2c)`, `g = (M + N)/2`.
    T1III,
    /// `f = cM/(1 - c²)`, `g = M/(1 - c²)`.
    T2I,
    /// `f = M/(2c)`, `g = M/2` with `c = ±i`; never emitted by the classifier.
    T2II,
    /// `f` an `M`-sine function, `g = M ± f`.
    T2III,
    /// Two-exponential family with parameter `λ`, `d² = 1 - λ²`.
    T2IV,
    NotASolution,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::T1I => "T1_I",
            CaseTag::T1II => "T1_II",
            CaseTag::T1III => "T1_III",
            CaseTag::T2I => "T2_I",
            CaseTag::T2II => "T2_II",
            CaseTag::T2III => "T2_III",
            CaseTag::T2IV => "T2_IV",
            CaseTag::NotASolution => "NOT_A_SOLUTION",
        }
    }
}

/// Tolerances of the staged classification.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClassifierTolerances {
    /// Equation residual gate (float mode).
    pub residual: Tolerance,
    /// Relative spread allowed between parameter estimates.
    pub spread: f64,
    /// Maximum normalized deviation between the input and the rebuilt pair.
    pub reconstruction: f64,
}

impl Default for ClassifierTolerances {
    fn default() -> Self {
        ClassifierTolerances {
            residual: Tolerance::default(),
            spread: 1e-7,
            reconstruction: 1e-6,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClassificationResult {
    pub case: CaseTag,
    pub mode: Mode,
    pub c: Option<Scalar>,
    pub lambda: Option<Scalar>,
    pub d: Option<Scalar>,
    pub sign: Option<i8>,
    /// Recovered exponentials as value tables.
    pub m: Option<HFunction>,
    pub n: Option<HFunction>,
    /// `λ` with `M(k) = P_k(λ)`, when a recurrence was supplied and fits.
    pub m_lambda: Option<Scalar>,
    pub n_lambda: Option<Scalar>,
    pub residual_input: Residual,
    /// `max_k max(|f - f'|, |g - g'|)(k) / max(1, |f(k)|, |g(k)|)` against the
    /// pair rebuilt from the recovered parameters.
    pub residual_reconstruction: Option<f64>,
    pub notes: Vec<String>,
}

/// Configured classifier.
#[derive(Clone, Debug, Default)]
pub struct Classifier {
    pub tol: ClassifierTolerances,
    pub exec: Exec,
    pub force_float: bool,
    /// Enables the `λ` fit of recovered exponentials on polynomial hypergroups.
    pub recurrence: Option<Recurrence>,
}

/// Classifies a sine-cosine pair with default settings.
pub fn classify_sine(h: &Hypergroup, f: &HFunction, g: &HFunction) -> Result<ClassificationResult, SolutionError> {
    Classifier::default().classify_sine(h, f, g)
}

/// Classifies a cosine-sine pair with default settings.
pub fn classify_cosine(h: &Hypergroup, f: &HFunction, g: &HFunction) -> Result<ClassificationResult, SolutionError> {
    Classifier::default().classify_cosine(h, f, g)
}

enum Failure {
    /// An exact square root was not rational; rerun in float mode.
    NeedsFloat,
    Error(SolutionError),
}

impl From<SolutionError> for Failure {
    fn from(e: SolutionError) -> Self {
        Failure::Error(e)
    }
}

impl From<HypergroupError> for Failure {
    fn from(e: HypergroupError) -> Self {
        Failure::Error(e.into())
    }
}

struct Outcome<F> {
    case: CaseTag,
    c: Option<F>,
    lambda: Option<F>,
    d: Option<F>,
    sign: Option<i8>,
    m: Option<Vec<F>>,
    n: Option<Vec<F>>,
    rebuilt: Option<(Vec<F>, Vec<F>)>,
    notes: Vec<String>,
}

impl<F> Outcome<F> {
    fn new(case: CaseTag) -> Self {
        Outcome {
            case,
            c: None,
            lambda: None,
            d: None,
            sign: None,
            m: None,
            n: None,
            rebuilt: None,
            notes: Vec::new(),
        }
    }
}

struct Ctx<'a, F> {
    view: RowView<F>,
    h: &'a Hypergroup,
    tol: ClassifierTolerances,
    exec: Exec,
}

impl<F: Field> Ctx<'_, F> {
    fn residual(&self, eq: Equation, f: &[F], g: &[F], envelope: Option<&[f64]>) -> Residual {
        scan(&self.view, self.h.pairs(), eq, f, g, envelope, &self.tol.residual, self.exec)
    }

    fn is_one(&self, v: &F) -> bool {
        if F::is_exact() {
            *v == F::one()
        } else {
            self.tol.residual.accepts((v.clone() - F::one()).norm(), 1.0)
        }
    }

    fn vanishes(&self, v: &[F]) -> bool {
        if F::is_exact() {
            v.iter().all(Field::is_zero)
        } else {
            v.iter().all(|z| z.norm() <= self.tol.residual.atol)
        }
    }

    /// Ratio `num[k]/den[k]` at the five largest `|den[k]|/(|num[k]|+|den[k]|)`.
    fn ratio_param(&self, num: &[F], den: &[F], name: &'static str) -> Result<F, Failure> {
        let mut candidates: Vec<(f64, usize)> = den
            .iter()
            .zip(num)
            .enumerate()
            .filter(|(_, (d, _))| !d.is_zero())
            .map(|(k, (d, n))| (d.norm() / (d.norm() + n.norm()), k))
            .collect();
        candidates.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
        let estimates: Vec<F> = candidates
            .iter()
            .take(5)
            .map(|&(_, k)| num[k].clone() / den[k].clone())
            .collect();
        self.consensus(estimates, name)
    }

    fn consensus(&self, estimates: Vec<F>, name: &'static str) -> Result<F, Failure> {
        let Some(first) = estimates.first().cloned() else {
            return Err(SolutionError::InternalInconsistency(format!("no sample point determines {name}")).into());
        };
        let spread = estimates
            .iter()
            .map(|e| (e.clone() - first.clone()).norm() / first.norm().max(1.0))
            .fold(0.0, f64::max);
        let agree = if F::is_exact() {
            estimates.iter().all(|e| *e == first)
        } else {
            spread <= self.tol.spread
        };
        if agree {
            Ok(first)
        } else {
            Err(SolutionError::InconsistentParameter { name, spread }.into())
        }
    }

    /// Estimates `λ` from `num(x, y) = λ · k · f(x) f(y)` over the five
    /// best-conditioned tabulated pairs.
    fn pair_param(
        &self,
        f: &[F],
        weight: F,
        num: impl Fn(usize, usize) -> (F, f64),
        name: &'static str,
    ) -> Result<F, Failure> {
        let fa = moduli(f);
        let mut candidates: Vec<(f64, (usize, usize))> = self
            .h
            .pairs()
            .iter()
            .filter(|&&(x, y)| x <= y && !f[x].is_zero() && !f[y].is_zero())
            .map(|&(x, y)| {
                let (_, scale) = num(x, y);
                (fa[x] * fa[y] / scale.max(f64::MIN_POSITIVE), (x, y))
            })
            .collect();
        candidates.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
        let estimates = candidates
            .iter()
            .take(5)
            .map(|&(_, (x, y))| num(x, y).0 / (weight.clone() * f[x].clone() * f[y].clone()))
            .collect();
        self.consensus(estimates, name)
    }

    /// Exponential check for recovered `M`, `N` whose rounding error is set
    /// by `|M| + |N|` rather than by each function alone.
    fn require_exponentials(&self, fns: &[&[F]], what: &str) -> Result<(), Failure> {
        let envelope: Vec<f64> = (0..self.h.size())
            .map(|k| fns.iter().map(|v| v[k].norm()).sum())
            .collect();
        for (idx, v) in fns.iter().enumerate() {
            let r = self.residual(Equation::Exponential, v, &[], Some(&envelope));
            if !r.pass || self.vanishes(v) {
                return Err(SolutionError::InternalInconsistency(format!(
                    "recovered {what} #{idx} is not an exponential (residual {:e})",
                    r.max_abs
                ))
                .into());
            }
        }
        Ok(())
    }

    fn is_exponential(&self, v: &[F]) -> bool {
        !self.vanishes(v) && self.residual(Equation::Exponential, v, &[], None).pass
    }
}

fn principal_sqrt<F: Field>(z: &F) -> Result<F, Failure> {
    z.sqrt().ok_or(Failure::NeedsFloat)
}

fn swap_note() -> String {
    "(M, N, c) and (N, M, -c) give the same pair".to_string()
}

fn classify_sine_in<F: Field>(ctx: &Ctx<F>, f: &[F], g: &[F], input: &Residual) -> Result<Outcome<F>, Failure> {
    if !input.pass {
        return Ok(Outcome::new(CaseTag::NotASolution));
    }
    if ctx.vanishes(f) || ctx.vanishes(g) {
        let mut out = Outcome::new(CaseTag::NotASolution);
        out.notes.push("f or g vanishes identically; the theorem assumes both are nonzero".into());
        return Ok(out);
    }
    let o = ctx.h.identity();

    if !ctx.is_one(&g[o]) {
        // f(x)(1 - g(o)) = f(o) g(x): proportional, with 2g an exponential.
        let c = ctx.ratio_param(g, f, "c")?;
        let m: Vec<F> = g.iter().map(|v| F::from_i64(2) * v.clone()).collect();
        ctx.require_exponentials(&[&m], "M")?;
        let mut out = Outcome::new(CaseTag::T1II);
        out.rebuilt = Some(t1_ii_in(&m, &c));
        out.c = Some(c);
        out.m = Some(m);
        return Ok(out);
    }

    if ctx.is_exponential(g) {
        let mut out = Outcome::new(CaseTag::T1I);
        out.m = Some(g.to_vec());
        out.rebuilt = Some((f.to_vec(), g.to_vec()));
        out.notes.push("f is an M-sine function for M = g".into());
        return Ok(out);
    }

    // g(x*y) - g(x) g(y) = λ f(x) f(y), λ = -d².
    let ga = moduli(g);
    let lambda = ctx.pair_param(
        f,
        F::one(),
        |x, y| {
            let t = ctx.view.translate(g, x, y).expect("tabulated");
            let scale = ctx.view.translate_abs(&ga, x, y).unwrap() + ga[x] * ga[y];
            (t - g[x].clone() * g[y].clone(), scale)
        },
        "lambda",
    )?;
    let d = principal_sqrt(&-lambda.clone())?;
    if d.is_zero() {
        return Err(SolutionError::InternalInconsistency("λ vanishes although g is not an exponential".into()).into());
    }
    let i = F::i();
    let m: Vec<F> = g
        .iter()
        .zip(f)
        .map(|(gv, fv)| gv.clone() + i.clone() * d.clone() * fv.clone())
        .collect();
    let n: Vec<F> = g
        .iter()
        .zip(f)
        .map(|(gv, fv)| gv.clone() - i.clone() * d.clone() * fv.clone())
        .collect();
    ctx.require_exponentials(&[&m, &n], "exponential")?;
    let c = d.clone() * i;
    let mut out = Outcome::new(CaseTag::T1III);
    out.rebuilt = Some(t1_iii_in(&m, &n, &c));
    out.c = Some(c);
    out.lambda = Some(lambda);
    out.d = Some(d);
    out.m = Some(m);
    out.n = Some(n);
    out.notes.push("lambda here is the Cauchy-difference factor, lambda = c^2 = -d^2".into());
    out.notes.push(swap_note());
    Ok(out)
}

fn classify_cosine_in<F: Field>(ctx: &Ctx<F>, f: &[F], g: &[F], input: &Residual) -> Result<Outcome<F>, Failure> {
    if !input.pass {
        return Ok(Outcome::new(CaseTag::NotASolution));
    }
    if ctx.vanishes(f) || ctx.vanishes(g) {
        let mut out = Outcome::new(CaseTag::NotASolution);
        out.notes.push("f or g vanishes identically; the theorem assumes both are nonzero".into());
        return Ok(out);
    }
    let o = ctx.h.identity();

    if !ctx.is_one(&g[o]) {
        // g(x)(1 - g(o)) = -f(x) f(o): f = c·g and (1 - c²) g is an exponential.
        let c = ctx.ratio_param(f, g, "c")?;
        let scale = F::one() - c.clone() * c.clone();
        let m: Vec<F> = g.iter().map(|v| scale.clone() * v.clone()).collect();
        ctx.require_exponentials(&[&m], "M")?;
        let mut out = Outcome::new(CaseTag::T2I);
        let c_sq_plus_one = c.clone() * c.clone() + F::one();
        let is_t2_ii = if F::is_exact() {
            c_sq_plus_one.is_zero()
        } else {
            c_sq_plus_one.norm() <= ctx.tol.spread
        };
        if is_t2_ii {
            out.notes.push(format!(
                "c^2 = -1: also the T2_II shape f = M/(2c'), g = M/2 with c' = -c = {}",
                (-c.clone()).to_scalar()
            ));
        }
        out.rebuilt = Some(t2_i_in(&m, &c));
        out.c = Some(c);
        out.m = Some(m);
        return Ok(out);
    }

    // f(x*y) - f(x) g(y) - f(y) g(x) = 2λ f(x) f(y).
    let fa = moduli(f);
    let ga = moduli(g);
    let lambda = ctx.pair_param(
        f,
        F::from_i64(2),
        |x, y| {
            let t = ctx.view.translate(f, x, y).expect("tabulated");
            let scale = ctx.view.translate_abs(&fa, x, y).unwrap() + fa[x] * ga[y] + fa[y] * ga[x];
            (t - f[x].clone() * g[y].clone() - f[y].clone() * g[x].clone(), scale)
        },
        "lambda",
    )?;

    let near = |v: F| {
        if F::is_exact() {
            v.is_zero()
        } else {
            v.norm() <= ctx.tol.spread
        }
    };

    if near(lambda.clone()) {
        // (f, g) solves both equations at once; reuse the sine-cosine analysis.
        let sine_input = ctx.residual(Equation::SineCosine, f, g, None);
        let inner = classify_sine_in(ctx, f, g, &sine_input)?;
        let mut out = match inner.case {
            CaseTag::T1III => {
                let c = inner.c.clone().expect("c recovered");
                let (m, n) = (inner.m.expect("M"), inner.n.expect("N"));
                // c = ±i; c = -i is the swapped labelling.
                let (m, n) = if near(c.clone() - F::i()) {
                    (m, n)
                } else if near(c.clone() + F::i()) {
                    (n, m)
                } else {
                    return Err(SolutionError::InternalInconsistency(format!(
                        "λ = 0 but c = {:?} is not ±i",
                        c.to_scalar()
                    ))
                    .into());
                };
                let zero = F::zero();
                let one = F::one();
                let mut out = Outcome::new(CaseTag::T2IV);
                out.rebuilt = Some(t2_iv_in(&m, &n, &zero, &one, 1));
                out.lambda = Some(zero);
                out.d = Some(one);
                out.sign = Some(1);
                out.m = Some(m);
                out.n = Some(n);
                out.notes
                    .push("λ = 0: the pair also solves the sine-cosine equation with c = i (T1_III)".into());
                out
            }
            CaseTag::T1II => {
                let c = inner.c.expect("c recovered");
                let c_prime = F::one() / c;
                let m = inner.m.expect("M");
                let mut out = Outcome::new(CaseTag::T2I);
                out.rebuilt = Some(t2_i_in(&m, &c_prime));
                out.c = Some(c_prime);
                out.m = Some(m);
                out.notes.push("λ = 0 with the proportional sine-cosine shape".into());
                out
            }
            other => {
                return Err(SolutionError::InternalInconsistency(format!(
                    "λ = 0 but the sine-cosine analysis gives {}",
                    other.as_str()
                ))
                .into())
            }
        };
        out.notes.push(
            "(M, N, sign) and (N, M, -sign) give the same pair; reported with sign = +1".into(),
        );
        return Ok(out);
    }

    let lambda_sq_minus_one = lambda.clone() * lambda.clone() - F::one();
    if near(lambda_sq_minus_one) {
        // h = g + λ f is an exponential and g = h - λ f.
        let unit = if lambda.to_c64().re > 0.0 { F::one() } else { -F::one() };
        let sign: i8 = if lambda.to_c64().re > 0.0 { -1 } else { 1 };
        let m: Vec<F> = g
            .iter()
            .zip(f)
            .map(|(gv, fv)| gv.clone() + unit.clone() * fv.clone())
            .collect();
        ctx.require_exponentials(&[&m], "M")?;
        let msine = ctx.residual(Equation::MSine, f, &m, None);
        if !msine.pass {
            return Err(SolutionError::InternalInconsistency(format!(
                "f is not an M-sine function for the recovered M (residual {:e})",
                msine.max_abs
            ))
            .into());
        }
        let rebuilt_g = m
            .iter()
            .zip(f)
            .map(|(mv, fv)| mv.clone() - unit.clone() * fv.clone())
            .collect();
        let mut out = Outcome::new(CaseTag::T2III);
        out.rebuilt = Some((f.to_vec(), rebuilt_g));
        out.lambda = Some(lambda);
        out.sign = Some(sign);
        out.m = Some(m);
        out.notes.push("g = M + sign·f with sign = -λ".into());
        return Ok(out);
    }

    let d = principal_sqrt(&(F::one() - lambda.clone() * lambda.clone()))?;
    let i = F::i();
    let h: Vec<F> = g
        .iter()
        .zip(f)
        .map(|(gv, fv)| gv.clone() + lambda.clone() * fv.clone())
        .collect();
    let m: Vec<F> = h
        .iter()
        .zip(f)
        .map(|(hv, fv)| hv.clone() + i.clone() * d.clone() * fv.clone())
        .collect();
    let n: Vec<F> = h
        .iter()
        .zip(f)
        .map(|(hv, fv)| hv.clone() - i.clone() * d.clone() * fv.clone())
        .collect();
    ctx.require_exponentials(&[&m, &n], "exponential")?;
    let mut out = Outcome::new(CaseTag::T2IV);
    out.rebuilt = Some(t2_iv_in(&m, &n, &lambda, &d, 1));
    out.lambda = Some(lambda);
    out.d = Some(d);
    out.sign = Some(1);
    out.m = Some(m);
    out.n = Some(n);
    out.notes
        .push("(M, N, sign) and (N, M, -sign) give the same pair; reported with sign = +1".into());
    Ok(out)
}

fn reconstruction_deviation<F: Field>(f: &[F], g: &[F], rebuilt: &(Vec<F>, Vec<F>)) -> f64 {
    (0..f.len())
        .map(|k| {
            let scale = f[k].norm().max(g[k].norm()).max(1.0);
            let df = (f[k].clone() - rebuilt.0[k].clone()).norm();
            let dg = (g[k].clone() - rebuilt.1[k].clone()).norm();
            df.max(dg) / scale
        })
        .fold(0.0, f64::max)
}

impl Classifier {
    pub fn with_recurrence(recurrence: Recurrence) -> Self {
        Classifier {
            recurrence: Some(recurrence),
            ..Classifier::default()
        }
    }

    pub fn eval_options(&self) -> EvalOptions {
        EvalOptions {
            tol: self.tol.residual,
            exec: self.exec,
            force_float: self.force_float,
        }
    }

    pub fn classify_sine(&self, h: &Hypergroup, f: &HFunction, g: &HFunction) -> Result<ClassificationResult, SolutionError> {
        self.classify(h, f, g, Equation::SineCosine)
    }

    pub fn classify_cosine(&self, h: &Hypergroup, f: &HFunction, g: &HFunction) -> Result<ClassificationResult, SolutionError> {
        self.classify(h, f, g, Equation::CosineSine)
    }

    fn classify(
        &self,
        h: &Hypergroup,
        f: &HFunction,
        g: &HFunction,
        equation: Equation,
    ) -> Result<ClassificationResult, SolutionError> {
        if select_mode(h, &[f, g], self.force_float) == Mode::Exact {
            match self.run::<CRat>(h, f, g, equation) {
                Ok(result) => return Ok(result),
                Err(Failure::Error(e)) => return Err(e),
                Err(Failure::NeedsFloat) => {
                    let mut result = match self.run::<Complex64>(h, f, g, equation) {
                        Ok(r) => r,
                        Err(Failure::Error(e)) => return Err(e),
                        Err(Failure::NeedsFloat) => unreachable!("float square roots always exist"),
                    };
                    result
                        .notes
                        .push("square root is not a complex rational; classified in float mode".into());
                    return Ok(result);
                }
            }
        }
        match self.run::<Complex64>(h, f, g, equation) {
            Ok(r) => Ok(r),
            Err(Failure::Error(e)) => Err(e),
            Err(Failure::NeedsFloat) => unreachable!("float square roots always exist"),
        }
    }

    fn run<F: Field>(
        &self,
        h: &Hypergroup,
        f: &HFunction,
        g: &HFunction,
        equation: Equation,
    ) -> Result<ClassificationResult, Failure> {
        let view = h.view::<F>().expect("mode selected from the table");
        let ctx = Ctx {
            view,
            h,
            tol: self.tol,
            exec: self.exec,
        };
        let fv = f.field_values::<F>(h.size())?.expect("mode selected from inputs");
        let gv = g.field_values::<F>(h.size())?.expect("mode selected from inputs");
        let input = ctx.residual(equation, &fv, &gv, None);
        let outcome = match equation {
            Equation::SineCosine => classify_sine_in(&ctx, &fv, &gv, &input)?,
            Equation::CosineSine => classify_cosine_in(&ctx, &fv, &gv, &input)?,
            other => panic!("{} is not classified", other.as_str()),
        };

        let residual_reconstruction = outcome
            .rebuilt
            .as_ref()
            .map(|rebuilt| reconstruction_deviation(&fv, &gv, rebuilt));
        if let Some(dev) = residual_reconstruction {
            let ok = if F::is_exact() { dev == 0.0 } else { dev <= self.tol.reconstruction };
            if !ok {
                return Err(SolutionError::InternalInconsistency(format!(
                    "{} reconstruction deviates by {dev:e}",
                    outcome.case.as_str()
                ))
                .into());
            }
        }

        let fit = |v: &Option<Vec<F>>| v.as_ref().and_then(|v| self.fit_lambda(v));
        let m_lambda = fit(&outcome.m);
        let n_lambda = fit(&outcome.n);
        let table = |name: &str, v: Option<Vec<F>>| v.map(|v| HFunction::from_field(name, &v));
        Ok(ClassificationResult {
            case: outcome.case,
            mode: F::MODE,
            c: outcome.c.map(|v| v.to_scalar()),
            lambda: outcome.lambda.map(|v| v.to_scalar()),
            d: outcome.d.map(|v| v.to_scalar()),
            sign: outcome.sign,
            m: table("M", outcome.m),
            n: table("N", outcome.n),
            m_lambda,
            n_lambda,
            residual_input: input,
            residual_reconstruction,
            notes: outcome.notes,
        })
    }

    /// `λ = a_0 M(1) + b_0` from `P_1`, accepted if `P_k(λ)` reproduces `M`.
    fn fit_lambda<F: Field>(&self, m: &[F]) -> Option<Scalar> {
        let r = self.recurrence.as_ref()?;
        if m.len() < 2 {
            return None;
        }
        let row = r.coefficients(0).ok()?;
        let lambda = F::from_ratio(&row.a) * m[1].clone() + F::from_ratio(&row.b);
        let (p, _) = r.values_and_derivatives(m.len(), &lambda).ok()?;
        let fits = p.iter().zip(m).all(|(a, b)| {
            if F::is_exact() {
                a == b
            } else {
                (a.clone() - b.clone()).norm() <= self.tol.reconstruction * a.norm().max(b.norm()).max(1.0)
            }
        });
        fits.then(|| lambda.to_scalar())
    }
}
