//! Residuals of the addition equations, the solution families of the sine and
//! cosine addition theorems, and classifiers that recover which family a given
//! pair belongs to.
//!
//! Equations (for all tabulated `x, y`):
//!
//! * sine-cosine: `f(x*y) = f(x) g(y) + f(y) g(x)`
//! * cosine-sine: `g(x*y) = g(x) g(y) - f(x) f(y)`
//! * exponential: `m(x*y) = m(x) m(y)`, `m` not identically zero
//! * additive: `a(x*y) = a(x) + a(y)`
//! * `m`-sine: `f(x*y) = f(x) m(y) + f(y) m(x)`
//!
//! In float mode each pair is accepted when
//! `|lhs - rhs| <= atol + rtol * scale`, where `scale` sums the moduli of every
//! term on both sides (the translate contributes `Σ μ(z) |f(z)|`).

mod builders;
mod classify;

pub use builders::{
    build_t1_i, build_t1_ii, build_t1_iii, build_t2_i, build_t2_ii, build_t2_iii, build_t2_iv,
    case_iv_identities, CaseIvIdentities, SolutionPair,
};
pub use classify::{
    classify_cosine, classify_sine, CaseTag, ClassificationResult, Classifier, ClassifierTolerances,
};

use num_complex::Complex64;

use crate::error::HypergroupError;
use crate::exec::{self, Exec};
use crate::hypergroup::{select_mode, HFunction, Hypergroup, RowView};
use crate::scalar::{CRat, Field, Mode, Tolerance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Equation {
    SineCosine,
    CosineSine,
    Exponential,
    MSine,
    Additive,
}

impl Equation {
    pub fn as_str(self) -> &'static str {
        match self {
            Equation::SineCosine => "sine",
            Equation::CosineSine => "cosine",
            Equation::Exponential => "exponential",
            Equation::MSine => "msine",
            Equation::Additive => "additive",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "sine" => Equation::SineCosine,
            "cosine" => Equation::CosineSine,
            "exponential" => Equation::Exponential,
            "msine" => Equation::MSine,
            "additive" => Equation::Additive,
            _ => return None,
        })
    }
}

/// Options shared by residual scans and builders.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct EvalOptions {
    pub tol: Tolerance,
    pub exec: Exec,
    /// Run in float mode even when every input is exact.
    pub force_float: bool,
}

impl EvalOptions {
    pub fn float() -> Self {
        EvalOptions {
            force_float: true,
            ..Self::default()
        }
    }
}

/// Outcome of an equation scan over every tabulated pair.
#[derive(Clone, Debug, PartialEq)]
pub struct Residual {
    pub equation: Equation,
    pub mode: Mode,
    /// `max |lhs - rhs|`.
    pub max_abs: f64,
    /// `max |lhs - rhs| / scale`.
    pub max_rel: f64,
    /// Pair attaining `max_abs` (first in lexicographic order on ties).
    pub worst_pair: Option<(usize, usize)>,
    pub pairs_checked: usize,
    /// Exact mode: every difference is exactly zero. Float mode: every pair
    /// passes the mixed tolerance.
    pub pass: bool,
}

impl Residual {
    /// True when the scan proved exact equality.
    pub fn is_exact_zero(&self) -> bool {
        self.mode == Mode::Exact && self.pass
    }
}

/// Pointwise moduli, used for scale estimates.
pub(crate) fn moduli<F: Field>(values: &[F]) -> Vec<f64> {
    values.iter().map(Field::norm).collect()
}

/// Scans `equation` over `pairs`. `g` is ignored for single-function
/// equations; `envelope` overrides the magnitudes used for the scale.
#[allow(clippy::too_many_arguments)]
pub(crate) fn scan<F: Field>(
    view: &RowView<F>,
    pairs: &[(usize, usize)],
    equation: Equation,
    f: &[F],
    g: &[F],
    envelope: Option<&[f64]>,
    tol: &Tolerance,
    exec: Exec,
) -> Residual {
    let fa = envelope.map_or_else(|| moduli(f), <[f64]>::to_vec);
    let ga = match envelope {
        Some(e) => e.to_vec(),
        None if g.is_empty() => Vec::new(),
        None => moduli(g),
    };
    let cell = |idx: usize| -> (f64, f64, bool) {
        let (x, y) = pairs[idx];
        let (diff, scale) = match equation {
            Equation::SineCosine | Equation::MSine => {
                let lhs = view.translate(f, x, y).expect("tabulated");
                let rhs = f[x].clone() * g[y].clone() + f[y].clone() * g[x].clone();
                let scale = view.translate_abs(&fa, x, y).unwrap() + fa[x] * ga[y] + fa[y] * ga[x];
                (lhs - rhs, scale)
            }
            Equation::CosineSine => {
                let lhs = view.translate(g, x, y).expect("tabulated");
                let rhs = g[x].clone() * g[y].clone() - f[x].clone() * f[y].clone();
                let scale = view.translate_abs(&ga, x, y).unwrap() + ga[x] * ga[y] + fa[x] * fa[y];
                (lhs - rhs, scale)
            }
            Equation::Exponential => {
                let lhs = view.translate(f, x, y).expect("tabulated");
                let rhs = f[x].clone() * f[y].clone();
                let scale = view.translate_abs(&fa, x, y).unwrap() + fa[x] * fa[y];
                (lhs - rhs, scale)
            }
            Equation::Additive => {
                let lhs = view.translate(f, x, y).expect("tabulated");
                let rhs = f[x].clone() + f[y].clone();
                let scale = view.translate_abs(&fa, x, y).unwrap() + fa[x] + fa[y];
                (lhs - rhs, scale)
            }
        };
        let abs = diff.norm();
        let ok = if F::is_exact() {
            diff.is_zero()
        } else {
            tol.accepts(abs, scale)
        };
        let rel = if abs == 0.0 {
            0.0
        } else if scale > 0.0 {
            abs / scale
        } else {
            f64::INFINITY
        };
        (abs, rel, ok)
    };

    #[derive(Clone, Copy)]
    struct Acc {
        abs: f64,
        rel: f64,
        worst: Option<usize>,
        pass: bool,
    }
    let identity = || Acc {
        abs: 0.0,
        rel: 0.0,
        worst: None,
        pass: true,
    };
    let indices: Vec<usize> = (0..pairs.len()).collect();
    let acc = exec::map_reduce(
        exec,
        &indices,
        |&idx| {
            let (abs, rel, ok) = cell(idx);
            // NaN counts as the worst possible deviation.
            let abs = if abs.is_nan() { f64::INFINITY } else { abs };
            Acc {
                abs,
                rel: if rel.is_nan() { f64::INFINITY } else { rel },
                worst: Some(idx),
                pass: ok,
            }
        },
        identity,
        |a, b| {
            let take_b = match (a.worst, b.worst) {
                (None, _) => true,
                (_, None) => false,
                (Some(ia), Some(ib)) => b.abs > a.abs || (b.abs == a.abs && ib < ia),
            };
            let (abs, worst) = if take_b { (b.abs, b.worst) } else { (a.abs, a.worst) };
            Acc {
                abs,
                rel: a.rel.max(b.rel),
                worst,
                pass: a.pass && b.pass,
            }
        },
    );
    Residual {
        equation,
        mode: F::MODE,
        max_abs: acc.abs,
        max_rel: acc.rel,
        worst_pair: acc.worst.map(|idx| pairs[idx]),
        pairs_checked: pairs.len(),
        pass: acc.pass,
    }
}

fn residual_dispatch(
    h: &Hypergroup,
    equation: Equation,
    f: &HFunction,
    g: Option<&HFunction>,
    opts: &EvalOptions,
) -> Result<Residual, HypergroupError> {
    let fns: Vec<&HFunction> = std::iter::once(f).chain(g).collect();
    let len = h.size();
    match select_mode(h, &fns, opts.force_float) {
        Mode::Exact => {
            let view = h.view::<CRat>().expect("exact table");
            let fv = f.field_values::<CRat>(len)?.expect("exact");
            let gv = match g {
                Some(g) => g.field_values::<CRat>(len)?.expect("exact"),
                None => Vec::new(),
            };
            Ok(scan(&view, h.pairs(), equation, &fv, &gv, None, &opts.tol, opts.exec))
        }
        Mode::Float => {
            let view = h.view::<Complex64>().expect("float view");
            let fv = f.field_values::<Complex64>(len)?.expect("float");
            let gv = match g {
                Some(g) => g.field_values::<Complex64>(len)?.expect("float"),
                None => Vec::new(),
            };
            Ok(scan(&view, h.pairs(), equation, &fv, &gv, None, &opts.tol, opts.exec))
        }
    }
}

/// Max residual of `f(x*y) = f(x) g(y) + f(y) g(x)`.
pub fn residual_sine(h: &Hypergroup, f: &HFunction, g: &HFunction) -> Result<Residual, HypergroupError> {
    residual_sine_with(h, f, g, &EvalOptions::default())
}

pub fn residual_sine_with(
    h: &Hypergroup,
    f: &HFunction,
    g: &HFunction,
    opts: &EvalOptions,
) -> Result<Residual, HypergroupError> {
    residual_dispatch(h, Equation::SineCosine, f, Some(g), opts)
}

/// Max residual of `g(x*y) = g(x) g(y) - f(x) f(y)`.
pub fn residual_cosine(h: &Hypergroup, f: &HFunction, g: &HFunction) -> Result<Residual, HypergroupError> {
    residual_cosine_with(h, f, g, &EvalOptions::default())
}

pub fn residual_cosine_with(
    h: &Hypergroup,
    f: &HFunction,
    g: &HFunction,
    opts: &EvalOptions,
) -> Result<Residual, HypergroupError> {
    residual_dispatch(h, Equation::CosineSine, f, Some(g), opts)
}

pub fn residual_additive_with(
    h: &Hypergroup,
    f: &HFunction,
    opts: &EvalOptions,
) -> Result<Residual, HypergroupError> {
    residual_dispatch(h, Equation::Additive, f, None, opts)
}

/// Result of a membership test.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub holds: bool,
    pub residual: Residual,
    /// Why the check failed when the residual alone does not say.
    pub reason: Option<String>,
}

fn check_from(residual: Residual, reason: Option<String>) -> Check {
    Check {
        holds: residual.pass && reason.is_none(),
        residual,
        reason,
    }
}

fn vanishes(h: &Hypergroup, f: &HFunction, opts: &EvalOptions) -> Result<bool, HypergroupError> {
    let values = f.values(h.size())?;
    Ok(match values.to_field::<CRat>() {
        Some(v) if !opts.force_float => v.iter().all(Field::is_zero),
        _ => values
            .to_field::<Complex64>()
            .expect("float")
            .iter()
            .all(|z| z.norm() <= opts.tol.atol),
    })
}

/// `g(x*y) = g(x) g(y)` with `g` not identically zero.
pub fn is_exponential(h: &Hypergroup, g: &HFunction) -> Result<Check, HypergroupError> {
    is_exponential_with(h, g, &EvalOptions::default())
}

pub fn is_exponential_with(h: &Hypergroup, g: &HFunction, opts: &EvalOptions) -> Result<Check, HypergroupError> {
    let residual = residual_dispatch(h, Equation::Exponential, g, None, opts)?;
    let reason = vanishes(h, g, opts)?.then(|| "function vanishes identically".to_string());
    Ok(check_from(residual, reason))
}

/// `f(x*y) = f(x) m(y) + f(y) m(x)`, together with `f(o) = 0`.
pub fn is_m_sine(h: &Hypergroup, f: &HFunction, m: &HFunction) -> Result<Check, HypergroupError> {
    is_m_sine_with(h, f, m, &EvalOptions::default())
}

pub fn is_m_sine_with(
    h: &Hypergroup,
    f: &HFunction,
    m: &HFunction,
    opts: &EvalOptions,
) -> Result<Check, HypergroupError> {
    let residual = residual_dispatch(h, Equation::MSine, f, Some(m), opts)?;
    let at_identity = f.eval(h.identity())?;
    let nonzero_at_identity = match &at_identity {
        crate::scalar::Scalar::Exact(z) if !opts.force_float => !Field::is_zero(z),
        other => other.norm() > opts.tol.atol,
    };
    let reason = nonzero_at_identity.then(|| format!("f(o) = {at_identity} is not 0"));
    Ok(check_from(residual, reason))
}

/// `a(x*y) = a(x) + a(y)`.
pub fn is_additive(h: &Hypergroup, f: &HFunction) -> Result<Check, HypergroupError> {
    let residual = residual_additive_with(h, f, &EvalOptions::default())?;
    Ok(check_from(residual, None))
}
