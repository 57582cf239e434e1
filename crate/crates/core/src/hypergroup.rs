//! Discrete commutative hypergroups stored as truncated convolution tables.
//!
//! The ground set is `{0, ..., nmax}`. A pair `(x, y)` is tabulated when the
//! support of `δ_x * δ_y` is known to lie inside the ground set; every check in
//! the crate quantifies over tabulated pairs only.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::HypergroupError;
use crate::exec::{self, Exec};
use crate::scalar::{CRat, Field, Mode, Real, Scalar, Tolerance, Values};

/// A finitely supported real measure, canonically ordered with no zero atoms.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteMeasure {
    atoms: Vec<(usize, Real)>,
}

impl FiniteMeasure {
    /// Sorts atoms, merges repeated elements and drops zero weights.
    pub fn new(atoms: impl IntoIterator<Item = (usize, Real)>) -> Self {
        let mut merged: BTreeMap<usize, Real> = BTreeMap::new();
        for (element, weight) in atoms {
            merged
                .entry(element)
                .and_modify(|w| *w = w.add(&weight))
                .or_insert(weight);
        }
        FiniteMeasure {
            atoms: merged.into_iter().filter(|(_, w)| !w.is_zero()).collect(),
        }
    }

    pub fn point(x: usize) -> Self {
        FiniteMeasure {
            atoms: vec![(x, Real::one())],
        }
    }

    pub fn atoms(&self) -> &[(usize, Real)] {
        &self.atoms
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.atoms.iter().map(|(e, _)| *e)
    }

    pub fn is_exact(&self) -> bool {
        self.atoms.iter().all(|(_, w)| w.is_exact())
    }

    pub fn total(&self) -> Real {
        self.atoms
            .iter()
            .fold(Real::Rational(num_rational::BigRational::default()), |acc, (_, w)| acc.add(w))
    }

    pub fn weight(&self, element: usize) -> Option<&Real> {
        self.atoms
            .binary_search_by_key(&element, |(e, _)| *e)
            .ok()
            .map(|idx| &self.atoms[idx].1)
    }

    /// Equality with float weights compared under `tol`.
    pub fn approx_eq(&self, other: &FiniteMeasure, tol: &Tolerance) -> bool {
        if self.is_exact() && other.is_exact() {
            return self == other;
        }
        let mut dense: BTreeMap<usize, (f64, f64)> = BTreeMap::new();
        for (e, w) in &self.atoms {
            dense.entry(*e).or_default().0 = w.to_f64();
        }
        for (e, w) in &other.atoms {
            dense.entry(*e).or_default().1 = w.to_f64();
        }
        dense
            .values()
            .all(|(a, b)| tol.accepts((a - b).abs(), a.abs().max(b.abs())))
    }
}

impl fmt::Display for FiniteMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, (e, w)) in self.atoms.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}: {w}")?;
        }
        write!(f, "}}")
    }
}

/// Convolution rows converted into one field, indexed by `(x, y)`.
#[derive(Clone, Debug)]
pub struct RowView<F> {
    size: usize,
    rows: Vec<Option<Vec<(usize, F)>>>,
}

impl<F: Field> RowView<F> {
    pub fn row(&self, x: usize, y: usize) -> Option<&[(usize, F)]> {
        if x >= self.size || y >= self.size {
            return None;
        }
        self.rows[x * self.size + y].as_deref()
    }

    /// `f(x*y) = Σ_z μ_{x*y}({z}) f(z)`.
    pub fn translate(&self, values: &[F], x: usize, y: usize) -> Option<F> {
        let row = self.row(x, y)?;
        Some(
            row.iter()
                .fold(F::zero(), |acc, (z, w)| acc + w.clone() * values[*z].clone()),
        )
    }

    /// `Σ_z μ_{x*y}({z}) |f(z)|`, the natural magnitude of a translate.
    pub fn translate_abs(&self, magnitudes: &[f64], x: usize, y: usize) -> Option<f64> {
        let row = self.row(x, y)?;
        Some(row.iter().map(|(z, w)| w.norm() * magnitudes[*z]).sum())
    }
}

/// A discrete commutative hypergroup truncated to `{0, ..., nmax}`.
#[derive(Clone, Debug)]
pub struct Hypergroup {
    nmax: usize,
    identity: usize,
    rows: Vec<Option<FiniteMeasure>>,
    pairs: Vec<(usize, usize)>,
    exact: bool,
    provenance: String,
}

impl Hypergroup {
    /// Builds a table from rows `(x, y, μ_{x*y})`. A row given only for
    /// `(x, y)` is mirrored to `(y, x)`. Every `(x, identity)` must be present.
    pub fn new(
        nmax: usize,
        identity: usize,
        rows: impl IntoIterator<Item = (usize, usize, FiniteMeasure)>,
        provenance: impl Into<String>,
    ) -> Result<Self, HypergroupError> {
        let size = nmax + 1;
        let check = |element: usize| {
            if element > nmax {
                Err(HypergroupError::ElementOutOfRange { element, nmax })
            } else {
                Ok(())
            }
        };
        check(identity)?;
        let mut table: Vec<Option<FiniteMeasure>> = vec![None; size * size];
        let mut given = vec![false; size * size];
        for (x, y, measure) in rows {
            check(x)?;
            check(y)?;
            for element in measure.support() {
                check(element)?;
            }
            if !given[y * size + x] {
                table[y * size + x] = Some(measure.clone());
            }
            table[x * size + y] = Some(measure);
            given[x * size + y] = true;
        }
        for x in 0..size {
            if table[x * size + identity].is_none() && table[identity * size + x].is_none() {
                return Err(HypergroupError::MissingIdentityRow { x });
            }
        }
        let pairs: Vec<(usize, usize)> = (0..size)
            .flat_map(|x| (0..size).map(move |y| (x, y)))
            .filter(|&(x, y)| table[x * size + y].is_some())
            .collect();
        let exact = table.iter().flatten().all(FiniteMeasure::is_exact);
        Ok(Hypergroup {
            nmax,
            identity,
            rows: table,
            pairs,
            exact,
            provenance: provenance.into(),
        })
    }

    pub fn nmax(&self) -> usize {
        self.nmax
    }

    /// Number of ground-set elements, `nmax + 1`.
    pub fn size(&self) -> usize {
        self.nmax + 1
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    /// True when every stored weight is an exact rational.
    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn is_tabulated(&self, x: usize, y: usize) -> bool {
        x <= self.nmax && y <= self.nmax && self.rows[x * self.size() + y].is_some()
    }

    /// All tabulated ordered pairs, in lexicographic order.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// The stored measure `μ_{x*y}`.
    pub fn convolve(&self, x: usize, y: usize) -> Result<&FiniteMeasure, HypergroupError> {
        if x > self.nmax || y > self.nmax {
            return Err(HypergroupError::UntabulatedPair { x, y });
        }
        self.rows[x * self.size() + y]
            .as_ref()
            .ok_or(HypergroupError::UntabulatedPair { x, y })
    }

    /// Bilinear extension `Σ μ(u) ν(v) μ_{u*v}`.
    pub fn convolve_measures(
        &self,
        mu: &FiniteMeasure,
        nu: &FiniteMeasure,
    ) -> Result<FiniteMeasure, HypergroupError> {
        let mut atoms = Vec::new();
        for (u, wu) in mu.atoms() {
            for (v, wv) in nu.atoms() {
                let coefficient = wu.mul(wv);
                for (z, wz) in self.convolve(*u, *v)?.atoms() {
                    atoms.push((*z, coefficient.mul(wz)));
                }
            }
        }
        Ok(FiniteMeasure::new(atoms))
    }

    /// `f(x*y)` in the arithmetic mode shared by the table and `f`.
    pub fn translate(&self, f: &HFunction, x: usize, y: usize) -> Result<Scalar, HypergroupError> {
        self.convolve(x, y)?;
        let values = f.values(self.size())?;
        Ok(match select_mode(self, &[f], false) {
            Mode::Exact => {
                let view = self.view::<CRat>().expect("exact table");
                let vals = values.to_field::<CRat>().expect("exact values");
                view.translate(&vals, x, y).expect("tabulated").to_scalar()
            }
            Mode::Float => {
                let view = self.view::<Complex64>().expect("float view");
                let vals = values.to_field::<Complex64>().expect("float values");
                view.translate(&vals, x, y).expect("tabulated").to_scalar()
            }
        })
    }

    /// The table converted into field `F`, or `None` for an exact field over
    /// a table with float weights.
    pub fn view<F: Field>(&self) -> Option<RowView<F>> {
        if F::is_exact() && !self.exact {
            return None;
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.as_ref().map(|m| {
                    m.atoms()
                        .iter()
                        .map(|(z, w)| (*z, F::from_real(w).expect("mode checked")))
                        .collect()
                })
            })
            .collect();
        Some(RowView {
            size: self.size(),
            rows,
        })
    }

    /// Exhaustive axiom check over elements `<= depth` (clamped to `nmax`).
    pub fn check_axioms(&self, depth: usize) -> AxiomReport {
        self.check_axioms_with(depth, &Tolerance::default(), Exec::default())
    }

    pub fn check_axioms_with(&self, depth: usize, tol: &Tolerance, exec: Exec) -> AxiomReport {
        let depth = depth.min(self.nmax);
        let mode = if self.exact { Mode::Exact } else { Mode::Float };
        let mut report = AxiomReport::new(mode, depth, *tol);
        let o = self.identity;
        let one = Real::one();

        for x in 0..=depth {
            for y in 0..=depth {
                let Ok(m) = self.convolve(x, y) else { continue };
                let nonneg = &mut report.nonnegativity;
                nonneg.checked += 1;
                for (z, w) in m.atoms() {
                    let bad = match w {
                        Real::Rational(_) => w.is_negative(),
                        Real::Float(v) => *v < -tol.atol,
                    };
                    if bad {
                        nonneg.fail(vec![x, y, *z], format!("weight {w} at element {z}"));
                    }
                }
                let total = m.total();
                let normalized = match &total {
                    Real::Rational(_) => total == one,
                    Real::Float(s) => tol.accepts((s - 1.0).abs(), 1.0),
                };
                report.normalization.checked += 1;
                if !normalized {
                    report
                        .normalization
                        .fail(vec![x, y], format!("weights sum to {total}"));
                }
                if x <= y {
                    if let Ok(mirror) = self.convolve(y, x) {
                        report.commutativity.checked += 1;
                        if !m.approx_eq(mirror, tol) {
                            report
                                .commutativity
                                .fail(vec![x, y], format!("{m} differs from {mirror}"));
                        }
                    }
                }
            }
            report.identity.checked += 1;
            for (a, b) in [(x, o), (o, x)] {
                match self.convolve(a, b) {
                    Ok(m) if m.approx_eq(&FiniteMeasure::point(x), tol) => {}
                    Ok(m) => report
                        .identity
                        .fail(vec![a, b], format!("{m} is not the point mass at {x}")),
                    Err(_) => report.identity.fail(vec![a, b], "row missing".to_string()),
                }
            }
        }

        let triples: Vec<(usize, usize, usize)> = (0..=depth)
            .flat_map(|x| (0..=depth).flat_map(move |y| (0..=depth).map(move |z| (x, y, z))))
            .collect();
        let outcomes = exec::map_collect(exec, &triples, |&(x, y, z)| self.associativity_cell(x, y, z, tol));
        for ((x, y, z), outcome) in triples.into_iter().zip(outcomes) {
            match outcome {
                Cell::Skipped => {}
                Cell::Pass => report.associativity.checked += 1,
                Cell::Fail(detail) => {
                    report.associativity.checked += 1;
                    report.associativity.fail(vec![x, y, z], detail);
                }
            }
        }
        report
    }

    fn associativity_cell(&self, x: usize, y: usize, z: usize, tol: &Tolerance) -> Cell {
        let (Ok(xy), Ok(yz)) = (self.convolve(x, y), self.convolve(y, z)) else {
            return Cell::Skipped;
        };
        let left = self.convolve_measures(xy, &FiniteMeasure::point(z));
        let right = self.convolve_measures(&FiniteMeasure::point(x), yz);
        match (left, right) {
            (Ok(l), Ok(r)) if l.approx_eq(&r, tol) => Cell::Pass,
            (Ok(l), Ok(r)) => Cell::Fail(format!("(x*y)*z = {l} but x*(y*z) = {r}")),
            _ => Cell::Skipped,
        }
    }
}

enum Cell {
    Skipped,
    Pass,
    Fail(String),
}

/// Maximum number of witnesses kept per axiom.
pub const MAX_WITNESSES: usize = 16;

#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct AxiomOutcome {
    pub checked: usize,
    pub failures: usize,
    pub witnesses: Vec<Witness>,
}

impl AxiomOutcome {
    pub fn pass(&self) -> bool {
        self.failures == 0
    }

    fn fail(&mut self, indices: Vec<usize>, detail: String) {
        self.failures += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(Witness { indices, detail });
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AxiomReport {
    pub mode: Mode,
    pub depth: usize,
    pub tolerance: Tolerance,
    pub nonnegativity: AxiomOutcome,
    pub normalization: AxiomOutcome,
    pub identity: AxiomOutcome,
    pub commutativity: AxiomOutcome,
    pub associativity: AxiomOutcome,
}

impl AxiomReport {
    fn new(mode: Mode, depth: usize, tolerance: Tolerance) -> Self {
        AxiomReport {
            mode,
            depth,
            tolerance,
            nonnegativity: AxiomOutcome::default(),
            normalization: AxiomOutcome::default(),
            identity: AxiomOutcome::default(),
            commutativity: AxiomOutcome::default(),
            associativity: AxiomOutcome::default(),
        }
    }

    pub fn axioms(&self) -> [(&'static str, &AxiomOutcome); 5] {
        [
            ("nonnegativity", &self.nonnegativity),
            ("normalization", &self.normalization),
            ("identity", &self.identity),
            ("commutativity", &self.commutativity),
            ("associativity", &self.associativity),
        ]
    }

    pub fn all_pass(&self) -> bool {
        self.axioms().iter().all(|(_, a)| a.pass())
    }
}

/// A parametric family of functions on the ground set.
pub trait Family: Send + Sync + fmt::Debug {
    fn family_name(&self) -> &'static str;
    fn mode(&self) -> Mode;
    /// Values at `0..len`.
    fn values(&self, len: usize) -> Result<Values, HypergroupError>;
}

#[derive(Clone, Debug)]
enum Repr {
    Table(Values),
    Family(Arc<dyn Family>),
}

/// A complex-valued function on the ground set.
#[derive(Clone, Debug)]
pub struct HFunction {
    label: String,
    repr: Repr,
}

impl HFunction {
    pub fn table(label: impl Into<String>, values: Values) -> Self {
        HFunction {
            label: label.into(),
            repr: Repr::Table(values),
        }
    }

    pub fn from_field<F: Field>(label: impl Into<String>, values: &[F]) -> Self {
        Self::table(label, Values::from_field(values))
    }

    pub fn family(label: impl Into<String>, family: Arc<dyn Family>) -> Self {
        HFunction {
            label: label.into(),
            repr: Repr::Family(family),
        }
    }

    pub fn constant(value: Scalar) -> Self {
        let label = format!("constant {value}");
        Self::family(label, Arc::new(Constant(value)))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn mode(&self) -> Mode {
        match &self.repr {
            Repr::Table(v) => v.mode(),
            Repr::Family(f) => f.mode(),
        }
    }

    pub fn family_name(&self) -> Option<&'static str> {
        match &self.repr {
            Repr::Family(f) => Some(f.family_name()),
            Repr::Table(_) => None,
        }
    }

    /// Values on `0..len`. Tables must cover the whole range.
    pub fn values(&self, len: usize) -> Result<Values, HypergroupError> {
        match &self.repr {
            Repr::Table(v) => {
                if v.len() < len {
                    return Err(HypergroupError::DomainMismatch {
                        len: v.len(),
                        expected: len,
                    });
                }
                Ok(match v {
                    Values::Exact(v) => Values::Exact(v[..len].to_vec()),
                    Values::Float(v) => Values::Float(v[..len].to_vec()),
                })
            }
            Repr::Family(f) => f.values(len),
        }
    }

    pub fn eval(&self, x: usize) -> Result<Scalar, HypergroupError> {
        Ok(self.values(x + 1)?.get(x).expect("length checked"))
    }

    /// Values converted into `F`; `Ok(None)` if `F` is exact and `self` is not.
    pub fn field_values<F: Field>(&self, len: usize) -> Result<Option<Vec<F>>, HypergroupError> {
        Ok(self.values(len)?.to_field())
    }

    /// True when every value on `0..len` is exactly zero.
    pub fn is_identically_zero(&self, len: usize) -> Result<bool, HypergroupError> {
        Ok(match self.values(len)? {
            Values::Exact(v) => v.iter().all(Field::is_zero),
            Values::Float(v) => v.iter().all(Field::is_zero),
        })
    }
}

#[derive(Debug)]
struct Constant(Scalar);

impl Family for Constant {
    fn family_name(&self) -> &'static str {
        "constant"
    }

    fn mode(&self) -> Mode {
        self.0.mode()
    }

    fn values(&self, len: usize) -> Result<Values, HypergroupError> {
        Ok(match &self.0 {
            Scalar::Exact(z) => Values::Exact(vec![z.clone(); len]),
            Scalar::Float(z) => Values::Float(vec![*z; len]),
        })
    }
}

/// Exact mode iff the table and every function are exact and float mode is
/// not forced.
pub fn select_mode(h: &Hypergroup, fns: &[&HFunction], force_float: bool) -> Mode {
    if !force_float && h.is_exact() && fns.iter().all(|f| f.mode() == Mode::Exact) {
        Mode::Exact
    } else {
        Mode::Float
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(p: i64, d: i64) -> Real {
        Real::Rational(BigRational::new(p.into(), d.into()))
    }

    /// Chebyshev table written out by hand: δ_n * δ_m = (δ_{n+m} + δ_{|n-m|}) / 2.
    fn chebyshev(nmax: usize) -> Hypergroup {
        let mut rows = Vec::new();
        for n in 0..=nmax {
            for m in n..=nmax - n {
                let measure = if n == 0 {
                    FiniteMeasure::point(m)
                } else {
                    FiniteMeasure::new([(n + m, q(1, 2)), (m - n, q(1, 2))])
                };
                rows.push((n, m, measure));
            }
        }
        Hypergroup::new(nmax, 0, rows, "chebyshev").unwrap()
    }

    #[test]
    fn measure_is_canonical() {
        let m = FiniteMeasure::new([(3, q(1, 4)), (1, q(1, 4)), (3, q(1, 2)), (2, q(0, 1))]);
        assert_eq!(m.atoms(), &[(1, q(1, 4)), (3, q(3, 4))]);
    }

    #[test]
    fn convolve_examples() {
        let h = chebyshev(10);
        assert_eq!(
            h.convolve(1, 1).unwrap(),
            &FiniteMeasure::new([(0, q(1, 2)), (2, q(1, 2))])
        );
        assert_eq!(
            h.convolve(2, 3).unwrap(),
            &FiniteMeasure::new([(1, q(1, 2)), (5, q(1, 2))])
        );
        assert_eq!(h.convolve(7, 0).unwrap(), &FiniteMeasure::point(7));
        assert_eq!(
            h.convolve(6, 5).unwrap_err(),
            HypergroupError::UntabulatedPair { x: 6, y: 5 }
        );
    }

    #[test]
    fn translate_examples() {
        let h = chebyshev(10);
        let squares = HFunction::from_field(
            "n^2",
            &(0..=10).map(|n| CRat::from_i64(n * n)).collect::<Vec<_>>(),
        );
        assert_eq!(h.translate(&squares, 1, 1).unwrap(), Scalar::int(2));
        assert_eq!(h.translate(&squares, 4, 0).unwrap(), Scalar::int(16));
        let one = HFunction::constant(Scalar::int(1));
        for &(x, y) in h.pairs() {
            assert_eq!(h.translate(&one, x, y).unwrap(), Scalar::int(1));
        }
    }

    #[test]
    fn convolve_measures_examples() {
        let h = chebyshev(10);
        let mu = FiniteMeasure::new([(0, q(1, 2)), (2, q(1, 2))]);
        assert_eq!(
            h.convolve_measures(&mu, &FiniteMeasure::point(1)).unwrap(),
            FiniteMeasure::new([(1, q(3, 4)), (3, q(1, 4))])
        );
        assert_eq!(
            h.convolve_measures(&FiniteMeasure::point(0), &mu).unwrap(),
            mu
        );
        for &(x, y) in h.pairs() {
            assert_eq!(
                &h.convolve_measures(&FiniteMeasure::point(x), &FiniteMeasure::point(y))
                    .unwrap(),
                h.convolve(x, y).unwrap()
            );
        }
    }

    #[test]
    fn chebyshev_axioms_pass_exactly() {
        let report = chebyshev(20).check_axioms(10);
        assert_eq!(report.mode, Mode::Exact);
        assert!(report.all_pass(), "{report:?}");
        assert!(report.associativity.checked > 1000);
    }

    fn planted(measure_11: FiniteMeasure) -> Hypergroup {
        Hypergroup::new(
            2,
            0,
            [
                (0, 0, FiniteMeasure::point(0)),
                (0, 1, FiniteMeasure::point(1)),
                (0, 2, FiniteMeasure::point(2)),
                (1, 1, measure_11),
            ],
            "planted",
        )
        .unwrap()
    }

    #[test]
    fn planted_negative_weight_is_witnessed() {
        let h = planted(FiniteMeasure::new([(0, q(-1, 10)), (2, q(11, 10))]));
        let report = h.check_axioms(2);
        assert!(!report.nonnegativity.pass());
        assert_eq!(report.nonnegativity.witnesses[0].indices, vec![1, 1, 0]);
        assert!(report.normalization.pass());
    }

    #[test]
    fn planted_bad_normalization_is_witnessed() {
        let h = planted(FiniteMeasure::new([(0, q(1, 2)), (2, q(2, 5))]));
        let report = h.check_axioms(2);
        assert!(report.nonnegativity.pass());
        assert!(!report.normalization.pass());
        assert_eq!(report.normalization.witnesses[0].indices, vec![1, 1]);
        assert!(report.normalization.witnesses[0].detail.contains("9/10"));
    }

    #[test]
    fn asymmetric_rows_fail_commutativity() {
        let h = Hypergroup::new(
            2,
            0,
            [
                (0, 0, FiniteMeasure::point(0)),
                (0, 1, FiniteMeasure::point(1)),
                (0, 2, FiniteMeasure::point(2)),
                (1, 1, FiniteMeasure::point(2)),
                (1, 2, FiniteMeasure::point(0)),
                (2, 1, FiniteMeasure::point(1)),
            ],
            "asymmetric",
        )
        .unwrap();
        assert!(!h.check_axioms(2).commutativity.pass());
    }

    #[test]
    fn missing_identity_row_is_rejected() {
        let err = Hypergroup::new(
            1,
            0,
            [(0, 0, FiniteMeasure::point(0)), (1, 1, FiniteMeasure::point(0))],
            "broken",
        )
        .unwrap_err();
        assert_eq!(err, HypergroupError::MissingIdentityRow { x: 1 });
    }

    #[test]
    fn out_of_range_support_is_rejected() {
        let err = Hypergroup::new(
            1,
            0,
            [(0, 0, FiniteMeasure::point(0)), (0, 1, FiniteMeasure::point(3))],
            "broken",
        )
        .unwrap_err();
        assert_eq!(err, HypergroupError::ElementOutOfRange { element: 3, nmax: 1 });
    }

    #[test]
    fn float_tables_compare_with_tolerance() {
        let rows = [
            (0, 0, FiniteMeasure::point(0)),
            (0, 1, FiniteMeasure::point(1)),
            (0, 2, FiniteMeasure::point(2)),
            (
                1,
                1,
                FiniteMeasure::new([(0, Real::Float(0.5 + 1e-15)), (2, Real::Float(0.5))]),
            ),
        ];
        let h = Hypergroup::new(2, 0, rows, "float").unwrap();
        assert!(!h.is_exact());
        let report = h.check_axioms(2);
        assert_eq!(report.mode, Mode::Float);
        assert!(report.all_pass());
    }
}
