//! Numeric plumbing: exact complex rationals and double-precision complex
//! numbers behind one [`Field`] trait, plus the tagged [`Scalar`] used at API
//! boundaries.
//!
//! A pipeline runs entirely in one arithmetic mode. Entry points pick the mode
//! once (exact iff every input is exact) and convert inputs up front.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ParseError;

/// Complex number with exact rational parts.
pub type CRat = Complex<BigRational>;

/// Arithmetic mode of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Exact,
    Float,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Float => "float",
        }
    }
}

/// Mixed absolute/relative tolerance: `|a-b| <= atol + rtol * scale`.
///
/// Only consulted in float mode; exact mode compares for equality.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    pub atol: f64,
    pub rtol: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            atol: 1e-12,
            rtol: 1e-9,
        }
    }
}

impl Tolerance {
    pub fn relative(rtol: f64) -> Self {
        Tolerance {
            rtol,
            ..Tolerance::default()
        }
    }

    pub fn bound(&self, scale: f64) -> f64 {
        self.atol + self.rtol * scale
    }

    pub fn accepts(&self, diff: f64, scale: f64) -> bool {
        diff <= self.bound(scale)
    }
}

/// Real weight of a convolution measure.
#[derive(Clone, Debug, PartialEq)]
pub enum Real {
    Rational(BigRational),
    Float(f64),
}

impl Real {
    pub fn is_exact(&self) -> bool {
        matches!(self, Real::Rational(_))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Real::Rational(r) => ratio_to_f64(r),
            Real::Float(x) => *x,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Real::Rational(r) => r.is_zero(),
            Real::Float(x) => *x == 0.0,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Real::Rational(r) => r.is_negative(),
            Real::Float(x) => *x < 0.0,
        }
    }

    /// Sum of two weights; falls back to float only if either side is float.
    pub fn add(&self, other: &Real) -> Real {
        match (self, other) {
            (Real::Rational(a), Real::Rational(b)) => Real::Rational(a + b),
            _ => Real::Float(self.to_f64() + other.to_f64()),
        }
    }

    pub fn mul(&self, other: &Real) -> Real {
        match (self, other) {
            (Real::Rational(a), Real::Rational(b)) => Real::Rational(a * b),
            _ => Real::Float(self.to_f64() * other.to_f64()),
        }
    }

    pub fn one() -> Real {
        Real::Rational(BigRational::one())
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Real::Rational(r) => write!(f, "{}", ratio_string(r)),
            Real::Float(x) => write!(f, "{x:e}"),
        }
    }
}

/// A complex scalar in either arithmetic mode.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(CRat),
    Float(Complex64),
}

impl Scalar {
    pub fn rational(r: BigRational) -> Self {
        Scalar::Exact(CRat::new(r, BigRational::zero()))
    }

    pub fn int(n: i64) -> Self {
        Scalar::rational(BigRational::from_integer(n.into()))
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        Scalar::rational(BigRational::new(p.into(), q.into()))
    }

    pub fn complex_ratio(re: (i64, i64), im: (i64, i64)) -> Self {
        Scalar::Exact(CRat::new(
            BigRational::new(re.0.into(), re.1.into()),
            BigRational::new(im.0.into(), im.1.into()),
        ))
    }

    pub fn float(re: f64, im: f64) -> Self {
        Scalar::Float(Complex64::new(re, im))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn mode(&self) -> Mode {
        if self.is_exact() {
            Mode::Exact
        } else {
            Mode::Float
        }
    }

    pub fn to_c64(&self) -> Complex64 {
        match self {
            Scalar::Exact(z) => z.to_c64(),
            Scalar::Float(z) => *z,
        }
    }

    /// Explicit conversion into float mode.
    pub fn to_float(&self) -> Scalar {
        Scalar::Float(self.to_c64())
    }

    pub fn norm(&self) -> f64 {
        match self {
            Scalar::Exact(z) => z.norm(),
            Scalar::Float(z) => z.norm(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(z) => num_traits::Zero::is_zero(z),
            Scalar::Float(z) => num_traits::Zero::is_zero(z),
        }
    }

    /// The value as a member of `F`; `None` when an exact field is requested
    /// for a float scalar.
    pub fn to_field<F: Field>(&self) -> Option<F> {
        F::from_scalar(self)
    }

    /// Real part as an exact rational, if exact and purely real.
    pub fn as_real_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Exact(z) if z.im.is_zero() => Some(&z.re),
            _ => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(z) => {
                if z.im.is_zero() {
                    write!(f, "{}", z.re)
                } else {
                    write!(f, "{}{}{}i", z.re, if z.im.is_negative() { "-" } else { "+" }, z.im.abs())
                }
            }
            Scalar::Float(z) => {
                if z.im == 0.0 {
                    write!(f, "{}", z.re)
                } else {
                    write!(f, "{}{}{}i", z.re, if z.im < 0.0 { "-" } else { "+" }, z.im.abs())
                }
            }
        }
    }
}

/// Parses `re`, `re+imi`, `re-imi` or `imi`. Each part is an integer, a
/// decimal (`0.25`, `1e-3`) or a ratio `p/q`; all of these are exact.
impl FromStr for Scalar {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(ParseError::Complex(s));
        }
        let bad = || ParseError::Complex(s.clone());
        if let Some(body) = s.strip_suffix('i') {
            // Split at the last sign that is not the leading one and not part of an exponent.
            let bytes = body.as_bytes();
            let mut split = None;
            for idx in (1..bytes.len()).rev() {
                let c = bytes[idx];
                if (c == b'+' || c == b'-') && !matches!(bytes[idx - 1], b'e' | b'E') {
                    split = Some(idx);
                    break;
                }
            }
            let (re, im) = match split {
                Some(idx) => (parse_rational(&body[..idx]).ok_or_else(bad)?, &body[idx..]),
                None => (BigRational::zero(), body),
            };
            let im = match im {
                "" | "+" => BigRational::one(),
                "-" => -BigRational::one(),
                other => parse_rational(other).ok_or_else(bad)?,
            };
            Ok(Scalar::Exact(CRat::new(re, im)))
        } else {
            Ok(Scalar::rational(parse_rational(&s).ok_or_else(bad)?))
        }
    }
}

/// Parses an exact rational from `p`, `p/q` or a decimal literal.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let s = s.strip_prefix('+').unwrap_or(s);
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(BigRational::new(p, q));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(idx) => (&s[..idx], s[idx + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (negative, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{int_part}{frac_part}0").parse().ok()?;
    let digits = digits / BigInt::from(10);
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut value = if scale >= 0 {
        BigRational::from_integer(digits * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(digits, num_traits::pow(ten, (-scale) as usize))
    };
    if negative {
        value = -value;
    }
    Some(value)
}

/// `p/q` rendering used by every serialized rational.
pub fn ratio_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn ratio_to_f64(r: &BigRational) -> f64 {
    if let Some(x) = r.to_f64() {
        if x.is_finite() {
            return x;
        }
    }
    // Scale down oversized parts before converting.
    let n_bits = r.numer().bits() as i64;
    let d_bits = r.denom().bits() as i64;
    let shift_n = (n_bits - 1000).max(0) as usize;
    let shift_d = (d_bits - 1000).max(0) as usize;
    let n = (r.numer() >> shift_n).to_f64().unwrap_or(f64::NAN);
    let d = (r.denom() >> shift_d).to_f64().unwrap_or(f64::NAN);
    n / d * 2f64.powi((shift_n as i64 - shift_d as i64) as i32)
}

fn ratio_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().to_biguint()?;
    let d = r.denom().to_biguint()?;
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &sn * &sn == n && &sd * &sd == d {
        Some(BigRational::new(
            BigInt::from_biguint(Sign::Plus, sn),
            BigInt::from_biguint(Sign::Plus, sd),
        ))
    } else {
        None
    }
}

/// Arithmetic shared by the exact and float pipelines.
pub trait Field:
    Clone
    + fmt::Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const MODE: Mode;

    fn zero() -> Self;
    fn one() -> Self;
    /// The imaginary unit.
    fn i() -> Self;
    fn from_ratio(r: &BigRational) -> Self;
    fn from_real(w: &Real) -> Option<Self>;
    fn from_scalar(s: &Scalar) -> Option<Self>;
    fn to_scalar(&self) -> Scalar;
    fn to_c64(&self) -> Complex64;
    /// Modulus as f64. Nonzero exact values never round to 0.
    fn norm(&self) -> f64;
    fn is_zero(&self) -> bool;
    fn conj(&self) -> Self;
    /// Principal square root: nonnegative real part, and nonnegative
    /// imaginary part when the real part vanishes. Exact fields return `None`
    /// when the root is not a complex rational.
    fn sqrt(&self) -> Option<Self>;

    fn from_i64(n: i64) -> Self {
        Self::from_ratio(&BigRational::from_integer(n.into()))
    }

    fn is_exact() -> bool {
        Self::MODE == Mode::Exact
    }
}

impl Field for CRat {
    const MODE: Mode = Mode::Exact;

    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn i() -> Self {
        CRat::new(BigRational::zero(), BigRational::one())
    }

    fn from_ratio(r: &BigRational) -> Self {
        CRat::new(r.clone(), BigRational::zero())
    }

    fn from_real(w: &Real) -> Option<Self> {
        match w {
            Real::Rational(r) => Some(Self::from_ratio(r)),
            Real::Float(_) => None,
        }
    }

    fn from_scalar(s: &Scalar) -> Option<Self> {
        match s {
            Scalar::Exact(z) => Some(z.clone()),
            Scalar::Float(_) => None,
        }
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Exact(self.clone())
    }

    fn to_c64(&self) -> Complex64 {
        Complex64::new(ratio_to_f64(&self.re), ratio_to_f64(&self.im))
    }

    fn norm(&self) -> f64 {
        if Zero::is_zero(self) {
            return 0.0;
        }
        let n = Field::to_c64(self).norm();
        if n == 0.0 {
            f64::MIN_POSITIVE
        } else {
            n
        }
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn sqrt(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            return Some(Zero::zero());
        }
        let modulus = ratio_sqrt(&(&self.re * &self.re + &self.im * &self.im))?;
        let two = BigRational::from_integer(2.into());
        let re = ratio_sqrt(&((&modulus + &self.re) / &two))?;
        let mut im = ratio_sqrt(&((&modulus - &self.re) / &two))?;
        if self.im.is_negative() {
            im = -im;
        }
        Some(CRat::new(re, im))
    }
}

impl Field for Complex64 {
    const MODE: Mode = Mode::Float;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }

    fn i() -> Self {
        Complex64::new(0.0, 1.0)
    }

    fn from_ratio(r: &BigRational) -> Self {
        Complex64::new(ratio_to_f64(r), 0.0)
    }

    fn from_real(w: &Real) -> Option<Self> {
        Some(Complex64::new(w.to_f64(), 0.0))
    }

    fn from_scalar(s: &Scalar) -> Option<Self> {
        Some(s.to_c64())
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Float(*self)
    }

    fn to_c64(&self) -> Complex64 {
        *self
    }

    fn norm(&self) -> f64 {
        Complex64::norm(*self)
    }

    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    fn conj(&self) -> Self {
        Complex64::conj(self)
    }

    fn sqrt(&self) -> Option<Self> {
        let mut r = Complex64::sqrt(*self);
        // Signed zeros can select the lower branch on the negative real axis.
        if r.re == 0.0 {
            r.re = 0.0;
            r.im = r.im.abs();
        }
        Some(r)
    }
}

/// Values of a function over the ground set, all in one arithmetic mode.
#[derive(Clone, Debug, PartialEq)]
pub enum Values {
    Exact(Vec<CRat>),
    Float(Vec<Complex64>),
}

impl Values {
    pub fn len(&self) -> usize {
        match self {
            Values::Exact(v) => v.len(),
            Values::Float(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn mode(&self) -> Mode {
        match self {
            Values::Exact(_) => Mode::Exact,
            Values::Float(_) => Mode::Float,
        }
    }

    pub fn get(&self, idx: usize) -> Option<Scalar> {
        match self {
            Values::Exact(v) => v.get(idx).map(|z| Scalar::Exact(z.clone())),
            Values::Float(v) => v.get(idx).map(|z| Scalar::Float(*z)),
        }
    }

    /// The values in field `F`; `None` if `F` is exact and these are floats.
    pub fn to_field<F: Field>(&self) -> Option<Vec<F>> {
        match self {
            Values::Exact(v) => v.iter().map(|z| F::from_scalar(&Scalar::Exact(z.clone()))).collect(),
            Values::Float(v) => {
                if F::is_exact() {
                    None
                } else {
                    Some(v.iter().map(|z| F::from_scalar(&Scalar::Float(*z)).unwrap()).collect())
                }
            }
        }
    }

    pub fn from_field<F: Field>(values: &[F]) -> Values {
        match F::MODE {
            Mode::Exact => Values::Exact(
                values
                    .iter()
                    .map(|z| match z.to_scalar() {
                        Scalar::Exact(z) => z,
                        Scalar::Float(_) => unreachable!("exact field produced a float"),
                    })
                    .collect(),
            ),
            Mode::Float => Values::Float(values.iter().map(Field::to_c64).collect()),
        }
    }
}
