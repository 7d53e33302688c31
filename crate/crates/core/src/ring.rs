//! Exact arithmetic carriers.
//!
//! Two carriers are supported: arbitrary-precision integers (numeric mode,
//! `k` fixed to a concrete integer) and dense polynomials in the
//! indeterminate `k` with integer coefficients (symbolic mode). Everything
//! downstream is generic over [`Ring`], so a computation is always carried
//! out in exactly one mode. [`RingElem`] is the dynamically-typed union used
//! at API boundaries where the mode is only known at runtime.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::RingError;

/// Arbitrary-precision signed integer.
pub type ExactInt = BigInt;

/// Which exact carrier a value lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Numeric,
    Symbolic,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Numeric => f.write_str("numeric"),
            Mode::Symbolic => f.write_str("symbolic"),
        }
    }
}

/// A commutative ring with exact integer division.
pub trait Ring:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    const MODE: Mode;

    /// Embeds an integer constant.
    fn from_int(value: ExactInt) -> Self;

    /// Divides by `d`, failing unless `d` divides every underlying integer.
    fn exact_div_int(&self, d: &ExactInt) -> Result<Self, RingError>;

    /// The concrete integer, when in numeric mode.
    fn as_int(&self) -> Option<&ExactInt>;

    fn from_i64(value: i64) -> Self {
        Self::from_int(ExactInt::from(value))
    }

    fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }
}

impl Ring for BigInt {
    const MODE: Mode = Mode::Numeric;

    fn from_int(value: ExactInt) -> Self {
        value
    }

    fn exact_div_int(&self, d: &ExactInt) -> Result<Self, RingError> {
        if d.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let (q, r) = self.div_rem(d);
        if !r.is_zero() {
            return Err(RingError::NotDivisible {
                value: self.to_string(),
                divisor: d.to_string(),
                degree: None,
            });
        }
        Ok(q)
    }

    fn as_int(&self) -> Option<&ExactInt> {
        Some(self)
    }
}

/// Polynomial in the indeterminate `k` with integer coefficients.
///
/// Coefficients are stored in ascending degree. The highest stored
/// coefficient is always nonzero; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct KPoly {
    coeffs: Vec<ExactInt>,
}

impl KPoly {
    /// Builds a polynomial from ascending coefficients, normalizing.
    pub fn new(coeffs: Vec<ExactInt>) -> Self {
        let mut p = KPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| ExactInt::from(c)).collect())
    }

    pub fn constant(c: ExactInt) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `k`.
    pub fn k() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn coeffs(&self) -> &[ExactInt] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&ExactInt> {
        self.coeffs.last()
    }

    /// Coefficient of `k^i`; zero past the degree.
    pub fn coeff(&self, i: usize) -> ExactInt {
        self.coeffs.get(i).cloned().unwrap_or_else(ExactInt::zero)
    }

    /// Drops trailing zero coefficients.
    pub fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_normalized(&self) -> bool {
        self.coeffs.last().map_or(true, |c| !c.is_zero())
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, k: &ExactInt) -> ExactInt {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactInt::zero(), |acc, c| acc * k + c)
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    fn zip_with(&self, other: &KPoly, f: impl Fn(ExactInt, ExactInt) -> ExactInt) -> KPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        KPoly::new((0..len).map(|i| f(self.coeff(i), other.coeff(i))).collect())
    }

    fn mul_ref(&self, other: &KPoly) -> KPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return KPoly::default();
        }
        let mut out = vec![ExactInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        KPoly::new(out)
    }
}

impl fmt::Debug for KPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KPoly({self})")
    }
}

/// Descending-degree text form, e.g. `2k^4+2k^3+6k^2+4k+2`.
impl fmt::Display for KPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            if deg == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match deg {
                0 => {}
                1 => f.write_str("k")?,
                _ => write!(f, "k^{deg}")?,
            }
        }
        Ok(())
    }
}

impl Zero for KPoly {
    fn zero() -> Self {
        KPoly::default()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for KPoly {
    fn one() -> Self {
        KPoly::constant(ExactInt::one())
    }
}

impl Add for KPoly {
    type Output = KPoly;
    fn add(self, rhs: KPoly) -> KPoly {
        self.zip_with(&rhs, |a, b| a + b)
    }
}

impl<'a> Add<&'a KPoly> for KPoly {
    type Output = KPoly;
    fn add(self, rhs: &'a KPoly) -> KPoly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for KPoly {
    type Output = KPoly;
    fn sub(self, rhs: KPoly) -> KPoly {
        self.zip_with(&rhs, |a, b| a - b)
    }
}

impl<'a> Sub<&'a KPoly> for KPoly {
    type Output = KPoly;
    fn sub(self, rhs: &'a KPoly) -> KPoly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for KPoly {
    type Output = KPoly;
    fn mul(self, rhs: KPoly) -> KPoly {
        self.mul_ref(&rhs)
    }
}

impl<'a> Mul<&'a KPoly> for KPoly {
    type Output = KPoly;
    fn mul(self, rhs: &'a KPoly) -> KPoly {
        self.mul_ref(rhs)
    }
}

impl Neg for KPoly {
    type Output = KPoly;
    fn neg(self) -> KPoly {
        KPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Ring for KPoly {
    const MODE: Mode = Mode::Symbolic;

    fn from_int(value: ExactInt) -> Self {
        KPoly::constant(value)
    }

    fn exact_div_int(&self, d: &ExactInt) -> Result<Self, RingError> {
        if d.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (deg, c) in self.coeffs.iter().enumerate() {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(RingError::NotDivisible {
                    value: c.to_string(),
                    divisor: d.to_string(),
                    degree: Some(deg),
                });
            }
            out.push(q);
        }
        Ok(KPoly::new(out))
    }

    fn as_int(&self) -> Option<&ExactInt> {
        None
    }
}

/// An exact value whose carrier is chosen at runtime.
///
/// Arithmetic between a numeric and a symbolic value is rejected with
/// [`RingError::ModeMismatch`] before any computation happens.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingElem {
    Int(ExactInt),
    Poly(KPoly),
}

impl RingElem {
    pub fn mode(&self) -> Mode {
        match self {
            RingElem::Int(_) => Mode::Numeric,
            RingElem::Poly(_) => Mode::Symbolic,
        }
    }

    fn binary(
        &self,
        other: &RingElem,
        on_int: impl FnOnce(&ExactInt, &ExactInt) -> ExactInt,
        on_poly: impl FnOnce(&KPoly, &KPoly) -> KPoly,
    ) -> Result<RingElem, RingError> {
        match (self, other) {
            (RingElem::Int(a), RingElem::Int(b)) => Ok(RingElem::Int(on_int(a, b))),
            (RingElem::Poly(a), RingElem::Poly(b)) => Ok(RingElem::Poly(on_poly(a, b))),
            _ => Err(RingError::ModeMismatch {
                left: self.mode(),
                right: other.mode(),
            }),
        }
    }

    pub fn add(&self, other: &RingElem) -> Result<RingElem, RingError> {
        self.binary(other, |a, b| a + b, |a, b| a.clone() + b)
    }

    pub fn sub(&self, other: &RingElem) -> Result<RingElem, RingError> {
        self.binary(other, |a, b| a - b, |a, b| a.clone() - b)
    }

    pub fn mul(&self, other: &RingElem) -> Result<RingElem, RingError> {
        self.binary(other, |a, b| a * b, |a, b| a.clone() * b)
    }

    pub fn exact_div_int(&self, d: &ExactInt) -> Result<RingElem, RingError> {
        match self {
            RingElem::Int(a) => a.exact_div_int(d).map(RingElem::Int),
            RingElem::Poly(p) => p.exact_div_int(d).map(RingElem::Poly),
        }
    }
}

impl From<ExactInt> for RingElem {
    fn from(v: ExactInt) -> Self {
        RingElem::Int(v)
    }
}

impl From<KPoly> for RingElem {
    fn from(p: KPoly) -> Self {
        RingElem::Poly(p)
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElem::Int(v) => write!(f, "{v}"),
            RingElem::Poly(p) => write!(f, "{p}"),
        }
    }
}

/// Evaluates a symbolic value at a concrete `k`.
pub fn poly_eval(p: &KPoly, k: &ExactInt) -> ExactInt {
    p.eval(k)
}
