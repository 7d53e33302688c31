//! Rational generating functions in a formal variable `x`.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::sequences::Order2Rec;
use crate::transforms::{transform_rec_spec, TransformKind};

/// Polynomial in `x` with ring coefficients, ascending powers, no trailing
/// zero coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> XPoly<R> {
    pub fn new(coeffs: Vec<R>) -> Self {
        let mut p = XPoly { coeffs };
        while p.coeffs.last().is_some_and(Zero::is_zero) {
            p.coeffs.pop();
        }
        p
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of `x^i`; zero past the degree.
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn mul(&self, other: &XPoly<R>) -> XPoly<R> {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return XPoly::new(Vec::new());
        }
        let mut out = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                let slot = std::mem::replace(&mut out[i + j], R::zero());
                out[i + j] = slot + &(a.clone() * b);
            }
        }
        XPoly::new(out)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> XPoly<S> {
        XPoly::new(self.coeffs.iter().map(f).collect())
    }
}

/// Splits a rendered coefficient into (negative?, magnitude text).
fn signed_text<R: Ring>(c: &R) -> (bool, String) {
    let s = c.to_string();
    match s.strip_prefix('-') {
        Some(_) => (true, (-c.clone()).to_string()),
        None => (false, s),
    }
}

impl<R: Ring> fmt::Display for XPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = signed_text(c);
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if deg == 0 {
                f.write_str(&mag)?;
                continue;
            }
            if mag != "1" {
                if mag.contains(['+', '-']) {
                    write!(f, "({mag})")?;
                } else {
                    f.write_str(&mag)?;
                }
            }
            match deg {
                1 => f.write_str("x")?,
                _ => write!(f, "x^{deg}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `num(x) / den(x)`, kept unreduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF<R> {
    pub num: XPoly<R>,
    pub den: XPoly<R>,
}

impl<R: Ring> RationalGF<R> {
    pub fn new(num: XPoly<R>, den: XPoly<R>) -> Self {
        RationalGF { num, den }
    }

    /// Equality as rational functions: `num1·den2 = num2·den1`.
    pub fn same_function(&self, other: &RationalGF<R>) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> RationalGF<S> {
        RationalGF::new(self.num.map(&f), self.den.map(&f))
    }
}

impl<R: Ring> fmt::Display for RationalGF<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// `(x0 + (x1 - a·x0)·x) / (1 - a·x - b·x^2)`.
pub fn gf_from_rec<R: Ring>(rec: &Order2Rec<R>) -> RationalGF<R> {
    let num = XPoly::new(vec![
        rec.x0.clone(),
        rec.x1.clone() - &(rec.a.clone() * &rec.x0),
    ]);
    let den = XPoly::new(vec![R::one(), -rec.a.clone(), -rec.b.clone()]);
    RationalGF::new(num, den)
}

/// First `count` power-series coefficients.
///
/// `c(n) = num(n) - Σ_{j>=1} den(j)·c(n-j)`, which requires a unit
/// constant term in the denominator.
pub fn gf_expand<R: Ring>(gf: &RationalGF<R>, count: usize) -> Result<Vec<R>> {
    let den = gf.den.coeffs();
    match den.first() {
        Some(c) if c.is_one() => {}
        other => {
            let shown = other.map_or_else(|| "0".to_string(), |c| c.to_string());
            return Err(Error::NonUnitDenominator(shown));
        }
    }
    let mut out: Vec<R> = Vec::with_capacity(count);
    for n in 0..count {
        let mut c = gf.num.coeff(n);
        for (j, d) in den.iter().enumerate().skip(1).take(n) {
            c = c - &(d.clone() * &out[n - j]);
        }
        out.push(c);
    }
    Ok(out)
}

/// The generating function for `kind` exactly as published.
///
/// The binomial numerator is printed as `2(1 - 2kx)`, which disagrees with
/// the series; the others match the recurrence-derived forms.
pub fn paper_gf_verbatim<R: Ring>(kind: TransformKind, k: &R) -> Result<RationalGF<R>> {
    crate::sequences::check_k(k)?;
    let c = |v: i64| R::from_i64(v);
    let k2 = k.clone() * k;
    let (num, den) = match kind {
        TransformKind::Binomial => (
            vec![c(2), -(c(4) * k)],
            vec![c(1), -(k.clone() + &c(2)), k.clone()],
        ),
        TransformKind::KBinomial => (
            vec![c(2), -(c(2) * &k2)],
            vec![c(1), -(k.clone() * &(k.clone() + &c(2))), k2.clone() * k],
        ),
        TransformKind::RisingK => (
            vec![c(2), -(c(2) * &k2 - &(c(2) * k) + &c(2))],
            vec![c(1), -(k2 + &c(2)), c(1)],
        ),
        TransformKind::FallingK => (
            vec![c(2), c(2) - &(c(4) * k)],
            vec![c(1), -(c(3) * k), c(2) * &k2 - &c(1)],
        ),
    };
    Ok(RationalGF::new(XPoly::new(num), XPoly::new(den)))
}

/// [`gf_from_rec`] applied to the closed recurrence of `kind`.
pub fn transform_gf<R: Ring>(kind: TransformKind, k: &R) -> Result<RationalGF<R>> {
    Ok(gf_from_rec(&transform_rec_spec(kind, k)?))
}
