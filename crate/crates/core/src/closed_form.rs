//! Binet-type closed forms.
//!
//! For `x(n+1) = P·x(n) - Q·x(n-1)` with characteristic roots `r1 > r2`,
//! the quotient `(r1^n - r2^n)/(r1 - r2)` is the Lucas sequence `U(n)` and
//! is always integral. Every term is then `x(n) = x1·U(n) - Q·x0·U(n-1)`
//! for `n >= 1`, which never needs the roots themselves.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::sequences::{check_k, Order2Rec};
use crate::transforms::{transform_rec_spec, TransformKind};

/// Monic characteristic polynomial `x^2 - P·x + Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadChar<R> {
    pub p: R,
    pub q: R,
    /// `P^2 - 4Q`.
    pub disc: R,
}

impl<R: Ring> QuadChar<R> {
    pub fn new(p: R, q: R) -> Self {
        let disc = p.clone() * &p - &(R::from_i64(4) * &q);
        QuadChar { p, q, disc }
    }

    pub fn of(rec: &Order2Rec<R>) -> Self {
        Self::new(rec.a.clone(), -rec.b.clone())
    }
}

/// `U(n)` for parameters `(P, Q)`: `U(0) = 0`, `U(1) = 1`,
/// `U(n+1) = P·U(n) - Q·U(n-1)`.
pub fn lucas_u<R: Ring>(p: &R, q: &R, n: usize) -> R {
    let mut prev = R::zero();
    let mut cur = R::one();
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = p.clone() * &cur - &(q.clone() * &prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `U(n-1)` and `U(n)` in one pass, `n >= 1`.
fn lucas_pair<R: Ring>(p: &R, q: &R, n: usize) -> (R, R) {
    debug_assert!(n >= 1);
    let mut prev = R::zero();
    let mut cur = R::one();
    for _ in 1..n {
        let next = p.clone() * &cur - &(q.clone() * &prev);
        prev = std::mem::replace(&mut cur, next);
    }
    (prev, cur)
}

/// Exact closed form `x1·U(n) - Q·x0·U(n-1)`; `x0` at `n = 0`.
pub fn binet_closed<R: Ring>(rec: &Order2Rec<R>, n: usize) -> R {
    if n == 0 {
        return rec.x0.clone();
    }
    let ch = QuadChar::of(rec);
    let (u_prev, u) = lucas_pair(&ch.p, &ch.q, n);
    rec.x1.clone() * &u - &(ch.q * &rec.x0 * &u_prev)
}

/// `C1·r1^n + C2·r2^n` in double precision.
///
/// `C1 = (x1 - x0·r2)/(r1 - r2)`, `C2 = (x0·r1 - x1)/(r1 - r2)`.
pub fn binet_float(rec: &Order2Rec<BigInt>, n: usize) -> Result<f64> {
    let ch = QuadChar::of(rec);
    if ch.disc <= BigInt::zero() {
        return Err(Error::NonPositiveDiscriminant(ch.disc.to_string()));
    }
    let f = |v: &BigInt| v.to_f64().unwrap_or(f64::NAN);
    let (p, q, x0, x1) = (f(&ch.p), f(&ch.q), f(&rec.x0), f(&rec.x1));
    let sqrt_d = f(&ch.disc).sqrt();
    // Take the root without cancellation, get the other from r1·r2 = Q.
    let big = (p + p.signum() * sqrt_d) / 2.0;
    let small = q / big;
    let (r1, r2) = if big > small { (big, small) } else { (small, big) };
    let gap = r1 - r2;
    let c1 = (x1 - x0 * r2) / gap;
    let c2 = (x0 * r1 - x1) / gap;
    let n = i32::try_from(n).map_err(|_| Error::InvalidRange(format!("n = {n} too large")))?;
    Ok(c1 * r1.powi(n) + c2 * r2.powi(n))
}

/// Coefficients of the Binet formulas exactly as printed for each
/// transform: `c1·U(n) - c2·U(n-1)` over that transform's characteristic.
fn printed_coefficients<R: Ring>(kind: TransformKind, k: &R) -> (R, R) {
    match kind {
        TransformKind::Binomial | TransformKind::KBinomial => {
            (R::from_i64(4), R::from_i64(2) * k)
        }
        TransformKind::RisingK | TransformKind::FallingK => {
            (R::from_i64(2) * k + &R::from_i64(2), R::from_i64(2))
        }
    }
}

/// Evaluates the published Binet formula for `kind` verbatim, `n >= 1`.
///
/// This is an audit subject, not ground truth: the k-binomial and falling
/// versions do not match their own initial conditions for `k >= 2`.
pub fn paper_binet_verbatim<R: Ring>(kind: TransformKind, k: &R, n: usize) -> Result<R> {
    if n == 0 {
        return Err(Error::ZeroIndex {
            op: "paper_binet_verbatim",
        });
    }
    let ch = QuadChar::of(&transform_rec_spec(kind, k)?);
    let (c1, c2) = printed_coefficients(kind, k);
    let (u_prev, u) = lucas_pair(&ch.p, &ch.q, n);
    Ok(c1 * &u - &(c2 * &u_prev))
}

/// The Binet formula with coefficients fixed by the recurrence's own
/// initial values: `x1·U(n) - Q·x0·U(n-1)`, written out per kind.
pub fn corrected_binet<R: Ring>(kind: TransformKind, k: &R, n: usize) -> Result<R> {
    check_k(k)?;
    let rec = transform_rec_spec(kind, k)?;
    Ok(binet_closed(&rec, n))
}
