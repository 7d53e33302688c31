//! Second-order linear recurrences `x(n+1) = a·x(n) + b·x(n-1)`.

use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::ring::{ExactInt, Ring};

/// A second-order linear recurrence with its two initial values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Order2Rec<R> {
    pub a: R,
    pub b: R,
    pub x0: R,
    pub x1: R,
    pub label: String,
}

impl<R: Ring> Order2Rec<R> {
    pub fn new(a: R, b: R, x0: R, x1: R, label: impl Into<String>) -> Self {
        Order2Rec {
            a,
            b,
            x0,
            x1,
            label: label.into(),
        }
    }

    /// `a·cur + b·prev`.
    #[inline]
    pub fn step(&self, prev: &R, cur: &R) -> R {
        self.a.clone() * cur + &(self.b.clone() * prev)
    }

    /// Endless iterator over `x0, x1, x2, …`.
    pub fn iter(&self) -> Terms<'_, R> {
        Terms {
            rec: self,
            prev: None,
            cur: None,
        }
    }
}

impl<R: Ring> fmt::Display for Order2Rec<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: x(n+1) = ({})·x(n) + ({})·x(n-1), x(0) = {}, x(1) = {}",
            self.label, self.a, self.b, self.x0, self.x1
        )
    }
}

/// Streaming iterator over the terms of an [`Order2Rec`].
pub struct Terms<'a, R> {
    rec: &'a Order2Rec<R>,
    prev: Option<R>,
    cur: Option<R>,
}

impl<R: Ring> Iterator for Terms<'_, R> {
    type Item = R;

    fn next(&mut self) -> Option<R> {
        let next = match (&self.prev, &self.cur) {
            (None, None) => self.rec.x0.clone(),
            (None, Some(_)) => self.rec.x1.clone(),
            (Some(p), Some(c)) => self.rec.step(p, c),
            (Some(_), None) => unreachable!(),
        };
        self.prev = self.cur.take();
        self.cur = Some(next.clone());
        Some(next)
    }
}

pub(crate) fn check_k<R: Ring>(k: &R) -> Result<()> {
    match k.as_int() {
        Some(v) if *v < ExactInt::one() => Err(Error::InvalidK(v.to_string())),
        _ => Ok(()),
    }
}

/// `M(k, n+1) = k·M(k, n) + M(k, n-1)` with `M(k, 0) = M(k, 1) = 2`.
pub fn modified_k_fib_spec<R: Ring>(k: &R) -> Result<Order2Rec<R>> {
    check_k(k)?;
    let two = R::from_i64(2);
    Ok(Order2Rec::new(k.clone(), R::one(), two.clone(), two, format!("M(k={k})")))
}

/// `F(k, n+1) = k·F(k, n) + F(k, n-1)` with `F(k, 0) = 0`, `F(k, 1) = 1`.
pub fn k_fib_spec<R: Ring>(k: &R) -> Result<Order2Rec<R>> {
    check_k(k)?;
    Ok(Order2Rec::new(k.clone(), R::one(), R::zero(), R::one(), format!("F(k={k})")))
}

/// The first `count` terms by direct iteration.
pub fn terms<R: Ring>(rec: &Order2Rec<R>, count: usize) -> Vec<R> {
    rec.iter().take(count).collect()
}

type Mat2<R> = [[R; 2]; 2];

fn mat_mul<R: Ring>(x: &Mat2<R>, y: &Mat2<R>) -> Mat2<R> {
    let e = |i: usize, j: usize| x[i][0].clone() * &y[0][j] + &(x[i][1].clone() * &y[1][j]);
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// The `n`-th term in `O(log n)` ring multiplications.
///
/// Uses the companion matrix `C = [[a, b], [1, 0]]`: `C^n · (x1, x0)ᵀ` is
/// `(x(n+1), x(n))ᵀ`.
pub fn term_fast<R: Ring>(rec: &Order2Rec<R>, n: u64) -> R {
    if n == 0 {
        return rec.x0.clone();
    }
    let mut base: Mat2<R> = [[rec.a.clone(), rec.b.clone()], [R::one(), R::zero()]];
    let mut acc: Mat2<R> = [[R::one(), R::zero()], [R::zero(), R::one()]];
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            acc = mat_mul(&acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mat_mul(&base, &base);
        }
    }
    let [_, [c10, c11]] = acc;
    c10 * &rec.x1 + &(c11 * &rec.x0)
}

/// `2·(F(k, n) + F(k, n-1))`, for `n >= 1`.
pub fn m_from_f<R: Ring>(k: &R, n: usize) -> Result<R> {
    if n == 0 {
        return Err(Error::ZeroIndex { op: "m_from_f" });
    }
    let f = terms(&k_fib_spec(k)?, n + 1);
    Ok(R::from_i64(2) * (f[n].clone() + &f[n - 1]))
}

/// `½·Σ_{i=0}^{n-1} (-1)^i·M(k, n-i)`, for `n >= 1`.
pub fn f_from_m<R: Ring>(k: &R, n: usize) -> Result<R> {
    if n == 0 {
        return Err(Error::ZeroIndex { op: "f_from_m" });
    }
    let m = terms(&modified_k_fib_spec(k)?, n + 1);
    let alternating = (0..n).fold(R::zero(), |acc, i| {
        if i % 2 == 0 {
            acc + &m[n - i]
        } else {
            acc - &m[n - i]
        }
    });
    Ok(alternating.exact_div_int(&ExactInt::from(2))?)
}
