//! Binomial-family transforms of the modified k-Fibonacci-like sequence.
//!
//! Each transform is `t(n) = Σ_{i=0}^{n} C(n, i)·w(n, i)·M(k, i)` where the
//! weight `w(n, i)` is `1`, `k^n`, `k^i` or `k^(n-i)`. Every transform also
//! obeys a closed second-order recurrence ([`transform_rec_spec`]); the two
//! routes are independent and are cross-checked by the audit.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::ring::{ExactInt, Ring};
use crate::sequences::{check_k, modified_k_fib_spec, Order2Rec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TransformKind {
    /// Weight `1`.
    Binomial,
    /// Weight `k^n`.
    KBinomial,
    /// Weight `k^i`.
    RisingK,
    /// Weight `k^(n-i)`.
    FallingK,
}

impl TransformKind {
    pub const ALL: [TransformKind; 4] = [
        TransformKind::Binomial,
        TransformKind::KBinomial,
        TransformKind::RisingK,
        TransformKind::FallingK,
    ];

    /// Exponent of `k` in the weight of term `i` of the `n`-th sum.
    pub fn weight_exponent(self, n: usize, i: usize) -> usize {
        match self {
            TransformKind::Binomial => 0,
            TransformKind::KBinomial => n,
            TransformKind::RisingK => i,
            TransformKind::FallingK => n - i,
        }
    }

    /// One-letter name used for the printed tables (`B`, `W`, `R`, `F`).
    pub fn symbol(self) -> char {
        match self {
            TransformKind::Binomial => 'B',
            TransformKind::KBinomial => 'W',
            TransformKind::RisingK => 'R',
            TransformKind::FallingK => 'F',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TransformKind::Binomial => "binomial",
            TransformKind::KBinomial => "kbinomial",
            TransformKind::RisingK => "rising",
            TransformKind::FallingK => "falling",
        }
    }
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TransformKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "binomial" | "b" => Ok(TransformKind::Binomial),
            "kbinomial" | "k-binomial" | "w" => Ok(TransformKind::KBinomial),
            "rising" | "rising-k" | "r" => Ok(TransformKind::RisingK),
            "falling" | "falling-k" | "f" => Ok(TransformKind::FallingK),
            other => Err(format!(
                "unknown transform '{other}' (expected binomial, kbinomial, rising or falling)"
            )),
        }
    }
}

/// `C(n, i)` by the multiplicative formula; zero for `i > n`.
pub fn binomial_coeff(n: u64, i: u64) -> ExactInt {
    if i > n {
        return ExactInt::zero();
    }
    let i = i.min(n - i);
    let mut c = BigInt::one();
    for j in 0..i {
        c = (c * (n - j)) / (j + 1);
    }
    c
}

/// Row `n` of Pascal's triangle by repeated addition.
pub fn pascal_row(n: usize) -> Vec<ExactInt> {
    let mut row = vec![ExactInt::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(ExactInt::one());
        next.extend(row.windows(2).map(|w| &w[0] + &w[1]));
        next.push(ExactInt::one());
        row = next;
    }
    row
}

/// Direct weighted binomial sums with a growing cache of `M(k, ·)` and
/// powers of `k`.
///
/// The cache only ever grows, so a sweep over `n = 0, 1, 2, …` does linear
/// work per query instead of recomputing the whole prefix. A `DirectSums`
/// is owned by one task; share results, not the cache.
#[derive(Debug, Clone)]
pub struct DirectSums<R> {
    rec: Order2Rec<R>,
    m: Vec<R>,
    k_pows: Vec<R>,
    /// Pascal row `row_n`; rebuilt from row 0 if a smaller `n` is asked for.
    row: Vec<ExactInt>,
    row_n: usize,
}

impl<R: Ring> DirectSums<R> {
    pub fn new(k: &R) -> Result<Self> {
        let rec = modified_k_fib_spec(k)?;
        Ok(DirectSums {
            m: vec![rec.x0.clone(), rec.x1.clone()],
            k_pows: vec![R::one()],
            row: vec![ExactInt::one()],
            row_n: 0,
            rec,
        })
    }

    pub fn k(&self) -> &R {
        &self.rec.a
    }

    fn ensure(&mut self, n: usize) {
        while self.m.len() <= n {
            let len = self.m.len();
            let next = self.rec.step(&self.m[len - 2], &self.m[len - 1]);
            self.m.push(next);
        }
        while self.k_pows.len() <= n {
            let next = self.k_pows.last().unwrap().clone() * &self.rec.a;
            self.k_pows.push(next);
        }
    }

    fn seek_row(&mut self, n: usize) {
        if self.row_n > n {
            self.row = vec![ExactInt::one()];
            self.row_n = 0;
        }
        while self.row_n < n {
            let mut next = Vec::with_capacity(self.row.len() + 1);
            next.push(ExactInt::one());
            next.extend(self.row.windows(2).map(|w| &w[0] + &w[1]));
            next.push(ExactInt::one());
            self.row = next;
            self.row_n += 1;
        }
    }

    /// `M(k, n)`.
    pub fn m(&mut self, n: usize) -> R {
        self.ensure(n);
        self.m[n].clone()
    }

    /// `k^e`.
    pub fn k_pow(&mut self, e: usize) -> R {
        self.ensure(e);
        self.k_pows[e].clone()
    }

    /// `Σ_{i=0}^{n} C(n, i)·k^(e(n, i))·M(k, i + shift)`.
    fn weighted_sum(&mut self, kind: TransformKind, n: usize, shift: usize) -> R {
        self.ensure(n + shift);
        self.seek_row(n);
        let row = &self.row;
        let mut acc = R::zero();
        for (i, c) in row.iter().enumerate() {
            let w = &self.k_pows[kind.weight_exponent(n, i)];
            acc = acc + &(R::from_int(c.clone()) * w * &self.m[i + shift]);
        }
        acc
    }

    /// The `n`-th term of the given transform by its defining sum.
    pub fn value(&mut self, kind: TransformKind, n: usize) -> R {
        self.weighted_sum(kind, n, 0)
    }

    /// `Σ C(n, i)·k^(e(n, i))·M(k, i+1)`, the right-hand side of the
    /// difference lemmas.
    pub fn shifted_value(&mut self, kind: TransformKind, n: usize) -> R {
        self.weighted_sum(kind, n, 1)
    }

    /// First `count` terms of the transform.
    pub fn prefix(&mut self, kind: TransformKind, count: usize) -> Vec<R> {
        (0..count).map(|n| self.value(kind, n)).collect()
    }
}

/// The `n`-th transform term by direct summation.
pub fn transform_direct<R: Ring>(kind: TransformKind, k: &R, n: usize) -> Result<R> {
    Ok(DirectSums::new(k)?.value(kind, n))
}

/// The `n`-th transform term by direct summation in `O(1)` stored terms.
///
/// Binomial coefficients come from the multiplicative update
/// `C(n, i+1) = C(n, i)·(n-i)/(i+1)` rather than Pascal rows, and the
/// falling weight is folded in Horner-style, so no power table is kept.
/// Each step still multiplies two full-size integers; for `n` in the tens of
/// thousands use [`transform_direct_split`].
pub fn transform_direct_streaming<R: Ring>(kind: TransformKind, k: &R, n: usize) -> Result<R> {
    let rec = modified_k_fib_spec(k)?;
    let mut binom = BigInt::one();
    let mut k_pow = R::one();
    let mut acc = R::zero();
    for (i, m) in rec.iter().take(n + 1).enumerate() {
        let term = R::from_int(binom.clone()) * &m;
        acc = match kind {
            TransformKind::Binomial | TransformKind::KBinomial => acc + &term,
            TransformKind::RisingK => acc + &(term * &k_pow),
            TransformKind::FallingK => acc * k + &term,
        };
        if kind == TransformKind::RisingK {
            k_pow = k_pow * k;
        }
        if i < n {
            let (q, r) = (binom * (n - i)).div_rem(&BigInt::from(i + 1));
            debug_assert!(r.is_zero());
            binom = q;
        }
    }
    if kind == TransformKind::KBinomial {
        acc = acc * &k.pow(n as u64);
    }
    Ok(acc)
}

type IntMat = [[BigInt; 2]; 2];

fn int_mat_mul(x: &IntMat, y: &IntMat) -> IntMat {
    let e = |i: usize, j: usize| &x[i][0] * &y[0][j] + &x[i][1] * &y[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn int_mat_scale(x: &IntMat, s: &BigInt) -> IntMat {
    [[&x[0][0] * s, &x[0][1] * s], [&x[1][0] * s, &x[1][1] * s]]
}

fn int_mat_add(x: IntMat, y: IntMat) -> IntMat {
    let [[a, b], [c, d]] = x;
    let [[e, f], [g, h]] = y;
    [[a + e, b + f], [c + g, d + h]]
}

/// Partial products over steps `lo..hi` of the term-ratio recurrence.
struct Split {
    /// `P(hi-1)···P(lo)`.
    p: IntMat,
    /// `q(lo)···q(hi-1)`.
    q: BigInt,
    /// `Σ_{i=lo}^{hi-1} P(i)···P(lo) · q(i+1)···q(hi-1)`.
    r: IntMat,
}

fn split_range(lo: usize, hi: usize, step: &dyn Fn(usize) -> (IntMat, BigInt)) -> Split {
    if hi - lo == 1 {
        let (p, q) = step(lo);
        return Split { r: p.clone(), p, q };
    }
    let mid = lo + (hi - lo) / 2;
    let left = split_range(lo, mid, step);
    let right = split_range(mid, hi, step);
    Split {
        p: int_mat_mul(&right.p, &left.p),
        r: int_mat_add(int_mat_scale(&left.r, &right.q), int_mat_mul(&right.r, &left.p)),
        q: left.q * right.q,
    }
}

/// The `n`-th transform term by summing the defining series with binary
/// splitting.
///
/// Consecutive terms `T(i) = C(n, i)·w(n, i)·(M(k, i+1), M(k, i))` are related
/// by `T(i) = (n-i+1)/i · s · A · T(i-1)` with `A = [[k, 1], [1, 0]]` and a
/// per-kind weight ratio `s`. Summing those products over a balanced tree
/// costs `O(M(N) log N)` for `N`-bit results instead of `n` full-size
/// multiplications. Only the defining sum and `M`'s own recurrence are used.
pub fn transform_direct_split(kind: TransformKind, k: &BigInt, n: usize) -> Result<BigInt> {
    check_k(k)?;
    let one = BigInt::one();
    let v0 = [BigInt::from(2), BigInt::from(2)];
    let t0_scale = match kind {
        TransformKind::FallingK => k.pow(n as u32),
        _ => one.clone(),
    };
    let t0 = [&v0[0] * &t0_scale, &v0[1] * &t0_scale];
    let total = if n == 0 {
        t0[1].clone()
    } else {
        let companion: IntMat = [[k.clone(), one.clone()], [one.clone(), BigInt::zero()]];
        let (s_num, s_den) = match kind {
            TransformKind::Binomial | TransformKind::KBinomial => (one.clone(), one.clone()),
            TransformKind::RisingK => (k.clone(), one.clone()),
            TransformKind::FallingK => (one.clone(), k.clone()),
        };
        let step = |i: usize| {
            let scale = BigInt::from(n + 1 - i) * &s_num;
            (int_mat_scale(&companion, &scale), BigInt::from(i) * &s_den)
        };
        let Split { q, r, .. } = split_range(1, n + 1, &step);
        let numer = &q * &t0[1] + &r[1][0] * &t0[0] + &r[1][1] * &t0[1];
        numer.exact_div_int(&q)?
    };
    Ok(match kind {
        TransformKind::KBinomial => total * k.pow(n as u32),
        _ => total,
    })
}

/// The closed second-order recurrence each transform satisfies.
pub fn transform_rec_spec<R: Ring>(kind: TransformKind, k: &R) -> Result<Order2Rec<R>> {
    check_k(k)?;
    let c = |v: i64| R::from_i64(v);
    let k2 = k.clone() * k;
    let label = format!("{}(k={k})", kind.symbol());
    let rec = match kind {
        TransformKind::Binomial => Order2Rec::new(k.clone() + &c(2), -k.clone(), c(2), c(4), label),
        TransformKind::KBinomial => Order2Rec::new(
            k.clone() * &(k.clone() + &c(2)),
            -(k2.clone() * k),
            c(2),
            c(4) * k,
            label,
        ),
        TransformKind::RisingK => Order2Rec::new(k2 + &c(2), -c(1), c(2), c(2) * k + &c(2), label),
        TransformKind::FallingK => Order2Rec::new(
            c(3) * k,
            c(1) - &(c(2) * &k2),
            c(2),
            c(2) * k + &c(2),
            label,
        ),
    };
    Ok(rec)
}

/// `(b(n+1) - b(n), Σ C(n, i)·M(k, i+1))`.
pub fn binomial_diff_identity<R: Ring>(k: &R, n: usize) -> Result<(R, R)> {
    let mut sums = DirectSums::new(k)?;
    let lhs = sums.value(TransformKind::Binomial, n + 1) - &sums.value(TransformKind::Binomial, n);
    let rhs = sums.shifted_value(TransformKind::Binomial, n);
    Ok((lhs, rhs))
}

/// `(f(n+1) - k·f(n), Σ C(n, i)·k^(n-i)·M(k, i+1))`.
pub fn falling_diff_identity<R: Ring>(k: &R, n: usize) -> Result<(R, R)> {
    let mut sums = DirectSums::new(k)?;
    let lhs = sums.value(TransformKind::FallingK, n + 1)
        - &(k.clone() * &sums.value(TransformKind::FallingK, n));
    let rhs = sums.shifted_value(TransformKind::FallingK, n);
    Ok((lhs, rhs))
}

/// `(r(n), M(k, 2n))`.
pub fn rising_even_index<R: Ring>(k: &R, n: usize) -> Result<(R, R)> {
    let mut sums = DirectSums::new(k)?;
    Ok((sums.value(TransformKind::RisingK, n), sums.m(2 * n)))
}

/// `(w(n), k^n·b(n))`.
pub fn w_scaling<R: Ring>(k: &R, n: usize) -> Result<(R, R)> {
    let mut sums = DirectSums::new(k)?;
    let w = sums.value(TransformKind::KBinomial, n);
    let b = sums.value(TransformKind::Binomial, n);
    Ok((w, sums.k_pow(n) * &b))
}
