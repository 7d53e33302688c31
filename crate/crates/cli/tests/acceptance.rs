//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p mkfib-cli --test acceptance`.

use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use mkfib_core::audit::fixtures::{
    TableFixture, BINOMIAL_TABLES, FALLING_TABLES, KBINOMIAL_TABLES, RISING_TABLES,
};
use mkfib_core::audit::{run_audit, AuditConfig, KPoint, Verdict};
use mkfib_core::genfunc::transform_gf;
use mkfib_core::transforms::{
    binomial_diff_identity, falling_diff_identity, rising_even_index, w_scaling,
};
use mkfib_core::{
    binet_closed, binet_float, f_from_m, gf_expand, gf_from_rec, k_fib_spec, m_from_f,
    modified_k_fib_spec, paper_binet_verbatim, paper_gf_verbatim, term_fast, terms,
    transform_rec_spec, DirectSums, KPoly, Ring, TransformKind,
};

const K_MAX: i64 = 10;
const N_MAX: usize = 64;
const SYMBOLIC_N: usize = 16;
const GF_N: usize = 32;
const FLOAT_K_MAX: i64 = 5;
const FLOAT_N_MAX: usize = 40;
const FLOAT_TOL: f64 = 1e-9;
const FAST_NS: [u64; 7] = [0, 1, 2, 63, 64, 1000, 100_000];
const FAST_KS: [i64; 3] = [1, 2, 10];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:.0?}"))
}

fn ks() -> impl Iterator<Item = BigInt> {
    (1..=K_MAX).map(BigInt::from)
}

fn mkfib() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mkfib"))
}

fn table_matches(t: &TableFixture) -> Result<(), String> {
    let k = BigInt::from(t.k);
    let direct = DirectSums::new(&k).unwrap().prefix(t.kind, t.values.len());
    let rec = terms(&transform_rec_spec(t.kind, &k).unwrap(), t.values.len());
    for (n, &printed) in t.values.iter().enumerate() {
        let printed = BigInt::from(printed);
        ensure(direct[n] == printed && rec[n] == printed, || {
            format!(
                "{} n={n}: printed {printed}, direct {}, recurrence {}",
                t.label, direct[n], rec[n]
            )
        })?;
    }
    Ok(())
}

fn c1_tables() -> Outcome {
    let start = Instant::now();
    let tables: Vec<&TableFixture> = BINOMIAL_TABLES
        .iter()
        .chain(&RISING_TABLES)
        .chain(&FALLING_TABLES)
        .chain(&KBINOMIAL_TABLES[..1])
        .collect();
    let entries: usize = tables.iter().map(|t| t.values.len()).sum();
    for t in &tables {
        table_matches(t)?;
    }
    within(Duration::from_secs(1), start)?;
    Ok(format!("{} tables, {entries} entries", tables.len()))
}

fn c2_w_discrepancy() -> Outcome {
    let report = run_audit(&AuditConfig::default()).map_err(|e| e.to_string())?;
    let c24 = report.get("C24").ok_or("C24 missing")?;
    ensure(c24.verdict == Verdict::InfoDiscrepancy, || {
        format!("C24 verdict {}", c24.verdict)
    })?;
    let got: Vec<_> = c24
        .counterexamples
        .iter()
        .map(|c| (c.case.clone().unwrap_or_default(), c.n, c.expected.clone(), c.got.clone()))
        .collect();
    let want: Vec<_> = [
        ("W2", "96", "48"),
        ("W3", "378", "126"),
        ("W4", "1024", "256"),
        ("W5", "2250", "450"),
    ]
    .iter()
    .map(|(l, p, c)| (l.to_string(), 2, p.to_string(), c.to_string()))
    .collect();
    ensure(got == want, || format!("C24 counterexamples {got:?}"))?;
    for k in ks() {
        let direct = DirectSums::new(&k).unwrap().prefix(TransformKind::KBinomial, N_MAX + 1);
        let rec = terms(&transform_rec_spec(TransformKind::KBinomial, &k).unwrap(), N_MAX + 1);
        ensure(direct == rec, || format!("direct and recurrence disagree at k={k}"))?;
    }
    Ok("W2..W5 first diverge at n=2; direct sum and recurrence agree".into())
}

fn direct_vs_rec<R: Ring>(k: &R, count: usize) -> Result<(), String> {
    let mut sums = DirectSums::new(k).unwrap();
    for kind in TransformKind::ALL {
        let rec = terms(&transform_rec_spec(kind, k).unwrap(), count);
        ensure(sums.prefix(kind, count) == rec, || format!("{kind} k={k}"))?;
    }
    Ok(())
}

fn c3_oracles() -> Outcome {
    let start = Instant::now();
    for k in ks() {
        direct_vs_rec(&k, N_MAX + 1)?;
    }
    direct_vs_rec(&KPoly::k(), SYMBOLIC_N + 1)?;
    within(Duration::from_secs(30), start)?;
    Ok(format!(
        "4 kinds, k 1..={K_MAX}, n <= {N_MAX}; symbolic n <= {SYMBOLIC_N}"
    ))
}

type Lemma<R> = fn(&R, usize) -> mkfib_core::Result<(R, R)>;

fn lemmas_for<R: Ring>(k: &R, n_max: usize) -> Result<usize, String> {
    let mut checks = 0;
    let m = terms(&modified_k_fib_spec(k).unwrap(), n_max + 1);
    let f = terms(&k_fib_spec(k).unwrap(), n_max + 1);
    let pairs: [(&str, Lemma<R>); 4] = [
        ("binomial difference", binomial_diff_identity),
        ("falling difference", falling_diff_identity),
        ("rising even index", rising_even_index),
        ("k-binomial scaling", w_scaling),
    ];
    for n in 0..=n_max {
        for (name, lemma) in &pairs {
            let (l, r) = lemma(k, n).map_err(|e| e.to_string())?;
            ensure(l == r, || format!("{name} k={k} n={n}: {l} != {r}"))?;
            checks += 1;
        }
        if n >= 1 {
            ensure(m_from_f(k, n).unwrap() == m[n], || format!("M from F k={k} n={n}"))?;
            ensure(f_from_m(k, n).unwrap() == f[n], || format!("F from M k={k} n={n}"))?;
            checks += 2;
        }
    }
    Ok(checks)
}

fn c4_lemmas() -> Outcome {
    let mut checks = 0;
    for k in ks() {
        checks += lemmas_for(&k, N_MAX)?;
    }
    checks += lemmas_for(&KPoly::k(), SYMBOLIC_N)?;
    Ok(format!("{checks} exact checks"))
}

fn closed_matches<R: Ring>(k: &R, n_max: usize) -> Result<(), String> {
    for kind in TransformKind::ALL {
        let rec = transform_rec_spec(kind, k).unwrap();
        for (n, want) in rec.iter().take(n_max + 1).enumerate() {
            ensure(binet_closed(&rec, n) == want, || format!("{kind} k={k} n={n}"))?;
        }
    }
    Ok(())
}

/// First `(n, k, formula, truth)` in n-major order where the verbatim formula misses.
fn first_verbatim_miss(kind: TransformKind) -> Option<(usize, i64, BigInt, BigInt)> {
    for n in 1..=N_MAX {
        for k in 1..=K_MAX {
            let kb = BigInt::from(k);
            let truth = term_fast(&transform_rec_spec(kind, &kb).unwrap(), n as u64);
            let formula = paper_binet_verbatim(kind, &kb, n).unwrap();
            if formula != truth {
                return Some((n, k, formula, truth));
            }
        }
    }
    None
}

fn c5_binet() -> Outcome {
    for k in ks() {
        closed_matches(&k, N_MAX)?;
    }
    closed_matches(&KPoly::k(), SYMBOLIC_N)?;
    for kind in [TransformKind::Binomial, TransformKind::RisingK] {
        if let Some(miss) = first_verbatim_miss(kind) {
            return Err(format!("verbatim {kind} misses at {miss:?}"));
        }
    }
    let w = first_verbatim_miss(TransformKind::KBinomial);
    let want_w = Some((1, 2, BigInt::from(4), BigInt::from(8)));
    ensure(w == want_w, || format!("verbatim k-binomial first miss {w:?}"))?;
    let f = first_verbatim_miss(TransformKind::FallingK);
    let want_f = Some((2, 2, BigInt::from(34), BigInt::from(22)));
    ensure(f == want_f, || format!("verbatim falling first miss {f:?}"))?;
    Ok("closed forms exact; verbatim W misses at k=2 n=1 (4 vs 8), F at k=2 n=2 (34 vs 22)".into())
}

fn gf_round_trip<R: Ring>(k: &R) -> Result<(), String> {
    for kind in TransformKind::ALL {
        let rec = transform_rec_spec(kind, k).unwrap();
        let series = gf_expand(&gf_from_rec(&rec), GF_N + 1).map_err(|e| e.to_string())?;
        ensure(series == terms(&rec, GF_N + 1), || format!("{kind} k={k}"))?;
    }
    Ok(())
}

fn c6_gf() -> Outcome {
    for k in ks() {
        gf_round_trip(&k)?;
    }
    let x = KPoly::k();
    gf_round_trip(&x)?;
    for kind in [TransformKind::KBinomial, TransformKind::RisingK, TransformKind::FallingK] {
        let printed = paper_gf_verbatim(kind, &x).unwrap();
        ensure(printed.same_function(&transform_gf(kind, &x).unwrap()), || {
            format!("printed {kind} GF differs")
        })?;
    }
    for k in ks() {
        let printed =
            gf_expand(&paper_gf_verbatim(TransformKind::Binomial, &k).unwrap(), GF_N + 1).unwrap();
        let truth = terms(&transform_rec_spec(TransformKind::Binomial, &k).unwrap(), GF_N + 1);
        let first = printed.iter().zip(&truth).position(|(p, t)| p != t);
        ensure(first == Some(1), || {
            format!("printed binomial GF at k={k} first diverges at {first:?}")
        })?;
        if k == BigInt::from(1) {
            ensure(printed[1] == BigInt::from(2) && truth[1] == BigInt::from(4), || {
                format!("k=1 coefficient 1: printed {} vs {}", printed[1], truth[1])
            })?;
        }
    }
    let report = run_audit(&AuditConfig::default()).map_err(|e| e.to_string())?;
    let c15 = report.get("C15").ok_or("C15 missing")?;
    let cx = c15.first_counterexample().ok_or("C15 has no counterexample")?;
    ensure(
        c15.verdict == Verdict::InfoDiscrepancy
            && (cx.k, cx.n, cx.expected.as_str(), cx.got.as_str())
                == (KPoint::Numeric(1), 1, "4", "2"),
        || format!("C15 reported {} {cx:?}", c15.verdict),
    )?;
    Ok("round trips exact; printed B numerator diverges at index 1 (2 vs 4 at k=1)".into())
}

fn c7_float() -> Outcome {
    let mut worst = 0f64;
    for kind in TransformKind::ALL {
        for k in 1..=FLOAT_K_MAX {
            let rec = transform_rec_spec(kind, &BigInt::from(k)).unwrap();
            for (n, exact) in rec.iter().take(FLOAT_N_MAX + 1).enumerate() {
                let exact: f64 = exact.to_string().parse().unwrap();
                let approx = binet_float(&rec, n).map_err(|e| e.to_string())?;
                let rel = ((approx - exact) / exact).abs();
                worst = worst.max(rel);
                ensure(rel <= FLOAT_TOL, || {
                    format!("{kind} k={k} n={n}: relative error {rel:e}")
                })?;
            }
        }
    }
    Ok(format!("max relative error {worst:.3e}"))
}

fn c8_fast_path() -> Outcome {
    for k in FAST_KS {
        let k = BigInt::from(k);
        let mut recs = vec![modified_k_fib_spec(&k).unwrap()];
        recs.extend(TransformKind::ALL.iter().map(|&kind| transform_rec_spec(kind, &k).unwrap()));
        for rec in &recs {
            let mut it = rec.iter();
            let mut cur = it.next().unwrap();
            let mut at = 0u64;
            for n in FAST_NS {
                while at < n {
                    cur = it.next().unwrap();
                    at += 1;
                }
                ensure(term_fast(rec, n) == cur, || format!("{} k={k} n={n}", rec.label))?;
            }
        }
    }
    let start = Instant::now();
    let out = mkfib()
        .args(["bench", "--k", "2", "--n", "100000"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let stdout = String::from_utf8_lossy(&out.stdout);
    ensure(out.status.success() && stdout.contains("values identical: yes"), || {
        format!("bench exited {:?}: {stdout}", out.status.code())
    })?;
    within(Duration::from_secs(10), start)?;
    Ok(format!(
        "term_fast exact; bench at n=100000 took {elapsed:.2?} with identical values"
    ))
}

fn c9_determinism() -> Outcome {
    for args in [&["audit"][..], &["audit", "--format", "jsonl"][..]] {
        let run = || {
            mkfib()
                .args(args)
                .env_remove("MKFIB_COLOR")
                .env_remove("MKFIB_WIDTH")
                .output()
                .map(|o| o.stdout)
        };
        let a = run().map_err(|e| e.to_string())?;
        let b = run().map_err(|e| e.to_string())?;
        ensure(!a.is_empty() && a == b, || format!("{args:?} output differs between runs"))?;
    }
    Ok("text and jsonl reports byte-identical across runs".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("table reproduction", c1_tables),
        ("k-binomial table discrepancy", c2_w_discrepancy),
        ("direct sum equals recurrence", c3_oracles),
        ("lemma suite", c4_lemmas),
        ("Binet closed and verbatim forms", c5_binet),
        ("generating functions", c6_gf),
        ("floating-point Binet", c7_float),
        ("fast path and bench", c8_fast_path),
        ("audit determinism", c9_determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into());
            Err(msg)
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {} {name} ({secs:.2}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
