//! `mkfib`: generate modified k-Fibonacci-like sequences and their binomial
//! transforms, inspect closed forms, and audit published claims.

mod output;

use std::env;
use std::fmt;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use mkfib_core::audit::{render_jsonl, render_text, run_audit, AuditConfig, TextStyle};
use mkfib_core::genfunc::transform_gf;
use mkfib_core::transforms::transform_direct_split;
use mkfib_core::{
    binet_closed, binet_float, gf_expand, k_fib_spec, modified_k_fib_spec, paper_binet_verbatim,
    paper_gf_verbatim, term_fast, transform_rec_spec, DirectSums, KPoly, Order2Rec, Ring,
    TransformKind,
};

use crate::output::{OutputFormat, TermWriter};

#[derive(Parser)]
#[command(name = "mkfib", version, about = "Modified k-Fibonacci-like sequences and their binomial transforms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print terms of M(k, n) or F(k, n).
    Gen(GenArgs),
    /// Print terms of one of the four binomial-family transforms.
    Transform(TransformArgs),
    /// Print the rational generating function of a transform.
    Gf(GfArgs),
    /// Evaluate a transform term through its Binet form.
    Binet(BinetArgs),
    /// Check every registered claim and report verdicts.
    Audit(AuditArgs),
    /// Time iterative, matrix-power and direct-sum evaluation.
    Bench(BenchArgs),
}

#[derive(Args)]
struct KArgs {
    /// Integer parameter k >= 1.
    #[arg(long, value_parser = parse_k, required_unless_present = "symbolic")]
    k: Option<BigInt>,
    /// Work with k as a polynomial indeterminate.
    #[arg(long, conflicts_with = "k")]
    symbolic: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// M(k, n): M(k,0) = M(k,1) = 2.
    Modified,
    /// F(k, n): F(k,0) = 0, F(k,1) = 1.
    Kfib,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Binomial,
    Kbinomial,
    Rising,
    Falling,
}

impl From<Kind> for TransformKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Binomial => TransformKind::Binomial,
            Kind::Kbinomial => TransformKind::KBinomial,
            Kind::Rising => TransformKind::RisingK,
            Kind::Falling => TransformKind::FallingK,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Recurrence,
}

#[derive(Args)]
struct GenArgs {
    family: Family,
    #[command(flatten)]
    k: KArgs,
    #[arg(long)]
    count: usize,
    /// Compute each term with the O(log n) matrix power.
    #[arg(long)]
    fast: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
}

#[derive(Args)]
struct TransformArgs {
    kind: Kind,
    #[command(flatten)]
    k: KArgs,
    #[arg(long)]
    count: usize,
    #[arg(long, value_enum, default_value_t = Method::Recurrence)]
    method: Method,
    /// Also compute every term by the other method and require agreement.
    #[arg(long)]
    verify: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
}

#[derive(Args)]
struct GfArgs {
    kind: Kind,
    #[command(flatten)]
    k: KArgs,
    /// Also print this many series coefficients.
    #[arg(long)]
    count: Option<usize>,
    /// Also print the published form and whether it agrees.
    #[arg(long)]
    printed: bool,
}

#[derive(Args)]
struct BinetArgs {
    kind: Kind,
    #[command(flatten)]
    k: KArgs,
    #[arg(long)]
    n: usize,
    /// Exact Lucas-sequence form instead of floating-point roots.
    #[arg(long)]
    exact: bool,
    /// Evaluate the published formula verbatim (exact, n >= 1).
    #[arg(long, conflicts_with = "exact")]
    printed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Jsonl,
}

#[derive(Args)]
struct AuditArgs {
    #[arg(long, default_value_t = 1)]
    k_min: i64,
    #[arg(long, default_value_t = 10)]
    k_max: i64,
    #[arg(long, default_value_t = 64)]
    n_max: usize,
    /// Skip the polynomial-in-k checks.
    #[arg(long)]
    no_symbolic: bool,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_parser = parse_k, default_value = "2")]
    k: BigInt,
    /// Indices to evaluate, comma-separated.
    #[arg(long, value_delimiter = ',', default_value = "1000,10000,100000")]
    n: Vec<usize>,
    #[arg(long, value_enum, default_value_t = Kind::Binomial)]
    kind: Kind,
}

fn parse_k(s: &str) -> Result<BigInt, String> {
    let k: BigInt = s.trim().parse().map_err(|_| format!("'{s}' is not an integer"))?;
    if k < BigInt::from(1) {
        return Err(format!("k must be a positive integer, got {k}"));
    }
    Ok(k)
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Verification(String),
    Io(io::Error),
    Core(mkfib_core::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Verification(m) => write!(f, "verification failed: {m}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<mkfib_core::Error> for CliError {
    fn from(e: mkfib_core::Error) -> Self {
        match e {
            mkfib_core::Error::InvalidK(_)
            | mkfib_core::Error::InvalidRange(_)
            | mkfib_core::Error::ZeroIndex { .. } => CliError::Usage(e.to_string()),
            other => CliError::Core(other),
        }
    }
}

type CliResult<T = ()> = Result<T, CliError>;

fn stdout() -> BufWriter<io::StdoutLock<'static>> {
    BufWriter::new(io::stdout().lock())
}

fn family_rec<R: Ring>(family: Family, k: &R) -> CliResult<Order2Rec<R>> {
    Ok(match family {
        Family::Modified => modified_k_fib_spec(k)?,
        Family::Kfib => k_fib_spec(k)?,
    })
}

fn gen_with<R: Ring>(args: &GenArgs, k: &R) -> CliResult {
    let rec = family_rec(args.family, k)?;
    let mut w = TermWriter::new(stdout(), args.format)?;
    if args.fast {
        for n in 0..args.count {
            w.push(&term_fast(&rec, n as u64))?;
        }
    } else {
        for v in rec.iter().take(args.count) {
            w.push(&v)?;
        }
    }
    w.finish()?;
    Ok(())
}

fn reject_symbolic_bfile(format: OutputFormat, symbolic: bool) -> CliResult {
    if symbolic && format == OutputFormat::Bfile {
        return Err(CliError::Usage("b-files hold integers; use --k with --format bfile".into()));
    }
    Ok(())
}

fn cmd_gen(args: GenArgs) -> CliResult {
    reject_symbolic_bfile(args.format, args.k.symbolic)?;
    match &args.k.k {
        Some(k) => gen_with(&args, k),
        None => gen_with(&args, &KPoly::k()),
    }
}

fn transform_with<R: Ring>(args: &TransformArgs, k: &R) -> CliResult {
    let kind = TransformKind::from(args.kind);
    let rec = transform_rec_spec(kind, k)?;
    let mut sums = DirectSums::new(k)?;
    let mut by_rec = rec.iter();
    let mut w = TermWriter::new(stdout(), args.format)?;
    for n in 0..args.count {
        let value = match (args.method, args.verify) {
            (Method::Recurrence, false) => by_rec.next().expect("endless iterator"),
            (Method::Direct, false) => sums.value(kind, n),
            (method, true) => {
                let r = by_rec.next().expect("endless iterator");
                let d = sums.value(kind, n);
                if r != d {
                    return Err(CliError::Verification(format!(
                        "{kind} n={n}: direct sum {d} != recurrence {r}"
                    )));
                }
                if method == Method::Direct {
                    d
                } else {
                    r
                }
            }
        };
        w.push(&value)?;
    }
    w.finish()?;
    if args.verify {
        eprintln!(
            "verified: direct sum and recurrence agree on all {} terms",
            args.count
        );
    }
    Ok(())
}

fn cmd_transform(args: TransformArgs) -> CliResult {
    reject_symbolic_bfile(args.format, args.k.symbolic)?;
    match &args.k.k {
        Some(k) => transform_with(&args, k),
        None => transform_with(&args, &KPoly::k()),
    }
}

fn gf_with<R: Ring>(args: &GfArgs, k: &R) -> CliResult {
    let kind = TransformKind::from(args.kind);
    let gf = transform_gf(kind, k)?;
    let mut out = stdout();
    writeln!(out, "{gf}")?;
    if let Some(count) = args.count {
        let series: Vec<String> = gf_expand(&gf, count)?.iter().map(|c| c.to_string()).collect();
        writeln!(out, "series: {}", series.join(","))?;
    }
    if args.printed {
        let printed = paper_gf_verbatim(kind, k)?;
        writeln!(out, "printed: {printed}")?;
        let agrees = if printed.same_function(&gf) { "yes" } else { "no" };
        writeln!(out, "printed form agrees: {agrees}")?;
    }
    out.flush()?;
    Ok(())
}

fn cmd_gf(args: GfArgs) -> CliResult {
    match &args.k.k {
        Some(k) => gf_with(&args, k),
        None => gf_with(&args, &KPoly::k()),
    }
}

fn binet_exact<R: Ring>(args: &BinetArgs, k: &R) -> CliResult<String> {
    let kind = TransformKind::from(args.kind);
    if args.printed {
        return Ok(paper_binet_verbatim(kind, k, args.n)?.to_string());
    }
    Ok(binet_closed(&transform_rec_spec(kind, k)?, args.n).to_string())
}

fn cmd_binet(args: BinetArgs) -> CliResult {
    let value = match (&args.k.k, args.exact || args.printed) {
        (Some(k), true) => binet_exact(&args, k)?,
        (None, true) => binet_exact(&args, &KPoly::k())?,
        (Some(k), false) => {
            let rec = transform_rec_spec(TransformKind::from(args.kind), k)?;
            binet_float(&rec, args.n)?.to_string()
        }
        (None, false) => {
            return Err(CliError::Usage(
                "the floating-point Binet form needs a numeric --k (or pass --exact)".into(),
            ))
        }
    };
    let mut out = stdout();
    writeln!(out, "{value}")?;
    out.flush()?;
    Ok(())
}

fn text_style_from_env() -> TextStyle {
    let mut style = TextStyle::default();
    if let Ok(w) = env::var("MKFIB_WIDTH") {
        if let Ok(w) = w.trim().parse() {
            style.width = w;
        }
    }
    if let Ok(c) = env::var("MKFIB_COLOR") {
        style.color = matches!(c.trim(), "1" | "true" | "always" | "on");
    }
    style
}

fn cmd_audit(args: AuditArgs) -> CliResult {
    let cfg = AuditConfig::new(args.k_min, args.k_max, args.n_max, !args.no_symbolic)?;
    let report = run_audit(&cfg)?;
    let rendered = match args.format {
        ReportFormat::Text => render_text(&report, text_style_from_env()),
        ReportFormat::Jsonl => render_jsonl(&report),
    };
    let mut out = stdout();
    out.write_all(rendered.as_bytes())?;
    out.flush()?;
    if report.has_implementation_failure() {
        return Err(CliError::Verification(
            "an implementation identity failed; see the FAIL entries above".into(),
        ));
    }
    Ok(())
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

fn cmd_bench(args: BenchArgs) -> CliResult {
    let kind = TransformKind::from(args.kind);
    let rec = transform_rec_spec(kind, &args.k)?;
    let mut out = stdout();
    writeln!(out, "bench: {kind} transform, k={}", args.k)?;
    writeln!(out, "{:>10}  {:<11} {:>12}", "n", "strategy", "time (ms)")?;
    let mut all_equal = true;
    for &n in &args.n {
        let (iterative, t_iter) = timed(|| rec.iter().nth(n).expect("endless iterator"));
        let (matrix, t_mat) = timed(|| term_fast(&rec, n as u64));
        let (direct, t_direct) = timed(|| transform_direct_split(kind, &args.k, n));
        let direct = direct?;
        for (name, t) in [("iterative", t_iter), ("matrix", t_mat), ("direct-sum", t_direct)] {
            writeln!(out, "{n:>10}  {name:<11} {:>12.3}", t.as_secs_f64() * 1e3)?;
        }
        let equal = iterative == matrix && matrix == direct;
        all_equal &= equal;
        writeln!(
            out,
            "{n:>10}  values identical: {} ({} digits)",
            if equal { "yes" } else { "NO" },
            iterative.to_string().len()
        )?;
        out.flush()?;
    }
    if !all_equal {
        return Err(CliError::Verification("strategies disagree".into()));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Transform(a) => cmd_transform(a),
        Command::Gf(a) => cmd_gf(a),
        Command::Binet(a) => cmd_binet(a),
        Command::Audit(a) => cmd_audit(a),
        Command::Bench(a) => cmd_bench(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("mkfib: {e}");
            match e {
                CliError::Usage(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
