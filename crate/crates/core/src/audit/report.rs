use std::fmt::Write as _;

use super::{AuditReport, Verdict};

/// Presentation knobs for the human-readable report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TextStyle {
    /// Longest value printed before eliding the middle; 0 disables eliding.
    pub width: usize,
    /// ANSI colors on verdicts.
    pub color: bool,
}

impl Default for TextStyle {
    fn default() -> Self {
        TextStyle {
            width: 60,
            color: false,
        }
    }
}

fn elide(s: &str, width: usize) -> String {
    if width == 0 || s.len() <= width || width < 8 {
        return s.to_string();
    }
    let keep = (width - 3) / 2;
    format!("{}...{} ({} chars)", &s[..keep], &s[s.len() - keep..], s.len())
}

fn paint(verdict: Verdict, color: bool) -> String {
    let text = format!("{:<16}", verdict.to_string());
    if !color {
        return text;
    }
    let code = match verdict {
        Verdict::Pass => "32",
        Verdict::Fail => "31",
        Verdict::InfoDiscrepancy => "33",
    };
    format!("\x1b[{code}m{text}\x1b[0m")
}

/// Plain-text report, one block per claim.
pub fn render_text(report: &AuditReport, style: TextStyle) -> String {
    let cfg = &report.config;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "audit: k in {}..={}, n <= {}, symbolic {}",
        cfg.k_min,
        cfg.k_max,
        cfg.n_max,
        if cfg.symbolic { "on" } else { "off" }
    );
    for r in &report.results {
        let _ = writeln!(
            out,
            "{} {} {} [{} checks]",
            r.id,
            paint(r.verdict, style.color),
            r.description,
            r.checked
        );
        let _ = writeln!(out, "    source: {}", r.citation);
        for cx in &r.counterexamples {
            let label = if r.verdict == Verdict::Pass { "sample" } else { "counterexample" };
            let (exp_name, got_name) = match r.verdict {
                Verdict::InfoDiscrepancy if r.id == "C23" || r.id == "C24" => ("printed", "computed"),
                _ => ("expected", "got"),
            };
            let case = cx.case.as_deref().map(|c| format!("{c} ")).unwrap_or_default();
            let _ = writeln!(
                out,
                "    {label}: {case}k={} n={} {exp_name}={} {got_name}={}",
                cx.k,
                cx.n,
                elide(&cx.expected, style.width),
                elide(&cx.got, style.width)
            );
        }
        if let Some(note) = &r.note {
            let _ = writeln!(out, "    note: {note}");
        }
    }
    let s = report.summary();
    let _ = writeln!(
        out,
        "summary: {} pass, {} fail, {} info-discrepancy (discrepancies indict the published text, not the implementation)",
        s.pass, s.fail, s.info_discrepancy
    );
    out
}

/// One JSON object per claim, newline-terminated.
pub fn render_jsonl(report: &AuditReport) -> String {
    let mut out = String::new();
    for r in &report.results {
        out.push_str(&serde_json::to_string(r).expect("claim results serialize"));
        out.push('\n');
    }
    out
}
