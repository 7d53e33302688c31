use std::process::{Command, Output};

fn mkfib(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mkfib"))
        .args(args)
        .env_remove("MKFIB_COLOR")
        .env_remove("MKFIB_WIDTH")
        .output()
        .expect("binary runs")
}

fn stdout_ok(args: &[&str]) -> String {
    let out = mkfib(args);
    assert!(
        out.status.success(),
        "{args:?} exited {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn gen_terms() {
    assert_eq!(stdout_ok(&["gen", "modified", "--k", "2", "--count", "4"]), "2,2,6,14\n");
    assert_eq!(stdout_ok(&["gen", "kfib", "--k", "1", "--count", "5"]), "0,1,1,2,3\n");
    assert_eq!(
        stdout_ok(&["gen", "modified", "--k", "1", "--count", "2", "--format", "bfile"]),
        "0 2\n1 2\n"
    );
    assert_eq!(
        stdout_ok(&["gen", "modified", "--symbolic", "--count", "4"]),
        "2,2,2k+2,2k^2+2k+2\n"
    );
}

#[test]
fn gen_fast_matches_iteration() {
    let slow = stdout_ok(&["gen", "modified", "--k", "3", "--count", "80"]);
    let fast = stdout_ok(&["gen", "modified", "--k", "3", "--count", "80", "--fast"]);
    assert_eq!(slow, fast);
}

#[test]
fn transform_terms() {
    assert_eq!(
        stdout_ok(&["transform", "falling", "--k", "4", "--count", "6"]),
        "2,10,58,386,2834,22042\n"
    );
    assert_eq!(
        stdout_ok(&["transform", "binomial", "--k", "5", "--count", "6", "--method", "direct"]),
        "2,4,18,106,652,4034\n"
    );
    let out = mkfib(&["transform", "kbinomial", "--k", "2", "--count", "3", "--verify"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "2,8,48\n");
    assert!(String::from_utf8_lossy(&out.stderr).contains("verified"));
}

#[test]
fn csv_and_jsonl() {
    assert_eq!(
        stdout_ok(&["transform", "rising", "--k", "2", "--count", "3", "--format", "csv"]),
        "n,value\n0,2\n1,6\n2,34\n"
    );
    let jsonl = stdout_ok(&["gen", "modified", "--k", "2", "--count", "2", "--format", "json-lines"]);
    let first: serde_json::Value = serde_json::from_str(jsonl.lines().next().unwrap()).unwrap();
    assert_eq!(first["index"], 0);
    assert_eq!(first["value"], "2");
}

#[test]
fn bfile_round_trip() {
    let plain = stdout_ok(&["transform", "binomial", "--k", "3", "--count", "30"]);
    let bfile = stdout_ok(&["transform", "binomial", "--k", "3", "--count", "30", "--format", "bfile"]);
    let mut values = Vec::new();
    for (i, line) in bfile.lines().enumerate() {
        let (n, v) = line.split_once(' ').unwrap();
        assert_eq!(n.parse::<usize>().unwrap(), i);
        values.push(v);
    }
    assert_eq!(values.join(","), plain.trim_end());
}

#[test]
fn generating_functions() {
    let out = stdout_ok(&["gf", "rising", "--symbolic"]);
    assert_eq!(out.lines().next().unwrap(), "(2 - (2k^2-2k+2)x) / (1 - (k^2+2)x + x^2)");
    let out = stdout_ok(&["gf", "binomial", "--k", "1", "--count", "4", "--printed"]);
    assert!(out.contains("series: 2,4,10,26"));
    assert!(out.contains("printed form agrees: no"));
    let out = stdout_ok(&["gf", "falling", "--symbolic", "--printed"]);
    assert!(out.contains("printed form agrees: yes"));
}

#[test]
fn binet_values() {
    assert_eq!(stdout_ok(&["binet", "binomial", "--k", "2", "--n", "5", "--exact"]), "464\n");
    assert_eq!(stdout_ok(&["binet", "kbinomial", "--k", "2", "--n", "1", "--printed"]), "4\n");
    let float: f64 = stdout_ok(&["binet", "binomial", "--k", "2", "--n", "5"]).trim().parse().unwrap();
    assert!((float - 464.0).abs() < 1e-9 * 464.0);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["gen", "modified", "--k", "0", "--count", "3"][..],
        &["gen", "modified", "--count", "3"],
        &["gen", "modified", "--k", "2", "--symbolic", "--count", "3"],
        &["gen", "modified", "--symbolic", "--count", "3", "--format", "bfile"],
        &["binet", "binomial", "--symbolic", "--n", "3"],
        &["binet", "binomial", "--k", "2", "--n", "0", "--printed"],
        &["audit", "--k-min", "0"],
        &["transform", "nonsense", "--k", "2", "--count", "3"],
    ] {
        assert_eq!(mkfib(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn audit_exit_and_summary() {
    let out = stdout_ok(&["audit", "--k-max", "5", "--n-max", "32"]);
    assert!(out.contains("summary: 22 pass, 0 fail, 4 info-discrepancy"));
    let jsonl = stdout_ok(&["audit", "--k-max", "3", "--n-max", "8", "--no-symbolic", "--format", "jsonl"]);
    assert_eq!(jsonl.lines().count(), 26);
}

#[test]
fn audit_color_and_width_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_mkfib"))
        .args(["audit", "--k-max", "3", "--n-max", "8"])
        .env("MKFIB_COLOR", "1")
        .output()
        .unwrap();
    assert!(String::from_utf8_lossy(&out.stdout).contains("\x1b["));
}

#[test]
fn deterministic_output() {
    let args = ["transform", "falling", "--symbolic", "--count", "12"];
    assert_eq!(stdout_ok(&args), stdout_ok(&args));
}

#[test]
fn bench_reports_equality() {
    let out = stdout_ok(&["bench", "--k", "3", "--n", "10,500", "--kind", "rising"]);
    assert_eq!(out.matches("values identical: yes").count(), 2);
}
