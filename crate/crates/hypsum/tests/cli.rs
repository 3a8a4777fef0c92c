use std::process::{Command, Output};

use serde_json::Value;

fn hypsum(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_hypsum"));
    c.args(args).env_remove("HYP_DIGITS");
    for (k, v) in env {
        c.env(k, v);
    }
    c.output().expect("binary runs")
}

fn text(b: &[u8]) -> String {
    String::from_utf8_lossy(b).into_owned()
}

fn report(args: &[&str]) -> (i32, Value) {
    let dir = std::env::temp_dir().join(format!("hypsum-cli-{}-{}", std::process::id(), args.join("_").replace('/', "")));
    let mut full = args.to_vec();
    let path = dir.to_str().unwrap().to_string();
    full.extend(["--report", &path]);
    let out = hypsum(&full, &[]);
    let body = std::fs::read_to_string(&dir).unwrap_or_default();
    let _ = std::fs::remove_file(&dir);
    (out.status.code().unwrap(), serde_json::from_str(&body).unwrap_or(Value::Null))
}

/// Drops the fields allowed to differ between runs.
fn stable(mut v: Value) -> Value {
    let o = v.as_object_mut().unwrap();
    o.remove("started");
    o.remove("finished");
    for r in o["results"].as_array_mut().unwrap() {
        r.as_object_mut().unwrap().remove("seconds");
    }
    v
}

#[test]
fn verify_golden_entry() {
    let out = hypsum(&["verify", "--id", "ex2.3.coth-cubed", "--digits", "50"], &[]);
    assert_eq!(out.status.code(), Some(0));
    let s = text(&out.stdout);
    let l: i64 = s.rsplit("residual_log10=").next().unwrap().trim().parse().unwrap();
    assert!(l <= -45, "{s}");
}

#[test]
fn derive_reports_match() {
    let out = hypsum(&["derive", "--id", "thm2.4", "--k", "2"], &[]);
    assert_eq!(out.status.code(), Some(0));
    assert!(text(&out.stdout).contains("MATCHES CATALOG"));
    let out = hypsum(&["derive", "--id", "thm2.1", "--k", "3", "--format", "json"], &[]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdict"], "MATCHES CATALOG");
}

#[test]
fn usage_errors_exit_2() {
    let out = hypsum(&["verify", "--id", "nosuch"], &[]);
    assert_eq!(out.status.code(), Some(2));
    let out = hypsum(&["verify", "--id", "cor2.66"], &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(text(&out.stderr).contains("did you mean `cor2.6`"), "{}", text(&out.stderr));
    for bad in ["x=0.5", "x=1e3", "x=1/0", "x=a/b"] {
        let out = hypsum(&["verify", "--id", "thm2.1", "--param", bad], &[]);
        assert_eq!(out.status.code(), Some(2), "{bad}");
    }
    assert_eq!(hypsum(&["zeta-odd", "--m", "4"], &[]).status.code(), Some(2));
    assert_eq!(hypsum(&["const", "--name", "nope", "--digits", "10"], &[]).status.code(), Some(2));
    assert_eq!(hypsum(&["frobnicate"], &[]).status.code(), Some(2));
    assert_eq!(hypsum(&["verify-all", "--jobs", "0"], &[]).status.code(), Some(2));
}

#[test]
fn digits_from_environment() {
    let out = hypsum(&["verify", "--id", "eq6.log.sinh-odd"], &[("HYP_DIGITS", "20")]);
    assert!(text(&out.stdout).contains("digits=20"));
    let out = hypsum(&["verify", "--id", "eq6.log.sinh-odd", "--digits", "25"], &[("HYP_DIGITS", "20")]);
    assert!(text(&out.stdout).contains("digits=25"));
    let out = hypsum(&["verify", "--id", "eq6.log.sinh-odd"], &[]);
    assert!(text(&out.stdout).contains("digits=50"));
    let out = hypsum(&["verify", "--id", "eq6.log.sinh-odd"], &[("HYP_DIGITS", "many")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn section_two_report() {
    let (code, v) = report(&["verify-all", "--digits", "30", "--section", "2"]);
    assert_eq!(code, 0);
    let rows = v["results"].as_array().unwrap();
    assert!(rows.iter().all(|r| r["status"] == "PASS" || r["status"] == "ERRATUM_RESOLVED"));
    assert!(rows.iter().filter(|r| r["id"].as_str().unwrap().starts_with("thm")).all(|r| r["status"] == "PASS"));
    assert_eq!(v["digits"], 30);
}

#[test]
fn section_four_has_errata() {
    let (code, v) = report(&["verify-all", "--digits", "30", "--section", "§4", "--jobs", "2"]);
    assert_eq!(code, 0);
    let rows = v["results"].as_array().unwrap();
    assert!(rows.iter().any(|r| r["status"] == "ERRATUM_RESOLVED" && r["variant"].as_u64().unwrap() > 0));
    let r = &rows[0];
    assert!(r["residual_log10"].is_i64());
    assert_eq!(r["residual_mantissa"].as_str().unwrap().len(), 4);
}

#[test]
fn empty_section() {
    let out = hypsum(&["verify-all", "--section", "7"], &[]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"], Value::Array(vec![]));
}

#[test]
fn reports_are_deterministic() {
    let args = ["verify-all", "--digits", "25", "--section", "3"];
    let (_, a) = report(&args);
    let (_, b) = report(&["verify-all", "--digits", "25", "--section", "3", "--jobs", "1"]);
    assert_eq!(stable(a), stable(b));
}

#[test]
fn csv_report() {
    let out = hypsum(&["verify-all", "--digits", "20", "--section", "1", "--format", "csv"], &[]);
    let s = text(&out.stdout);
    let mut lines = s.lines();
    assert_eq!(lines.next(), Some("id,variant,params,status,residual_log10,residual_mantissa,seconds"));
    assert!(lines.next().unwrap().starts_with("intro.sinh2,1,,ERRATUM_RESOLVED,"));
}

#[test]
fn unwritable_report_exits_3() {
    let out = hypsum(&["verify-all", "--section", "1", "--digits", "20", "--report", "/nonexistent/dir/r.json"], &[]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn zeta_and_constants() {
    let out = hypsum(&["zeta-odd", "--m", "3", "--digits", "30"], &[]);
    assert_eq!(out.status.code(), Some(0));
    assert!(text(&out.stdout).contains("1.20205690315959428539973816151"));
    let out = hypsum(&["zeta-odd", "--m", "5", "--digits", "30"], &[]);
    assert!(text(&out.stdout).contains("DEGENERATE"));
    let out = hypsum(&["const", "--name", "gamma", "--digits", "25"], &[]);
    assert!(text(&out.stdout).starts_with("5.7721566490153286060651"));
}

#[test]
fn list_filters() {
    let all = text(&hypsum(&["list"], &[]).stdout).lines().count();
    let six = text(&hypsum(&["list", "--section", "6"], &[]).stdout).lines().count();
    assert!(all >= 40 && six >= 16 && six < all);
}
