use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nonassoc")).args(args).env_remove("NONASSOC_SEED").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn lines(o: &Output) -> Vec<serde_json::Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).expect("json line")).collect()
}

#[test]
fn catalog_lists_builtins_and_anchors() {
    let o = run(&["catalog"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("H3 dim=27"));
    assert!(s.contains("jordan-identity ↦ "));
    assert!(s.lines().filter(|l| l.starts_with("algebra ")).count() >= 12);
}

#[test]
fn check_h3_and_h4_jordan() {
    let o = run(&["check", "--algebra", "H3", "--profile", "jordan"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["check", "--algebra", "H4", "--profile", "jordan"]);
    assert_eq!(o.status.code(), Some(0));
    let recs = lines(&o);
    let pa = recs.iter().find(|r| r["identity"] == "power-assoc(5)").unwrap();
    assert_eq!(pa["status"], "fails");
    assert_eq!(pa["expected"], "fails");
}

#[test]
fn malformed_algebra_file_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    std::fs::write(&p, r#"{"dim": 1, "table": [[0, 0, 0, "2/2"]]}"#).unwrap();
    let o = run(&["check", "--algebra", &format!("file:{}", p.display())]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("table entry 0") && err.contains("2/2"), "{err}");
    assert_eq!(run(&["check", "--algebra", "nope"]).status.code(), Some(2));
}

#[test]
fn file_algebra_checks() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("dual.json");
    std::fs::write(&p, r#"{"dim": 2, "names": ["1", "d"], "unit": 0, "table": [[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"]]}"#).unwrap();
    let out = dir.path().join("report.jsonl");
    let o = run(&["check", "--algebra", &format!("file:{}", p.display()), "--profile", "alternative", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(out).unwrap();
    assert!(text.lines().all(|l| !l.contains("\"status\":\"fails\"")), "{text}");
}

#[test]
fn demos_pass() {
    let o = run(&["demo", "fl", "--degree", "24", "--exp-check", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("x^4 + 2e"));
    let o = run(&["demo", "kalscheuer", "--w", "0", "--trials", "500"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("reduces to quaternions"));
    for d in ["haehl", "pnr", "biedenharn", "twisted"] {
        assert_eq!(run(&["demo", d, "--trials", "200"]).status.code(), Some(0), "{d}");
    }
}

#[test]
fn ruhaak_demo_reports_its_verdict() {
    let o = run(&["demo", "ruhaak"]);
    let recs = lines(&o);
    let checks: Vec<_> = recs.iter().filter(|r| r["record"] == "check").collect();
    assert_eq!(checks.len(), 2);
    let passed = checks.iter().all(|c| c["passed"] == true);
    assert_eq!(o.status.code(), Some(if passed { 0 } else { 1 }));
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(run(&["demo", "kalscheuer", "--w", "0", "--kalscheuer-convention"]).status.code(), Some(2));
    assert_eq!(run(&["demo", "haehl", "--rho", "sin"]).status.code(), Some(2));
    assert_eq!(run(&["demo", "haehl", "--alpha", "-1"]).status.code(), Some(2));
    assert_eq!(run(&["demo", "kalscheuer", "--tolerance", "0"]).status.code(), Some(2));
    assert_eq!(run(&["forms", "--algebra", "H4"]).status.code(), Some(2));
}

#[test]
fn reports_are_deterministic() {
    let a = run(&["demo", "kalscheuer", "--trials", "300", "--seed", "9"]);
    let b = Command::new(env!("CARGO_BIN_EXE_nonassoc")).args(["demo", "kalscheuer", "--trials", "300"]).env("NONASSOC_SEED", "9").output().unwrap();
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["demo", "kalscheuer", "--trials", "300", "--seed", "10"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn tolerance_override_applies() {
    let o = run(&["demo", "haehl", "--rho", "identity", "--tolerance", "1e-30", "--trials", "200"]);
    let recs = lines(&o);
    let header = &recs[0];
    assert_eq!(header["record"], "header");
    assert!(recs.iter().any(|r| r["record"] == "check" && r["detail"].as_str().unwrap().ends_with("< 1e-30")));
}

#[test]
fn forms_on_h2() {
    let o = run(&["forms", "--algebra", "H2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"nondegenerate\":true"));
}
