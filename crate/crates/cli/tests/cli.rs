use std::f64::consts::PI;
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use maskcheck::report::Report;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_maskcheck"))
        .args(args)
        .env_remove("MASKCHECK_MODE")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn kv(args: &[&str]) -> (Report, i32) {
    let mut full = args.to_vec();
    full.extend(["--format", "kv"]);
    let out = run(&full, "");
    let text = String::from_utf8(out.stdout).unwrap();
    (Report::parse(&text).unwrap(), out.status.code().unwrap())
}

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("maskcheck-{}-{name}", std::process::id()))
}

#[test]
fn table_matches_reference_transcripts() {
    for name in ["table_n1", "table_n2", "table_n3", "table_n5", "table_false"] {
        let input = std::fs::read_to_string(fixtures().join(format!("{name}.in"))).unwrap();
        let expected = std::fs::read(fixtures().join(format!("{name}.out"))).unwrap();
        let out = run(&["table", "--compat"], &input);
        assert_eq!(out.stdout, expected, "{name}");
    }
}

#[test]
fn table_exit_codes_and_warning() {
    let out = run(&["table", "--compat"], "2\n-1 3\n");
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["table"], "2\n-1 -1\n");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1 1/2 1/4\n-1/2 -1/4\n1/4\n[TRUE] The inequality holds\n");
    let out = run(&["table", "--compat"], "1\n-2\n");
    assert!(String::from_utf8(out.stderr).unwrap().contains("warning"));
    assert_eq!(run(&["table"], "2\n-1 x\n").status.code(), Some(3));
    assert_eq!(run(&["table"], "3\n-1\n").status.code(), Some(3));
}

#[test]
fn check_degree2_holds() {
    let (r, code) = kv(&["check", "--roots=-1,-2"]);
    assert_eq!(code, 0);
    assert_eq!(r.get("criterion"), Some("degree2"));
    assert_eq!(r.get("criterion_status"), Some("HOLDS"));
    assert_eq!(r.get("oracle_status"), Some("HOLDS"));
    assert_eq!(r.get("mode"), Some("exact"));
    assert_eq!(r.get("consistent"), Some("true"));
}

#[test]
fn check_degree3_real_fails() {
    let (r, code) = kv(&["check", "--roots", "-1, 0.3, 0.4"]);
    assert_eq!(code, 1);
    assert_eq!(r.get("criterion"), Some("degree3-real"));
    assert_eq!(r.get("criterion_status"), Some("FAILS"));
    assert_eq!(r.get("oracle_status"), Some("FAILS"));
}

#[test]
fn check_coefficients_recover_bspline() {
    let (r, code) = kv(&["check", "--coeffs", "1/4,1/2,1/4"]);
    assert_eq!(code, 0);
    assert_eq!(r.get("roots"), Some("-1;-1"));
    assert_eq!(r.get("mode"), Some("float"));
    assert_eq!(r.get("theorem"), Some("even-differences"));
    assert_eq!(r.get("theorem_status"), Some("HOLDS"));
}

#[test]
fn check_inconclusive_criterion_defers_to_oracle() {
    let (r, code) = kv(&["check", "--roots=-1,3,0.5,-2"]);
    assert_eq!(code, 2);
    assert_eq!(r.get("criterion_status"), Some("INCONCLUSIVE"));
    assert_eq!(r.get("criterion_witness"), Some("k=1"));
    assert_eq!(r.get("oracle_status"), Some("FAILS"));
}

#[test]
fn check_complex_roots() {
    let (r, code) = kv(&["check", "--roots=-1,-1+i,-1-i"]);
    assert_eq!(r.get("criterion"), Some("degree3"));
    assert_eq!(r.get("criterion_status"), r.get("oracle_status"));
    assert_eq!(code, if r.get("oracle_status") == Some("HOLDS") { 0 } else { 1 });
    let (r, _) = kv(&["check", "--roots=-1,-1+i,-1-i,2i,-2i"]);
    assert_eq!(r.get("criterion"), Some("none"));
}

#[test]
fn report_round_trips() {
    let (r, _) = kv(&["check", "--roots=-1,0,-2"]);
    assert_eq!(Report::parse(&r.to_string()).unwrap(), r);
    for key in ["roots", "criterion_margin", "oracle_max_estimate", "oracle_upper_bound", "exit_code"] {
        assert!(r.get(key).is_some(), "{key}");
    }
    let margin: f64 = r.get("oracle_margin").unwrap().parse().unwrap();
    let max: f64 = r.get("oracle_max_estimate").unwrap().parse().unwrap();
    assert_eq!(margin, 1.0 - max);
}

#[test]
fn oracle_command() {
    let (r, code) = kv(&["oracle", "--roots=-1,1/2"]);
    assert_eq!(code, 1);
    assert_eq!(r.get("oracle_status"), Some("FAILS"));
    assert!(r.get("criterion").is_none());
    let (_, code) = kv(&["oracle", "--coeffs", "0.5,0.5"]);
    assert_eq!(code, 0);
    let out = run(&["oracle", "--roots=-1,-1", "--grid", "4"], "");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_3() {
    assert_eq!(run(&["check"], "").status.code(), Some(3));
    assert_eq!(run(&["check", "--roots=-1", "--coeffs=1"], "").status.code(), Some(3));
    assert_eq!(run(&["check", "--roots=1,-1"], "").status.code(), Some(3));
    assert_eq!(run(&["check", "--roots=-1,abc"], "").status.code(), Some(3));
    assert_eq!(run(&["--mode", "exact", "check", "--coeffs=0.5,0.5"], "").status.code(), Some(3));
    assert_eq!(run(&["check", "--roots=-1", "--tol", "-1"], "").status.code(), Some(3));
    assert_eq!(run(&["frobnicate"], "").status.code(), Some(3));
    assert_eq!(run(&["--help"], "").status.code(), Some(0));
}

#[test]
fn mode_from_environment() {
    let mode = |env: Option<&str>, flag: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_maskcheck"));
        cmd.env_remove("MASKCHECK_MODE");
        if let Some(e) = env {
            cmd.env("MASKCHECK_MODE", e);
        }
        if let Some(f) = flag {
            cmd.args(["--mode", f]);
        }
        let out = cmd.args(["check", "--roots=-1,-2", "--format", "kv"]).output().unwrap();
        Report::parse(&String::from_utf8(out.stdout).unwrap()).unwrap().get("mode").unwrap().to_string()
    };
    assert_eq!(mode(None, None), "exact");
    assert_eq!(mode(Some("float"), None), "float");
    assert_eq!(mode(Some("float"), Some("exact")), "exact");
}

#[test]
fn sweep_is_deterministic_and_sound() {
    let path = temp_path("sweep.csv");
    let args = ["sweep", "--seed", "1", "--count", "100", "--output", path.to_str().unwrap()];
    let first = run(&args, "");
    assert_eq!(first.status.code(), Some(0));
    let a = std::fs::read(&path).unwrap();
    run(&args, "");
    let b = std::fs::read(&path).unwrap();
    assert_eq!(a, b);
    std::fs::remove_file(&path).unwrap();

    let text = String::from_utf8(a).unwrap();
    assert_eq!(text.lines().next(), Some(maskcheck::sweep::HEADER));
    assert_eq!(text.lines().count(), 101);
    for line in text.lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols[0], "1");
        assert_eq!(cols[5], "HOLDS");
        assert!(cols[2].starts_with("-1.0000000000000000e0;"));
    }
    let summary = String::from_utf8(first.stdout).unwrap();
    assert!(summary.contains("seed=1") && summary.contains("inconclusive_fails=0"));
}

#[test]
fn sweep_with_positive_root_finds_failures() {
    let out = run(&["sweep", "--seed", "1", "--count", "100", "--positive"], "");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().skip(1).any(|l| l.split(',').nth(5) == Some("FAILS")));
    assert!(!text.lines().skip(1).any(|l| l.contains(",HOLDS,") && l.split(',').nth(5) == Some("FAILS")));
}

#[test]
fn sweep_count_zero_is_usage_error() {
    assert_eq!(run(&["sweep", "--count", "0"], "").status.code(), Some(3));
}

#[test]
fn refine_haar_matches_sinc() {
    let path = temp_path("haar.csv");
    let out = run(&["refine", "--roots=-1", "--output", path.to_str().unwrap()], "");
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("overall: PASS"));
    let bytes = std::fs::read(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(!bytes.contains(&b'\r'));
    let text = String::from_utf8(bytes).unwrap();
    assert_eq!(text.lines().next(), Some("xi,re,im,abs"));
    assert_eq!(text.lines().count(), 1025);
    for line in text.lines().skip(1) {
        let v: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        let sinc = if v[0] == 0.0 { 1.0 } else { (PI * v[0]).sin() / (PI * v[0]) };
        assert!((v[3] - sinc.abs()).abs() <= 1e-6, "{line}");
    }
}

#[test]
fn refine_refuses_failing_mask() {
    let out = run(&["refine", "--roots=-1,1/2"], "");
    assert_ne!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8(out.stderr).unwrap().contains("sub-QMF inequality: FAIL"));
    let forced = run(&["refine", "--roots=-1,1/2", "--force", "--grid", "3"], "");
    assert_eq!(forced.status.code(), Some(0));
    assert_eq!(String::from_utf8(forced.stdout).unwrap().lines().count(), 4);
}

#[test]
fn refine_degenerate_range() {
    let out = run(&["refine", "--roots=-1,-1", "--range", "0", "0"], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "xi,re,im,abs\n0.0000000000000000e0,1.0000000000000000e0,0.0000000000000000e0,1.0000000000000000e0\n"
    );
}
