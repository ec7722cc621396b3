use std::process::{Command, Output};

use serde_json::Value;

const C1: &str = r#"[["1","a","1"],["1","a","0"]]"#;
const C3: &str = r#"[["1","0","0","0","a^3","a^6","a^12"],["0","1","0","0","a^6","a^12","0"],["0","0","1","0","a^12","0","a^3"],["0","0","0","1","0","a^3","a^6"]]"#;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rankweight")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn coeffs(v: &Value) -> Vec<i64> {
    v["coeffs"].as_array().unwrap().iter().map(|c| c.as_str().unwrap().parse().unwrap()).collect()
}

#[test]
fn verify_c1_passes() {
    let out = run(&["verify", "--field", "2,2", "--generator", C1]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    for check in v["checks"].as_array().unwrap() {
        assert_eq!(check["pass"], true, "{check}");
    }
}

#[test]
fn enumerate_c1() {
    let v = json(&run(&["enumerate", "--field", "2,2", "--generator", C1]));
    assert_eq!(coeffs(&v["rank"]), [1, 3, 12, 0]);
    assert_eq!(coeffs(&v["hamming"]), [1, 3, 3, 9]);
}

#[test]
fn macwilliams_c3() {
    let out = run(&["macwilliams", "--field", "2,4", "--generator", C3]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(coeffs(&v["rank"]["input"]), [1, 0, 105, 7350, 58080, 0, 0, 0]);
    assert_eq!(coeffs(&v["rank"]["output"]), [1, 0, 0, 465, 3630, 0, 0, 0]);
    assert_eq!(v["rank"]["kernel_agrees"], true);
}

#[test]
fn dual_of_c3_matches_transform() {
    let v = json(&run(&["dual", "--field", "2,4", "--generator", C3, "--metric", "rank"]));
    assert_eq!(coeffs(&v["rank"]), [1, 0, 0, 465, 3630, 0, 0, 0]);
}

#[test]
fn zero_code_enumerates_to_x_pow_n() {
    let out = run(&["enumerate", "--code", r#"{"field":{"p":3,"s":1,"m":2},"n":4,"generator":[]}"#]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(coeffs(&v["rank"]), [1, 0, 0, 0, 0]);
    assert_eq!(coeffs(&v["hamming"]), [1, 0, 0, 0, 0]);
}

#[test]
fn mrd_from_parameters() {
    let v = json(&run(&["mrd", "--q", "2", "--m", "4", "--n", "4", "--k", "2"]));
    assert_eq!(v["d"], 3);
    assert_eq!(coeffs(&v["rank"]), [1, 0, 0, 225, 30]);
}

#[test]
fn moments_both_sides_agree() {
    let v = json(&run(&["moments", "--field", "2,2", "--generator", C1]));
    let rows = v["moments"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    for row in rows {
        assert_eq!(row["equal"], true);
        assert_eq!(row["lhs"], row["rhs"]);
    }
}

#[test]
fn parse_errors_exit_two() {
    for args in [
        &["enumerate", "--field", "{\"p\":2"][..],
        &["enumerate", "--field", "4,2", "--generator", C1],
        &["enumerate", "--field", "2,2", "--generator", r#"[["1","a"],["1"]]"#],
        &["enumerate", "--field", "2,2", "--generator", r#"[["1","a^1"],["1","a^1"]]"#],
        &["mrd", "--q", "6", "--m", "2", "--n", "2", "--k", "1"],
        &["enumerate", "--field", "2,2"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn guard_violation_exits_three() {
    let out = run(&["enumerate", "--field", "2,4", "--generator", C3, "--guard", "1000"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--field", "2,4", "--generator", C3, "--workers", "4"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn spec_file_and_run() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("job.json");
    let job = format!(r#"{{"command":"macwilliams","field":{{"p":2,"s":1,"m":4}},"code":{C3},"options":{{"workers":2}}}}"#);
    std::fs::write(&path, job).unwrap();
    let p = path.to_str().unwrap();
    let v = json(&run(&["run", "--spec", p]));
    assert_eq!(v["command"], "macwilliams");
    assert_eq!(coeffs(&v["rank"]["output"]), [1, 0, 0, 465, 3630, 0, 0, 0]);
    // a flag overrides the file
    let v = json(&run(&["enumerate", "--spec", p, "--metric", "hamming"]));
    assert!(v.get("rank").is_none());
    assert!(v.get("hamming").is_some());
}

#[test]
fn unknown_spec_key_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("job.json");
    std::fs::write(&path, r#"{"command":"enumerate","colour":1}"#).unwrap();
    assert_eq!(run(&["run", "--spec", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn text_format() {
    let out = run(&["mrd", "--q", "2", "--m", "4", "--n", "4", "--k", "2", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("rank: x^4 + 225y^3x + 30y^4"), "{text}");
}
