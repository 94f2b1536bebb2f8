use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const DISK: &str = r#"{"shape":"ball","center":[0,0],"radius":1}"#;
const HALF_PLANE: &str = r#"{"shape":"half_space","normal":[0,1],"offset":0}"#;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hypmetrics"));
    cmd.env_remove("HYPMETRICS_SEED");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    })
}

fn stderr_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stderr));
    })
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

#[test]
fn eval_disk_closed_forms() {
    let dir = TempDir::new().unwrap();
    let d = write(&dir, "d.json", DISK);
    let out = run(&["eval", "--domain", s(&d), "--pair", "0,0;0.5,0", "--metric", "j,zeta,m", "--format", "json"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    let vals = &v[0]["values"];
    assert!(close(vals["j"].as_f64().unwrap(), 2f64.ln(), 1e-10));
    // ζ(0, t) = log(1 + 2t/(1 − t²)).
    assert!(close(vals["zeta"].as_f64().unwrap(), (1.0f64 + 1.0 / 0.75).ln(), 1e-10));
    assert!(close(vals["m"]["value"].as_f64().unwrap(), 3f64.ln(), 1e-6));
    assert_eq!(vals["m"]["estimate"], Value::Bool(true));
}

#[test]
fn eval_coincident_points_give_zero() {
    let dir = TempDir::new().unwrap();
    let d = write(&dir, "d.json", DISK);
    let out = run(&["eval", "--domain", s(&d), "--pair", "0.2,0.1;0.2,0.1", "--metric", "j,j',zeta,zeta'"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let row = text.lines().nth(1).unwrap();
    let values: Vec<f64> = row.split(',').skip(4).map(|c| c.parse().unwrap()).collect();
    assert_eq!(values, vec![0.0; 4]);
}

#[test]
fn eval_half_plane_zeta_equals_j() {
    let dir = TempDir::new().unwrap();
    let d = write(&dir, "h.json", HALF_PLANE);
    let out = run(&["eval", "--domain", s(&d), "--pair", "0,1;3,0.5", "--metric", "j,zeta,j',zeta'", "--format", "json"]);
    assert!(out.status.success());
    let vals = &stdout_json(&out)[0]["values"];
    assert_eq!(vals["j"], vals["zeta"]);
    assert_eq!(vals["j'"], vals["zeta'"]);
}

#[test]
fn eval_pairs_csv_file_and_output() {
    let dir = TempDir::new().unwrap();
    let d = write(&dir, "d.json", DISK);
    let pairs = write(&dir, "p.csv", "x0,x1,y0,y1\n0,0,0.5,0\n0.1,0.1,-0.3,0.2\n");
    let out_path = dir.path().join("out.csv");
    let out = run(&["eval", "--domain", s(&d), "--pairs", s(&pairs), "--metric", "zeta", "--out", s(&out_path)]);
    assert!(out.status.success());
    let text = fs::read_to_string(out_path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x0,x1,y0,y1,zeta");
    assert_eq!(lines.len(), 3);
}

#[test]
fn malformed_pairs_header_exits_2() {
    let dir = TempDir::new().unwrap();
    let d = write(&dir, "d.json", DISK);
    let pairs = write(&dir, "p.csv", "a,b,c,d\n0,0,0.5,0\n");
    let out = run(&["eval", "--domain", s(&d), "--pairs", s(&pairs)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_json(&out)["error"].is_string());
}

#[test]
fn malformed_domain_exits_2() {
    let dir = TempDir::new().unwrap();
    let d = write(&dir, "d.json", r#"{"shape":"torus"}"#);
    let out = run(&["eval", "--domain", s(&d), "--pair", "0,0;0.5,0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exterior_point_exits_3() {
    let dir = TempDir::new().unwrap();
    let d = write(&dir, "d.json", DISK);
    let out = run(&["eval", "--domain", s(&d), "--pair", "0,0;2,0"]);
    assert_eq!(out.status.code(), Some(3));
    let err = stderr_json(&out);
    assert!(!err["message"].as_str().unwrap().is_empty());
}

#[test]
fn disconnected_lattice_exits_4() {
    let dir = TempDir::new().unwrap();
    let poly = r#"{"shape":"polygon","vertices":[[0,0],[1,0],[1,0.49],[2,0.49],[2,0],[3,0],[3,1],[2,1],[2,0.51],[1,0.51],[1,1],[0,1]]}"#;
    let d = write(&dir, "p.json", poly);
    let out = run(&["geodesic", "--domain", s(&d), "--from", "0.5,0.5", "--to", "2.5,0.5", "--density", "k", "--resolution", "0.1"]);
    assert_eq!(out.status.code(), Some(4), "{}", String::from_utf8_lossy(&out.stderr));
    stderr_json(&out);
}

#[test]
fn geodesic_writes_path_and_svg() {
    let dir = TempDir::new().unwrap();
    let d = write(&dir, "d.json", DISK);
    let csv = dir.path().join("g.csv");
    let svg = dir.path().join("g.svg");
    let out = run(&["geodesic", "--domain", s(&d), "--from", "0,0", "--to", "0.5,0", "--out", s(&csv), "--svg", s(&svg)]);
    assert!(out.status.success());
    let summary = stdout_json(&out);
    assert!(close(summary["value"].as_f64().unwrap(), 3f64.ln(), 1e-3));
    let path = fs::read_to_string(csv).unwrap();
    let rows: Vec<&str> = path.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows[0], "x0,x1");
    assert_eq!(rows.len() - 1, summary["vertices"].as_u64().unwrap() as usize);
    assert!(fs::read_to_string(svg).unwrap().starts_with("<svg"));
}

#[test]
fn balls_radii_and_deterministic_output() {
    let dir = TempDir::new().unwrap();
    let d = write(&dir, "d.json", DISK);
    let svg = dir.path().join("b.svg");
    let args = ["balls", "--domain", s(&d), "--center", "0,0", "--s", "0.5", "--point-cloud", "50", "--svg", s(&svg)];
    let first = run(&args);
    assert!(first.status.success());
    let svg_first = fs::read(&svg).unwrap();
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(svg_first, fs::read(&svg).unwrap());

    let v = stdout_json(&first);
    let (r, big_r) = (v["inner_radius"].as_f64().unwrap(), v["outer_radius"].as_f64().unwrap());
    assert!(close(r, -(-0.5f64).exp_m1() / 2.0, 1e-10));
    assert!(close(big_r, 0.5f64.exp_m1() / 2.0, 1e-10));
    let rho = v["boundary_radius_min"].as_f64().unwrap();
    assert!(r < rho && rho < big_r);
}

#[test]
fn large_ball_hugs_the_boundary() {
    let dir = TempDir::new().unwrap();
    let d = write(&dir, "d.json", DISK);
    let out = run(&["balls", "--domain", s(&d), "--center", "0,0", "--s", "30"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let rho = v["boundary_radius_min"].as_f64().unwrap();
    assert!(rho > 0.999 && rho < 1.0);
}

#[test]
fn estimated_ball_warns() {
    let dir = TempDir::new().unwrap();
    let d = write(&dir, "d.json", DISK);
    let out = run(&["balls", "--domain", s(&d), "--center", "0,0", "--s", "0.5", "--metric", "m", "--rays", "4"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    let v = stdout_json(&out);
    assert_eq!(v["estimate"], Value::Bool(true));
    // The m-ball of radius s about the center is the hyperbolic disk of radius tanh(s/2).
    let rho = v["boundary_radius_min"].as_f64().unwrap();
    assert!(close(rho, 0.25f64.tanh(), 1e-2), "{rho}");
}

#[test]
fn verify_single_suite_passes() {
    let out = run(&["verify", "--suite", "zeta-vs-zeta-prime", "--pairs", "50"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["passed"], Value::Bool(true));
    assert_eq!(v["suites"][0]["suite"], "zeta-vs-zeta-prime");
}

#[test]
fn verify_injected_fault_reports_witnesses() {
    let dir = TempDir::new().unwrap();
    let report = dir.path().join("r.json");
    let out = run(&["verify", "--suite", "zeta-vs-zeta-prime", "--pairs", "50", "--inject-fault", "--report", s(&report)]);
    assert_eq!(out.status.code(), Some(1));
    let full: Value = serde_json::from_str(&fs::read_to_string(report).unwrap()).unwrap();
    let violations = full["suites"][0]["violations"].as_array().unwrap();
    assert!(!violations.is_empty());
    assert!(violations[0]["x"].is_array() && violations[0]["y"].is_array());
}

#[test]
fn seed_from_environment_wins() {
    let with_env = bin()
        .args(["verify", "--suite", "zeta-vs-j", "--pairs", "10", "--seed", "3"])
        .env("HYPMETRICS_SEED", "7")
        .output()
        .unwrap();
    let plain = run(&["verify", "--suite", "zeta-vs-j", "--pairs", "10", "--seed", "7"]);
    assert!(with_env.status.success());
    assert_eq!(stdout_json(&with_env)["seed"], 7);
    assert_eq!(with_env.stdout, plain.stdout);
}

#[test]
fn verify_list_and_unknown_suite() {
    let out = run(&["verify", "--list"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().count() >= 20);
    assert!(text.lines().all(|l| l.contains('\t')));

    let out = run(&["verify", "--suite", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_solver_suite_with_few_pairs() {
    let out = run(&["verify", "--suite", "inner-metric", "--solver-pairs", "2"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn uniformity_on_disk_stays_below_two() {
    let dir = TempDir::new().unwrap();
    let d = write(&dir, "d.json", DISK);
    let out = run(&["uniformity", "--domain", s(&d), "--pairs", "5", "--resolution", "0.02"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["pairs_tested"], 5);
    let ratio = v["max_ratio"].as_f64().unwrap();
    assert!(ratio > 1.0 && ratio <= 2.0 * 1.02, "{ratio}");
}

#[test]
fn uniformity_rejects_unbounded_domain() {
    let dir = TempDir::new().unwrap();
    let d = write(&dir, "h.json", HALF_PLANE);
    let out = run(&["uniformity", "--domain", s(&d), "--pairs", "5"]);
    assert_eq!(out.status.code(), Some(2));
}
