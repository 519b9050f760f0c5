use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cavity-thermo"))
        .args(args)
        .env_remove("CAVITY_THERMO_MAX_MODES")
        .output()
        .unwrap()
}

fn csv(out: &Output) -> (Vec<String>, Vec<Vec<String>>) {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let rows = lines.map(|l| l.split(',').map(String::from).collect()).collect();
    (header, rows)
}

fn num(s: &str) -> f64 {
    s.parse().unwrap()
}

#[test]
fn report_near_unit_reduced_temperature() {
    let out = run(&[
        "report", "--alpha", "1", "--beta", "1", "--edge-cm", "0.229", "--temperature-k", "1", "--cutoff", "auto",
        "--tol", "1e-6",
    ]);
    let (header, rows) = csv(&out);
    assert_eq!(header, ["T_K", "t", "F_red", "E_red", "S_red", "N", "C_red", "phi", "px_red", "py_red", "pz_red", "omega_e"]);
    assert_eq!(rows.len(), 1);
    let r: Vec<f64> = rows[0].iter().map(|s| num(s)).collect();
    assert_eq!(r[0], 1.0);
    assert!((r[1] - 1.0).abs() < 1e-3, "t = {}", r[1]);
    let trace = r[8] + r[9] + r[10];
    assert!((trace - r[3]).abs() <= 1e-9 * r[3]);
    assert!((r[4] - (r[3] - r[2])).abs() <= 1e-12 * r[4]);
}

#[test]
fn pressure_ratios_sum_to_three() {
    let out = run(&[
        "pressure-curve", "--x-cm", "0.1", "--y-cm", "0.2", "--z-cm", "0.3", "--temperature-k", "0.5:20", "--points",
        "5",
    ]);
    let (header, rows) = csv(&out);
    assert_eq!(header, ["T_K", "t", "px_over_pav", "py_over_pav", "pz_over_pav"]);
    assert_eq!(rows.len(), 5);
    assert_eq!(num(&rows[0][0]), 0.5);
    assert_eq!(num(&rows[4][0]), 20.0);
    for row in &rows {
        let sum: f64 = row[2..].iter().map(|s| num(s)).sum();
        assert!((sum - 3.0).abs() < 1e-12);
    }
}

#[test]
fn reduced_mode_leaves_kelvin_empty() {
    let out = run(&["pressure-curve", "--alpha", "2", "--beta", "1", "--t-reduced", "0.5,1"]);
    let (_, rows) = csv(&out);
    assert_eq!(rows[0][0], "");
    assert_eq!(num(&rows[1][1]), 1.0);
}

#[test]
fn energy_curve_columns() {
    let out = run(&["energy-curve", "--alpha", "1", "--beta", "1", "--t-reduced", "0.2:2", "--points", "4"]);
    let (header, rows) = csv(&out);
    assert_eq!(header, ["t", "phi", "E_red", "S_red", "N", "C_red", "omega_e"]);
    let phi: Vec<f64> = rows.iter().map(|r| num(&r[1])).collect();
    assert!(phi.windows(2).all(|w| w[1] > w[0]));
}

#[test]
fn single_cube_merge_is_identity() {
    let out = run(&["merge-adiabatic", "--cubes", "1", "--t-reduced", "0.1:1", "--points", "3"]);
    let (header, rows) = csv(&out);
    assert_eq!(&header[..3], ["t", "T_ratio", "N_ratio"]);
    for row in &rows {
        assert_eq!(num(&row[1]), 1.0);
        assert_eq!(num(&row[2]), 1.0);
    }
    let out = run(&["merge-isothermal", "--cubes", "1", "--t-reduced", "0.5"]);
    let (header, rows) = csv(&out);
    assert_eq!(header, ["t", "dE_iso"]);
    assert_eq!(num(&rows[0][1]), 0.0);
}

#[test]
fn two_cube_merge_cools() {
    let out = run(&["merge-adiabatic", "--cubes", "2", "--edge-cm", "1", "--temperature-k", "0.1"]);
    let (_, rows) = csv(&out);
    assert!(num(&rows[0][1]) < 1.0 && num(&rows[0][2]) > 1.0);
}

#[test]
fn modes_dump() {
    let out = run(&["modes", "--alpha", "1", "--beta", "1", "--cutoff", "5.5"]);
    let (header, rows) = csv(&out);
    assert_eq!(header, ["nx", "ny", "nz", "g", "omega"]);
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[3][..4], ["1", "1", "1", "2"]);
}

#[test]
fn json_mirrors_csv() {
    let args = ["energy-curve", "--alpha", "3", "--beta", "0.5", "--t-reduced", "0.4,0.8"];
    let (_, rows) = csv(&run(&args));
    let mut json_args = args.to_vec();
    json_args.extend(["--format", "json"]);
    let out = run(&json_args);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["subcommand"], "energy-curve");
    assert!(v["constants"].is_null());
    assert_eq!(v["cutoff"]["policy"], "auto");
    let json_rows = v["rows"].as_array().unwrap();
    assert_eq!(json_rows.len(), rows.len());
    for (j, c) in json_rows.iter().zip(&rows) {
        assert_eq!(j["phi"].as_f64().unwrap(), num(&c[1]));
    }
}

#[test]
fn writes_to_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.csv");
    let out = run(&["report", "--alpha", "1", "--beta", "1", "--t-reduced", "1", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("T_K,t,"));
}

#[test]
fn constants_file_overrides_b() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k.json");
    std::fs::write(
        &path,
        r#"{"hbar": 1.054571817e-27, "c": 2.99792458e10, "k_b": 1.380649e-16, "b_override": 0.5}"#,
    )
    .unwrap();
    let out = run(&[
        "report", "--alpha", "1", "--beta", "1", "--edge-cm", "1", "--temperature-k", "1", "--constants",
        path.to_str().unwrap(),
    ]);
    let (_, rows) = csv(&out);
    assert_eq!(num(&rows[0][1]), 2.0);
}

fn assert_usage_error(args: &[&str]) {
    let out = run(args);
    assert_eq!(out.status.code(), Some(2), "{args:?}");
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("Usage"), "{err}");
}

#[test]
fn argument_errors_exit_two() {
    assert_usage_error(&["report", "--alpha", "1", "--beta", "1", "--x-cm", "1", "--t-reduced", "1"]);
    assert_usage_error(&["report", "--alpha", "1", "--beta", "1"]);
    assert_usage_error(&["report", "--alpha", "1", "--beta", "1", "--t-reduced", "1", "--temperature-k", "1"]);
    assert_usage_error(&["report", "--alpha", "1", "--beta", "1", "--temperature-k", "1"]);
    assert_usage_error(&["report", "--alpha", "1", "--beta", "1", "--t-reduced", "1,2"]);
    assert_usage_error(&["report", "--alpha", "-1", "--beta", "1", "--t-reduced", "1"]);
    assert_usage_error(&["energy-curve", "--alpha", "1", "--beta", "1", "--t-reduced", "2:1"]);
    assert_usage_error(&["modes", "--alpha", "1", "--beta", "1"]);
    assert_usage_error(&["merge-adiabatic", "--cubes", "0", "--t-reduced", "1"]);
    assert_usage_error(&["report", "--bogus"]);
}

#[test]
fn budget_overrun_exits_one_with_error_line() {
    let out = Command::new(env!("CARGO_BIN_EXE_cavity-thermo"))
        .args(["report", "--alpha", "1", "--beta", "1", "--t-reduced", "5"])
        .env("CAVITY_THERMO_MAX_MODES", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    let line = String::from_utf8_lossy(&out.stderr).lines().next().unwrap().to_string();
    let v: serde_json::Value = serde_json::from_str(&line).unwrap();
    assert_eq!(v["error"], "cutoff_budget");
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert!(out.status.success());
    assert!(Path::new(env!("CARGO_BIN_EXE_cavity-thermo")).exists());
}
