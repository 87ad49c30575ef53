use std::fs;
use std::process::{Command, Output};

use tempfile::tempdir;

fn plc_relay(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plc-relay"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn outage_prints_each_scheme() {
    let o = plc_relay(&["outage", "--scheme", "sh,idf", "--set", "distance=600"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("single-hop"));
    assert!(out.contains("idf"));
    assert!(out.contains("direct"));
}

#[test]
fn power_and_energy_run() {
    let o = plc_relay(&["power", "--scheme", "mh3"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("bisection"));
    let o = plc_relay(&["energy", "--scheme", "sh"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("J/bit"));
}

#[test]
fn simulate_reports_agreement() {
    let o = plc_relay(&[
        "simulate",
        "--scheme",
        "mh2",
        "--set",
        "sim.trials=20000",
        "--set",
        "distance=300",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("agree"));
}

#[test]
fn config_file_error_points_at_line() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("bad.cfg");
    fs::write(&path, "# scenario\nnoise.p = 0.01\nnoise.sinr_db = loud\n").unwrap();
    let o = plc_relay(&["outage", "--config", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("bad.cfg:3"), "{err}");
    assert!(err.contains("noise.sinr_db"), "{err}");
}

#[test]
fn invalid_override_exits_2() {
    let o = plc_relay(&["power", "--set", "outage_target=1.5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("outage_target"));
}

#[test]
fn solver_failure_exits_3() {
    let o = plc_relay(&[
        "power",
        "--scheme",
        "mh2",
        "--set",
        "solver.max_expansions=0",
    ]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
}

#[test]
fn missing_config_file_exits_1() {
    let o = plc_relay(&["outage", "--config", "/nonexistent/scenario.cfg"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn sweep_writes_csv_and_summary() {
    let dir = tempdir().unwrap();
    let out = dir.path().join("fig2.csv");
    let o = plc_relay(&["sweep", "--preset", "fig2", "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let csv = fs::read_to_string(&out).unwrap();
    assert!(csv.starts_with("# plc-relay "));
    assert!(csv.lines().any(|l| l == "distance,scheme,outage"));
    assert!(stderr(&o).contains("strictly increasing"));
}

#[test]
fn sweep_output_is_byte_stable() {
    let dir = tempdir().unwrap();
    let (a, b) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    for p in [&a, &b] {
        let o = plc_relay(&[
            "sweep",
            "--set",
            "sweep.steps=3",
            "--set",
            "sim.validate=true",
            "--set",
            "sim.trials=5000",
            "--set",
            "sim.workers=3",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert!(o.status.success(), "{}", stderr(&o));
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn empty_scheme_list_writes_nothing() {
    let dir = tempdir().unwrap();
    let out = dir.path().join("none.csv");
    let o = plc_relay(&[
        "sweep",
        "--set",
        "sweep.schemes=",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!out.exists());
}

#[test]
fn schema_lists_keys() {
    let o = plc_relay(&["schema"]);
    assert!(o.status.success());
    let out = stdout(&o);
    for key in [
        "noise.p = 0.01",
        "noise.sinr_db = -15.0",
        "outage_target = 0.01",
        "sweep.schemes",
    ] {
        assert!(out.contains(key), "missing {key}");
    }
}
