use std::process::{Command, Output};

use oscint::coefficients::{taylor_b, MethodId};

fn oscint(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oscint"))
        .args(args)
        .env_remove("OSCINT_PRECISION_BITS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data_rows(text: &str) -> Vec<&str> {
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .collect()
}

#[test]
fn classical_dump_carries_exact_fractions() {
    let o = oscint(&["coeffs", "--method", "classical"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["version"], "oscint 0.1.0");
    assert_eq!(
        v["coefficients"][0]["b_exact"][1],
        "433489274083/237758976000"
    );
}

#[test]
fn fitted_dump_matches_the_series_where_it_is_accurate() {
    let o = oscint(&[
        "coeffs", "--method", "pfd6", "--v", "0.5", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let b = &v["coefficients"][0]["b"];
    let t = taylor_b(MethodId::PFD6, 0.5).unwrap();
    for j in 0..7 {
        let x = b[j + 1].as_f64().unwrap();
        // the truncated series is only good to about five digits this far out
        assert!((x - t[j]).abs() <= 1e-5 * x.abs(), "b{}", j + 1);
    }
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["coeffs", "--method", "pfd0", "--v", "0"][..],
        &["coeffs", "--method", "pfd9", "--v", "1"],
        &["coeffs", "--method", "pfd1", "--v", "1", "--bogus"],
        &["stability", "--method", "classical", "--grid", "50by50"],
        &["frobnicate"],
    ] {
        let o = oscint(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
    }
    assert_eq!(oscint(&["--help"]).status.code(), Some(0));
}

#[test]
fn computational_errors_exit_with_three() {
    // E = 341.5 at h = 15/2000 is outside the interval of periodicity of every method
    for m in ["pfd4", "classical"] {
        let o = oscint(&["solve", "--method", m, "--E", "341.495874", "--h", "0.0075"]);
        assert_eq!(o.status.code(), Some(3), "{m}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("interval of periodicity"));
    }
    let o = oscint(&["coeffs", "--method", "pfd1", "--v", "3.1415926"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn solve_emits_one_row() {
    let o = oscint(&[
        "solve",
        "--method",
        "pfd4",
        "--E",
        "341.495874",
        "--h",
        "0.00375",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with(
        "# oscint 0.1.0\nE,method,h,steps,rhs_evals,tan_delta,delta,digits,omega_convention\n"
    ));
    let rows = data_rows(&text);
    assert_eq!(rows.len(), 1);
    let digits: f64 = rows[0].split(',').nth(7).unwrap().parse().unwrap();
    assert!(digits > 5.0);
}

#[test]
fn classical_stability_scan_is_constant_in_v() {
    let o = oscint(&[
        "stability",
        "--method",
        "classical",
        "--grid",
        "50x50",
        "--smax",
        "2",
        "--vmax",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows = data_rows(&text);
    assert_eq!(rows.len(), 2500);
    for block in rows.chunks(50) {
        let flag = block[0].rsplit(',').next().unwrap();
        assert!(block.iter().all(|r| r.rsplit(',').next().unwrap() == flag));
    }
}

#[test]
fn bench_sweeps_every_combination() {
    let o = oscint(&[
        "bench",
        "--energies",
        "989.701916,341.495874,163.215341",
        "--methods",
        "all",
        "--h-ladder",
        "8",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(data_rows(&stdout(&o)).len(), 3 * 8 * 8);
}

#[test]
fn phaselag_curve_has_the_requested_samples() {
    let o = oscint(&[
        "phaselag",
        "--methods",
        "pfd0,pfd1",
        "--v",
        "0.5",
        "--n",
        "11",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(data_rows(&stdout(&o)).len(), 22);
}

#[test]
fn output_is_deterministic_and_written_atomically() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pl.csv");
    let p = path.to_str().unwrap();
    let args = [
        "phaselag",
        "--methods",
        "all",
        "--v",
        "0.8",
        "--n",
        "40",
        "--out",
        p,
    ];
    assert_eq!(oscint(&args).status.code(), Some(0));
    let first = std::fs::read(&path).unwrap();
    assert_eq!(oscint(&args).status.code(), Some(0));
    assert_eq!(std::fs::read(&path).unwrap(), first);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);

    let bad = dir.path().join("never.csv");
    let o = oscint(&[
        "coeffs",
        "--method",
        "pfd2",
        "--v",
        "-1",
        "--out",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!bad.exists());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn precision_floor_comes_from_the_environment() {
    let run = |bits: &str| {
        Command::new(env!("CARGO_BIN_EXE_oscint"))
            .args(["coeffs", "--method", "pfd3", "--v", "1.2"])
            .env("OSCINT_PRECISION_BITS", bits)
            .output()
            .unwrap()
    };
    let o = run("1024");
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(
        v["coefficients"][0]["precision_bits_used"]
            .as_u64()
            .unwrap()
            >= 1024
    );
    assert_eq!(run("lots").status.code(), Some(2));
    assert_eq!(run("8").status.code(), Some(2));
}
