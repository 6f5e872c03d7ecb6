//! End-to-end CLI tests: determinism (byte-identical reruns), schemas,
//! config-file merging and exit codes.

use std::path::Path;
use std::process::Command;

fn softedge() -> Command {
    Command::new(env!("CARGO_BIN_EXE_softedge"))
}

fn read(path: &Path) -> Vec<u8> {
    std::fs::read(path).expect("output file")
}

#[test]
fn tabulate_grid_shape_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let out1 = dir.path().join("a.csv");
    let out2 = dir.path().join("b.csv");
    for out in [&out1, &out2] {
        let status = softedge()
            .args([
                "tabulate",
                "--beta",
                "2",
                "--kind",
                "gaussian",
                "--m",
                "0",
                "--t-min",
                "-5",
                "--t-max",
                "3",
                "--t-step",
                "0.1",
                "--output",
            ])
            .arg(out)
            .status()
            .unwrap();
        assert!(status.success());
    }
    let text = String::from_utf8(read(&out1)).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 82, "header + 81 grid rows");
    assert_eq!(lines[0], "t,F,Fp");
    // Reruns are byte-identical.
    assert_eq!(read(&out1), read(&out2));
    // LF endings, no CR.
    assert!(!text.contains('\r'));
}

#[test]
fn tabulate_laguerre_full_order() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("loe.csv");
    let status = softedge()
        .args([
            "tabulate",
            "--beta",
            "1",
            "--kind",
            "laguerre",
            "--n",
            "10",
            "--p",
            "40",
            "--m",
            "3",
            "--t-min",
            "-2",
            "--t-max",
            "0",
            "--t-step",
            "0.5",
            "--output",
        ])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let text = String::from_utf8(read(&out)).unwrap();
    assert!(text.starts_with("t,F,Fp,E1,E1p,sum1,E2,E2p,sum2,E3,E3p,sum3"));
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn simulate_schema_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let base1 = dir.path().join("run1");
    let base2 = dir.path().join("run2");
    for base in [&base1, &base2] {
        let status = softedge()
            .args([
                "simulate",
                "--beta",
                "2",
                "--kind",
                "gaussian",
                "--n",
                "10",
                "--samples",
                "20000",
                "--seed",
                "11",
                "--eta",
                "4",
                "--output",
            ])
            .arg(base)
            .status()
            .unwrap();
        assert!(status.success());
    }
    let csv = String::from_utf8(read(&base1.with_extension("csv"))).unwrap();
    assert!(csv.starts_with(
        "t_mid,density,F2p,corr1,corr2_adj,diff1_scaled,diff2_scaled,ci_lo,ci_hi"
    ));
    assert_eq!(
        read(&base1.with_extension("csv")),
        read(&base2.with_extension("csv"))
    );
    assert_eq!(
        read(&base1.with_extension("f64")),
        read(&base2.with_extension("f64"))
    );
    // Sidecar carries the run description.
    let sidecar: serde_json::Value =
        serde_json::from_slice(&read(&base1.with_extension("json"))).unwrap();
    assert_eq!(sidecar["seed"], 11);
    assert_eq!(sidecar["n_samples"], 20000);
    assert_eq!(sidecar["beta"], 2);
}

#[test]
fn coeffs_exports_exact_polynomials() {
    let output = softedge()
        .args(["coeffs", "--beta", "2", "--j", "1", "--kind", "gaussian"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    // k = 1 coefficient is t^2/5.
    assert_eq!(value["coeffs"][0]["terms"][0]["num"], "1");
    assert_eq!(value["coeffs"][0]["terms"][0]["den"], "5");
    assert_eq!(value["coeffs"][0]["vars"][0], "t");
    // k = 2 coefficient is -3/10.
    assert_eq!(value["coeffs"][1]["terms"][0]["num"], "-3");
    assert_eq!(value["coeffs"][1]["terms"][0]["den"], "10");
}

#[test]
fn coeffs_pq_table() {
    let output = softedge()
        .args(["coeffs", "--pq", "hermite", "--k", "2"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    // P_1 = t/4 - t^3/24: check the t^1 term.
    let p1 = &value["entries"][0]["p"];
    assert_eq!(p1["vars"][0], "t");
    let terms = p1["terms"].as_array().unwrap();
    assert!(terms
        .iter()
        .any(|t| t["exp"][0] == 1 && t["num"] == "1" && t["den"] == "4"));
    assert!(terms
        .iter()
        .any(|t| t["exp"][0] == 3 && t["num"] == "-1" && t["den"] == "24"));
}

#[test]
fn derive_writes_and_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("derived");
    let status = softedge()
        .args(["derive", "--output"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    for kind in ["gaussian", "laguerre"] {
        for j in 1..=3 {
            assert!(out.join(format!("p_plus_{kind}_j{j}.json")).exists());
        }
    }
}

#[test]
fn validate_filter_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let status = softedge()
        .args(["validate", "--filter", "m1_system", "--output"])
        .arg(&report)
        .status()
        .unwrap();
    assert!(status.success());
    let value: serde_json::Value = serde_json::from_slice(&read(&report)).unwrap();
    assert_eq!(value["passed"], true);
    assert_eq!(value["checks"][0]["name"], "m1_system");

    // A filter matching nothing is a usage error.
    let status = softedge()
        .args(["validate", "--filter", "no_such_check"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
}

#[test]
fn missing_arguments_exit_with_usage_error() {
    let status = softedge()
        .args(["tabulate", "--beta", "2"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
    let status = softedge()
        .args(["tabulate", "--beta", "7", "--kind", "gaussian", "--t-min", "0", "--t-max", "1", "--t-step", "0.5", "--output", "/tmp/x.csv"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
}

#[test]
fn config_file_merges_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(
        &cfg,
        r#"{ "beta": "2", "kind": "gaussian", "m": 0, "t_min": -1.0, "t_max": 1.0, "t_step": 1.0 }"#,
    )
    .unwrap();
    let out = dir.path().join("merged.csv");
    let status = softedge()
        .args(["tabulate", "--config"])
        .arg(&cfg)
        // Flag overrides the file's t_step = 1.0.
        .args(["--t-step", "0.5", "--output"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    // step 0.5 over [-1, 1] gives 5 rows.
    assert_eq!(read(&out).split(|&b| b == b'\n').filter(|l| !l.is_empty()).count(), 6);

    // Unknown keys are rejected.
    std::fs::write(&cfg, r#"{ "betta": "2" }"#).unwrap();
    let status = softedge()
        .args(["tabulate", "--config"])
        .arg(&cfg)
        .args(["--t-min", "0", "--t-max", "1", "--t-step", "1", "--output"])
        .arg(dir.path().join("x.csv"))
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
}
