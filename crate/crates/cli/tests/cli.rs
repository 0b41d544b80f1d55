//! End-to-end tests of the command-line interface.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_magnon-fisher"))
}

fn run_ok(args: &[&str]) -> String {
    let out = bin().args(args).output().expect("binary runs");
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn steady_state_reports_baseline() {
    let text = run_ok(&["steady-state"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let m_abs2 = v["steady_state"]["m_abs2"].as_f64().unwrap();
    assert!((m_abs2 - 1.9396e13).abs() < 1e10, "m_abs2 = {m_abs2:e}");
    assert_eq!(v["linearization"]["weak_drive_warning"], false);
}

#[test]
fn qfi_report_has_hierarchy() {
    let text = run_ok(&["qfi", "--repetitions", "100"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let global = v["fisher"]["qfi_global"].as_f64().unwrap();
    let a2 = v["fisher"]["qfi_a2"].as_f64().unwrap();
    assert!(global > a2 && a2 > 0.0);
    let bound = v["qcrb"]["min_variance"].as_f64().unwrap();
    assert!((bound - 1.0 / (100.0 * global)).abs() < 1e-12 * bound);
}

#[test]
fn cfi_ogm_between_homodyne_and_qfi() {
    let ogm: serde_json::Value =
        serde_json::from_str(&run_ok(&["cfi", "--mode", "a2", "--measurement", "ogm"])).unwrap();
    let hom: serde_json::Value =
        serde_json::from_str(&run_ok(&["cfi", "--mode", "a2", "--measurement", "hom-q"])).unwrap();
    let cfi_ogm = ogm["cfi"].as_f64().unwrap();
    let qfi_a2 = ogm["qfi_subsystem"].as_f64().unwrap();
    let cfi_hom = hom["cfi"].as_f64().unwrap();
    assert!(cfi_ogm >= cfi_hom && cfi_ogm <= qfi_a2 * (1.0 + 1e-9));
}

#[test]
fn normal_modes_output() {
    let v: serde_json::Value = serde_json::from_str(&run_ok(&["normal-modes"])).unwrap();
    let wp = v["hybrid_modes"]["omega_plus"].as_f64().unwrap();
    let wm = v["hybrid_modes"]["omega_minus"].as_f64().unwrap();
    assert!(wp > wm);
    assert!(v["bogoliubov"]["alpha"].as_f64().unwrap() >= 1.0);
    let peaks = v["predicted_resonance_detunings"].as_array().unwrap();
    assert_eq!(peaks.len(), 2);
}

#[test]
fn sweep_preset_determinism_across_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let out1 = dir.path().join("one.csv");
    let out3 = dir.path().join("three.csv");
    run_ok(&[
        "sweep",
        "--preset",
        "fig6b",
        "--jobs",
        "1",
        "--out",
        out1.to_str().unwrap(),
    ]);
    run_ok(&[
        "sweep",
        "--preset",
        "fig6b",
        "--jobs",
        "3",
        "--out",
        out3.to_str().unwrap(),
    ]);
    let a = std::fs::read(&out1).unwrap();
    let b = std::fs::read(&out3).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn sweep_jobs_env_fallback() {
    let dir = tempfile::tempdir().unwrap();
    let out_env = dir.path().join("env.csv");
    let out_flag = dir.path().join("flag.csv");
    let status = bin()
        .args([
            "sweep",
            "--preset",
            "fig6b",
            "--out",
            out_env.to_str().unwrap(),
        ])
        .env("MAGNON_FISHER_JOBS", "2")
        .status()
        .unwrap();
    assert!(status.success());
    run_ok(&[
        "sweep",
        "--preset",
        "fig6b",
        "--jobs",
        "2",
        "--out",
        out_flag.to_str().unwrap(),
    ]);
    assert_eq!(
        std::fs::read(&out_env).unwrap(),
        std::fs::read(&out_flag).unwrap()
    );
}

#[test]
fn sweep_from_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("run.toml");
    std::fs::write(
        &config,
        r#"
[params]
drive_power_w = 0.25

[sweep]
axis = "g"
start = 39.0
stop = 43.0
points = 3
quantities = ["qfi_global", "qfi_a2", "cfi_hom_q"]
"#,
    )
    .unwrap();
    let out = dir.path().join("out.csv");
    run_ok(&[
        "sweep",
        "--config",
        config.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    let text = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "g,qfi_global,qfi_a2,cfi_hom_q");
    assert_eq!(lines.len(), 4);
    for line in &lines[1..] {
        let fields: Vec<f64> = line.split(',').map(|f| f.parse().unwrap()).collect();
        assert_eq!(fields.len(), 4);
        // data-processing chain per row
        assert!(fields[3] <= fields[2] * (1.0 + 1e-9));
        assert!(fields[2] <= fields[1] * (1.0 + 1e-9));
    }
}

#[test]
fn sweep_json_format_carries_metadata() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.json");
    run_ok(&[
        "sweep",
        "--preset",
        "fig7c",
        "--format",
        "json",
        "--out",
        out.to_str().unwrap(),
    ]);
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["metadata"]["preset"], "fig7c");
    assert_eq!(v["metadata"]["config_hash"].as_str().unwrap().len(), 64);
    assert!(v["metadata"]["hbar"].as_f64().unwrap() > 0.0);
    assert!(!v["records"].as_array().unwrap().is_empty());
}

#[test]
fn stability_map_emits_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("map.toml");
    std::fs::write(
        &config,
        r#"
[sweep]
axis = "delta_a"
start = -100.0
stop = 100.0
points = 5
quantities = ["qfi_global"]

[sweep.secondary]
axis = "delta_m"
values = [-60.0, 60.0]
"#,
    )
    .unwrap();
    let out = dir.path().join("map.csv");
    run_ok(&[
        "stability-map",
        "--config",
        config.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    let text = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "delta_a,delta_m,stable,max_real_eig,hurwitz_ok,marginal"
    );
    assert_eq!(lines.len(), 11);
    for line in &lines[1..] {
        let fields: Vec<f64> = line.split(',').map(|f| f.parse().unwrap()).collect();
        // eigenvalue and Hurwitz verdicts agree outside the marginal band
        if fields[5] == 0.0 {
            assert_eq!(fields[2], fields[4], "verdict mismatch in {line}");
        }
    }
}

#[test]
fn unknown_preset_fails() {
    let out = bin().args(["sweep", "--preset", "fig99"]).output().unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown preset"));
}

#[test]
fn multistable_point_is_a_hard_error_for_single_point_commands() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("multi.toml");
    std::fs::write(
        &config,
        r#"
[params]
drive_power_w = 1.5
gamma_m_2pi_mhz = 0.4
delta_m_2pi_mhz = -270.0
kerr_2pi_uhz = 1.5
coupling_2pi_mhz = 46.0
"#,
    )
    .unwrap();
    let out = bin()
        .args(["steady-state", "--config", config.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("multistable"));
}
