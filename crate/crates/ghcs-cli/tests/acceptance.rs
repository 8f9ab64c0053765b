//! CLI acceptance: byte-for-byte determinism of the emitted files and the
//! exit-code contract (0 pass, 1 tolerance failure, 2 invalid input,
//! 3 numerical failure).

use std::path::Path;
use std::process::{Command, Output};

fn ghcs(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ghcs"))
        .args(args)
        .current_dir(dir)
        .env_remove("GHCS_NMAX")
        .output()
        .expect("binary runs")
}

fn read(dir: &Path, name: &str) -> Vec<u8> {
    std::fs::read(dir.join(name)).unwrap_or_else(|e| panic!("reading {name}: {e}"))
}

#[test]
fn criterion_13_golden_eval_line() {
    let dir = tempfile::tempdir().unwrap();
    let out = ghcs(dir.path(), &["eval", "--p", "0", "--q", "0", "--x", "1"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "value=2.7182818284590455e0 terms_used=19 converged=true\n"
    );
    println!("[PASS] criterion 13a: golden eval output");
}

#[test]
fn criterion_13_golden_omega_row() {
    let dir = tempfile::tempdir().unwrap();
    let out = ghcs(
        dir.path(),
        &["omega", "--preset", "ho", "--eps", "0.693147", "--zz", "1"],
    );
    assert!(out.status.success());
    let expected = "preset,eps,z_re,z_im,zp_re,zp_im,value_re,value_im,terms_used,route\n\
                    ho,6.9314699999999996e-1,1.0000000000000000e0,0.0000000000000000e0,\
                    1.0000000000000000e0,0.0000000000000000e0,1.6487214195466593e0,\
                    0.0000000000000000e0,15,definition-series\n";
    assert_eq!(String::from_utf8(out.stdout).unwrap(), expected);
    println!("[PASS] criterion 13b: golden omega row");
}

#[test]
fn criterion_13_scan_determinism() {
    let run = |dir: &Path| {
        let out = ghcs(
            dir,
            &[
                "scan", "husimi", "--preset", "ho", "--eps", "0.693147", "--zsq", "0..4:0.5",
                "--out", "svg", "--output", "husimi.csv",
            ],
        );
        assert!(out.status.success(), "{:?}", out);
        (read(dir, "husimi.csv"), read(dir, "husimi.svg"))
    };
    let a_dir = tempfile::tempdir().unwrap();
    let b_dir = tempfile::tempdir().unwrap();
    let a = run(a_dir.path());
    let b = run(b_dir.path());
    assert_eq!(a.0, b.0, "CSV bytes differ between identical invocations");
    assert_eq!(a.1, b.1, "SVG bytes differ between identical invocations");
    // Nine grid rows plus the header.
    assert_eq!(a.0.iter().filter(|&&c| c == b'\n').count(), 10);
    println!("[PASS] criterion 13c: scans are byte-deterministic");
}

#[test]
fn criterion_13_verify_determinism_and_success() {
    let run = |dir: &Path| {
        let out = ghcs(dir, &["verify", "--suite", "all", "--out-dir", "."]);
        assert_eq!(out.status.code(), Some(0), "{:?}", out);
        (
            out.stdout,
            read(dir, "verify_bloch.csv"),
            read(dir, "verify_moments.csv"),
            read(dir, "verify_identities.csv"),
        )
    };
    let a_dir = tempfile::tempdir().unwrap();
    let b_dir = tempfile::tempdir().unwrap();
    let a = run(a_dir.path());
    let b = run(b_dir.path());
    assert_eq!(a.0, b.0);
    assert_eq!(a.1, b.1);
    assert_eq!(a.2, b.2);
    assert_eq!(a.3, b.3);
    let stdout = String::from_utf8(a.0).unwrap();
    assert!(stdout.contains("verify: all gated checks passed"));
    // The offset-audit discrepancy is flagged informational, not a failure.
    assert!(stdout.contains("INFO rescale-product-audit ho-e0"));
    println!("[PASS] criterion 13d: verify reports are byte-deterministic and pass");
}

#[test]
fn criterion_13_exit_code_contract() {
    let dir = tempfile::tempdir().unwrap();
    let code = |args: &[&str]| ghcs(dir.path(), args).status.code();

    // 0: success.
    assert_eq!(code(&["eval", "--p", "0", "--q", "0", "--x", "1"]), Some(0));

    // 2: invalid input (unknown preset, malformed grid, empty grid,
    // inconsistent parameter counts, clap usage errors).
    assert_eq!(
        code(&["omega", "--preset", "nope", "--eps", "0.5", "--zz", "1"]),
        Some(2)
    );
    assert_eq!(
        code(&[
            "scan", "husimi", "--preset", "ho", "--eps", "0.5", "--zsq", "2..1:0.5",
        ]),
        Some(2)
    );
    assert_eq!(
        code(&["scan", "husimi", "--preset", "ho", "--eps", "0.5", "--zsq", "0..1:0"]),
        Some(2)
    );
    assert_eq!(
        code(&["eval", "--p", "2", "--q", "0", "--a", "1", "--x", "0.5"]),
        Some(2)
    );
    assert_eq!(code(&["eval", "--x", "1"]), Some(2));
    assert_eq!(code(&["verify", "--suite", "nonsense"]), Some(2));

    // 3: numerical failure (outside the disc, unconverged).
    assert_eq!(
        code(&["eval", "--p", "1", "--q", "0", "--a", "2", "--x", "1.5"]),
        Some(3)
    );
    assert_eq!(
        code(&["omega", "--preset", "pho-kp", "--eps", "0", "--zz", "1"]),
        Some(3)
    );

    println!("[PASS] criterion 13e: exit codes 0/2/3");
}

#[test]
fn criterion_13_tolerance_failure_exits_one() {
    // A custom registry with an endpoint-singular weight density: its
    // moments cannot meet the gate at the reference node count, so the
    // moments suite must report a tolerance failure, distinct from input
    // and numerical errors.
    let dir = tempfile::tempdir().unwrap();
    let registry = r#"{
        "kp-singular": {
            "kind": "KP", "p": 0, "q": 1, "a": [], "b": [1.5],
            "spectrum": {"variant": "linear", "e0": 1.5}
        }
    }"#;
    std::fs::write(dir.path().join("custom.json"), registry).unwrap();
    let out = ghcs(
        dir.path(),
        &[
            "verify", "--suite", "moments", "--preset", "kp-singular", "--presets", "custom.json",
            "--out-dir", ".",
        ],
    );
    assert_eq!(out.status.code(), Some(1), "{:?}", out);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("FAIL moments kp-singular"));
    assert!(stdout.contains("verify: tolerance failure"));
    println!("[PASS] criterion 13f: tolerance failures exit 1");
}

#[test]
fn preset_registry_round_trip_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let dumped = ghcs(dir.path(), &["presets", "dump"]);
    assert!(dumped.status.success());
    std::fs::write(dir.path().join("registry.json"), &dumped.stdout).unwrap();

    let probe = |extra: &[&str]| {
        let mut args = vec!["omega", "--preset", "pho-gk", "--eps", "0.4", "--zz", "1.3"];
        args.extend_from_slice(extra);
        ghcs(dir.path(), &args)
    };
    let builtin = probe(&[]);
    let reloaded = probe(&["--presets", "registry.json"]);
    assert!(builtin.status.success() && reloaded.status.success());
    assert_eq!(builtin.stdout, reloaded.stdout);
}

#[test]
fn presets_validate_catches_bad_records() {
    let dir = tempfile::tempdir().unwrap();
    let out = ghcs(dir.path(), &["presets", "validate"]);
    assert!(out.status.success());

    std::fs::write(
        dir.path().join("broken.json"),
        r#"{"broken": {"kind": "BG", "p": 1, "q": 1, "a": [1.0], "b": [0.0],
            "spectrum": {"variant": "linear", "e0": 0.0}}}"#,
    )
    .unwrap();
    let out = ghcs(
        dir.path(),
        &["presets", "validate", "--presets", "broken.json"],
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn series_cap_env_var_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_ghcs"))
        .args(["eval", "--p", "0", "--q", "0", "--x", "30"])
        .current_dir(dir.path())
        .env("GHCS_NMAX", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3), "tiny cap must fail to converge");

    let out = Command::new(env!("CARGO_BIN_EXE_ghcs"))
        .args(["eval", "--p", "0", "--q", "0", "--x", "30"])
        .current_dir(dir.path())
        .env("GHCS_NMAX", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
