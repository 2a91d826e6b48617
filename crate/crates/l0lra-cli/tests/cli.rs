//! End-to-end CLI tests: determinism of generated files and reports,
//! solve → eval consistency, exit codes, and the bench CSV schema.

use std::path::Path;
use std::process::{Command, Output};

fn l0lra(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_l0lra"))
        .args(args)
        .current_dir(dir)
        .env_remove("L0LRA_SEED")
        .output()
        .expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn gen_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a1 = l0lra(
        &[
            "gen",
            "planted-bool",
            "--m",
            "40",
            "--n",
            "40",
            "--alpha",
            "16",
            "--beta",
            "16",
            "--s",
            "10",
            "--seed",
            "7",
            "--out",
            "a1.mtx",
        ],
        dir.path(),
    );
    assert!(a1.status.success());
    let a2 = l0lra(
        &[
            "gen",
            "planted-bool",
            "--m",
            "40",
            "--n",
            "40",
            "--alpha",
            "16",
            "--beta",
            "16",
            "--s",
            "10",
            "--seed",
            "7",
            "--out",
            "a2.mtx",
        ],
        dir.path(),
    );
    assert!(a2.status.success());
    let f1 = std::fs::read(dir.path().join("a1.mtx")).unwrap();
    let f2 = std::fs::read(dir.path().join("a2.mtx")).unwrap();
    assert_eq!(f1, f2);
    let s1 = std::fs::read(dir.path().join("a1.json")).unwrap();
    let s2 = std::fs::read(dir.path().join("a2.json")).unwrap();
    assert_eq!(s1, s2);
}

#[test]
fn identity_plus_ones_gen_shape() {
    let dir = tempfile::tempdir().unwrap();
    let out = l0lra(
        &["gen", "identity-plus-ones", "--n", "10", "--out", "ipo.mtx"],
        dir.path(),
    );
    assert!(out.status.success());
    let text = std::fs::read_to_string(dir.path().join("ipo.mtx")).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "%%MatrixMarket matrix coordinate real general"
    );
    assert_eq!(lines.next().unwrap(), "10 10 100");
    assert_eq!(text.lines().count(), 102);
}

#[test]
fn solve_reports_are_deterministic_and_eval_consistent() {
    let dir = tempfile::tempdir().unwrap();
    let gen = l0lra(
        &[
            "gen",
            "planted-bool",
            "--m",
            "60",
            "--n",
            "60",
            "--alpha",
            "24",
            "--beta",
            "24",
            "--s",
            "6",
            "--seed",
            "5",
            "--out",
            "m.mtx",
        ],
        dir.path(),
    );
    assert!(gen.status.success());

    let run1 = l0lra(
        &[
            "solve",
            "bool-combined",
            "m.mtx",
            "--seed",
            "9",
            "--solution",
            "sol.json",
        ],
        dir.path(),
    );
    assert!(
        run1.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&run1.stderr)
    );
    let run2 = l0lra(
        &["solve", "bool-combined", "m.mtx", "--seed", "9"],
        dir.path(),
    );
    assert_eq!(
        stdout_str(&run1),
        stdout_str(&run2),
        "same (command, seed) must give same bytes"
    );

    let report: serde_json::Value = serde_json::from_str(stdout_str(&run1).trim()).unwrap();
    let cost = report["cost_exact"].as_u64().unwrap();

    let eval = l0lra(&["eval", "m.mtx", "sol.json"], dir.path());
    assert!(eval.status.success());
    let eval_json: serde_json::Value = serde_json::from_str(stdout_str(&eval).trim()).unwrap();
    assert_eq!(eval_json["cost_exact"].as_u64().unwrap(), cost);
}

#[test]
fn rankk_solution_files_round_trip_rationals() {
    let dir = tempfile::tempdir().unwrap();
    let gen = l0lra(
        &[
            "gen",
            "planted-rankk",
            "--m",
            "12",
            "--n",
            "10",
            "--k",
            "2",
            "--s",
            "3",
            "--seed",
            "3",
            "--out",
            "rk.mtx",
        ],
        dir.path(),
    );
    assert!(gen.status.success());
    let solve = l0lra(
        &[
            "solve",
            "rankk-basic",
            "rk.mtx",
            "--k",
            "2",
            "--seed",
            "1",
            "--solution",
            "rk-sol.json",
        ],
        dir.path(),
    );
    assert!(
        solve.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&solve.stderr)
    );
    let report: serde_json::Value = serde_json::from_str(stdout_str(&solve).trim()).unwrap();
    let eval = l0lra(&["eval", "rk.mtx", "rk-sol.json"], dir.path());
    assert!(eval.status.success());
    let eval_json: serde_json::Value = serde_json::from_str(stdout_str(&eval).trim()).unwrap();
    assert_eq!(eval_json["cost_exact"], report["cost_exact"]);

    // Certify against the planted factors recorded in the sidecar.
    let certify = l0lra(
        &[
            "solve",
            "certify",
            "rk.mtx",
            "--factors",
            "rk.json",
            "--seed",
            "1",
        ],
        dir.path(),
    );
    assert!(
        certify.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&certify.stderr)
    );
    let creport: serde_json::Value = serde_json::from_str(stdout_str(&certify).trim()).unwrap();
    assert!(creport["cost_exact"].as_u64().unwrap() <= 3 * 3);
}

#[test]
fn bool_exact_matches_oracle_flag_run() {
    let dir = tempfile::tempdir().unwrap();
    let gen = l0lra(
        &[
            "gen",
            "planted-bool",
            "--m",
            "12",
            "--n",
            "12",
            "--alpha",
            "9",
            "--beta",
            "9",
            "--s",
            "2",
            "--seed",
            "8",
            "--out",
            "t.mtx",
        ],
        dir.path(),
    );
    assert!(gen.status.success());
    let fpt = l0lra(&["solve", "bool-exact", "t.mtx", "--seed", "1"], dir.path());
    assert!(
        fpt.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&fpt.stderr)
    );
    let oracle = l0lra(
        &["solve", "bool-exact", "t.mtx", "--seed", "1", "--oracle"],
        dir.path(),
    );
    assert!(oracle.status.success());
    let fpt_json: serde_json::Value = serde_json::from_str(stdout_str(&fpt).trim()).unwrap();
    let oracle_json: serde_json::Value = serde_json::from_str(stdout_str(&oracle).trim()).unwrap();
    assert_eq!(fpt_json["cost_exact"], oracle_json["cost_exact"]);
}

#[test]
fn exit_codes_distinguish_precondition_and_io() {
    let dir = tempfile::tempdir().unwrap();
    let gen = l0lra(
        &[
            "gen",
            "planted-bool",
            "--m",
            "20",
            "--n",
            "20",
            "--alpha",
            "8",
            "--beta",
            "8",
            "--s",
            "2",
            "--seed",
            "2",
            "--out",
            "m.mtx",
        ],
        dir.path(),
    );
    assert!(gen.status.success());

    // Missing required --phi: precondition error, exit 2.
    let missing_phi = l0lra(&["solve", "bool-smallopt", "m.mtx"], dir.path());
    assert_eq!(missing_phi.status.code(), Some(2));

    // phi outside (0, 1/80]: precondition error, exit 2.
    let bad_phi = l0lra(
        &["solve", "bool-smallopt", "m.mtx", "--phi", "0.5"],
        dir.path(),
    );
    assert_eq!(bad_phi.status.code(), Some(2));

    // Nonexistent file: I/O error, exit 3.
    let no_file = l0lra(&["solve", "rank1", "missing.mtx"], dir.path());
    assert_eq!(no_file.status.code(), Some(3));
}

#[test]
fn seed_env_var_is_fallback() {
    let dir = tempfile::tempdir().unwrap();
    let gen = l0lra(
        &[
            "gen",
            "planted-real",
            "--m",
            "30",
            "--n",
            "30",
            "--s",
            "4",
            "--seed",
            "11",
            "--out",
            "m.mtx",
        ],
        dir.path(),
    );
    assert!(gen.status.success());

    let via_flag = l0lra(&["solve", "rank1", "m.mtx", "--seed", "21"], dir.path());
    let via_env = Command::new(env!("CARGO_BIN_EXE_l0lra"))
        .args(["solve", "rank1", "m.mtx"])
        .current_dir(dir.path())
        .env("L0LRA_SEED", "21")
        .output()
        .unwrap();
    assert_eq!(stdout_str(&via_flag), stdout_str(&via_env.clone()));
    assert!(via_env.status.success());
}

#[test]
fn reports_are_thread_count_invariant() {
    let dir = tempfile::tempdir().unwrap();
    let gen = l0lra(
        &[
            "gen",
            "planted-real",
            "--m",
            "50",
            "--n",
            "50",
            "--s",
            "8",
            "--seed",
            "13",
            "--out",
            "m.mtx",
        ],
        dir.path(),
    );
    assert!(gen.status.success());
    let one = l0lra(
        &["solve", "rank1", "m.mtx", "--seed", "2", "--threads", "1"],
        dir.path(),
    );
    let two = l0lra(
        &["solve", "rank1", "m.mtx", "--seed", "2", "--threads", "2"],
        dir.path(),
    );
    assert!(one.status.success() && two.status.success());
    assert_eq!(stdout_str(&one), stdout_str(&two));
}

#[test]
fn bench_csv_schema_is_stable() {
    let dir = tempfile::tempdir().unwrap();
    let out = l0lra(
        &[
            "bench", "--sizes", "60", "--phis", "0.01", "--n", "600", "--seed", "4",
        ],
        dir.path(),
    );
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout_str(&out);
    let lines: Vec<&str> = text.trim_end().lines().collect();
    assert_eq!(
        lines[0],
        "family,mode,m,n,phi,nnz,cost,entry_reads,adjacency_reads,nonzero_samples,probe_reads"
    );
    // One planted row per mode plus one hard row.
    assert_eq!(lines.len(), 4);
    for row in &lines[1..] {
        assert_eq!(row.split(',').count(), 11, "row: {row}");
    }
    let again = l0lra(
        &[
            "bench", "--sizes", "60", "--phis", "0.01", "--n", "600", "--seed", "4",
        ],
        dir.path(),
    );
    assert_eq!(
        text,
        stdout_str(&again),
        "bench output must be byte-deterministic"
    );
}
