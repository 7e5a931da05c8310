//! End-to-end tests of the command-line interface: output shapes, exit
//! codes, and the JSON/DOT export contract.

use std::process::Command;

fn lagcell(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_lagcell"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).to_string(),
        String::from_utf8_lossy(&out.stderr).to_string(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn cells_table_for_rank_one_mixed() {
    let (stdout, _, code) = lagcell(&["cells", "--n", "1", "--space", "mixed"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("4 cells"));
    let rows: Vec<&str> = stdout.lines().skip(2).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows[0].contains('φ'));
    assert!(rows[1].contains('∘'));
    assert!(rows[2].ends_with('+'));
    assert!(rows[3].ends_with('-'));
}

#[test]
fn cells_table_for_rank_three_complex() {
    let (stdout, _, code) = lagcell(&["cells", "--n", "3", "--space", "complex"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("8 cells"));
    for label in ["[3,2,1]", "[3,1]", "[2,1]", "φ"] {
        assert!(stdout.contains(label), "missing {}", label);
    }
}

#[test]
fn usage_errors_exit_two() {
    let (_, _, code) = lagcell(&["cells", "--n", "0", "--space", "real"]);
    assert_eq!(code, 2);
    let (_, _, code) = lagcell(&["cells", "--n", "2", "--space", "quaternionic"]);
    assert_eq!(code, 2);
    let (_, _, code) = lagcell(&["frobnicate"]);
    assert_eq!(code, 2);
}

#[test]
fn resource_errors_exit_three() {
    let (_, stderr, code) = lagcell(&["homology", "--n", "9", "--space", "real"]);
    assert_eq!(code, 3);
    assert!(stderr.contains("resource"));
    // Mixed bound is lower.
    let (_, _, code) = lagcell(&["cells", "--n", "6", "--space", "mixed"]);
    assert_eq!(code, 3);
    // The override flag raises it (and warns).
    let (_, stderr, code) =
        lagcell(&["cells", "--n", "6", "--space", "mixed", "--max-n", "6"]);
    assert_eq!(code, 0);
    assert!(stderr.contains("warning"));
}

#[test]
fn io_errors_exit_four() {
    let (_, _, code) = lagcell(&[
        "export",
        "--n",
        "1",
        "--space",
        "mixed",
        "--format",
        "json",
        "--out",
        "/nonexistent-dir/out.json",
    ]);
    assert_eq!(code, 4);
}

#[test]
fn homology_tables() {
    let (stdout, _, code) = lagcell(&["homology", "--n", "2", "--space", "real"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert!(lines[0].contains("real structure at n = 2"));
    assert_eq!(lines[2].trim(), "0    Z");
    assert_eq!(lines[3].trim(), "1    Z");
    assert_eq!(lines[4].trim(), "2    Z_2");
    assert_eq!(lines[5].trim(), "3    0");

    // Z2 coefficients are accepted case-insensitively.
    let (stdout, _, code) =
        lagcell(&["homology", "--n", "2", "--space", "real", "--coefficients", "Z2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("Z_2 coefficients"));
}

#[test]
fn homology_of_inconsistent_mixed_rank_exits_one() {
    let (_, stderr, code) = lagcell(&["homology", "--n", "4", "--space", "mixed"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("integrity"));
}

#[test]
fn verify_passes_and_fails_with_correct_codes() {
    let (stdout, _, code) = lagcell(&["verify", "--n", "3", "--checks", "ddzero,euler"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("check ddzero: pass"));
    assert!(stdout.contains("check euler: pass"));

    let (stdout, _, code) = lagcell(&[
        "verify", "--n", "2", "--checks", "jacobian", "--samples", "5", "--seed", "7",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("check jacobian: pass"));

    let (stdout, _, code) = lagcell(&["verify", "--n", "4", "--checks", "subdivision"]);
    assert_eq!(code, 1);
    assert!(stdout.contains("check subdivision: FAIL"));
}

#[test]
fn export_json_round_trips_and_is_deterministic() {
    let dir = std::env::temp_dir().join("lagcell-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path_a = dir.join("a.json");
    let path_b = dir.join("b.json");
    for path in [&path_a, &path_b] {
        let (_, _, code) = lagcell(&[
            "export",
            "--n",
            "2",
            "--space",
            "mixed",
            "--format",
            "json",
            "--out",
            path.to_str().unwrap(),
            "--seed",
            "7",
        ]);
        assert_eq!(code, 0);
    }
    let a = std::fs::read(&path_a).unwrap();
    let b = std::fs::read(&path_b).unwrap();
    assert_eq!(a, b, "byte-for-byte deterministic output");

    let doc: lagcell::export::ComplexDocument =
        serde_json::from_slice(&a).expect("valid document");
    let rebuilt = lagcell::export::from_document(&doc).unwrap();
    let direct = lagcell::chain::build(
        2,
        lagcell::cells::Space::Mixed,
        &lagcell::cells::Bounds::default(),
    )
    .unwrap();
    assert_eq!(rebuilt, direct);
}

#[test]
fn export_dot_shapes() {
    let dir = std::env::temp_dir().join("lagcell-cli-test");
    std::fs::create_dir_all(&dir).unwrap();

    let path = dir.join("p1.dot");
    let (_, _, code) = lagcell(&[
        "export", "--n", "1", "--space", "mixed", "--format", "dot", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let dot = std::fs::read_to_string(&path).unwrap();
    assert_eq!(dot.matches("label=").count(), 4);
    assert_eq!(dot.matches("->").count(), 2);
    assert!(dot.contains("deg=-1, style=dashed"));

    let path = dir.join("c3.dot");
    lagcell(&[
        "export", "--n", "3", "--space", "complex", "--format", "dot", "--out",
        path.to_str().unwrap(),
    ]);
    let dot = std::fs::read_to_string(&path).unwrap();
    assert_eq!(dot.matches("label=").count(), 8);
    assert_eq!(dot.matches("->").count(), 0);

    let path = dir.join("r3.dot");
    lagcell(&[
        "export", "--n", "3", "--space", "real", "--format", "dot", "--out",
        path.to_str().unwrap(),
    ]);
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.contains("deg=-2, style=dashed, penwidth=2"));
    assert!(dot.contains("deg=2, penwidth=2"));
}

#[test]
fn boundary_formats() {
    let (stdout, _, code) =
        lagcell(&["boundary", "--n", "3", "--space", "real", "--dim", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("∂_3 (1 x 2)"));

    let (stdout, _, code) = lagcell(&[
        "boundary", "--n", "3", "--space", "real", "--dim", "3", "--format", "csv",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.lines().any(|l| l == "2,-2" || l == "-2,2"));

    let (stdout, _, code) = lagcell(&[
        "boundary", "--n", "1", "--space", "mixed", "--format", "json",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"degree\": -1"));
    assert!(stdout.contains("\"degree\": 1"));
}
