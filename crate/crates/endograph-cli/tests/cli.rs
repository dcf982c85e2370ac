//! End-to-end behavior of the command-line binary: exit codes, export
//! formats, and determinism.

use endograph_cli::export::GraphDoc;
use std::process::Command;

fn endograph(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_endograph"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn group_info() {
    let out = endograph(&["group", "--spec", "cyclic:12", "--info"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("order 12"));
    assert!(text.contains("abelian true"));
    assert!(text.contains("elements_of_order 12 4"));
}

#[test]
fn usage_errors_exit_two() {
    let out = endograph(&["group", "--spec", "frobnicate:9"]);
    assert_eq!(out.status.code(), Some(2));
    let out = endograph(&[
        "digraph",
        "--spec",
        "cyclic:4",
        "--kind",
        "auto",
        "--compressed",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = endograph(&["digraph", "--spec", "metacyclic:8,3"]);
    assert_eq!(out.status.code(), Some(2));
    // clap rejects unknown subcommands with exit code 2 as well
    let out = endograph(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_export_round_trips_through_the_binary() {
    let out = endograph(&[
        "digraph", "--spec", "cyclic:2", "--kind", "endo", "--format", "json",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let doc = GraphDoc::parse_json(&text).unwrap();
    assert_eq!(doc.kind, "endo");
    assert_eq!(doc.arcs, vec![[1, 0]]);
    assert_eq!(doc.to_json(), text, "round trip must be byte-identical");
}

#[test]
fn compressed_dot_export() {
    let out = endograph(&[
        "digraph",
        "--spec",
        "cyclic:12",
        "--kind",
        "endo",
        "--compressed",
        "--format",
        "dot",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches(" -> ").count(), 7);
    assert!(text.contains("label=\"[1]\", size=4"));
}

#[test]
fn power_digraph_export() {
    let out = endograph(&[
        "digraph",
        "--spec",
        "quaternion",
        "--kind",
        "power",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc = GraphDoc::parse_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(doc.kind, "power");
    assert_eq!(doc.vertices.len(), 8);
    // i (index 1) has arcs to its three proper powers
    assert_eq!(doc.arcs.iter().filter(|a| a[0] == 1).count(), 3);
}

#[test]
fn identity_deleted_export() {
    let out = endograph(&[
        "digraph",
        "--spec",
        "abelian:2,2",
        "--kind",
        "endo",
        "--identity-deleted",
        "--format",
        "json",
    ]);
    let doc = GraphDoc::parse_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(doc.vertices.len(), 3);
    assert_eq!(doc.arcs.len(), 6);
}

#[test]
fn out_flag_writes_the_file() {
    let path = std::env::temp_dir().join("endograph-out-test.json");
    let _ = std::fs::remove_file(&path);
    let out = endograph(&[
        "digraph",
        "--spec",
        "cyclic:6",
        "--kind",
        "endo",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let doc = GraphDoc::parse_json(&text).unwrap();
    assert_eq!(doc.vertices.len(), 6);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn verify_single_check_and_exit_codes() {
    let out = endograph(&["verify", "--check", "T3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("T3"));
    assert!(text.contains("pass"));
    let out = endograph(&["verify", "--check", "T99"]);
    assert_eq!(out.status.code(), Some(2));
    // a failing check exits 1
    let out = endograph(&["verify", "--check", "T13"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_is_deterministic() {
    let a = endograph(&["verify", "--check", "T11"]);
    let b = endograph(&["verify", "--check", "T11"]);
    let strip_time = |s: &[u8]| {
        String::from_utf8(s.to_vec())
            .unwrap()
            .lines()
            .map(|l| {
                let mut parts: Vec<&str> = l.split(')').collect();
                if parts.len() > 1 {
                    parts.remove(0);
                }
                parts.join(")")
            })
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip_time(&a.stdout), strip_time(&b.stdout));
}

#[test]
fn env_var_sets_the_order_cutoff() {
    let out = Command::new(env!("CARGO_BIN_EXE_endograph"))
        .args(["verify", "--check", "T1"])
        .env("ENDOGRAPH_MAX_ORDER", "8")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    // 10 abelian groups of order 2..=8 plus S3, Q8, D3, D4
    assert!(text.contains("14 catalog groups"), "{text}");
    // an explicit flag takes precedence
    let out = Command::new(env!("CARGO_BIN_EXE_endograph"))
        .args(["verify", "--check", "T1", "--max-order", "4"])
        .env("ENDOGRAPH_MAX_ORDER", "8")
        .output()
        .expect("binary runs");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("4 catalog groups"), "{text}");
}

#[test]
fn catalog_listing() {
    let out = endograph(&["catalog", "--max-order", "27"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("heisenberg:3\t27\t3-group"));
    assert!(text.contains("modular_p3:3\t27\t3-group"));
    assert!(text
        .lines()
        .any(|l| l.starts_with("abelian:2\t2\tabelian,2-group")));
    // spec strings in the listing parse back
    for line in text.lines() {
        let spec = line.split('\t').next().unwrap();
        spec.parse::<endograph::GroupSpec>().unwrap();
    }
}
