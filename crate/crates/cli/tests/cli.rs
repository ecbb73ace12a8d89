use std::process::{Command, Output};

use cpdist_core::{all_pairs_distances, build_family, FamilySpec, RationalMatrix};
use serde_json::Value;

fn cpdist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cpdist"))
        .args(args)
        .env_remove("CPDIST_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn det_prints_formula_and_oracle() {
    let o = cpdist(&["det", "--family", "tn-book", "--n", "5", "--b", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "formula=64 oracle=64 match=true\n");

    let o = cpdist(&["det", "--family", "kmn", "--m", "2", "--n", "2"]);
    assert_eq!(stdout(&o), "formula=0 oracle=0 match=true\n");
    let o = cpdist(&["det", "--family", "k4"]);
    assert_eq!(stdout(&o), "formula=-3 oracle=-3 match=true\n");
}

#[test]
fn singular_inverse_exits_2() {
    let o = cpdist(&["inv", "--family", "tn-book", "--n", "6", "--b", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("singular"), "{}", stderr(&o));
    assert!(o.stdout.is_empty());

    let o = cpdist(&["inv", "--family", "kmn", "--m", "2", "--n", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_1() {
    for args in [
        &["frobnicate"][..],
        &["det", "--family", "nope"],
        &["det"],
        &["det", "--family", "tn"],
        &["gen", "--family", "kmn", "--m", "2", "--n", "3", "--kind", "rmat"],
        &["spectrum", "--n", "3", "--b", "2", "--part", "N"],
        &["det", "--family", "tn", "--n", "2"],
    ] {
        let o = cpdist(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}: {}", stderr(&o));
    }
    assert_eq!(cpdist(&["--help"]).status.code(), Some(0));
}

#[test]
fn inverse_csv_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("inv.csv");
    let o = cpdist(&[
        "inv",
        "--family",
        "tn-book",
        "--n",
        "5",
        "--b",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let x = RationalMatrix::from_csv(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let d = all_pairs_distances(&build_family(&FamilySpec::TnBook { n: 5, b: 2 }).unwrap()).unwrap();
    assert!((&d * &x).is_identity());
    assert_eq!(x[(8, 8)].to_string(), "-7/4");
}

#[test]
fn gen_writes_headerless_csv() {
    let o = cpdist(&["gen", "--family", "tn", "--n", "4"]);
    assert_eq!(stdout(&o), "0,1,1,1\n1,0,1,1\n1,1,0,2\n1,1,2,0\n");
    let o = cpdist(&["gen", "--family", "tn-book", "--n", "3", "--b", "2", "--kind", "rmat"]);
    let r = RationalMatrix::from_csv(&stdout(&o)).unwrap();
    assert_eq!(r.shape(), (5, 5));
    assert_eq!(r[(4, 4)].to_string(), "-6");
    let o = cpdist(&["gen", "--family", "star", "--n", "3", "--kind", "lap"]);
    assert_eq!(stdout(&o), "1,0,0,-1\n0,1,0,-1\n0,0,1,-1\n-1,-1,-1,3\n");
}

#[test]
fn output_is_deterministic() {
    let a = cpdist(&["gen", "--family", "tree", "--n", "12", "--seed", "7"]);
    let b = cpdist(&["gen", "--family", "tree", "--n", "12", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
    let c = cpdist(&["gen", "--family", "tree", "--n", "12", "--seed", "8"]);
    assert_ne!(a.stdout, c.stdout);

    // wall_time_ms is the only field allowed to differ
    let strip = |o: &Output| -> String {
        stdout(o)
            .lines()
            .filter(|l| !l.trim_start().starts_with("\"wall_time_ms\""))
            .collect::<Vec<_>>()
            .join("\n")
    };
    let r1 = cpdist(&["verify", "--suite", "lemmas", "--json", "-"]);
    let r2 = Command::new(env!("CARGO_BIN_EXE_cpdist"))
        .args(["verify", "--suite", "lemmas", "--json", "-"])
        .env("CPDIST_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(strip(&r1), strip(&r2));
}

#[test]
fn verify_all_report() {
    let o = cpdist(&["verify", "--suite", "all", "--json", "-"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let keys: Vec<&str> = report.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["failed", "failures", "grid", "passed", "suite", "wall_time_ms"]);
    assert_eq!(report["suite"], "all");
    assert_eq!(report["failed"], 0);
    assert!(report["failures"].as_array().unwrap().is_empty());
    let grid = report["grid"].as_array().unwrap();
    assert_eq!(report["passed"].as_u64().unwrap() as usize, grid.len());
    // every check family is present
    for check in [
        "tn_det",
        "kmn_det",
        "tnb_det",
        "tree_det",
        "det_multiplicative",
        "block_triangular_det",
        "char_poly",
        "tn_inverse",
        "kmn_inverse",
        "tnb_inverse",
        "tnb_singular",
        "tree_inverse",
        "inverse_exact",
        "spectrum",
        "schur_inverse",
        "rank_one_update",
        "aibj",
        "exchange_ones",
        "graph",
    ] {
        assert!(grid.iter().any(|c| c["check"] == check), "missing {check}");
    }
}

#[test]
fn injected_fault_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = cpdist(&[
        "verify",
        "--suite",
        "all",
        "--inject-fault",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(3));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["failed"], 1);
    let failure = &report["failures"][0];
    assert_eq!(failure["params"]["check"], "tnb_det");
    assert_eq!(failure["expected"], "64");
    assert_eq!(failure["actual"], "65");
    assert_eq!(failure["location"], "tnb_det vs det_exact");
}

#[test]
fn bad_thread_cap_is_a_usage_error() {
    let o = Command::new(env!("CARGO_BIN_EXE_cpdist"))
        .args(["verify", "--suite", "recognizer"])
        .env("CPDIST_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn spectrum_reports_match() {
    let o = cpdist(&["spectrum", "--n", "5", "--b", "2", "--part", "NC"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("roots of x^2 - 2x - 16"), "{text}");
    assert!(text.ends_with("match=true\n"));
}

#[test]
fn bench_skips_large_oracle() {
    let o = cpdist(&["bench", "--n", "8", "--b", "30"]);
    assert!(stdout(&o).contains("oracle_ms=skipped"));
    let o = cpdist(&["bench", "--n", "5", "--b", "3"]);
    assert!(stdout(&o).contains("equal=true"));
}
