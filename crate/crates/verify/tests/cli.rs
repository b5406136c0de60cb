use std::process::{Command, Output};

use paley_core::constructions::paper_tower;
use paley_verify::formats::{parse_clique_csv_line, parse_clique_json_line};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_paley-verify"))
        .args(args)
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn table1_small() {
    let out = run(&["table1", "--q", "9,11", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["orbit_count"], 3);
    assert_eq!(rows[1]["clique_size"], 7);
    assert_eq!(rows[1]["matches"], true);
}

#[test]
fn census_q13() {
    let out = run(&["census", "--q", "13", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &json(&out)[0];
    assert_eq!(r["clique_size"], 7);
    assert_eq!(r["orbit_count"], 4);
    assert_eq!(r["census_count"], 35152);
    assert_eq!(r["max_clique_count"], 91);
    assert_eq!(r["tower"]["alpha_square_coeffs"], serde_json::json!([11]));
    // progress goes to stderr only
    assert!(String::from_utf8_lossy(&out.stderr).contains("branches"));
}

#[test]
fn verify_paper_q17_all_match() {
    let out = run(&["verify-paper", "--q", "17", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let cs = v["constructions"].as_array().unwrap();
    assert_eq!(cs.len(), 7);
    assert!(cs.iter().all(|c| c["all_match"] == true));
    assert_eq!(v["census"][0]["orbit_count"], 9);
    assert_eq!(v["census"][0]["named_in_distinct_orbits"], true);
}

#[test]
fn verify_paper_reports_c13a_type() {
    let out = run(&["verify-paper", "--construction", "C13A", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let c = &v["constructions"][0];
    assert_eq!(c["stabilizer_type"], "Z6");
    assert_eq!(c["expected_stabilizer_type"], "D6");
    assert_eq!(c["orbit_size"], 4732);
    assert!(String::from_utf8_lossy(&out.stderr).contains("C13A"));
}

#[test]
fn verify_paper_csv_has_one_row_per_label() {
    let out = run(&["verify-paper", "--q", "9,11", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("label,q,h,recipe"));
    assert!(lines[1].starts_with("C9,9,"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["census", "--q", "7"]).status.code(), Some(2));
    assert_eq!(run(&["census", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["census", "--workers", "0"]).status.code(), Some(2));
    assert_eq!(
        run(&["build", "--q", "23", "--table-bound", "400"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify-paper", "--construction", "C99"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn out_file_and_clique_dump() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let dump = dir.path().join("c.csv");
    let out = run(&[
        "census",
        "--q",
        "9",
        "--format",
        "csv",
        "--out",
        report.to_str().unwrap(),
        "--dump-cliques",
        dump.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert!(std::fs::read_to_string(&report)
        .unwrap()
        .starts_with("q,clique_size"));
    let ctx = paper_tower(9).unwrap();
    let lines: Vec<String> = std::fs::read_to_string(&dump)
        .unwrap()
        .lines()
        .map(String::from)
        .collect();
    assert_eq!(lines.len(), 10368);
    assert!(lines
        .iter()
        .all(|l| parse_clique_csv_line(&ctx, l).map(|c| c.len()) == Some(5)));

    let jdump = dir.path().join("c.jsonl");
    let out = run(&[
        "census",
        "--q",
        "9,11",
        "--format",
        "json",
        "--dump-cliques",
        jdump.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let ctx11 = paper_tower(11).unwrap();
    let text = std::fs::read_to_string(dir.path().join("c.q11.jsonl")).unwrap();
    assert_eq!(text.lines().count(), 7260);
    let first = parse_clique_json_line(&ctx11, text.lines().next().unwrap()).unwrap();
    assert_eq!(first.len(), 7);
    assert!(dir.path().join("c.q9.jsonl").exists());
}

#[test]
fn orbits_are_identical_across_worker_counts() {
    let a = run(&["orbits", "--q", "11", "--format", "json", "--workers", "1"]);
    let b = run(&["orbits", "--q", "11", "--format", "json", "--workers", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    let recs = v.as_array().unwrap();
    assert_eq!(recs.len(), 3);
    for r in recs {
        for key in [
            "q",
            "representative",
            "orbit_size",
            "stabilizer_order",
            "stabilizer_type",
            "generators",
        ] {
            assert!(r.get(key).is_some(), "{key}");
        }
        assert_eq!(
            r["orbit_size"].as_u64().unwrap() * r["stabilizer_order"].as_u64().unwrap(),
            14520
        );
    }
}

#[test]
fn build_and_dump_graph() {
    let out = run(&["build", "--q", "9", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let b = &json(&out)[0];
    assert_eq!(b["group_order"], 12960);
    assert_eq!(b["srg"]["lambda"], 19);
    assert_eq!(b["s0_matches_listed"], true);
    assert_eq!(
        b["tower"]["field_poly_coeffs"],
        serde_json::json!([2, 1, 1])
    );

    let out = run(&["dump-graph", "--q", "9", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1 + 81 * 40 / 2);

    let out = run(&["dump-graph", "--q", "9", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let ones = text
        .lines()
        .skip(1)
        .flat_map(|l| l.chars())
        .filter(|&c| c == '1')
        .count();
    assert_eq!(ones, 1620);
}
