use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn secant(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_secant"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(args: &[&str]) -> Value {
    let out = secant(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn code(args: &[&str]) -> i32 {
    secant(args).status.code().expect("exit code")
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(secant(args).stdout).unwrap()
}

#[test]
fn degree_examples() {
    let r = json_of(&["degree", "--a", "6", "--b", "6", "--t", "3"]);
    assert_eq!(r["results"]["degree"], 28206234);
    assert_eq!(r["results"]["dimension"], 36);
    let r = json_of(&["degree", "--a", "3", "--b", "3", "--t", "2"]);
    assert_eq!(r["results"]["degree"], 57);
    let dets: Vec<i64> = r["results"]["per_tuple"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["determinant"].as_i64().unwrap())
        .collect();
    assert_eq!(dets.iter().sum::<i64>(), 57);
}

#[test]
fn hvector_example() {
    let r = json_of(&["hvector", "--a", "2", "--b", "2", "--t", "1"]);
    assert_eq!(r["results"]["h"], serde_json::json!([1, 4, 1]));
    assert_eq!(r["results"]["certified"], true);
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["command"], "hvector");
}

#[test]
fn methods_agree_through_cli() {
    let h: Vec<Value> = ["shelling", "f-vector", "monomial"]
        .iter()
        .map(|m| {
            json_of(&["hvector", "--a", "3", "--b", "4", "--t", "2", "--method", m])["results"]["h"]
                .clone()
        })
        .collect();
    assert_eq!(h[0], h[1]);
    assert_eq!(h[0], h[2]);
}

#[test]
fn regime_errors_exit_2() {
    let out = secant(&["degree", "--a", "3", "--b", "5", "--t", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("only t < a is supported"));
    assert_eq!(code(&["hvector", "--a", "3", "--b", "3", "--t", "3"]), 2);
    assert_eq!(code(&["degree", "--a", "3"]), 2);
    assert_eq!(
        code(&["hvector", "--a", "2", "--b", "2", "--t", "1", "--format", "csv"]),
        2
    );
    assert_eq!(code(&["repro", "--only", "AC99"]), 2);
}

#[test]
fn budget_exhaustion_exits_3() {
    assert_eq!(
        code(&[
            "shelling-certify",
            "--a",
            "4",
            "--b",
            "4",
            "--t",
            "3",
            "--budget",
            "10"
        ]),
        3
    );
    assert_eq!(
        code(&[
            "hvector", "--a", "4", "--b", "4", "--t", "2", "--method", "f-vector", "--budget", "5"
        ]),
        3
    );
    assert_eq!(
        code(&["facets", "--a", "3", "--b", "3", "--t", "2", "--budget", "3"]),
        3
    );
}

#[test]
fn degree_grid_csv() {
    let csv = stdout(&["degree", "--max-b", "4", "--format", "csv"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "a,b,t,degree,dimension,codimension");
    assert!(lines.contains(&"3,3,2,57,12,6"));
    assert!(lines.contains(&"2,2,1,6,4,4"));
    // (2,2,1) (2,3,1) (3,3,1) (3,3,2) (2,4,1) (3,4,1) (3,4,2) (4,4,1..3)
    assert_eq!(lines.len(), 1 + 10);
}

#[test]
fn output_is_byte_stable() {
    let args = [
        "membership",
        "--t",
        "2",
        "--sample-rank",
        "3",
        "--a",
        "3",
        "--b",
        "3",
        "--seed",
        "7",
    ];
    assert_eq!(secant(&args).stdout, secant(&args).stdout);
    let one = stdout(&["hvector", "--a", "4", "--b", "4", "--t", "2", "--jobs", "1"]);
    let four = stdout(&["hvector", "--a", "4", "--b", "4", "--t", "2", "--jobs", "4"]);
    assert_eq!(one, four);
    assert!(!one.contains("wall_seconds"));
    let timed = json_of(&["degree", "--a", "3", "--b", "3", "--t", "1", "--timing"]);
    assert!(timed["wall_seconds"].is_number());
}

#[test]
fn membership_from_file() {
    // u = (1, 2), v = (1, -1, 3), w = (2, 0, 1/2)
    let rank_one = r#"{"shape": [2, 3, 3], "entries": [
        [[2, 0, "1/2"], [-2, 0, "-1/2"], [6, 0, "3/2"]],
        [[4, 0, 1], [-4, 0, -1], [12, 0, 3]]]}"#;
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(rank_one.as_bytes()).unwrap();
    let path = f.path().to_str().unwrap();
    let r = json_of(&["membership", "--input", path, "--t", "1"]);
    assert_eq!(r["results"]["member"], true);
    assert_eq!(r["results"]["rank2"], 1);
    assert!(r["results"].get("witness_minor").is_none());

    let generic = "[[[1, 0, 0], [0, 1, 0], [0, 0, 1]], [[0, 1, 0], [0, 0, 1], [1, 0, 0]]]";
    let mut g = tempfile::NamedTempFile::new().unwrap();
    g.write_all(generic.as_bytes()).unwrap();
    let path = g.path().to_str().unwrap();
    let r = json_of(&["membership", "--input", path, "--t", "2"]);
    assert_eq!(r["results"]["member"], false);
    let w = &r["results"]["witness_minor"];
    assert_eq!(w["rows"].as_array().unwrap().len(), 3);
    assert_ne!(w["value"], "0");
    let r = json_of(&["membership", "--input", path, "--t", "3"]);
    assert_eq!(r["results"]["member"], true);
}

#[test]
fn membership_of_samples_follows_rank() {
    for t in 1..=2 {
        let r = t.to_string();
        let j = json_of(&[
            "membership",
            "--t",
            &r,
            "--sample-rank",
            &r,
            "--a",
            "3",
            "--b",
            "4",
            "--seed",
            "11",
        ]);
        assert_eq!(j["results"]["member"], true);
    }
    let j = json_of(&[
        "membership",
        "--t",
        "1",
        "--sample-rank",
        "2",
        "--a",
        "3",
        "--b",
        "4",
        "--seed",
        "11",
    ]);
    assert_eq!(j["results"]["member"], false);
}

#[test]
fn render_round_trips_a_listed_facet() {
    let listed = stdout(&[
        "facets", "--a", "3", "--b", "4", "--t", "2", "--limit", "5", "--format", "text",
    ]);
    let lines: Vec<&str> = listed.lines().collect();
    assert_eq!(lines.len(), 5);
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(lines[4].as_bytes()).unwrap();
    let r = json_of(&[
        "render",
        "--a",
        "3",
        "--b",
        "4",
        "--t",
        "2",
        "--input",
        f.path().to_str().unwrap(),
        "--format",
        "json",
    ]);
    let record: Value = serde_json::from_str(lines[4]).unwrap();
    assert_eq!(r["results"]["facet"], record);
    let grid = r["results"]["grid"].as_str().unwrap();
    assert_eq!(grid.lines().count(), 6);
    let upper = grid
        .lines()
        .take(3)
        .flat_map(|l| l.chars())
        .filter(|c| c.is_ascii_digit())
        .count();
    assert_eq!(upper, (3 + 4) * 2);
}

#[test]
fn render_defaults_to_text() {
    let grid = stdout(&["render", "--a", "2", "--b", "2", "--t", "1"]);
    assert_eq!(grid.lines().count(), 4);
    assert!(grid.lines().next().unwrap().contains('|'));
}

#[test]
fn shelling_certificate() {
    let r = json_of(&[
        "shelling-certify",
        "--a",
        "3",
        "--b",
        "4",
        "--t",
        "2",
        "--check-extension",
    ]);
    assert_eq!(r["results"]["is_shelling"], true);
    assert_eq!(r["results"]["linear_extension"], true);
    assert_eq!(r["results"]["facets"], 276);
}

#[test]
fn regularity_bound() {
    let r = json_of(&["regularity", "--a", "3", "--b", "4", "--t", "2"]);
    assert_eq!(r["results"]["regularity"], 6);
    assert_eq!(r["results"]["bound"], 6);
    assert_eq!(r["results"]["holds"], true);
}

#[test]
fn groebner_checks() {
    for field in ["q", "f2", "f3"] {
        let r = json_of(&[
            "groebner-check",
            "--a",
            "3",
            "--b",
            "3",
            "--t",
            "2",
            "--field",
            field,
        ]);
        assert_eq!(r["results"]["verdict"], "groebner", "{field}");
        assert_eq!(r["results"]["initial_ideal_matches"], true);
    }
    let r = json_of(&[
        "groebner-check",
        "--a",
        "2",
        "--b",
        "3",
        "--t",
        "1",
        "--certify-only",
    ]);
    assert!(r["results"].get("initial_ideal_matches").is_none());
    let r = json_of(&[
        "groebner-check",
        "--a",
        "2",
        "--b",
        "3",
        "--t",
        "1",
        "--claim",
        "hibi",
    ]);
    assert_eq!(r["results"]["verdict"], "equal-ideals");
    assert_eq!(
        code(&[
            "groebner-check",
            "--a",
            "3",
            "--b",
            "3",
            "--t",
            "2",
            "--field",
            "f4"
        ]),
        2
    );
}

#[test]
fn chains_count() {
    let r = json_of(&["chains", "--a", "2", "--b", "2", "--len", "2"]);
    assert_eq!(r["results"]["count"], 9);
    assert_eq!(r["results"]["longest"], 2);
}

#[test]
fn repro_subset() {
    let out = secant(&["repro", "--only", "AC5", "--only", "ac4"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("AC4   PASS"));
    assert!(text.contains("AC5   PASS"));
    assert!(!text.contains("s]"));
}
