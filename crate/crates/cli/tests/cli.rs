use std::path::Path;
use std::process::{Command, Output};

use colored_embed::instances::{parse_instance, read_drawing, read_instance};
use colored_embed::verify::curve_complexity;

fn cembed(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cembed")).args(args).output().expect("binary runs")
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn text(o: &Output) -> String {
    format!("{}{}", String::from_utf8_lossy(&o.stdout), String::from_utf8_lossy(&o.stderr))
}

#[test]
fn embed_three_colored_path() {
    let dir = tempfile::tempdir().unwrap();
    let (inst, out, svg, be) = (dir.path().join("i.json"), dir.path().join("d.json"), dir.path().join("d.svg"), dir.path().join("be.json"));
    assert!(cembed(&["gen", "--kind", "path3", "--n", "40", "--seed", "3", "--output", s(&inst)]).status.success());
    let o = cembed(&["embed", "--input", s(&inst), "--output", s(&out), "--svg", s(&svg), "--dump-be", s(&be)]);
    assert_eq!(o.status.code(), Some(0), "{}", text(&o));
    let i = read_instance(&inst).unwrap();
    let d = read_drawing(&out, &i.points).unwrap();
    assert!(curve_complexity(&d) <= 5);
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));
    assert!(std::fs::read_to_string(&be).unwrap().contains("\"spine\""));
    let v = cembed(&["verify", "--input", s(&inst), "--drawing", s(&out)]);
    assert_eq!(v.status.code(), Some(0), "{}", text(&v));
}

#[test]
fn two_stars_engine_draws_with_one_bend() {
    let dir = tempfile::tempdir().unwrap();
    let (inst, out) = (dir.path().join("i.json"), dir.path().join("d.json"));
    assert!(cembed(&["gen", "--kind", "twostars", "--n", "8", "--seed", "1", "--output", s(&inst)]).status.success());
    let o = cembed(&["embed", "--input", s(&inst), "--output", s(&out), "--engine", "twostars"]);
    assert_eq!(o.status.code(), Some(0), "{}", text(&o));
    let i = read_instance(&inst).unwrap();
    assert!(curve_complexity(&read_drawing(&out, &i.points).unwrap()) <= 1);
}

const FOUR_POINTS: &str = r#"{"k": 2, "graph": {"n": 4, "colors": [0, 1, 0, 1], "edges": [[0, 2], [1, 3]]},
  "points": [{"x": "0", "y": "0", "color": 0}, {"x": "1", "y": "0", "color": 1},
             {"x": "2", "y": "0", "color": 0}, {"x": "3", "y": "0", "color": 1}]}"#;

#[test]
fn corrupted_drawing_is_rejected_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let (inst, out) = (dir.path().join("i.json"), dir.path().join("d.json"));
    std::fs::write(&inst, FOUR_POINTS).unwrap();
    let o = cembed(&["embed", "--input", s(&inst), "--output", s(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", text(&o));
    assert_eq!(cembed(&["verify", "--input", s(&inst), "--drawing", s(&out)]).status.code(), Some(0));
    // Replace both polylines by two tents that cross.
    let mut d: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    d["polylines"] = serde_json::json!([
        [["0", "0"], ["1", "1"], ["2", "0"]],
        [["1", "0"], ["3/2", "5"], ["3", "0"]]
    ]);
    std::fs::write(&out, d.to_string()).unwrap();
    let v = cembed(&["verify", "--input", s(&inst), "--drawing", s(&out)]);
    assert_eq!(v.status.code(), Some(1));
    assert!(text(&v).contains("\"crossing\""), "{}", text(&v));
}

#[test]
fn general_three_colored_caterpillar_is_unsupported() {
    let dir = tempfile::tempdir().unwrap();
    let (inst, out) = (dir.path().join("i.json"), dir.path().join("d.json"));
    // Backbone 0-1, leaves of colors 1 and 2 on vertex 0 and of color 2 on vertex 1.
    let json = r#"{"k": 3, "graph": {"n": 6, "colors": [0, 0, 1, 2, 2, 2], "edges": [[0, 1], [0, 2], [0, 3], [1, 4], [1, 5]]},
      "points": [{"x": "0", "y": "0", "color": 0}, {"x": "1", "y": "3", "color": 0}, {"x": "2", "y": "-1", "color": 1},
                 {"x": "3", "y": "5", "color": 2}, {"x": "4", "y": "2", "color": 2}, {"x": "5", "y": "7", "color": 2}]}"#;
    std::fs::write(&inst, json).unwrap();
    let o = cembed(&["embed", "--input", s(&inst), "--output", s(&out)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(text(&o).contains("unsupported: lower bound applies"), "{}", text(&o));
    assert!(!out.exists());
}

#[test]
fn malformed_input_exits_with_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let (inst, out) = (dir.path().join("i.json"), dir.path().join("d.json"));
    std::fs::write(&inst, FOUR_POINTS.replace("\"colors\": [0, 1, 0, 1]", "\"colors\": [0, 1, 0, 7]")).unwrap();
    let o = cembed(&["embed", "--input", s(&inst), "--output", s(&out)]);
    assert_eq!(o.status.code(), Some(3));
    assert!(text(&o).contains("graph.colors[3]"), "{}", text(&o));
    let missing = dir.path().join("missing.json");
    assert_eq!(cembed(&["embed", "--input", s(&missing), "--output", s(&out)]).status.code(), Some(3));
}

#[test]
fn oracle_on_odd_conflict_path() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("i.json");
    let order = [0, 2, 4, 1, 3, 5];
    let points: Vec<String> = order
        .iter()
        .enumerate()
        .map(|(x, c)| format!(r#"{{"x": "{x}", "y": "{}", "color": {c}}}"#, (x * x) % 7))
        .collect();
    let json = format!(
        r#"{{"k": 6, "graph": {{"n": 6, "colors": [0, 1, 2, 3, 4, 5], "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5]]}}, "points": [{}]}}"#,
        points.join(", ")
    );
    std::fs::write(&inst, &json).unwrap();
    parse_instance(&json).unwrap();
    let none = cembed(&["oracle", "--input", s(&inst), "--budget", "0", "--frozen", "0,2,4,1,3,5"]);
    assert_eq!(none.status.code(), Some(0));
    assert!(text(&none).starts_with("none"), "{}", text(&none));
    let found = cembed(&["oracle", "--input", s(&inst), "--budget", "1", "--frozen", "0,2,4,1,3,5"]);
    assert!(text(&found).starts_with("found: at most 1"), "{}", text(&found));
}

#[test]
fn bench_writes_csv() {
    let o = cembed(&["bench", "--kind", "caterpillar", "--n", "20", "--count", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", text(&o));
    let out = String::from_utf8(o.stdout).unwrap();
    assert_eq!(out.lines().count(), 3);
    assert!(out.starts_with("instance,n,edges,engine"));
}
