use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use alliancepoly::core::gen::nonisomorphic_graphs;
use alliancepoly::core::graph6::encode_graph6;
use serde_json::Value;

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_alliancepoly"));
    cmd.args(args).env_remove("ALLIANCEPOLY_GUARD");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().unwrap()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let o = run_env(args, &[]);
    (
        o.status.code().unwrap(),
        String::from_utf8(o.stdout).unwrap(),
        String::from_utf8(o.stderr).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    serde_json::from_str(&ok(&a)).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn poly_outputs() {
    assert_eq!(
        ok(&["poly", "--family", "path:4", "--which", "da"]),
        "2xy^2 + 2xy^3 + 3x^2y^4 + 2x^3y^4 + x^4y^5\n"
    );
    assert_eq!(
        ok(&["poly", "--named", "G1", "--which", "A"]),
        "4y^5 + 4y^6 + 63y^7 + 37y^8 + 7y^9 + y^10\n"
    );
    assert_eq!(ok(&["poly", "--g6", "Bw", "--which", "q"]), "3x + 3x^2 + x^3\n");
    assert_eq!(
        ok(&["poly", "--family", "cycle:4", "--which", "a"]),
        "4x^2 + 4x^3 + x^4\n"
    );
}

#[test]
fn poly_json_round_trips_through_props() {
    let dir = tempfile::tempdir().unwrap();
    let text = ok(&["poly", "--named", "G3", "--format", "json"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["n"], 8);
    assert_eq!(v["terms"][0], serde_json::json!({"x": 1, "y": 4, "c": "1"}));
    let p = write(dir.path(), "g3.json", &text);
    let from_poly = ok(&["props", "--poly", &p]);
    assert_eq!(from_poly, ok(&["props", "--named", "G3"]));
    assert!(from_poly.contains("cut_vertices: 3\n"));
    assert_eq!(ok(&["poly", "--poly", &p]), ok(&["poly", "--named", "G3"]));
}

#[test]
fn props_of_friendship() {
    let v = json(&["props", "--family", "friendship:2"]);
    assert_eq!(v["regular"], Value::Null);
    assert_eq!(v["degrees"], serde_json::json!([4, 2, 2, 2, 2]));
    assert_eq!(v["cut_vertices"], 1);
}

#[test]
fn edge_list_input() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "p3.txt", "# path\n3 2\n0 1\n1 2\n");
    assert_eq!(ok(&["poly", "--edges", &f, "--which", "q"]), "3x + 2x^2 + x^3\n");
    let bad = write(dir.path(), "bad.txt", "3 2\n0 1\n");
    assert_eq!(run(&["poly", "--edges", &bad]).0, 2);
}

#[test]
fn identify_lists_overlaps() {
    let v = json(&["identify", "--family", "cycle:4"]);
    let specs: Vec<&str> = v["matches"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| m["spec"].as_str().unwrap())
        .collect();
    assert_eq!(
        specs,
        ["complete_bipartite:2,2", "cycle:4", "quadrilateral_book:1"]
    );
    assert_eq!(v["regular"], 2);
    assert_eq!(ok(&["identify", "--named", "G1"]), "G1 (full)\n");
    assert_eq!(
        ok(&["identify", "--g6", "C`"]).lines().next(),
        Some("no family matches")
    );
}

#[test]
fn identify_against_a_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let text: String = nonisomorphic_graphs(5)
        .iter()
        .map(|g| encode_graph6(g).unwrap() + "\n")
        .collect();
    let corpus = write(dir.path(), "five.g6", &(text + "bad!\n"));
    let v = json(&["identify", "--family", "cycle:5", "--corpus", &corpus]);
    assert_eq!(v["query"], "cycle:5");
    assert_eq!(v["holds"], true);
    assert_eq!(v["corpus_hits"].as_array().unwrap().len(), 1);
    assert_eq!(v["corpus_hits"][0]["isomorphic"], true);
    assert_eq!(v["errors"].as_array().unwrap().len(), 1);
    assert_eq!(run(&["identify", "--g6", "Bw", "--corpus", &corpus]).0, 2);
}

#[test]
fn compare_named_pairs() {
    let v = json(&["compare", "--named", "G1", "--named", "G2"]);
    assert_eq!(v["A_equal"], true);
    assert_eq!(v["da_equal"], false);
    assert_eq!(v["q_equal"], false);
    assert_eq!(v["isomorphic"], false);
    let v = json(&["compare", "--named", "G3", "--family", "G4"]);
    assert_eq!(
        (v["A_equal"].clone(), v["da_equal"].clone()),
        (true.into(), false.into())
    );
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    assert_eq!(
        ok(&["compare", "--edges", &f, "--family", "complete_bipartite:2,2"]),
        "da_equal: true\nA_equal: true\na_equal: true\nq_equal: true\nisomorphic: true\n"
    );
    assert_eq!(run(&["compare", "--named", "G1"]).0, 2);
}

#[test]
fn compare_keeps_argument_order_across_kinds() {
    // no isomorphism verdict without two graphs
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        dir.path(),
        "k3.json",
        &ok(&["poly", "--family", "complete:3", "--format", "json"]),
    );
    let v = json(&["compare", "--poly", &p, "--g6", "Bw"]);
    assert_eq!(v["da_equal"], true);
    assert_eq!(v["isomorphic"], Value::Null);
}

#[test]
fn scan_reports() {
    let dir = tempfile::tempdir().unwrap();
    let text: String = ["G1", "G2", "G3", "G4"]
        .iter()
        .map(|s| {
            let g = s
                .parse::<alliancepoly::core::FamilySpec>()
                .unwrap()
                .graph()
                .unwrap();
            encode_graph6(&g).unwrap() + "\n"
        })
        .collect();
    let corpus = write(dir.path(), "pairs.g6", &text);
    let v = json(&["scan", &corpus, "--key", "A"]);
    assert_eq!(v["buckets"].as_array().unwrap().len(), 2);
    let pairs = v["split_pairs"].as_array().unwrap();
    assert_eq!(pairs.len(), 2);
    for p in pairs {
        assert_eq!(p["key_equal"], true);
        assert_eq!(p["da_equal"], false);
        assert_eq!(p["isomorphic"], false);
    }
    let summary = ok(&["scan", &corpus, "--key", "A"]);
    assert!(summary.contains("pairs split by da: 2\n"));
    assert_eq!(run(&["scan", &corpus, "--key", "B"]).0, 2);

    let edges = dir.path().join("edges");
    fs::create_dir(&edges).unwrap();
    write(&edges, "a.txt", "3 3\n0 1\n1 2\n2 0\n");
    write(&edges, "b.txt", "3 3\n0 2\n2 1\n0 1\n");
    let v = json(&["scan", edges.to_str().unwrap()]);
    assert_eq!(v["buckets"][0]["members"], serde_json::json!(["a.txt", "b.txt"]));
    assert_eq!(v["split_pairs"][0]["isomorphic"], true);
}

#[test]
fn family_closed_forms() {
    let (code, out, err) = run(&["family", "star:4", "--errata", "paper"]);
    assert_eq!(code, 0);
    assert!(err.starts_with("warning:"));
    assert_eq!(out, "xy + 4xy^3 + 4x^2y^2 + 6x^3y^4 + 4x^4y^5 + x^5y^5\n");
    let (_, out, err) = run(&["family", "star:4"]);
    assert!(err.is_empty());
    assert_eq!(out, ok(&["poly", "--family", "star:4"]));
    assert_eq!(
        ok(&["family", "complete:5"]),
        ok(&["poly", "--family", "complete:5"])
    );
    let v = json(&["family", "wheel:5"]);
    assert_eq!(v["kind"], "slice");
    assert_eq!(v["slices"][0]["x"], 1);
    assert_eq!(run(&["family", "cycle:2"]).0, 2);
    assert_eq!(run(&["family", "nonsense:2"]).0, 2);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["poly", "--family", "complete:12", "--guard", "10"]).0, 3);
    let o = run_env(
        &["poly", "--family", "complete:12"],
        &[("ALLIANCEPOLY_GUARD", "10")],
    );
    assert_eq!(o.status.code(), Some(3));
    let o = run_env(
        &["poly", "--family", "path:3", "--guard", "100"],
        &[("ALLIANCEPOLY_GUARD", "1")],
    );
    assert_eq!(o.status.code(), Some(0));
    let o = run_env(&["poly", "--family", "path:3"], &[("ALLIANCEPOLY_GUARD", "x")]);
    assert_eq!(o.status.code(), Some(2));
    // cut vertices of a disconnected polynomial are a domain error
    let dir = tempfile::tempdir().unwrap();
    let bogus = write(dir.path(), "p.json", r#"{"terms":[{"x":1,"y":1,"c":"2"}]}"#);
    assert_eq!(run(&["identify", "--poly", &bogus]).0, 1);
    let zero = write(dir.path(), "z.json", r#"{"terms":[{"x":1,"y":1,"c":"0"}]}"#);
    assert_eq!(run(&["props", "--poly", &zero]).0, 2);
    assert_eq!(run(&["poly", "--g6", "B!"]).0, 2);
    assert_eq!(run(&["poly", "--family", "path:3", "--named", "G1"]).0, 2);
    assert_eq!(run(&["bogus"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn parallel_output_is_identical() {
    for args in [
        ["poly", "--named", "G2"],
        ["props", "--family", "wheel:8"],
        ["identify", "--family", "quadrilateral_book:3"],
    ] {
        let mut par = args.to_vec();
        par.push("--parallel");
        assert_eq!(ok(&args), ok(&par));
        assert_eq!(ok(&par), ok(&par));
    }
}
