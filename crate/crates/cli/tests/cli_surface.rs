//! Binary-level behavior: subcommand output shapes, exit codes, and the
//! graph-format round trips.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn slicetree(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_slicetree"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .expect("stdin piped")
        .write_all(stdin.as_bytes())
        .expect("stdin writes");
    child.wait_with_output().expect("binary runs")
}

fn stdout_of(args: &[&str], stdin: &str) -> String {
    let out = slicetree(args, stdin);
    assert!(
        out.status.success(),
        "expected success for {args:?}, stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

fn exit_code(args: &[&str], stdin: &str) -> i32 {
    slicetree(args, stdin).status.code().expect("exit code")
}

const THETA_JSON: &str = r#"{"vertices":["u","v","m1","m2","m3"],
    "edges":[["u","m1"],["m1","v"],["u","m2"],["m2","v"],["u","m3"],["m3","v"]]}"#;

#[test]
fn gen_emits_the_documented_formats() {
    let edges = stdout_of(&["gen", "cycle", "3"], "");
    assert_eq!(edges, "0 1\n0 2\n1 2\n");

    let json = stdout_of(&["gen", "theta", "2", "2", "2", "--format", "json"], "");
    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(parsed["vertices"].as_array().unwrap().len(), 5);

    let dot = stdout_of(&["gen", "cycle", "3", "--format", "dot"], "");
    assert!(dot.starts_with("graph g {"));
    assert!(dot.contains("\"0\" -- \"1\";"));
}

#[test]
fn gen_round_trips_through_both_formats() {
    for fmt in ["edges", "json"] {
        let text = stdout_of(&["gen", "theta-chain", "2", "2", "--format", fmt], "");
        let report1 = stdout_of(&["classify"], &text);
        let report2 = stdout_of(&["classify"], &text);
        assert_eq!(report1, report2);
        let v: serde_json::Value = serde_json::from_str(&report1).unwrap();
        assert_eq!(v["verdict"], "splits-over-pair");
    }
}

#[test]
fn classify_reads_json_and_edge_lists() {
    let report = stdout_of(&["classify"], THETA_JSON);
    let v: serde_json::Value = serde_json::from_str(&report).unwrap();
    assert_eq!(v["verdict"], "degenerate");
    assert_eq!(v["family_size"], 1);
    assert_eq!(v["inseparable_pair"], serde_json::json!(["u", "v"]));

    let report = stdout_of(&["classify"], "0 1\n1 2\n2 0\n");
    let v: serde_json::Value = serde_json::from_str(&report).unwrap();
    assert_eq!(v["verdict"], "circle");

    // Rigid verdicts carry no tree artifact: the field is null.
    let k4 = stdout_of(&["gen", "complete", "4"], "");
    let report = stdout_of(&["classify"], &k4);
    let v: serde_json::Value = serde_json::from_str(&report).unwrap();
    assert_eq!(v["verdict"], "rigid");
    assert_eq!(v["tree"], serde_json::Value::Null);
    assert_eq!(v["tree_nodes"], serde_json::Value::Null);
}

#[test]
fn cut_pairs_lists_labels() {
    let out = stdout_of(&["cut-pairs"], THETA_JSON);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v, serde_json::json!([["u", "v"]]));
}

#[test]
fn slices_and_minimal_slice_use_labels() {
    let out = stdout_of(&["slices", "--pair", "u", "v"], THETA_JSON);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
    assert_eq!(v[0]["closure"], serde_json::json!(["u", "v", "m1"]));

    let out = stdout_of(&["minimal-slice", "--vertex", "m2"], THETA_JSON);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["closure"], serde_json::json!(["u", "v", "m2"]));
}

#[test]
fn tree_emits_json_and_dot() {
    let chain = stdout_of(&["gen", "theta-chain", "2", "2"], "");
    let json = stdout_of(&["tree"], &chain);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["pair_nodes"].as_array().unwrap().len(), 2);
    assert_eq!(v["set_nodes"].as_array().unwrap().len(), 1);

    let dot = stdout_of(&["tree", "--format", "dot"], &chain);
    assert!(dot.starts_with("graph slice_tree {"));
    assert!(dot.contains("shape=box"));
    assert!(dot.contains("shape=ellipse"));
    assert_eq!(dot.matches(" -- ").count(), 2);
}

#[test]
fn block_cut_tree_on_two_triangles() {
    let input = "0 1\n0 2\n1 2\n2 3\n2 4\n3 4\n";
    let out = stdout_of(&["block-cut-tree"], input);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["blocks"].as_array().unwrap().len(), 2);
    assert_eq!(v["cut_vertices"], serde_json::json!(["2"]));
    assert_eq!(v["edges"].as_array().unwrap().len(), 2);

    let dot = stdout_of(&["block-cut-tree", "--format", "dot"], input);
    assert!(dot.contains("b0 -- c0;"));
}

#[test]
fn aut_reports_order_and_elements() {
    let out = stdout_of(&["aut"], "0 1\n1 2\n2 0\n");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["order"], 6);
    assert_eq!(v["elements"][0], serde_json::json!(["0", "1", "2"]));
}

#[test]
fn family_file_drives_the_tree() {
    let dir = std::env::temp_dir().join("slicetree-family-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("family.json");
    std::fs::write(&path, r#"[["0","1"],["1","2"],["2","3"]]"#).unwrap();
    let chain = stdout_of(&["gen", "theta-chain", "3", "2"], "");
    let out = stdout_of(
        &[
            "tree",
            "--family",
            "file",
            "--family-file",
            path.to_str().unwrap(),
        ],
        &chain,
    );
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pair_nodes"].as_array().unwrap().len(), 3);
    assert_eq!(v["set_nodes"].as_array().unwrap().len(), 2);
    assert_eq!(v["edges"].as_array().unwrap().len(), 4);
}

#[test]
fn input_errors_exit_2() {
    // Loop edge.
    assert_eq!(exit_code(&["classify"], "0 0\n"), 2);
    // Malformed line.
    assert_eq!(exit_code(&["classify"], "0 1 2\n"), 2);
    // Cut-pair enumeration on a graph with a cut vertex.
    let out = slicetree(&["cut-pairs"], "0 1\n1 2\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(
        String::from_utf8_lossy(&out.stderr).contains("cut vertex"),
        "error should name the offending cut vertex"
    );
    // Unknown generator parameters.
    assert_eq!(exit_code(&["gen", "cycle", "2"], ""), 2);
    assert_eq!(exit_code(&["gen", "nonsense", "4"], ""), 2);
    // Orbit family on a non-cycle over the automorphism cap.
    let big = stdout_of(&["gen", "theta-chain", "3", "2"], "");
    let out = slicetree(&["classify"], &big);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--max-n"));
    // Raising the cap fixes it.
    assert_eq!(exit_code(&["classify", "--max-n", "13"], &big), 0);
    // Unknown vertex label.
    assert_eq!(
        exit_code(&["slices", "--pair", "u", "zzz"], THETA_JSON),
        2
    );
    // Tree on a rigid graph has no family to build.
    let k4 = stdout_of(&["gen", "complete", "4"], "");
    assert_eq!(exit_code(&["tree"], &k4), 2);
}

#[test]
fn classify_dot_requires_a_tree_artifact() {
    let c6 = stdout_of(&["gen", "cycle", "6"], "");
    assert_eq!(exit_code(&["classify", "--format", "dot"], &c6), 2);

    // A graph with a cut vertex draws its block-cut tree.
    let dot = stdout_of(&["classify", "--format", "dot"], "0 1\n1 2\n");
    assert!(dot.starts_with("graph block_cut_tree {"));
}
