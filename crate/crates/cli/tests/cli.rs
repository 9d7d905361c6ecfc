use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn quiver(name: &str) -> String {
    root().join("quivers").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_truncpath"))
        .args(args)
        .output()
        .expect("binary runs")
}

/// Runs a command, checks exit 0 and validates the report against its schema.
fn report(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: Value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    let schema_path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("schemas")
        .join(format!("{}.schema.json", args[0]));
    let schema: Value =
        serde_json::from_str(&std::fs::read_to_string(schema_path).unwrap()).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).expect("schema compiles");
    if let Err(errors) = compiled.validate(&v) {
        let msgs: Vec<String> = errors
            .map(|e| format!("{e} at {}", e.instance_path))
            .collect();
        panic!("{args:?} violates its schema: {msgs:?}");
    }
    assert_eq!(v["tool"], "truncpath");
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    v
}

fn components_of(v: &Value) -> BTreeSet<String> {
    v["components"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["is_component"] == true)
        .map(|c| c["sequence"].to_string())
        .collect()
}

#[test]
fn example_2_8_has_four_components() {
    let q = quiver("ex2_8.json");
    let v = report(&["components", "--quiver", &q, "--L", "3", "--dim", "2,2"]);
    assert_eq!(components_of(&v).len(), 4);
    assert_eq!(v["config"]["seed"], 0);
    assert_eq!(v["config"]["field"], "rational");
    assert_eq!(v["config"]["quiver"]["content"]["vertices"], 2);
}

#[test]
fn zero_dimension_vector_gives_one_row() {
    let q = quiver("ex2_8.json");
    let v = report(&["components", "--quiver", &q, "--L", "3", "--dim", "0,0"]);
    assert_eq!(v["components"].as_array().unwrap().len(), 1);
    assert_eq!(components_of(&v).len(), 1);
}

#[test]
fn local_formula_agrees_with_search() {
    let q = quiver("two_loops.json");
    for (d, l) in [("3", "3"), ("4", "3"), ("5", "4")] {
        let closed = report(&[
            "components",
            "--quiver",
            &q,
            "--L",
            l,
            "--dim",
            d,
            "--local-formula",
        ]);
        assert_eq!(closed["closed_form"], true);
        let listed: BTreeSet<String> = closed["components"]
            .as_array()
            .unwrap()
            .iter()
            .map(|s| s.to_string())
            .collect();
        let searched = report(&["components", "--quiver", &q, "--L", l, "--dim", d]);
        assert_eq!(listed, components_of(&searched), "d={d} L={l}");
    }
}

#[test]
fn example_2_9_hierarchy() {
    let q = quiver("two_loops.json");
    let v = report(&[
        "hierarchy",
        "--quiver",
        &q,
        "--L-range",
        "2..5",
        "--dim",
        "5",
    ]);
    let counts: Vec<usize> = v["hierarchy"]["levels"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l["components"].as_array().unwrap().len())
        .collect();
    assert_eq!(counts, [2, 3, 4, 1]);
    let yes = v["hierarchy"]["edges"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["verdict"]["verdict"] == "yes")
        .count();
    // 2*3 between C and D, 8 between D and E, 4 into F
    assert_eq!(yes, 6 + 8 + 4);
}

#[test]
fn single_level_hierarchy_has_no_edges() {
    let q = quiver("two_loops.json");
    let v = report(&["hierarchy", "--quiver", &q, "--L", "3", "--dim", "4"]);
    assert!(v["hierarchy"]["edges"].as_array().unwrap().is_empty());
}

#[test]
fn tilt_of_example_3_5() {
    let q = quiver("ex3_5.json");
    let v = report(&["tilt", "--quiver", &q, "--L", "3"]);
    assert_eq!(v["tilt"]["tilted_loewy_length"], 7);
    assert_eq!(v["tilt"]["epsilon"], serde_json::json!([3, 4]));
    assert_eq!(v["tilt"]["vertex_loewy_lengths"][1], 6);
}

#[test]
fn tilt_writes_dot_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().display().to_string();
    let q = quiver("ex3_5.json");
    let o = run(&["tilt", "--quiver", &q, "--L", "3", "--out", &out]);
    assert!(o.status.success());
    let table = String::from_utf8(o.stdout).unwrap();
    assert!(table.contains("LL(Λ̃_L) = 7"), "{table}");
    for i in 1..=4 {
        let dot = std::fs::read_to_string(dir.path().join(format!("T{i}.dot"))).unwrap();
        assert!(dot.starts_with("digraph"));
    }
    let json: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("tilt.json")).unwrap())
            .unwrap();
    assert_eq!(json["tilt"]["tilted_loewy_length"], 7);
}

#[test]
fn ratio_estimate_of_example_3_9() {
    let q = quiver("ex3_9.json");
    let v = report(&["tilt", "--quiver", &q, "--L", "2", "--ratios", "20"]);
    assert_eq!(v["accumulation"]["points"], serde_json::json!(["1", "4/3"]));
    assert_eq!(v["ratios"].as_array().unwrap().len(), 19);
}

#[test]
fn single_loop_tilt_is_trivial() {
    let q = quiver("single_loop.json");
    let v = report(&["tilt", "--quiver", &q, "--L", "3", "--ratios", "6"]);
    assert_eq!(v["tilt"]["tilted_loewy_length"], 3);
    for r in v["ratios"].as_array().unwrap() {
        assert_eq!(r["ratio"], "1");
    }
}

#[test]
fn example_4_1_types() {
    let expected = [
        ("ex4_1_1.json", "finite"),
        ("ex4_1_2.json", "tame"),
        ("ex4_1_3.json", "unknown"),
    ];
    for (file, tilted) in expected {
        let q = quiver(file);
        let v = report(&["reptype", "--quiver", &q, "--L", "2", "--tilt"]);
        assert_eq!(v["algebra"]["verdict"], "finite", "{file}");
        assert_eq!(v["tilted"]["verdict"], tilted, "{file}");
    }
    let q = quiver("ex4_1_3.json");
    let v = report(&["reptype", "--quiver", &q, "--L", "2", "--tilt"]);
    let rules: Vec<&str> = v["tilted"]["evidence"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["rule"].as_str().unwrap())
        .collect();
    assert!(rules.contains(&"wildness"));
}

#[test]
fn realizable_and_graph() {
    let q = quiver("ex2_8.json");
    let v = report(&["realizable", "--quiver", &q, "--L", "3", "--dim", "2,2"]);
    assert_eq!(v["count"], 9);
    let q = quiver("two_loops.json");
    let m = root()
        .join("modules/two_loops_uniserial.json")
        .display()
        .to_string();
    let v = report(&["graph", "--quiver", &q, "--module", &m]);
    assert_eq!(v["radical_layering"], serde_json::json!([[1], [1], [1]]));
    assert_eq!(v["socle_layering"], serde_json::json!([[1], [1], [1]]));
}

#[test]
fn reruns_are_byte_identical() {
    let q = quiver("ex2_8.json");
    let args = [
        "hierarchy",
        "--quiver",
        &q,
        "--L-range",
        "3..5",
        "--dim",
        "2,2",
        "--seed",
        "7",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn input_errors_exit_with_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{"vertices": 2, "arrows": [{"id": "a", "from": 1, "to": 3}]}"#,
    )
    .unwrap();
    let bad = bad.display().to_string();
    let q = quiver("ex2_8.json");
    let cases: Vec<Vec<&str>> = vec![
        vec!["components", "--quiver", &bad, "--L", "2", "--dim", "1,1"],
        vec![
            "components",
            "--quiver",
            "/nonexistent.json",
            "--L",
            "2",
            "--dim",
            "1,1",
        ],
        vec!["components", "--quiver", &q, "--L", "2"],
        vec!["components", "--quiver", &q, "--L", "2", "--dim", "1"],
        vec![
            "components",
            "--quiver",
            &q,
            "--L",
            "2",
            "--dim",
            "1,1",
            "--field",
            "p4",
        ],
        vec![
            "hierarchy",
            "--quiver",
            &q,
            "--L-range",
            "5..3",
            "--dim",
            "1,1",
        ],
        vec!["tilt", "--quiver", &q, "--L", "2", "--field", "p5"],
    ];
    for args in cases {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn exhaustive_mode_over_a_prime_field() {
    let q = quiver("ex2_8.json");
    let v = report(&[
        "components",
        "--quiver",
        &q,
        "--L",
        "3",
        "--dim",
        "2,2",
        "--field",
        "p5",
        "--mode",
        "exhaustive",
    ]);
    assert_eq!(components_of(&v).len(), 4);
}
