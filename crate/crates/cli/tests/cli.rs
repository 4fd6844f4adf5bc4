use std::path::PathBuf;
use std::process::{Command, Output};

fn bud(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bud"))
        .args(args)
        .output()
        .expect("running bud")
}

fn stdout(args: &[&str]) -> String {
    let out = bud(args);
    assert!(
        out.status.success(),
        "bud {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn lines(s: &str) -> Vec<&str> {
    s.lines().collect()
}

fn corpus(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("../grammar-bridge/corpus");
    p.push(name);
    p.to_string_lossy().into_owned()
}

#[test]
fn enumerate_balanced_binary_trees() {
    let out = stdout(&["enumerate", "--builtin", "bbt", "--sync", "--max-arity", "12"]);
    assert_eq!(lines(&out), ["1", "1", "2", "1", "4", "6", "4", "17", "32", "44", "60", "70"]);
}

#[test]
fn enumerate_motzkin_without_flat_pairs() {
    let out = stdout(&["enumerate", "--builtin", "motz-nohh", "--max-arity", "9"]);
    assert_eq!(lines(&out), ["1", "1", "1", "3", "5", "11", "25", "55", "129"]);
    let err = String::from_utf8(bud(&["enumerate", "--builtin", "bp", "--max-arity", "3"]).stderr).unwrap();
    assert!(err.contains("ambiguous"), "{err}");
}

#[test]
fn enumerate_formats() {
    let b = stdout(&["enumerate", "--builtin", "bs", "--max-arity", "4", "--format", "bfile"]);
    assert_eq!(lines(&b), ["1 1", "2 1", "3 2", "4 5"]);
    let c = stdout(&["enumerate", "--builtin", "bs", "--max-arity", "3", "--format", "csv"]);
    assert_eq!(lines(&c), ["arity,count", "1,1", "2,1", "3,2"]);
    assert_eq!(stdout(&["enumerate", "--builtin", "bs", "--max-arity", "1"]), "1\n");
}

#[test]
fn default_bound_is_eight() {
    let out = stdout(&["enumerate", "--builtin", "bs"]);
    assert_eq!(lines(&out), ["1", "1", "2", "5", "14", "42", "132", "429"]);
}

#[test]
fn btree_arities() {
    let out = stdout(&["enumerate", "--builtin", "btree", "--arities", "2,3", "--sync", "--max-arity", "8"]);
    assert_eq!(lines(&out), ["1", "1", "1", "1", "2", "2", "3", "4"]);
}

#[test]
fn dias_hook_series() {
    let out = stdout(&["series", "--builtin", "bdias", "--gamma", "1", "--kind", "hook", "--max-arity", "4"]);
    assert!(out.lines().any(|l| l == "2 * 101"), "{out}");
    let csv = stdout(&[
        "series", "--builtin", "bdias", "--gamma", "1", "--kind", "hook", "--max-arity", "3", "--format", "csv",
    ]);
    assert_eq!(csv.lines().next(), Some("arity,element,coefficient"));
    assert!(csv.lines().any(|l| l == "3,101,2"), "{csv}");
}

#[test]
fn dias_check_reports_ambiguity() {
    let out = stdout(&["check", "--builtin", "bdias", "--gamma", "1", "--max-arity", "3"]);
    assert!(out.lines().any(|l| l.starts_with("unambiguous=false")), "{out}");
    assert!(out.lines().any(|l| l == "faithful=true"), "{out}");
    assert!(out.lines().any(|l| l == "bound=3"), "{out}");
}

#[test]
fn colt_table_of_schroeder_system() {
    let out = stdout(&["colt", "--builtin", "bs", "--max-arity", "4"]);
    let rows = lines(&out);
    assert_eq!(rows[0], "color,type,coefficient");
    let mut by_degree = [0u64; 5];
    for row in &rows[1..] {
        let (_, rest) = row.split_once(",\"").unwrap();
        let (ty, coeff) = rest.split_once("\",").unwrap();
        let degree: usize = ty.split(',').map(|x| x.parse::<usize>().unwrap()).sum();
        by_degree[degree] += coeff.parse::<u64>().unwrap();
    }
    assert_eq!(by_degree, [0, 1, 1, 2, 5], "{out}");
}

#[test]
fn colt_sync_of_bbt() {
    let out = stdout(&["colt", "--builtin", "bbt", "--kind", "sync", "--max-arity", "5"]);
    assert_eq!(
        lines(&out),
        ["color,type,coefficient", "1,\"1,0\",1", "1,\"2,0\",1", "1,\"3,0\",2", "1,\"4,0\",1", "1,\"5,0\",4"]
    );
}

#[test]
fn graph_outputs() {
    let dot = stdout(&["graph", "--builtin", "bp", "--max-arity", "4", "--format", "dot"]);
    assert!(dot.starts_with("digraph"), "{dot}");
    let text = stdout(&["graph", "--builtin", "bs", "--max-arity", "3", "--format", "text"]);
    assert!(text.lines().all(|l| l.contains(" -> ")));
}

#[test]
fn compile_round_trip() {
    for name in ["dyck.cfg", "binary.rtg", "balanced.sg"] {
        let json = stdout(&["compile", &corpus(name)]);
        let dir = std::env::temp_dir().join(format!("bud-cli-test-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, &json).unwrap();
        let sys = budgen::json::from_json(&json).expect("reloads");
        assert_eq!(budgen::json::to_json(&sys), json);
        let p = path.to_string_lossy().into_owned();
        stdout(&["enumerate", "--system", &p, "--max-arity", "4"]);
    }
}

#[test]
fn presets_listing() {
    let out = stdout(&["presets"]);
    for name in ["bdias", "bp", "bs", "bu", "btree", "bbt", "b1", "b2", "b3"] {
        assert!(out.lines().any(|l| l.starts_with(&format!("{name}\t"))), "{name}");
    }
}

#[test]
fn bad_input_exits_one() {
    assert_eq!(bud(&["enumerate", "--builtin", "nope"]).status.code(), Some(1));
    assert_eq!(bud(&["enumerate"]).status.code(), Some(1));
    assert_eq!(bud(&["enumerate", "--builtin", "bs", "--max-arity", "0"]).status.code(), Some(1));
    assert_eq!(bud(&["enumerate", "--builtin", "bs", "--format", "dot"]).status.code(), Some(1));
    assert_eq!(bud(&["enumerate", "--system", "/nonexistent/file.json"]).status.code(), Some(1));
    assert_eq!(bud(&["compile", "/nonexistent/file.txt"]).status.code(), Some(1));
    let out = bud(&["enumerate", "--builtin", "nope"]);
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn unary_cycle_exits_two() {
    let json = r#"{
  "ground": {"kind": "as", "params": {}},
  "colors": ["1", "2"],
  "rules": [
    {"out": "1", "elem": "1", "ins": ["2"]},
    {"out": "2", "elem": "1", "ins": ["1"]}
  ],
  "initial": ["1"],
  "terminal": ["1"]
}"#;
    let sys = budgen::json::from_json(json).expect("a valid system with a unary cycle");
    let dir = std::env::temp_dir().join(format!("bud-cli-cycle-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cycle.json");
    std::fs::write(&path, budgen::json::to_json(&sys)).unwrap();
    let p = path.to_string_lossy().into_owned();
    for cmd in ["enumerate", "check", "series", "colt"] {
        let out = bud(&[cmd, "--system", &p, "--max-arity", "3"]);
        assert_eq!(out.status.code(), Some(2), "{cmd}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("divergence:"));
    }
}

#[test]
fn outputs_are_stable() {
    let args = ["series", "--builtin", "b1", "--kind", "sync", "--max-arity", "5"];
    assert_eq!(stdout(&args), stdout(&args));
}
