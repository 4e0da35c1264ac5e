use std::path::PathBuf;
use std::process::{Command, Output};

use cellorder::orders::FamilyPoset;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cellorder"))
        .args(args)
        .env_remove("CELLORDER_DATA_DIR")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch_dir(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("cellorder-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn irr_tables() {
    let o = run(&["irr", "A2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 3);
    let a: Vec<u32> = rows.iter().map(|r| r.split_whitespace().nth(2).unwrap().parse().unwrap()).collect();
    assert_eq!(a, [0, 1, 3]);
    for (ty, n) in [("H4", 34), ("F4", 25)] {
        let o = run(&["irr", ty, "--json"]);
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["irreducibles"].as_array().unwrap().len(), n);
    }
}

#[test]
fn order_outputs() {
    let o = run(&["order", "A3"]);
    let p = FamilyPoset::from_json(&stdout(&o)).unwrap();
    assert_eq!(p.nodes.len(), 5);
    assert!(p.is_total());
    let o = run(&["order", "A1xA1", "--format", "json"]);
    let p = FamilyPoset::from_json(&stdout(&o)).unwrap();
    assert_eq!((p.nodes.len(), p.edges.len()), (4, 4));
    let o = run(&["order", "H4", "--format", "dot"]);
    assert!(o.status.success());
    let dot = stdout(&o);
    assert_eq!(dot.matches("rank=same").count(), 13);
    assert_eq!(dot.matches(" -> ").count(), 12);
}

#[test]
fn verify_examples() {
    for args in [&["verify", "B2", "--kl-oracle"][..], &["verify", "A4", "--springer"], &["verify", "H3", "--all"]] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}\n{}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
    let o = run(&["verify", "A2", "B2", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(v[0]["schema"], "cellorder.report/1");
    assert!(v[0]["checks"][0].get("millis").is_none());
}

#[test]
fn output_is_byte_stable() {
    for args in [&["verify", "H3", "--all"][..], &["order", "F4", "--format", "dot"], &["irr", "D4"], &["cells", "A3"]] {
        let (a, b) = (run(args), run(args));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["irr", "X9"]).status.code(), Some(2));
    assert_eq!(run(&["order", "A3", "--format", "png"]).status.code(), Some(2));
    assert_eq!(run(&["order", "H4", "--max-group-order", "100"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "F4", "--kl-oracle", "--oracle-bound", "100"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "H3", "--springer"]).status.code(), Some(2));
    let dir = scratch_dir("corrupt");
    let good = include_str!("../data/H3.tbl");
    std::fs::write(dir.join("H3.tbl"), good.replacen("phi1,0 0 0", "phi1,0 0 1", 1)).unwrap();
    let o = run(&["irr", "H3", "--data-dir", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3), "{}", String::from_utf8_lossy(&o.stderr));
    std::fs::write(dir.join("H3.tbl"), good).unwrap();
    assert_eq!(run(&["irr", "H3", "--data-dir", dir.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn generated_data_matches_bundled() {
    let dir = scratch_dir("gen");
    let o = run(&["gen-data", "H3", "--out", dir.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(std::fs::read_to_string(dir.join("H3.tbl")).unwrap(), include_str!("../data/H3.tbl"));
    assert_eq!(run(&["gen-data", "B3", "--out", dir.to_str().unwrap()]).status.code(), Some(2));
}
