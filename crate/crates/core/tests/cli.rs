use lieshrink::cli::{run, Output};
use std::fs;

fn lieshrink(args: &[&str]) -> Output {
    run(std::iter::once("lieshrink").chain(args.iter().copied()))
}

fn temp_dir(name: &str) -> std::path::PathBuf {
    let d = std::env::temp_dir().join(format!("lieshrink-{name}-{}", std::process::id()));
    let _ = fs::remove_dir_all(&d);
    fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn decide_su2_a350_prints_the_diagonal_witness() {
    let out = lieshrink(&["decide", "su2", "A350"]);
    assert_eq!(out.code, 0, "{out:?}");
    assert!(out.stdout.contains("VERIFIED"));
    let json = lieshrink(&["--format", "json", "decide", "su2", "A350"]);
    let v: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(v["matrix"], serde_json::json!([["r", "0", "0"], ["0", "r", "0"], ["0", "0", "1"]]));
}

#[test]
fn obstruct_sl2_su2_names_the_killing_rule() {
    let out = lieshrink(&["--format", "json", "obstruct", "sl2", "su2"]);
    assert_eq!(out.code, 2);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let r6 = v["violations"].as_array().unwrap().iter().find(|x| x["rule"] == "R6").unwrap();
    assert_eq!(r6["source"], "2 positive, 1 negative");
    assert_eq!(r6["target"], "0 positive, 3 negative");
}

#[test]
fn obstruct_without_violations_is_consistent() {
    assert_eq!(lieshrink(&["obstruct", "su2", "A350"]).code, 0);
}

#[test]
fn unparseable_family_entries_exit_1_with_a_position() {
    let d = temp_dir("badfam");
    let p = d.join("fam.json");
    fs::write(&p, r#"{"source": "su2", "target": "A350", "entries": [["r","0","0"],["0","1/q","0"],["0","0","1"]]}"#).unwrap();
    let out = lieshrink(&["verify", p.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("entry (2, 2)") && out.stderr.contains("position 2"), "{}", out.stderr);
}

#[test]
fn verify_exit_codes_follow_the_verdict() {
    let d = temp_dir("verify");
    let good = d.join("good.json");
    fs::write(&good, r#"{"source": "su2", "target": "A350", "entries": [["r","0","0"],["0","r","0"],["0","0","1"]]}"#).unwrap();
    assert_eq!(lieshrink(&["verify", good.to_str().unwrap()]).code, 0);
    let bad = d.join("bad.json");
    fs::write(&bad, r#"{"source": "su2", "target": "A350", "entries": [["r^-1","0","0"],["0","r","0"],["0","0","1"]]}"#).unwrap();
    let out = lieshrink(&["verify", bad.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.contains("REFUTED"));
    // stabilized: su2 + a1 against A350 + a1
    let padded = d.join("padded.json");
    fs::write(
        &padded,
        r#"{"source": "su2", "target": "A350", "stabilization": [1, 1],
            "entries": [["r","0","0","0"],["0","r","0","0"],["0","0","1","0"],["0","0","0","1"]]}"#,
    )
    .unwrap();
    assert_eq!(lieshrink(&["verify", padded.to_str().unwrap()]).code, 0);
}

#[test]
fn search_and_cone_exit_codes() {
    assert_eq!(lieshrink(&["search", "su2", "A350", "--bound", "1"]).code, 0);
    assert_eq!(lieshrink(&["search", "sl2", "su2", "--bound", "1"]).code, 3);
    assert_eq!(lieshrink(&["cone", "[[0,1],[0,0]]", "[[1,0],[0,-1]]"]).code, 0);
    assert_eq!(lieshrink(&["cone", "[[1,0],[0,-1]]", "[[0,1],[-1,0]]"]).code, 2);
    assert_eq!(lieshrink(&["search", "su2", "A350", "--base-change", "[[1,0],[0,1]]"]).code, 1);
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(lieshrink(&["frobnicate"]).code, 1);
    assert_eq!(lieshrink(&["invariants", "nosuchalgebra"]).code, 1);
    assert_eq!(lieshrink(&["--help"]).code, 0);
}

#[test]
fn graph_dot_has_solid_and_dashed_edges() {
    let plain = lieshrink(&["graph", "--dot"]).stdout;
    assert!(plain.contains("\"su2\" -> \"n33\";"));
    assert!(!plain.contains("dashed"));
    let full = lieshrink(&["graph", "--dot", "--show-blocked"]).stdout;
    assert!(full.contains("\"sl2\" -> \"su2\" [style=dashed, label=\"R6,R8\"];"), "{full}");
}

#[test]
fn exported_catalog_files_load_back() {
    let d = temp_dir("export");
    assert_eq!(lieshrink(&["catalog", "export", d.to_str().unwrap()]).code, 0);
    let inv = lieshrink(&["invariants", d.join("n33.json").to_str().unwrap()]);
    assert_eq!(inv.stdout, lieshrink(&["invariants", "n33"]).stdout);
    let fam = d.join("witnesses").join("su2+a3__n33.json");
    let out = lieshrink(&["verify", fam.to_str().unwrap()]);
    assert_eq!(out.code, 0, "{out:?}");
}
