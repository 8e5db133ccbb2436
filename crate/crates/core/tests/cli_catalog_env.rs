use lieshrink::cli::{run, CATALOG_ENV};
use std::fs;

// its own test binary: the variable is process-wide
#[test]
fn catalog_directory_adds_algebras() {
    let d = std::env::temp_dir().join(format!("lieshrink-env-{}", std::process::id()));
    fs::create_dir_all(&d).unwrap();
    fs::write(
        d.join("myso3.json"),
        r#"{"name": "myso3", "dim": 3, "brackets": [
            {"pair": [1, 2], "terms": [[3, "1"]]},
            {"pair": [2, 3], "terms": [[1, "1"]]},
            {"pair": [3, 1], "terms": [[2, "1"]]}]}"#,
    )
    .unwrap();
    std::env::set_var(CATALOG_ENV, &d);
    let out = run(["lieshrink", "decide", "myso3", "A350"]);
    assert_eq!(out.code, 0, "{out:?}");
    let out = run(["lieshrink", "obstruct", "sl2", "myso3"]);
    assert_eq!(out.code, 2);
    std::env::remove_var(CATALOG_ENV);
    assert_eq!(run(["lieshrink", "invariants", "myso3"]).code, 1);
}
