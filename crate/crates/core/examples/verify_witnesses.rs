//! Re-verify every stored family and show one that fails.

use lieshrink::catalog::{self, witnesses};
use lieshrink::contraction::{laurent_matrix, verify_contraction, ContractionFamily};

fn main() {
    for w in witnesses() {
        let v = verify_contraction(&w.family);
        let inv = if w.printed_inverse.is_some() { " (inverse checked)" } else { "" };
        println!("{:<28} {v}{inv}", w.id);
    }

    // sl(2) is not a source for this matrix: the limit has a pole
    let c = laurent_matrix(&[
        vec!["r", "0", "0", "0", "0"],
        vec!["0", "r", "0", "0", "0"],
        vec!["0", "0", "r^2", "0", "0"],
        vec!["0", "0", "0", "1", "0"],
        vec!["0", "0", "0", "0", "1"],
    ])
    .unwrap();
    let fam = ContractionFamily::new(catalog::get("sl2+a2").unwrap(), catalog::get("n212").unwrap(), c).unwrap();
    println!("sl2+a2 -> n212 with diag(r, r, r^2, 1, 1): {}", verify_contraction(&fam));
}
