//! Diagonal and sheared searches for contraction families.

use lieshrink::catalog;
use lieshrink::contraction::{search_diagonal, search_sheared};
use lieshrink::gt::{make_gt, JordanType};

fn main() {
    let su2 = catalog::get("su2").unwrap();
    let a350 = catalog::get("A350").unwrap();
    let fam = search_diagonal(&su2, &a350, 2, None).unwrap().unwrap();
    println!("su2 ~> A350:\n{}", fam.matrix());

    // a Jordan chain of length 3 splitting into two chains of length 2 needs a shear
    let g = make_gt(&JordanType::nilpotent(&[3], 4).representative()).into_algebra();
    let g0 = make_gt(&JordanType::nilpotent(&[2, 2], 4).representative()).into_algebra();
    println!("diagonal only: {:?}", search_diagonal(&g, &g0, 4, None).unwrap().map(|_| "found"));
    let fam = search_sheared(&g, &g0, 4).unwrap().unwrap();
    println!("with one shear:\n{}", fam.matrix());
}
