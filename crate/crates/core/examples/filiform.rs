//! f_m contracts to h3 + a_(m-3) but never to h5 + a_(m-5).

use lieshrink::catalog::{filiform, filiform_heisenberg_basis, heisenberg};
use lieshrink::contraction::{obstruct, search_diagonal_exponents, Rule};
use lieshrink::lie::pad;

fn main() {
    for m in 3..=8 {
        let f = filiform(m);
        let h3 = pad(&heisenberg(1), m - 3);
        let p = filiform_heisenberg_basis(m);
        match search_diagonal_exponents(&f, &h3, 4, Some(&p)).unwrap() {
            Some(k) => print!("f{m} ~> h3+a{}: VERIFIED with exponents {k:?}", m - 3),
            None => print!("f{m} ~> h3+a{}: not found", m - 3),
        }
        if m >= 5 {
            let h5 = pad(&heisenberg(2), m - 5);
            let r7 = obstruct(&f, &h5).unwrap().iter().any(|v| v.rule == Rule::R7);
            print!("; f{m} ~> h5+a{}: {}", m - 5, if r7 { "BLOCKED by R7" } else { "not blocked" });
        }
        println!();
    }
}
