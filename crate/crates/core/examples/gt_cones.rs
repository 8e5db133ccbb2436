//! Cone membership for g_T algebras and the families it produces.

use lieshrink::arith::{Matrix, Rational};
use lieshrink::contraction::verify_contraction;
use lieshrink::gt::{closure_cone_member, cone_family, cone_member};

fn m(rows: Vec<Vec<i64>>) -> Matrix<Rational> {
    Matrix::from_i64(rows)
}

fn main() {
    let h = m(vec![vec![1, 0], vec![0, -1]]);
    let rot = m(vec![vec![0, 1], vec![-1, 0]]);
    let j2 = m(vec![vec![0, 1], vec![0, 0]]);
    for (name, s, t) in [("J2 in H", &j2, &h), ("J2 in R", &j2, &rot), ("H in R", &h, &rot), ("3H in H", &h.scale(&Rational::from_integer(3.into())), &h)] {
        let exact = cone_member(s, t).unwrap();
        let closure = closure_cone_member(s, t).unwrap();
        print!("{name:<8} cone {:<7} closure {:<7}", exact.status.to_string(), closure.status.to_string());
        match closure.witness.as_ref().and_then(|w| cone_family(s, t, w)) {
            Some(f) => println!(" family {}", verify_contraction(&f)),
            None => println!(" ({})", closure.reason),
        }
    }
}
