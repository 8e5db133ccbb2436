//! Laurent entries, exact inverses over Q(r), and limits at r = 0.

use lieshrink::arith::{parse_laurent, ratfun_limit0, ratfun_matrix_inverse, RatFun};
use lieshrink::contraction::laurent_matrix;

fn main() {
    let p = parse_laurent("-1/2*r^2 + 3 - r^-1").unwrap();
    println!("parsed: {p}");

    let c = laurent_matrix(&[vec!["r", "1"], vec!["0", "r^2"]]).unwrap();
    let inv = ratfun_matrix_inverse(&c).unwrap();
    println!("C =\n{c}C^-1 =\n{inv}");

    let f = RatFun::from_laurent(parse_laurent("r^2 + r").unwrap()) / RatFun::from_laurent(parse_laurent("r").unwrap());
    println!("(r^2 + r) / r -> {:?} as r -> 0", ratfun_limit0(&f).map(|q| q.to_string()));

    match parse_laurent("1/q") {
        Ok(_) => unreachable!(),
        Err(e) => println!("\"1/q\": {e}"),
    }
}
