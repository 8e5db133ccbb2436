//! Recover S from a family g_T ~> g_S as an explicit limit.

use lieshrink::catalog::witnesses;
use lieshrink::gt::extract_cone_limit;

fn main() {
    for id in ["A48m1->A34m1+a1", "A490->A350+a1"] {
        let w = witnesses().into_iter().find(|w| w.id == id).unwrap();
        let out = extract_cone_limit(&w.family).unwrap();
        println!("{id}: {:?}, lead e{}\n{}", out.method, out.target_lead + 1, out.limit);
    }
}
