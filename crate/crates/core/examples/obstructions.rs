//! Which monotone invariants separate pairs of algebras.

use lieshrink::catalog;
use lieshrink::contraction::obstruct;
use lieshrink::lie::pad;

fn main() {
    for (s, t) in [("sl2", "su2"), ("su2", "sl2"), ("A48m1", "A490"), ("n33", "n212+a1"), ("n212+a1", "n33"), ("su2", "A350")] {
        let (g, g0) = (catalog::get(s).unwrap(), catalog::get(t).unwrap());
        let n = g.dim().max(g0.dim());
        let vs = obstruct(&pad(&g, n - g.dim()), &pad(&g0, n - g0.dim())).unwrap();
        println!("{s} ~> {t}:");
        if vs.is_empty() {
            println!("  no rule applies");
        }
        for v in vs {
            println!("  {v}");
        }
    }
}
