//! Stored witness, then obstruction, then bounded search.

use lieshrink::catalog::{self, PaddedStore};
use lieshrink::contraction::{decide, Verdict};

fn main() {
    let store = PaddedStore::standard();
    for (s, t) in [("su2", "A350"), ("sl2+a3", "n33"), ("sl2", "su2"), ("A490+a2", "n33"), ("n212+a1", "n33"), ("h3+a1", "a4")] {
        let verdict = decide(&catalog::get(s).unwrap(), &catalog::get(t).unwrap(), &store).unwrap();
        print!("{s:>8} ~> {t:<5} {}", verdict.status());
        match verdict {
            Verdict::Verified { via, family } => print!(" via {via:?}\n{}", family.matrix()),
            Verdict::Blocked { violations } => println!(" by {}", violations.iter().map(|v| v.rule.to_string()).collect::<Vec<_>>().join(", ")),
            Verdict::Unknown => println!(),
        }
    }
}
