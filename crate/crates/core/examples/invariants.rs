//! The contraction-monotone invariants of every fixed catalog entry.

use lieshrink::catalog;
use lieshrink::lie::fingerprint;

fn main() {
    println!("{:<12} {:>3} {:>8} {:>6} {:>5} {:>9} {:>5}", "id", "dim", "center", "class", "rank", "killing", "der");
    for e in catalog::entries() {
        let f = fingerprint(&e.algebra);
        println!(
            "{:<12} {:>3} {:>8} {:>6} {:>5} {:>9} {:>5}",
            e.id,
            f.dim,
            f.center_dim,
            f.nilpotent_class.map_or("-".into(), |c| c.to_string()),
            f.coadjoint_rank,
            f.killing_signature.to_string(),
            f.derivation_dim
        );
    }
}
