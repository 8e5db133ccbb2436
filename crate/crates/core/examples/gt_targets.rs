//! Which g_T each source can contract to, with witnesses.

use lieshrink::catalog::{self, gt_witness};
use lieshrink::gt::enumerate_gt_targets;
use lieshrink::lie::pad;

fn main() {
    for (id, n) in [("su2", 2), ("sl2", 3), ("A48m1", 3), ("A490", 3), ("n33", 5), ("n212", 4)] {
        let g = catalog::get(id).unwrap();
        let source = pad(&g, n + 1 - g.dim());
        let types = enumerate_gt_targets(&g, n);
        let shown: Vec<String> = types
            .iter()
            .map(|t| format!("{t}{}", if gt_witness(&source, t).is_some() { "" } else { " (no witness)" }))
            .collect();
        println!("{id} (n = {n}): {}", shown.join(", "));
    }
}
