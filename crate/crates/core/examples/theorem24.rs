//! Evaluate the full classification expectation table.

use lieshrink::catalog::run_theorem24;

fn main() {
    let report = run_theorem24();
    print!("{}", report.render_text());
}
