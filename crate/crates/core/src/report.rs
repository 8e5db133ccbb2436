//! Plain-text rendering shared by the library and the command-line tool.

use crate::arith::{fmt_rational, Rational};
use num_traits::{One, Signed, Zero};

/// `e1 - 1/2*e3`, or `0`.
pub fn format_vector(v: &[Rational]) -> String {
    let mut out = String::new();
    for (k, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&fmt_rational(&mag));
            out.push('*');
        }
        out.push_str(&format!("e{}", k + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
