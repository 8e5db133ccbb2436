//! Pad a family with an identity block, disguise the padding with
//! automorphisms on both sides, then strip it again.

use lieshrink::arith::{Matrix, Rational};
use lieshrink::catalog::{pad_family, witnesses};
use lieshrink::contraction::{rational_to_ratfun, reduce_stabilized, verify_contraction};

fn main() {
    let w = witnesses().into_iter().find(|w| w.id == "n33->n122+a1").unwrap();
    let (g, g0) = (w.family.source().clone(), w.family.target().clone());
    let k = 2;
    let padded = pad_family(&w.family, k).unwrap();
    let n = padded.dim();

    // swapping and rescaling abelian factors are automorphisms of both sides
    let mut left = Matrix::<Rational>::zeros(n, n);
    let mut right = Matrix::<Rational>::identity(n);
    for i in 0..n - 2 {
        left.set(i, i, Rational::from_integer(1.into()));
    }
    left.set(n - 2, n - 1, Rational::from_integer(3.into()));
    left.set(n - 1, n - 2, Rational::from_integer(1.into()));
    right.set(n - 1, n - 1, Rational::new((-1).into(), 2.into()));

    let c = rational_to_ratfun(&left).mul(padded.matrix()).mul(&rational_to_ratfun(&right));
    let reduced = reduce_stabilized(&g, &g0, k, &c).unwrap();
    println!("disguised {n}x{n} family reduced to\n{}{}", reduced.matrix(), verify_contraction(&reduced));
}
