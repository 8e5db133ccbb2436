use super::cone::{cone_member, ConeStatus};
use super::make_gt;
use crate::arith::{Matrix, Rational};
use crate::contraction::obstruct;
use crate::lie::{pad, LieAlgebra};
use num_traits::One;
use serde::Serialize;
use std::fmt;

pub use super::cone::nilpotent_partition;

/// Block data of a traceless real matrix up to scaling: nilpotent cells of
/// size at least 2, hyperbolic pairs `diag(1, -1)`, rotation pairs
/// `(0 1; -1 0)`, and zero cells of size 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct JordanType {
    pub nilpotent_partition: Vec<usize>,
    pub real_pairs: usize,
    pub imaginary_pairs: usize,
    pub zero_padding: usize,
}

impl JordanType {
    pub fn nilpotent(partition: &[usize], n: usize) -> Self {
        let mut parts: Vec<usize> = partition.iter().copied().filter(|&p| p >= 2).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let used: usize = parts.iter().sum();
        assert!(used <= n);
        JordanType { nilpotent_partition: parts, real_pairs: 0, imaginary_pairs: 0, zero_padding: n - used }
    }

    pub fn size(&self) -> usize {
        self.nilpotent_partition.iter().sum::<usize>() + 2 * self.real_pairs + 2 * self.imaginary_pairs + self.zero_padding
    }

    pub fn is_nilpotent(&self) -> bool {
        self.real_pairs == 0 && self.imaginary_pairs == 0
    }

    /// Block-diagonal representative: nilpotent cells (upper, in decreasing
    /// size), then hyperbolic pairs, rotation pairs and zeros.
    pub fn representative(&self) -> Matrix<Rational> {
        let n = self.size();
        let mut t = Matrix::<Rational>::zeros(n, n);
        let mut at = 0;
        for &p in &self.nilpotent_partition {
            for i in 0..p - 1 {
                t.set(at + i, at + i + 1, Rational::one());
            }
            at += p;
        }
        for _ in 0..self.real_pairs {
            t.set(at, at, Rational::one());
            t.set(at + 1, at + 1, -Rational::one());
            at += 2;
        }
        for _ in 0..self.imaginary_pairs {
            t.set(at, at + 1, Rational::one());
            t.set(at + 1, at, -Rational::one());
            at += 2;
        }
        t
    }

    pub fn algebra(&self) -> LieAlgebra {
        make_gt(&self.representative()).into_algebra().with_name(&format!("gT<{self}>"))
    }

    /// Every type of size `n`.
    pub fn all(n: usize) -> Vec<JordanType> {
        let mut out = Vec::new();
        for nil in 0..=n {
            for parts in partitions_min2(nil, nil) {
                let rest = n - nil;
                for p in 0..=rest / 2 {
                    for q in 0..=(rest - 2 * p) / 2 {
                        out.push(JordanType {
                            nilpotent_partition: parts.clone(),
                            real_pairs: p,
                            imaginary_pairs: q,
                            zero_padding: rest - 2 * p - 2 * q,
                        });
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// The type whose cone contains `t`, if it is one of the enumerated ones.
    pub fn of_matrix(t: &Matrix<Rational>) -> Option<JordanType> {
        if t.is_zero() {
            return Some(JordanType::nilpotent(&[], t.rows()));
        }
        Self::all(t.rows()).into_iter().filter(|ty| !ty.representative().is_zero()).find(|ty| {
            cone_member(t, &ty.representative()).is_ok_and(|v| v.status == ConeStatus::In)
        })
    }
}

impl fmt::Display for JordanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.nilpotent_partition.iter().map(|p| format!("J{p}")).collect();
        parts.extend(std::iter::repeat("H".to_string()).take(self.real_pairs));
        parts.extend(std::iter::repeat("R".to_string()).take(self.imaginary_pairs));
        if self.zero_padding > 0 {
            parts.push(format!("0^{}", self.zero_padding));
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts.join("+"))
    }
}

/// Partitions of `n` into parts in `2..=max`, largest first.
fn partitions_min2(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (2..=max.min(n)).rev() {
        for mut rest in partitions_min2(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Types `T` of size `n` for which no contraction rule rules out
/// `source ⊕ a_k ~> g_T`, with `k = n + 1 - dim source`.
///
/// Only necessary conditions: each surviving type still needs a witness.
pub fn enumerate_gt_targets(source: &LieAlgebra, n: usize) -> Vec<JordanType> {
    assert!(n + 1 >= source.dim(), "g_T of size {n} is smaller than the source");
    let padded = pad(source, n + 1 - source.dim());
    JordanType::all(n)
        .into_iter()
        .filter(|ty| obstruct(&padded, &ty.algebra()).expect("same dimension").is_empty())
        .collect()
}
