//! Finite-dimensional Lie algebras over `Q` given by structure constants,
//! and the invariants that are monotone under contraction.

mod invariants;
mod subspace;

pub use invariants::{
    center, coadjoint_rank, derivation_dim, derived_algebra, derived_series_dims, fingerprint, flat_generic_orbits,
    has_codim1_abelian_ideal, is_abelian_ideal, is_solvable, killing_form, killing_signature,
    lower_central_dims, nilpotent_class, signature_of_symmetric, unimodular, Decision, InvariantReport,
    KillingSignature,
};
pub use subspace::Subspace;

use crate::arith::{Matrix, Rational};
use num_traits::Zero;
use std::collections::BTreeMap;
use thiserror::Error;

/// One bracket relation `[e_i, e_j] = sum_k c_k e_k` with 0-based indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bracket {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<(usize, Rational)>,
}

impl Bracket {
    pub fn new(i: usize, j: usize, terms: Vec<(usize, Rational)>) -> Self {
        Bracket { i, j, terms }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("Jacobi identity fails on (e{}, e{}, e{}); residual {residual:?}", .i + 1, .j + 1, .l + 1)]
    JacobiViolation { i: usize, j: usize, l: usize, residual: Vec<Rational> },
    #[error("bracket index out of range or not ordered: [e{}, e{}] in dimension {dim}", .i + 1, .j + 1)]
    BadIndex { i: usize, j: usize, dim: usize },
    #[error("bracket [e{}, e{}] given twice", .i + 1, .j + 1)]
    DuplicateBracket { i: usize, j: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Antisymmetric structure tensor: only pairs `i < j` with a nonzero
/// bracket are stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StructureTensor {
    dim: usize,
    entries: BTreeMap<(usize, usize), Vec<Rational>>,
}

impl StructureTensor {
    pub fn zero(dim: usize) -> Self {
        StructureTensor { dim, entries: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sets `[e_i, e_j]` for `i != j` (antisymmetry is applied for `i > j`).
    pub fn set(&mut self, i: usize, j: usize, v: Vec<Rational>) {
        assert!(i != j && i < self.dim && j < self.dim);
        assert_eq!(v.len(), self.dim);
        let (key, v) = if i < j { ((i, j), v) } else { ((j, i), v.into_iter().map(|x| -x).collect()) };
        if v.iter().all(|x| x.is_zero()) {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, v);
        }
    }

    /// `[e_i, e_j]` for any ordered pair.
    pub fn get(&self, i: usize, j: usize) -> Vec<Rational> {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => vec![Rational::zero(); self.dim],
            std::cmp::Ordering::Less => self.entries.get(&(i, j)).cloned().unwrap_or_else(|| vec![Rational::zero(); self.dim]),
            std::cmp::Ordering::Greater => self
                .entries
                .get(&(j, i))
                .map(|v| v.iter().map(|x| -x).collect())
                .unwrap_or_else(|| vec![Rational::zero(); self.dim]),
        }
    }

    /// Coefficient of `e_k` in `[e_i, e_j]`.
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> Rational {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Rational::zero(),
            std::cmp::Ordering::Less => self.entries.get(&(i, j)).map_or_else(Rational::zero, |v| v[k].clone()),
            std::cmp::Ordering::Greater => self.entries.get(&(j, i)).map_or_else(Rational::zero, |v| -v[k].clone()),
        }
    }

    /// Nonzero brackets `((i, j), [e_i, e_j])` with `i < j`.
    pub fn nonzero(&self) -> impl Iterator<Item = (&(usize, usize), &Vec<Rational>)> {
        self.entries.iter()
    }

    pub fn is_abelian(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (&(i, j), v) in &self.entries {
            let c = &x[i] * &y[j] - &x[j] * &y[i];
            if c.is_zero() {
                continue;
            }
            for (o, vk) in out.iter_mut().zip(v) {
                if !vk.is_zero() {
                    *o += &c * vk;
                }
            }
        }
        out
    }

    /// First Jacobi failure `(i, j, l, residual)` over `i < j < l`.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize, Vec<Rational>)> {
        let n = self.dim;
        let e = |i: usize| crate::lie::subspace::unit(n, i);
        for i in 0..n {
            for j in i + 1..n {
                for l in j + 1..n {
                    let a = self.bracket(&self.get(i, j), &e(l));
                    let b = self.bracket(&self.get(j, l), &e(i));
                    let c = self.bracket(&self.get(l, i), &e(j));
                    let res: Vec<Rational> = (0..n).map(|k| &a[k] + &b[k] + &c[k]).collect();
                    if res.iter().any(|x| !x.is_zero()) {
                        return Some((i, j, l, res));
                    }
                }
            }
        }
        None
    }

    /// Structure constants in the basis given by the columns of `p`:
    /// `c'(i, j) = p^{-1} [p e_i, p e_j]`. Panics if `p` is singular.
    pub fn in_basis(&self, p: &Matrix<Rational>) -> StructureTensor {
        let pinv = p.inverse().expect("base change must be invertible");
        let cols: Vec<Vec<Rational>> = (0..self.dim).map(|j| p.column(j)).collect();
        let mut out = StructureTensor::zero(self.dim);
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let b = self.bracket(&cols[i], &cols[j]);
                out.set(i, j, pinv.mul_vec(&b));
            }
        }
        out
    }
}

/// A Lie algebra with a fixed basis `e_1, ..., e_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LieAlgebra {
    name: String,
    labels: Vec<String>,
    tensor: StructureTensor,
}

/// Builds an algebra from bracket relations (0-based indices, `i < j`),
/// checking the Jacobi identity.
pub fn make_algebra(name: &str, dim: usize, brackets: Vec<Bracket>) -> Result<LieAlgebra, LieError> {
    let mut t = StructureTensor::zero(dim);
    for b in brackets {
        if b.i >= b.j || b.j >= dim || b.terms.iter().any(|(k, _)| *k >= dim) {
            return Err(LieError::BadIndex { i: b.i, j: b.j, dim });
        }
        if t.entries.contains_key(&(b.i, b.j)) {
            return Err(LieError::DuplicateBracket { i: b.i, j: b.j });
        }
        let mut v = vec![Rational::zero(); dim];
        for (k, c) in b.terms {
            v[k] += c;
        }
        t.set(b.i, b.j, v);
    }
    LieAlgebra::from_tensor(name, t)
}

impl LieAlgebra {
    pub fn from_tensor(name: &str, tensor: StructureTensor) -> Result<LieAlgebra, LieError> {
        if let Some((i, j, l, residual)) = tensor.jacobi_violation() {
            return Err(LieError::JacobiViolation { i, j, l, residual });
        }
        let labels = (1..=tensor.dim).map(|i| format!("e{i}")).collect();
        Ok(LieAlgebra { name: name.to_string(), labels, tensor })
    }

    pub fn abelian(dim: usize) -> LieAlgebra {
        LieAlgebra::from_tensor(&format!("a{dim}"), StructureTensor::zero(dim)).unwrap()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Panics when the label count differs from the dimension.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
        self
    }

    pub fn dim(&self) -> usize {
        self.tensor.dim
    }

    pub fn tensor(&self) -> &StructureTensor {
        &self.tensor
    }

    pub fn is_abelian(&self) -> bool {
        self.tensor.is_abelian()
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>, LieError> {
        for v in [x, y] {
            if v.len() != self.dim() {
                return Err(LieError::DimensionMismatch { expected: self.dim(), got: v.len() });
            }
        }
        Ok(self.tensor.bracket(x, y))
    }

    /// Matrix of `ad e_i` (column `j` holds `[e_i, e_j]`).
    pub fn ad(&self, i: usize) -> Matrix<Rational> {
        let n = self.dim();
        Matrix::from_fn(n, n, |k, j| self.tensor.coeff(i, j, k))
    }

    /// Matrix of `ad x`.
    pub fn ad_vec(&self, x: &[Rational]) -> Matrix<Rational> {
        let n = self.dim();
        let cols: Vec<Vec<Rational>> = (0..n).map(|j| self.tensor.bracket(x, &subspace::unit(n, j))).collect();
        Matrix::from_fn(n, n, |k, j| cols[j][k].clone())
    }

    /// Span of all `[x, y]` with `x` in `a` and `y` in `b`.
    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut out = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                out.push(self.tensor.bracket(x, y));
            }
        }
        Subspace::span(self.dim(), out)
    }

    /// The same algebra in the basis given by the columns of `p`.
    pub fn in_basis(&self, p: &Matrix<Rational>) -> LieAlgebra {
        LieAlgebra::from_tensor(&self.name, self.tensor.in_basis(p)).expect("base change preserves Jacobi")
    }

    /// Whether `phi` (columns = images of the basis of `self`) is a Lie
    /// algebra isomorphism onto `other`.
    pub fn is_isomorphism(&self, other: &LieAlgebra, phi: &Matrix<Rational>) -> bool {
        if phi.rows() != other.dim() || phi.cols() != self.dim() || self.dim() != other.dim() {
            return false;
        }
        if phi.rank() != self.dim() {
            return false;
        }
        let cols: Vec<Vec<Rational>> = (0..self.dim()).map(|j| phi.column(j)).collect();
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                let lhs = phi.mul_vec(&self.tensor.get(i, j));
                let rhs = other.tensor.bracket(&cols[i], &cols[j]);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

/// `g ⊕ h` with the basis of `g` first.
pub fn direct_sum(g: &LieAlgebra, h: &LieAlgebra) -> LieAlgebra {
    let n = g.dim() + h.dim();
    let mut t = StructureTensor::zero(n);
    for (&(i, j), v) in g.tensor.nonzero() {
        let mut w = v.clone();
        w.resize(n, Rational::zero());
        t.set(i, j, w);
    }
    let off = g.dim();
    for (&(i, j), v) in h.tensor.nonzero() {
        let mut w = vec![Rational::zero(); off];
        w.extend(v.iter().cloned());
        t.set(i + off, j + off, w);
    }
    let name = if h.dim() == 0 {
        g.name.clone()
    } else if h.is_abelian() {
        format!("{}+a{}", g.name, h.dim())
    } else {
        format!("{}+{}", g.name, h.name)
    };
    let mut labels = g.labels.clone();
    labels.extend(h.labels.iter().map(|l| if g.labels.contains(l) { format!("{l}'") } else { l.clone() }));
    LieAlgebra::from_tensor(&name, t).expect("direct sum of Lie algebras").with_labels(labels)
}

/// `g ⊕ a_k`.
pub fn pad(g: &LieAlgebra, k: usize) -> LieAlgebra {
    if k == 0 {
        return g.clone();
    }
    let mut out = direct_sum(g, &LieAlgebra::abelian(k));
    let mut labels = g.labels.clone();
    labels.extend((g.dim() + 1..=g.dim() + k).map(|i| format!("e{i}")));
    if labels.iter().collect::<std::collections::BTreeSet<_>>().len() == labels.len() {
        out.labels = labels;
    }
    out
}
