use crate::arith::{Matrix, Rational};
use num_traits::Zero;

/// Linear subspace of `Q^n`, stored by a reduced row echelon basis so that
/// equal subspaces compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::span(ambient_dim, (0..ambient_dim).map(|i| unit(ambient_dim, i)))
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span<I: IntoIterator<Item = Vec<Rational>>>(ambient_dim: usize, vecs: I) -> Self {
        let rows: Vec<Vec<Rational>> = vecs
            .into_iter()
            .inspect(|v| assert_eq!(v.len(), ambient_dim, "vector length differs from ambient dimension"))
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        if rows.is_empty() {
            return Self::zero(ambient_dim);
        }
        let (r, pivots) = Matrix::from_rows(rows).rref();
        Subspace {
            ambient_dim,
            basis: (0..pivots.len()).map(|i| r.row(i).to_vec()).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        if v.iter().all(|x| x.is_zero()) {
            return true;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Matrix::from_rows(rows).rank() == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Self::span(self.ambient_dim, self.basis.iter().chain(&other.basis).cloned())
    }

    /// Vectors `x` with `<x, v> = 0` for every basis vector `v`.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Self::full(self.ambient_dim);
        }
        let m = Matrix::from_rows(self.basis.clone());
        Self::span(self.ambient_dim, m.nullspace())
    }

    /// Standard basis vectors that complete `self` to a basis of the
    /// ambient space, chosen first-fit.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut acc = self.clone();
        let mut out = Vec::new();
        for i in 0..self.ambient_dim {
            let u = unit(self.ambient_dim, i);
            if !acc.contains(&u) {
                acc = acc.sum(&Subspace::span(self.ambient_dim, [u]));
                out.push(i);
            }
        }
        out
    }
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = num_traits::One::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn span_is_canonical() {
        let a = Subspace::span(3, [vec![rat(1), rat(1), rat(0)], vec![rat(2), rat(2), rat(0)]]);
        let b = Subspace::span(3, [vec![rat(-3), rat(-3), rat(0)]]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 1);
        assert!(a.contains(&[rat(5), rat(5), rat(0)]));
        assert!(!a.contains(&[rat(1), rat(0), rat(0)]));
        assert_eq!(a.complement_indices(), vec![0, 2]);
        assert_eq!(a.annihilator().dim(), 2);
    }
}
