use crate::arith::{Matrix, Rational, Ring, UniPoly};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Invariant factors of `A` over `Q[x]`: the nonconstant monic diagonal
/// entries of the Smith form of `xI - A`, each dividing the next.
///
/// Similarity over `Q` and over `R` coincide for rational matrices, so two
/// matrices are similar iff these lists agree.
pub fn invariant_factors(a: &Matrix<Rational>) -> Vec<UniPoly> {
    assert!(a.is_square());
    let n = a.rows();
    let mut m: Vec<Vec<UniPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = UniPoly::constant(-a.get(i, j).clone());
                    if i == j {
                        c.add_ref(&UniPoly::x())
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    let diag = smith_diagonal(&mut m);
    diag.into_iter().filter(|p| p.degree().is_some_and(|d| d > 0)).collect()
}

fn smith_diagonal(m: &mut [Vec<UniPoly>]) -> Vec<UniPoly> {
    let n = m.len();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        loop {
            // smallest-degree nonzero entry of the trailing block
            let mut best: Option<(usize, usize, usize)> = None;
            for (i, row) in m.iter().enumerate().skip(k) {
                for (j, e) in row.iter().enumerate().skip(k) {
                    if let Some(d) = e.degree() {
                        if best.map_or(true, |b| d < b.2) {
                            best = Some((i, j, d));
                        }
                    }
                }
            }
            let Some((bi, bj, _)) = best else {
                out.extend((k..n).map(|_| UniPoly::zero_elem()));
                return out;
            };
            m.swap(k, bi);
            for row in m.iter_mut() {
                row.swap(k, bj);
            }
            let pivot = m[k][k].clone();
            let mut clean = true;
            for i in k + 1..n {
                let (q, r) = m[i][k].div_rem(&pivot);
                if !q.is_zero_elem() {
                    for j in k..n {
                        let v = m[i][j].sub_ref(&q.mul_ref(&m[k][j]));
                        m[i][j] = v;
                    }
                }
                clean &= r.is_zero_elem();
            }
            for j in k + 1..n {
                let (q, r) = m[k][j].div_rem(&pivot);
                if !q.is_zero_elem() {
                    for row in m.iter_mut().skip(k) {
                        let v = row[j].sub_ref(&q.mul_ref(&row[k]));
                        row[j] = v;
                    }
                }
                clean &= r.is_zero_elem();
            }
            if !clean {
                continue;
            }
            // the pivot must divide the whole trailing block
            let bad = (k + 1..n).find(|&i| (k + 1..n).any(|j| !m[i][j].div_rem(&pivot).1.is_zero_elem()));
            match bad {
                Some(i) => {
                    for j in k..n {
                        let v = m[k][j].add_ref(&m[i][j]);
                        m[k][j] = v;
                    }
                }
                None => {
                    out.push(pivot.monic());
                    break;
                }
            }
        }
    }
    out
}

/// Decides whether `A` and `B` are similar. On success returns a rational
/// `X` with `X A X^{-1} = B`.
///
/// The conjugator is a random integer combination of a basis of solutions
/// of `X A = B X`; invertible combinations form a dense open set once one
/// exists, so a handful of draws suffices.
pub fn similar(a: &Matrix<Rational>, b: &Matrix<Rational>) -> Option<Matrix<Rational>> {
    assert!(a.is_square() && b.is_square() && a.rows() == b.rows());
    if invariant_factors(a) != invariant_factors(b) {
        return None;
    }
    let n = a.rows();
    if n == 0 {
        return Some(Matrix::identity(0));
    }
    // unknown x_{pq} sits at index p * n + q
    let mut rows = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut row = vec![Rational::zero(); n * n];
            for p in 0..n {
                row[i * n + p] += a.get(p, j);
                row[p * n + j] -= b.get(i, p);
            }
            rows.push(row);
        }
    }
    let basis = Matrix::from_rows(rows).nullspace();
    let build = |coef: &[i64]| {
        let mut x = vec![Rational::zero(); n * n];
        for (c, v) in coef.iter().zip(&basis) {
            if *c != 0 {
                for (xi, vi) in x.iter_mut().zip(v) {
                    *xi += vi * Rational::from_integer((*c).into());
                }
            }
        }
        Matrix::from_vec(n, n, x)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for attempt in 0..256 {
        let coef: Vec<i64> = if attempt == 0 {
            vec![1; basis.len()]
        } else {
            (0..basis.len()).map(|_| rng.gen_range(-4..=4)).collect()
        };
        let x = build(&coef);
        if let Some(inv) = x.inverse() {
            debug_assert_eq!(x.mul(a).mul(&inv), *b);
            return Some(x);
        }
    }
    panic!("similar matrices but no invertible intertwiner found in 256 draws");
}

pub fn is_similar(a: &Matrix<Rational>, b: &Matrix<Rational>) -> bool {
    a.rows() == b.rows() && invariant_factors(a) == invariant_factors(b)
}

/// `p(A)` by Horner's rule.
pub(crate) fn poly_at(p: &UniPoly, a: &Matrix<Rational>) -> Matrix<Rational> {
    let n = a.rows();
    let mut acc = Matrix::<Rational>::zeros(n, n);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(a).add(&Matrix::identity(n).scale(c));
    }
    acc
}

/// Squarefree parts `a_1, a_2, ...` with `f = c * prod a_i^i` (Yun), dropping
/// constant factors.
pub(crate) fn squarefree_factors(f: &UniPoly) -> Vec<UniPoly> {
    let deriv = |p: &UniPoly| {
        UniPoly::new(
            p.coeffs().iter().enumerate().skip(1).map(|(k, c)| c * Rational::from_integer((k as i64).into())).collect(),
        )
    };
    let mut out = Vec::new();
    if f.degree().map_or(true, |d| d == 0) {
        return out;
    }
    let f = f.monic();
    let a = f.gcd(&deriv(&f));
    let mut b = f.div_rem(&a).0;
    let c = deriv(&f).div_rem(&a).0;
    let mut d = c.sub_ref(&deriv(&b));
    loop {
        let g = b.gcd(&d);
        if g.degree().is_some_and(|k| k > 0) {
            out.push(g.clone());
        }
        b = b.div_rem(&g).0;
        if b.degree().map_or(true, |k| k == 0) {
            break;
        }
        let c = d.div_rem(&g).0;
        d = c.sub_ref(&deriv(&b));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn m(rows: Vec<Vec<i64>>) -> Matrix<Rational> {
        Matrix::from_i64(rows)
    }

    #[test]
    fn rotation_and_its_conjugate_share_one_invariant_factor() {
        let a = m(vec![vec![0, 1], vec![-1, 0]]);
        let b = m(vec![vec![1, 1], vec![-2, -1]]);
        // x^2 + 1 is irreducible, so the companion block is the only factor
        let x2p1 = UniPoly::new(vec![rat(1), rat(0), rat(1)]);
        assert_eq!(invariant_factors(&a), vec![x2p1.clone()]);
        assert_eq!(invariant_factors(&b), vec![x2p1]);
        let x = similar(&a, &b).unwrap();
        assert_eq!(x.mul(&a).mul(&x.inverse().unwrap()), b);
    }

    #[test]
    fn different_charpolys_are_not_similar() {
        assert!(similar(&m(vec![vec![1, 0], vec![0, -1]]), &m(vec![vec![1, 0], vec![0, 1]])).is_none());
    }

    #[test]
    fn nilpotent_partitions_are_separated() {
        let j2_0 = m(vec![vec![0, 1, 0], vec![0, 0, 0], vec![0, 0, 0]]);
        let permuted = m(vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 0, 0]]);
        let j3 = m(vec![vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]);
        assert!(similar(&j2_0, &permuted).is_some());
        assert!(similar(&j2_0, &j3).is_none());
        // invariant factors of J2 + 0: x, x^2
        let f = invariant_factors(&j2_0);
        assert_eq!(f.len(), 2);
        assert_eq!(f[0], UniPoly::x());
    }

    #[test]
    fn scalar_matrices_have_repeated_linear_factors() {
        let a = Matrix::identity(3).scale(&rat(2));
        assert_eq!(invariant_factors(&a).len(), 3);
    }

    #[test]
    fn yun_splits_multiplicities() {
        // x^2 (x - 1)
        let f = UniPoly::new(vec![rat(0), rat(0), rat(-1), rat(1)]);
        let parts = squarefree_factors(&f);
        assert_eq!(parts, vec![UniPoly::new(vec![rat(-1), rat(1)]), UniPoly::x()]);
    }
}
