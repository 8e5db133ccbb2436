use super::{monomial_diagonal, rational_to_ratfun, verify_contraction, ContractionError, ContractionFamily};
use crate::arith::{Matrix, Rational};
use crate::lie::LieAlgebra;
use num_traits::Zero;

/// One structure-constant slot `(i, j, m)` with `i < j`.
struct Slot {
    i: usize,
    j: usize,
    m: usize,
    source: Rational,
    target: Rational,
}

/// Lexicographically first exponent vector `k` in `[-bound, bound]^n` such
/// that `P diag(r^k)` contracts `g` to `g0`, without building the family.
///
/// In the basis `P e_1, ..., P e_n` the conjugated bracket is
/// `sum_m r^(k_i + k_j - k_m) c'(i, j, m) e_m`, so the limit exists iff every
/// nonzero `c'` has a nonnegative exponent, and the limit keeps exactly the
/// terms with exponent zero.
pub fn search_diagonal_exponents(
    g: &LieAlgebra,
    g0: &LieAlgebra,
    bound: i64,
    base_change: Option<&Matrix<Rational>>,
) -> Result<Option<Vec<i64>>, ContractionError> {
    let n = g.dim();
    if n != g0.dim() {
        return Err(ContractionError::DimensionMismatch { source_dim: n, target_dim: g0.dim() });
    }
    let c = match base_change {
        Some(p) => g.tensor().in_basis(p),
        None => g.tensor().clone(),
    };
    // slots grouped by the largest index they involve, so each can be
    // checked as soon as that coordinate is assigned
    let mut by_last: Vec<Vec<Slot>> = (0..n).map(|_| Vec::new()).collect();
    for i in 0..n {
        for j in i + 1..n {
            for m in 0..n {
                let source = c.coeff(i, j, m);
                let target = g0.tensor().coeff(i, j, m);
                if source.is_zero() && target.is_zero() {
                    continue;
                }
                if source.is_zero() {
                    return Ok(None);
                }
                by_last[j.max(m)].push(Slot { i, j, m, source, target });
            }
        }
    }
    let mut k = vec![0i64; n];
    Ok(dfs(0, bound, &mut k, &by_last).then_some(k))
}

fn dfs(p: usize, bound: i64, k: &mut Vec<i64>, by_last: &[Vec<Slot>]) -> bool {
    if p == k.len() {
        return true;
    }
    for v in -bound..=bound {
        k[p] = v;
        let ok = by_last[p].iter().all(|s| {
            let e = k[s.i] + k[s.j] - k[s.m];
            match e.cmp(&0) {
                std::cmp::Ordering::Less => false,
                std::cmp::Ordering::Equal => s.source == s.target,
                std::cmp::Ordering::Greater => s.target.is_zero(),
            }
        });
        if ok && dfs(p + 1, bound, k, by_last) {
            return true;
        }
    }
    false
}

/// First verifying family `P diag(r^k_1, ..., r^k_n)` in lexicographic order
/// of `k`, re-verified through the general limit computation.
pub fn search_diagonal(
    g: &LieAlgebra,
    g0: &LieAlgebra,
    bound: i64,
    base_change: Option<&Matrix<Rational>>,
) -> Result<Option<ContractionFamily>, ContractionError> {
    let Some(k) = search_diagonal_exponents(g, g0, bound, base_change)? else {
        return Ok(None);
    };
    let d = monomial_diagonal(&k);
    let m = match base_change {
        Some(p) => rational_to_ratfun(p).mul(&d),
        None => d,
    };
    let fam = ContractionFamily::new(g.clone(), g0.clone(), m)?;
    let v = verify_contraction(&fam);
    assert!(v.is_verified(), "diagonal search produced a family that does not verify: {v}");
    Ok(Some(fam))
}

/// Permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[i - 1] < p[j]).expect("successor exists");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Base changes `(I + E_ij) P` for every permutation matrix `P`, the
/// unsheared ones first.
pub fn sheared_permutations(n: usize) -> impl Iterator<Item = Matrix<Rational>> {
    let shears = std::iter::once(None).chain((0..n).flat_map(move |i| (0..n).filter(move |&j| j != i).map(move |j| Some((i, j)))));
    let perms = permutations(n);
    shears.flat_map(move |sh| {
        perms.clone().into_iter().map(move |p| {
            let mut m = Matrix::<Rational>::zeros(n, n);
            for (j, &i) in p.iter().enumerate() {
                m.set(i, j, Rational::from_integer(1.into()));
            }
            if let Some((i, j)) = sh {
                // row i gains row j
                for c in 0..n {
                    let v = m.get(i, c).clone() + m.get(j, c).clone();
                    m.set(i, c, v);
                }
            }
            m
        })
    })
}

/// [`search_diagonal`] over every base change from [`sheared_permutations`].
/// Finds degenerations a single diagonal family misses, such as chains of
/// brackets splitting into disjoint pairs.
pub fn search_sheared(g: &LieAlgebra, g0: &LieAlgebra, bound: i64) -> Result<Option<ContractionFamily>, ContractionError> {
    for p in sheared_permutations(g.dim()) {
        if let Some(f) = search_diagonal(g, g0, bound, Some(&p))? {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::lie::{make_algebra, Bracket};

    #[test]
    fn abelian_target_is_found_with_positive_exponents() {
        let g = make_algebra("h3", 3, vec![Bracket::new(0, 1, vec![(2, rat(1))])]).unwrap();
        let k = search_diagonal_exponents(&g, &LieAlgebra::abelian(3), 1, None).unwrap().unwrap();
        // the bracket exponent k1 + k2 - k3 must be positive; (-1, 1, -1)
        // is the first such vector in lexicographic order
        assert_eq!(k, vec![-1, 1, -1]);
        let ones = ContractionFamily::new(g.clone(), LieAlgebra::abelian(3), monomial_diagonal(&[1, 1, 1])).unwrap();
        assert!(verify_contraction(&ones).is_verified());
        let fam = search_diagonal(&g, &LieAlgebra::abelian(3), 1, None).unwrap().unwrap();
        assert!(verify_contraction(&fam).is_verified());
    }

    #[test]
    fn dimension_mismatch() {
        let g = LieAlgebra::abelian(3);
        assert!(search_diagonal(&g, &LieAlgebra::abelian(4), 1, None).is_err());
    }
}
