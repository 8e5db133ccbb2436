use super::{verify_contraction, ContractionError, ContractionFamily};
use crate::arith::{ratfun_matrix_inverse, Matrix, RatFun, Rational, Ring};
use crate::lie::LieAlgebra;

/// Strips the abelian padding from a verifying family
/// `g0 ⊕ a_k -> g ⊕ a_k` and returns a verifying family `g0 -> g`.
///
/// Writing `C = (A b; c d)` with `A` the `n x n` block, the candidates tried
/// are `A` itself and the Schur complement `A - b d^{-1} c`, first for `C`
/// and then for perturbations `C + e r^N id` with `N` above every exponent
/// occurring in `C` and `C^{-1}`. Each candidate is verified before it is
/// returned; verification, not the construction, is the certificate.
pub fn reduce_stabilized(
    g: &LieAlgebra,
    g0: &LieAlgebra,
    k: usize,
    matrix: &Matrix<RatFun>,
) -> Result<ContractionFamily, ContractionError> {
    let n = g.dim();
    if g0.dim() != n {
        return Err(ContractionError::DimensionMismatch { source_dim: n, target_dim: g0.dim() });
    }
    let padded = ContractionFamily::stabilized(g, k, g0, k, matrix.clone())?;
    if !verify_contraction(&padded).is_verified() {
        return Err(ContractionError::ReductionFailed("the padded family does not verify".into()));
    }
    if k == 0 {
        return ContractionFamily::new(g.clone(), g0.clone(), matrix.clone());
    }
    if let Some(f) = try_blocks(g, g0, n, matrix) {
        return Ok(f);
    }
    let inv = padded.inverse();
    let span = matrix.entries().chain(inv.entries()).map(RatFun::exponent_span).max().unwrap_or(0);
    for extra in 1..=3 {
        let big_n = span + extra;
        for scale in 1..=3 {
            let eps = RatFun::monomial(Rational::from_integer(scale.into()), big_n);
            let perturbed = matrix.add(&Matrix::identity(n + k).scale(&eps));
            let Ok(pf) = ContractionFamily::stabilized(g, k, g0, k, perturbed.clone()) else {
                continue;
            };
            if !verify_contraction(&pf).is_verified() {
                continue;
            }
            if let Some(f) = try_blocks(g, g0, n, &perturbed) {
                return Ok(f);
            }
        }
    }
    Err(ContractionError::ReductionFailed(format!(
        "no candidate block verified (tried the top-left block and its Schur complement for the family and {} perturbations)",
        9
    )))
}

fn try_blocks(g: &LieAlgebra, g0: &LieAlgebra, n: usize, m: &Matrix<RatFun>) -> Option<ContractionFamily> {
    let total = m.rows();
    let a = m.submatrix(0..n, 0..n);
    let mut candidates = vec![a.clone()];
    let d = m.submatrix(n..total, n..total);
    if let Ok(dinv) = ratfun_matrix_inverse(&d) {
        let b = m.submatrix(0..n, n..total);
        let c = m.submatrix(n..total, 0..n);
        candidates.push(a.sub(&b.mul(&dinv).mul(&c)));
    }
    for cand in candidates {
        if n > 0 && cand.determinant().is_zero_elem() {
            continue;
        }
        let Ok(f) = ContractionFamily::new(g.clone(), g0.clone(), cand) else {
            continue;
        };
        if verify_contraction(&f).is_verified() {
            return Some(f);
        }
    }
    None
}
