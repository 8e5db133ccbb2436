//! Algebras `g_T = R ⋉_T a_n` with a hyperplane abelian ideal: construction,
//! similarity and cone membership of the defining matrices, Jordan types of
//! admissible contraction targets.

mod cone;
mod jordan;
mod similarity;

pub use cone::{
    closure_cone_member, closure_cone_member_nilpotent, cone_member, ConeStatus, ConeVerdict, ConeWitness,
};
pub use jordan::{enumerate_gt_targets, nilpotent_partition, JordanType};
pub use similarity::{invariant_factors, is_similar, similar};

use crate::arith::{ratfun_matrix_inverse, Matrix, RatFun, Rational, Ring};
use crate::contraction::{
    contracted_brackets, monomial_diagonal, rational_to_ratfun, verify_contraction, ContractionError, ContractionFamily,
};
use crate::lie::{center, killing_form, lower_central_dims, unimodular, LieAlgebra, StructureTensor};
use num_traits::{One, Zero};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GtError {
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("matrix must be nonzero")]
    ZeroMatrix,
    #[error("matrices have different sizes: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("{0} is not of the form R x_T a_n in its given basis")]
    NotGt(String),
    #[error(transparent)]
    Contraction(#[from] ContractionError),
    #[error("no normalization u outside Ran A makes the lower-right block invertible")]
    NormalizationFailed,
    #[error("limit {limit} differs from the target matrix {expected}")]
    LimitMismatch { limit: Matrix<Rational>, expected: Matrix<Rational> },
}

/// `g_T` with basis `e0, e1, ..., en`, `[e0, v] = T v` and `a_n` abelian.
/// Stored 0-based, so `e0` is the first basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GtAlgebra {
    t: Matrix<Rational>,
    algebra: LieAlgebra,
}

impl GtAlgebra {
    pub fn t(&self) -> &Matrix<Rational> {
        &self.t
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn into_algebra(self) -> LieAlgebra {
        self.algebra
    }

    /// Checks center, lower central series, unimodularity and `K(e0, e0)`
    /// against their closed forms in `T`.
    pub fn check_laws(&self) -> Result<(), String> {
        let t = &self.t;
        let n = t.rows();
        let g = &self.algebra;
        let kernel = n - t.rank();
        let want_center = kernel + usize::from(t.is_zero());
        let got = center(g).dim();
        if got != want_center {
            return Err(format!("center has dimension {got}, expected {want_center}"));
        }
        let mut want = Vec::new();
        let mut prev = n + 1;
        let mut p = t.clone();
        loop {
            let d = p.rank();
            want.push(d);
            if d == 0 || d == prev {
                break;
            }
            prev = d;
            p = p.mul(t);
        }
        let got = lower_central_dims(g);
        if got != want {
            return Err(format!("lower central dims {got:?}, expected rank sequence {want:?}"));
        }
        if unimodular(g) != t.trace().is_zero() {
            return Err("unimodularity disagrees with the trace of T".into());
        }
        let k00 = killing_form(g).get(0, 0).clone();
        if k00 != t.mul(t).trace() {
            return Err(format!("K(e0, e0) = {k00}, expected Tr T^2"));
        }
        Ok(())
    }
}

/// Builds `g_T`; the closed-form laws are asserted on every construction.
pub fn make_gt(t: &Matrix<Rational>) -> GtAlgebra {
    assert!(t.is_square(), "T must be square");
    let n = t.rows();
    let mut tensor = StructureTensor::zero(n + 1);
    for j in 0..n {
        let mut v = vec![Rational::zero(); n + 1];
        for i in 0..n {
            v[i + 1] = t.get(i, j).clone();
        }
        tensor.set(0, j + 1, v);
    }
    let name = format!("gT:{}", matrix_literal(t));
    let algebra = LieAlgebra::from_tensor(&name, tensor).expect("g_T satisfies Jacobi");
    let g = GtAlgebra { t: t.clone(), algebra };
    if let Err(e) = g.check_laws() {
        panic!("g_T construction broke a structural law: {e}");
    }
    g
}

/// `[[a,b],[c,d]]` with rationals as `n` or `n/d`.
pub fn matrix_literal(t: &Matrix<Rational>) -> String {
    let rows: Vec<String> = t
        .to_rows()
        .iter()
        .map(|r| format!("[{}]", r.iter().map(crate::arith::fmt_rational).collect::<Vec<_>>().join(",")))
        .collect();
    format!("[{}]", rows.join(","))
}

/// `T` when `e_1, ..., e_n` (all basis vectors but the first) span an abelian
/// ideal, so that `g = g_T` in its given basis.
pub fn as_gt(g: &LieAlgebra) -> Option<Matrix<Rational>> {
    gt_form(g, 0)
}

/// `T` when the basis vectors other than `e_p` span an abelian ideal; the
/// matrix acts on those vectors in their original order.
pub fn gt_form(g: &LieAlgebra, p: usize) -> Option<Matrix<Rational>> {
    let dim = g.dim();
    if p >= dim {
        return None;
    }
    let rest: Vec<usize> = (0..dim).filter(|&i| i != p).collect();
    for (a, &i) in rest.iter().enumerate() {
        for &j in &rest[a + 1..] {
            if g.tensor().get(i, j).iter().any(|c| !c.is_zero()) {
                return None;
            }
        }
    }
    let n = rest.len();
    let mut t = Matrix::<Rational>::zeros(n, n);
    for (col, &j) in rest.iter().enumerate() {
        let v = g.tensor().get(p, j);
        if !v[p].is_zero() {
            return None;
        }
        for (row, &i) in rest.iter().enumerate() {
            t.set(row, col, v[i].clone());
        }
    }
    Some(t)
}

/// First basis index `p` for which [`gt_form`] succeeds.
pub fn find_gt_form(g: &LieAlgebra) -> Option<(usize, Matrix<Rational>)> {
    (0..g.dim()).find_map(|p| gt_form(g, p).map(|t| (p, t)))
}

/// Permutation matrix whose columns are `e_p, e_0, ..., e_{p-1}, e_{p+1}, ...`.
fn lead_with(dim: usize, p: usize) -> Matrix<Rational> {
    let order: Vec<usize> = std::iter::once(p).chain((0..dim).filter(|&i| i != p)).collect();
    Matrix::from_fn(dim, dim, |i, j| if order[j] == i { Rational::one() } else { Rational::zero() })
}

/// Family `diag(1, r^k_1, ..., r^k_n)` contracting `g_{J_n}` onto `g_{T0}`,
/// where `J_n` is the upper nilpotent Jordan cell and `T0` is `J_n` with the
/// superdiagonal entries at `zero_positions` (1-based, in `1..n`) set to 0.
pub fn jordan_cell_family(n: usize, zero_positions: &BTreeSet<usize>) -> ContractionFamily {
    assert!(n >= 1, "cell size must be positive");
    assert!(
        zero_positions.iter().all(|&j| (1..n).contains(&j)),
        "zero positions must lie in 1..{}",
        n.saturating_sub(1)
    );
    let cell = |zeros: &BTreeSet<usize>| {
        Matrix::from_fn(n, n, |i, j| {
            if j == i + 1 && !zeros.contains(&(i + 1)) {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    };
    let source = make_gt(&cell(&BTreeSet::new())).into_algebra();
    let target = make_gt(&cell(zero_positions)).into_algebra();
    let mut k = vec![0i64, 1];
    for j in 1..n {
        let last = *k.last().unwrap();
        k.push(last + i64::from(zero_positions.contains(&j)));
    }
    ContractionFamily::new(source, target, monomial_diagonal(&k)).expect("monomial family is invertible")
}

/// `(mu 0; 0 Y)` as a family, which maps `[e0, v] = T v` to `mu Y^{-1} T Y v`.
fn block_family(mu: RatFun, y: &Matrix<RatFun>) -> Matrix<RatFun> {
    let n = y.rows();
    Matrix::from_fn(n + 1, n + 1, |i, j| match (i, j) {
        (0, 0) => mu.clone(),
        (0, _) | (_, 0) => RatFun::zero_elem(),
        _ => y.get(i - 1, j - 1).clone(),
    })
}

/// Contraction family `g_T ~> g_S` realizing a cone certificate, when the
/// certificate is constructive.
pub fn cone_family(s: &Matrix<Rational>, t: &Matrix<Rational>, w: &ConeWitness) -> Option<ContractionFamily> {
    let n = t.rows();
    let m = match w {
        ConeWitness::Conjugate { lambda, conjugator } => {
            // (1/lambda) X T X^{-1} = S
            let y = conjugator.inverse()?;
            block_family(RatFun::constant(lambda.recip()), &rational_to_ratfun(&y))
        }
        ConeWitness::Scaling => block_family(RatFun::monomial(Rational::one(), 1), &Matrix::identity(n)),
        ConeWitness::Degeneration { lambda, base, power, exponents, conjugator, .. } => {
            // Y = X^{-1} D Z^{-1} gives lambda r^p Z D^{-1} X T X^{-1} D Z^{-1}
            let y = rational_to_ratfun(&base.inverse()?)
                .mul(&monomial_diagonal(exponents))
                .mul(&rational_to_ratfun(&conjugator.inverse()?));
            block_family(RatFun::monomial(lambda.clone(), i64::from(*power)), &y)
        }
        ConeWitness::RankDomination { .. } => return None,
    };
    let fam = ContractionFamily::new(make_gt(t).into_algebra(), make_gt(s).into_algebra(), m).ok()?;
    verify_contraction(&fam).is_verified().then_some(fam)
}

/// Isomorphism `g_rep -> g` when some basis vector `e_p` of `g` spans a
/// complement of an abelian ideal spanned by the others, and the matrix it
/// induces lies in the cone of `rep`. Columns are images of the basis of
/// `g_rep`.
pub fn gt_isomorphism(g: &LieAlgebra, rep: &Matrix<Rational>) -> Option<Matrix<Rational>> {
    let dim = g.dim();
    if rep.rows() + 1 != dim {
        return None;
    }
    (0..dim).find_map(|p| {
        let t = gt_form(g, p)?;
        let (lambda, x) = if t.is_zero() && rep.is_zero() {
            (Rational::one(), Matrix::identity(rep.rows()))
        } else if t.is_zero() || rep.is_zero() {
            return None;
        } else {
            match cone_member(&t, rep).ok()?.witness? {
                ConeWitness::Conjugate { lambda, conjugator } => (lambda, conjugator),
                _ => return None,
            }
        };
        // e0 -> lambda e_p and v -> X v on the remaining vectors
        let rest: Vec<usize> = (0..dim).filter(|&i| i != p).collect();
        let mut phi = Matrix::<Rational>::zeros(dim, dim);
        phi.set(p, 0, lambda);
        for j in 0..rest.len() {
            for (i, &ri) in rest.iter().enumerate() {
                phi.set(ri, j + 1, x.get(i, j).clone());
            }
        }
        debug_assert!(make_gt(rep).algebra().is_isomorphism(g, &phi));
        Some(phi)
    })
}

/// The family `C_r Q` contracting `fam.source()` onto `g_rep`, where `Q` is
/// a [`gt_isomorphism`] onto the family's target.
pub fn transport_to_representative(fam: &ContractionFamily, rep: &Matrix<Rational>) -> Option<ContractionFamily> {
    let q = gt_isomorphism(fam.target(), rep)?;
    let target = make_gt(rep).into_algebra();
    let out = ContractionFamily::new(fam.source().clone(), target, fam.matrix().mul(&rational_to_ratfun(&q))).ok()?;
    verify_contraction(&out).is_verified().then_some(out)
}

/// How [`extract_cone_limit`] reached the `a_n` block of the limit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConeLimitMethod {
    /// `lim a' A^{-1} T A` with `a' = a - b^T A^{-1} c`.
    BlockFormula,
    /// The block formula after replacing `C` by `E(u) C`, where
    /// `E(u) = (1 0; u I)` is an automorphism of the source.
    Normalized { u: usize },
    /// `lim a A''^{-1} T A''` with `A'' = A - c b^T / a`. This is the block
    /// formula for `E(-c/a) C`, whose conjugated brackets equal those of
    /// `C` for every `r`, so it holds for every verifying family. When
    /// `a = 0` the family is first replaced by `C E(e_shear)`, a constant
    /// automorphism of the target.
    SchurComplement { shear: Option<usize> },
    /// The source has no hyperplane abelian ideal in its basis; the block is
    /// read off the contracted brackets `[e0, v]`.
    BracketLimit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeLimit {
    pub limit: Matrix<Rational>,
    /// Index of the target basis vector playing the role of `e0`.
    pub target_lead: usize,
    pub method: ConeLimitMethod,
}

/// For a family contracting onto a `g_S`, recovers `S` as an `r -> 0` limit
/// built from the blocks of `C_r` and the source matrix `T`, and checks it
/// equals `S` exactly.
///
/// The plain block formula `a' A^{-1} T A` is tried first. It can diverge or
/// converge to another point of the cone on verifying families (right
/// multiplication by the `r`-dependent `E(-A^{-1} c)` does not preserve
/// limits), in which case the Schur-complement form is used.
pub fn extract_cone_limit(fam: &ContractionFamily) -> Result<ConeLimit, GtError> {
    let dim = fam.dim();
    let (q, s) = find_gt_form(fam.target()).ok_or_else(|| GtError::NotGt(fam.target().name().to_string()))?;
    let pt = rational_to_ratfun(&lead_with(dim, q));
    let mut c = fam.matrix().mul(&pt);
    let target = fam.target().in_basis(&lead_with(dim, q));
    let (limit, method) = match find_gt_form(fam.source()) {
        Some((p, t)) => {
            let inv = lead_with(dim, p).inverse().expect("permutation");
            c = rational_to_ratfun(&inv).mul(&c);
            block_limit(&c, &t, &s)?
        }
        None => {
            let f = ContractionFamily::new(fam.source().clone(), target, c)?;
            let lim = contracted_brackets(&f)?;
            let n = dim - 1;
            let m = Matrix::from_fn(n, n, |i, j| lim.coeff(0, j + 1, i + 1));
            (m, ConeLimitMethod::BracketLimit)
        }
    };
    if limit != s {
        return Err(GtError::LimitMismatch { limit, expected: s });
    }
    Ok(ConeLimit { limit, target_lead: q, method })
}

fn block_limit(
    c: &Matrix<RatFun>,
    t: &Matrix<Rational>,
    s: &Matrix<Rational>,
) -> Result<(Matrix<Rational>, ConeLimitMethod), GtError> {
    let dim = c.rows();
    if dim == 1 {
        return Ok((Matrix::zeros(0, 0), ConeLimitMethod::BlockFormula));
    }
    let a_block = c.submatrix(1..dim, 1..dim);
    if !a_block.determinant().is_zero_elem() {
        if block_formula(c, t).is_ok_and(|l| l == *s) {
            return Ok((s.clone(), ConeLimitMethod::BlockFormula));
        }
    } else {
        // det(A + u b^T) = b^T adj(A) u: the first unit vector outside Ran A
        // works when A has corank one
        for u in 0..dim - 1 {
            let cu = left_shear(c, u, &RatFun::one_elem());
            if !cu.submatrix(1..dim, 1..dim).determinant().is_zero_elem() {
                if block_formula(&cu, t).is_ok_and(|l| l == *s) {
                    return Ok((s.clone(), ConeLimitMethod::Normalized { u }));
                }
                break;
            }
        }
    }
    let mut c = c.clone();
    let mut shear = None;
    if c.get(0, 0).is_zero_elem() {
        // b != 0 since C is invertible
        let i = (1..dim).find(|&j| !c.get(0, j).is_zero_elem()).ok_or(GtError::NormalizationFailed)?;
        let mut e = Matrix::<RatFun>::identity(dim);
        e.set(i, 0, RatFun::one_elem());
        c = c.mul(&e);
        shear = Some(i - 1);
    }
    let a = c.get(0, 0).clone();
    let col = c.submatrix(1..dim, 0..1).scale(&a.inv());
    // E(-c/a) C has lower-left block 0
    let mut e = Matrix::<RatFun>::identity(dim);
    for i in 1..dim {
        e.set(i, 0, col.get(i - 1, 0).neg_ref());
    }
    let normalized = e.mul(&c);
    Ok((block_formula(&normalized, t)?, ConeLimitMethod::SchurComplement { shear }))
}

/// `E(x e_u) C`.
fn left_shear(c: &Matrix<RatFun>, u: usize, x: &RatFun) -> Matrix<RatFun> {
    let mut e = Matrix::<RatFun>::identity(c.rows());
    e.set(u + 1, 0, x.clone());
    e.mul(c)
}

fn block_formula(c: &Matrix<RatFun>, t: &Matrix<Rational>) -> Result<Matrix<Rational>, GtError> {
    let dim = c.rows();
    let n = dim - 1;
    let a = c.get(0, 0).clone();
    let b = c.submatrix(0..1, 1..dim);
    let col = c.submatrix(1..dim, 0..1);
    let big_a = c.submatrix(1..dim, 1..dim);
    let a_inv = ratfun_matrix_inverse(&big_a).map_err(|_| ContractionError::Singular)?;
    let a_prime = a.sub_ref(b.mul(&a_inv).mul(&col).get(0, 0));
    let m = a_inv.mul(&rational_to_ratfun(t)).mul(&big_a).scale(&a_prime);
    let mut out = Matrix::<Rational>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            match m.get(i, j).limit0() {
                Ok(v) => out.set(i, j, v),
                Err(p) => {
                    return Err(ContractionError::LimitDoesNotExist { i: 0, j: j + 1, component: i + 1, order: p.order }.into())
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::contraction::{laurent_matrix, verify_contraction};
    use crate::lie::{fingerprint, make_algebra, Bracket};

    fn m(rows: Vec<Vec<i64>>) -> Matrix<Rational> {
        Matrix::from_i64(rows)
    }

    #[test]
    fn small_gt_algebras() {
        assert!(make_gt(&Matrix::zeros(2, 2)).algebra().is_abelian());
        // J2 gives the Heisenberg bracket [e0, e2] = e1
        let h = make_gt(&m(vec![vec![0, 1], vec![0, 0]]));
        assert_eq!(h.algebra().tensor().get(0, 2), vec![rat(0), rat(1), rat(0)]);
        let f = fingerprint(h.algebra());
        assert_eq!((f.center_dim, f.nilpotent_class), (1, Some(2)));
        let rot = make_gt(&m(vec![vec![0, 1], vec![-1, 0]]));
        assert_eq!(fingerprint(rot.algebra()).killing_signature.negative, 1);
        let hyp = make_gt(&m(vec![vec![1, 0], vec![0, -1]]));
        assert_eq!(fingerprint(hyp.algebra()).killing_signature.positive, 1);
    }

    #[test]
    fn gt_form_finds_the_lead_vector() {
        // [e1, e3] = e1, [e2, e3] = -e2: e3 leads, T = diag(-1, 1)
        let g = make_algebra(
            "A34m1",
            3,
            vec![Bracket::new(0, 2, vec![(0, rat(1))]), Bracket::new(1, 2, vec![(1, rat(-1))])],
        )
        .unwrap();
        assert!(as_gt(&g).is_none());
        let (p, t) = find_gt_form(&g).unwrap();
        assert_eq!(p, 2);
        assert_eq!(t, m(vec![vec![-1, 0], vec![0, 1]]));
    }

    #[test]
    fn jordan_cell_exponents() {
        let fam = jordan_cell_family(3, &BTreeSet::from([2]));
        let d: Vec<i64> = (0..4).map(|i| fam.matrix().get(i, i).numerator().min_exp().unwrap()).collect();
        assert_eq!(d, vec![0, 1, 1, 2]);
        assert!(verify_contraction(&fam).is_verified());
        assert_eq!(as_gt(fam.target()).unwrap(), m(vec![vec![0, 1, 0], vec![0, 0, 0], vec![0, 0, 0]]));
        let all = jordan_cell_family(3, &BTreeSet::from([1, 2]));
        assert!(all.target().is_abelian());
        assert!(verify_contraction(&all).is_verified());
    }

    #[test]
    fn identity_family_returns_t() {
        let t = m(vec![vec![1, 2], vec![0, -1]]);
        let g = make_gt(&t).into_algebra();
        let fam = ContractionFamily::new(g.clone(), g, Matrix::identity(3)).unwrap();
        let lim = extract_cone_limit(&fam).unwrap();
        assert_eq!(lim.limit, t);
        assert_eq!(lim.method, ConeLimitMethod::BlockFormula);
    }

    // E(u_r) (1 r 0; 0 1 0; 0 0 1) with T = diag(1, -1): the left factor is
    // an automorphism of g_T for each r and the right one contracts g_T onto
    // itself, so the product verifies with target g_T
    fn sheared_identity(u: &str) -> ContractionFamily {
        let t = m(vec![vec![1, 0], vec![0, -1]]);
        let g = make_gt(&t).into_algebra();
        let left = laurent_matrix(&[vec!["1", "0", "0"], vec![u, "1", "0"], vec!["0", "0", "1"]]).unwrap();
        let right = laurent_matrix(&[vec!["1", "r", "0"], vec!["0", "1", "0"], vec!["0", "0", "1"]]).unwrap();
        let fam = ContractionFamily::new(g.clone(), g, left.mul(&right)).unwrap();
        assert!(verify_contraction(&fam).is_verified());
        fam
    }

    #[test]
    fn plain_block_formula_can_land_elsewhere_in_the_cone() {
        // u = -1/(2r): A = diag(1/2, 1) is invertible, a' = 2, and the plain
        // formula gives 2T instead of T
        let fam = sheared_identity("-1/2*r^-1");
        let c = fam.matrix();
        let t = as_gt(fam.source()).unwrap();
        assert_eq!(block_formula(c, &t).unwrap(), t.scale(&rat(2)));
        let out = extract_cone_limit(&fam).unwrap();
        assert_eq!(out.limit, t);
        assert_eq!(out.method, ConeLimitMethod::SchurComplement { shear: None });
    }

    #[test]
    fn singular_lower_block() {
        // u = -1/r makes A singular; E(e1) then gives a' = 1/r, a pole
        let fam = sheared_identity("-r^-1");
        let t = as_gt(fam.source()).unwrap();
        let cu = left_shear(fam.matrix(), 0, &RatFun::one_elem());
        assert!(matches!(block_formula(&cu, &t), Err(GtError::Contraction(ContractionError::LimitDoesNotExist { .. }))));
        let out = extract_cone_limit(&fam).unwrap();
        assert_eq!(out.limit, t);
        assert_eq!(out.method, ConeLimitMethod::SchurComplement { shear: None });
    }

    #[test]
    fn monomial_cell_families_use_the_plain_formula() {
        for zeros in [vec![], vec![1], vec![2], vec![1, 2], vec![1, 3]] {
            let fam = jordan_cell_family(4, &zeros.into_iter().collect());
            let out = extract_cone_limit(&fam).unwrap();
            assert_eq!(out.method, ConeLimitMethod::BlockFormula);
        }
    }

    #[test]
    fn cone_certificates_become_families() {
        let h = m(vec![vec![1, 0], vec![0, -1]]);
        let j2 = m(vec![vec![0, 1], vec![0, 0]]);
        let two_h = h.scale(&rat(2));
        for (s, t) in [(h.clone(), two_h), (Matrix::zeros(2, 2), h.clone()), (j2.clone(), h.clone())] {
            let v = closure_cone_member(&s, &t).unwrap();
            assert_eq!(v.status, ConeStatus::In);
            let fam = cone_family(&s, &t, v.witness.as_ref().unwrap()).expect("constructive certificate");
            assert!(verify_contraction(&fam).is_verified());
        }
        let ranks = ConeWitness::RankDomination { source_ranks: vec![1, 0], target_ranks: vec![0, 0] };
        assert!(cone_family(&Matrix::zeros(2, 2), &j2, &ranks).is_none());
    }

    #[test]
    fn isomorphism_onto_the_representative() {
        // A34m1 has T = diag(-1, 1) in its own basis
        let g = crate::catalog::get("A34m1").unwrap();
        let rep = m(vec![vec![1, 0], vec![0, -1]]);
        let phi = gt_isomorphism(&g, &rep).unwrap();
        assert!(make_gt(&rep).algebra().is_isomorphism(&g, &phi));
        assert!(gt_isomorphism(&g, &m(vec![vec![0, 1], vec![-1, 0]])).is_none());
        assert!(gt_isomorphism(&crate::catalog::get("su2").unwrap(), &rep).is_none());
    }

    #[test]
    fn transport_keeps_the_family_verifying() {
        let su2 = crate::catalog::get("su2").unwrap();
        let a350 = crate::catalog::get("A350").unwrap();
        let c = laurent_matrix(&[vec!["r", "0", "0"], vec!["0", "r", "0"], vec!["0", "0", "1"]]).unwrap();
        let fam = ContractionFamily::new(su2, a350, c).unwrap();
        let rot = m(vec![vec![0, 1], vec![-1, 0]]);
        let out = transport_to_representative(&fam, &rot).unwrap();
        assert_eq!(out.target().tensor(), make_gt(&rot).algebra().tensor());
        assert!(transport_to_representative(&fam, &m(vec![vec![1, 0], vec![0, -1]])).is_none());
    }
}
