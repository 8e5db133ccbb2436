use super::similarity::{invariant_factors, poly_at, similar, squarefree_factors};
use super::GtError;
use crate::arith::{rational_nth_root, Matrix, Rational, Ring, UniPoly};
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::collections::HashSet;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ConeStatus {
    #[serde(rename = "IN")]
    In,
    #[serde(rename = "NOT_IN")]
    NotIn,
    #[serde(rename = "UNKNOWN")]
    Unknown,
}

impl fmt::Display for ConeStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConeStatus::In => "IN",
            ConeStatus::NotIn => "NOT_IN",
            ConeStatus::Unknown => "UNKNOWN",
        })
    }
}

/// Certificate carried by an `IN` verdict; [`ConeWitness::check`] replays it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConeWitness {
    /// `X T X^{-1} = lambda S`.
    Conjugate { lambda: Rational, conjugator: Matrix<Rational> },
    /// `S = 0 = lim lambda T`.
    Scaling,
    /// Both nilpotent and `rank S^j <= rank T^j` for every `j`, which
    /// characterizes nilpotent orbit closures. Checked, not constructed.
    RankDomination { source_ranks: Vec<usize>, target_ranks: Vec<usize> },
    /// `lim r^power D^{-1} X (lambda T) X^{-1} D = limit` with
    /// `D = diag(r^exponents)`, and `Y limit Y^{-1} = S` for the conjugator `Y`.
    Degeneration {
        lambda: Rational,
        base: Matrix<Rational>,
        power: u32,
        exponents: Vec<i64>,
        limit: Matrix<Rational>,
        conjugator: Matrix<Rational>,
    },
}

impl ConeWitness {
    /// Replays the certificate against `S` and `T`.
    pub fn check(&self, s: &Matrix<Rational>, t: &Matrix<Rational>) -> bool {
        match self {
            ConeWitness::Conjugate { lambda, conjugator } => match conjugator.inverse() {
                Some(inv) => !lambda.is_zero() && conjugator.mul(t).mul(&inv) == s.scale(lambda),
                None => false,
            },
            ConeWitness::Scaling => s.is_zero(),
            ConeWitness::RankDomination { source_ranks, target_ranks } => {
                let n = t.rows();
                t.is_nilpotent()
                    && s.is_nilpotent()
                    && *source_ranks == t.power_ranks(n)
                    && *target_ranks == s.power_ranks(n)
                    && target_ranks.iter().zip(source_ranks).all(|(a, b)| a <= b)
            }
            ConeWitness::Degeneration { lambda, base, power, exponents, limit, conjugator } => {
                let (Some(binv), Some(yinv)) = (base.inverse(), conjugator.inverse()) else {
                    return false;
                };
                let m = base.mul(t).mul(&binv).scale(lambda);
                degeneration_limit(&m, *power, exponents).as_ref() == Some(limit)
                    && conjugator.mul(limit).mul(&yinv) == *s
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeVerdict {
    pub status: ConeStatus,
    pub witness: Option<ConeWitness>,
    pub reason: String,
}

impl ConeVerdict {
    fn yes(w: ConeWitness, reason: impl Into<String>) -> Self {
        ConeVerdict { status: ConeStatus::In, witness: Some(w), reason: reason.into() }
    }
    fn no(reason: impl Into<String>) -> Self {
        ConeVerdict { status: ConeStatus::NotIn, witness: None, reason: reason.into() }
    }
    fn unknown(reason: impl Into<String>) -> Self {
        ConeVerdict { status: ConeStatus::Unknown, witness: None, reason: reason.into() }
    }
}

fn check_pair(s: &Matrix<Rational>, t: &Matrix<Rational>) -> Result<usize, GtError> {
    if !s.is_square() || !t.is_square() || s.rows() != t.rows() {
        return Err(GtError::SizeMismatch(s.rows(), t.rows()));
    }
    Ok(s.rows())
}

/// `c_k` for `k = 1..n`: the coefficient of `x^(n-k)` in `det(xI - A)`.
fn char_coeffs(a: &Matrix<Rational>) -> Vec<Rational> {
    let n = a.rows();
    let p = a.charpoly();
    (1..=n).map(|k| p.coeff(n - k)).collect()
}

enum Scalars {
    /// Every nonzero real `lambda` with `lambda^k c_k(T) = c_k(S)` for all `k`.
    Rational(Vec<Rational>),
    /// Real solutions may exist but none is rational.
    Irrational,
    /// No nonzero real `lambda` works; the string says why.
    None(String),
}

/// Solves `lambda^k b_k = a_k` for all `k` over the reals, exactly when the
/// real solutions are rational.
fn matching_scalars(a: &[Rational], b: &[Rational]) -> Scalars {
    for (k, (ak, bk)) in a.iter().zip(b).enumerate() {
        let k = k + 1;
        if ak.is_zero() != bk.is_zero() {
            return Scalars::None(format!("the coefficient c_{k} of the characteristic polynomial vanishes for only one matrix"));
        }
        if !ak.is_zero() && k % 2 == 0 && (ak / bk).is_negative() {
            return Scalars::None(format!("lambda^{k} = {} has no real solution", ak / bk));
        }
    }
    let mut candidates: Option<Vec<Rational>> = None;
    for (k, (ak, bk)) in a.iter().zip(b).enumerate() {
        if ak.is_zero() {
            continue;
        }
        let k = k + 1;
        let q = ak / bk;
        if let Some(root) = rational_nth_root(&q, k as u32) {
            // the real solutions of lambda^k = q are {root} or {root, -root}
            candidates = Some(if k % 2 == 0 { vec![root.clone(), -root] } else { vec![root] });
            break;
        }
    }
    let Some(cands) = candidates else {
        return Scalars::Irrational;
    };
    let ok: Vec<Rational> = cands
        .into_iter()
        .filter(|l| {
            let mut pow = Rational::one();
            a.iter().zip(b).all(|(ak, bk)| {
                pow = &pow * l;
                &pow * bk == *ak
            })
        })
        .collect();
    if ok.is_empty() {
        Scalars::None("the characteristic coefficients force incompatible scalings".into())
    } else {
        Scalars::Rational(ok)
    }
}

/// Decides `S ∈ C(T)`, that is `lambda S ~ T` for some real `lambda != 0`,
/// when the forced scalings are rational.
pub fn cone_member(s: &Matrix<Rational>, t: &Matrix<Rational>) -> Result<ConeVerdict, GtError> {
    check_pair(s, t)?;
    if s.is_zero() || t.is_zero() {
        return Err(GtError::ZeroMatrix);
    }
    let (cs, ct) = (char_coeffs(s), char_coeffs(t));
    if cs.iter().all(Zero::is_zero) && ct.iter().all(Zero::is_zero) {
        // nilpotent: lambda S ~ S, so the cone is the similarity orbit
        return Ok(match similar(t, s) {
            Some(x) => ConeVerdict::yes(
                ConeWitness::Conjugate { lambda: Rational::one(), conjugator: x },
                "nilpotent with the same Jordan partition",
            ),
            None => ConeVerdict::no("nilpotent with different Jordan partitions"),
        });
    }
    // lambda S ~ T needs lambda^k c_k(S) = c_k(T)
    match matching_scalars(&ct, &cs) {
        Scalars::None(why) => Ok(ConeVerdict::no(why)),
        Scalars::Irrational => Ok(ConeVerdict::unknown("the scaling forced by the characteristic polynomial is irrational")),
        Scalars::Rational(ls) => {
            for l in ls {
                if let Some(x) = similar(t, &s.scale(&l)) {
                    return Ok(ConeVerdict::yes(
                        ConeWitness::Conjugate { lambda: l.clone(), conjugator: x },
                        format!("{} S is similar to T", crate::arith::fmt_rational(&l)),
                    ));
                }
            }
            Ok(ConeVerdict::no("no admissible scaling of S is similar to T"))
        }
    }
}

/// For nilpotent `S`, `T`: whether `S` lies in the closure of the orbit of
/// `T`, by `rank S^j <= rank T^j` for all `j`.
pub fn closure_cone_member_nilpotent(s: &Matrix<Rational>, t: &Matrix<Rational>) -> Result<bool, GtError> {
    let n = check_pair(s, t)?;
    if !s.is_nilpotent() || !t.is_nilpotent() {
        return Err(GtError::NotNilpotent);
    }
    Ok(s.power_ranks(n).iter().zip(t.power_ranks(n)).all(|(a, b)| *a <= b))
}

/// Sizes of the Jordan cells of a nilpotent matrix, largest first.
pub fn nilpotent_partition(a: &Matrix<Rational>) -> Vec<usize> {
    let n = a.rows();
    let mut ranks = vec![n];
    ranks.extend(a.power_ranks(n));
    // cells of size >= j: rank A^(j-1) - rank A^j
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut out = Vec::new();
    for j in (1..=n).rev() {
        let exactly = at_least[j - 1] - at_least.get(j).copied().unwrap_or(0);
        out.extend(std::iter::repeat(j).take(exactly));
    }
    out
}

/// Decides `S` in the closure of `C(T) \ {0}` where an exact argument is
/// available, and answers `UNKNOWN` otherwise.
pub fn closure_cone_member(s: &Matrix<Rational>, t: &Matrix<Rational>) -> Result<ConeVerdict, GtError> {
    let n = check_pair(s, t)?;
    if t.is_zero() {
        return Err(GtError::ZeroMatrix);
    }
    if s.is_zero() {
        return Ok(ConeVerdict::yes(ConeWitness::Scaling, "S = 0 is the limit of lambda T as lambda -> 0"));
    }
    let direct = cone_member(s, t)?;
    if direct.status == ConeStatus::In {
        return Ok(direct);
    }
    let (rs, rt) = (s.power_ranks(n), t.power_ranks(n));
    // rank is lower semicontinuous and constant on C(T)
    if let Some(j) = (0..n).find(|&j| rs[j] > rt[j]) {
        return Ok(ConeVerdict::no(format!("rank S^{} = {} exceeds rank T^{} = {}", j + 1, rs[j], j + 1, rt[j])));
    }
    match (s.is_nilpotent(), t.is_nilpotent()) {
        (true, true) => Ok(ConeVerdict::yes(nilpotent_witness(s, t, rs, rt), "nilpotent rank domination")),
        (false, true) => Ok(ConeVerdict::no("limits of nilpotent matrices are nilpotent")),
        (true, false) => Ok(match search_degeneration(s, t, &Rational::one(), 1..=n as u32) {
            Some(w) => ConeVerdict::yes(w, "explicit degeneration found"),
            None => ConeVerdict::unknown("no degeneration found by the bounded search"),
        }),
        (false, false) => Ok(mixed(s, t, n)),
    }
}

fn nilpotent_witness(s: &Matrix<Rational>, t: &Matrix<Rational>, rs: Vec<usize>, rt: Vec<usize>) -> ConeWitness {
    let n = t.rows();
    if rt[0] + 1 == n {
        // single cell: move T to J_n, then the monomial family of the
        // partition of S, then conjugate the result onto S
        let jn = Matrix::from_fn(n, n, |i, j| if j == i + 1 { Rational::one() } else { Rational::zero() });
        let base = similar(t, &jn).expect("single nilpotent cell");
        let parts = nilpotent_partition(s);
        let mut zeros = std::collections::BTreeSet::new();
        let mut acc = 0;
        for p in &parts[..parts.len() - 1] {
            acc += p;
            zeros.insert(acc);
        }
        let mut k = vec![1i64];
        for j in 1..n {
            let last = *k.last().unwrap();
            k.push(last + i64::from(zeros.contains(&j)));
        }
        let limit = degeneration_limit(&jn, 0, &k).expect("monomial cell family has a limit");
        let conjugator = similar(&limit, s).expect("same partition");
        return ConeWitness::Degeneration { lambda: Rational::one(), base, power: 0, exponents: k, limit, conjugator };
    }
    ConeWitness::RankDomination { source_ranks: rt, target_ranks: rs }
}

fn is_squarefree(p: &UniPoly) -> bool {
    squarefree_factors(p).len() <= 1
}

fn mixed(s: &Matrix<Rational>, t: &Matrix<Rational>, n: usize) -> ConeVerdict {
    // along lambda_r X_r T X_r^{-1} -> S the scalings converge to some
    // lambda with lambda^k c_k(T) = c_k(S), and S is in the orbit closure of
    // lambda T itself
    let ls = match matching_scalars(&char_coeffs(s), &char_coeffs(t)) {
        Scalars::None(why) => return ConeVerdict::no(why),
        Scalars::Irrational => return ConeVerdict::unknown("the limiting scaling is irrational"),
        Scalars::Rational(ls) => ls,
    };
    let mut open = Vec::new();
    for l in ls {
        let m = t.scale(&l);
        let factors = squarefree_factors(&m.charpoly());
        let dominated = factors.iter().all(|p| {
            let (ps, pm) = (poly_at(p, s), poly_at(p, &m));
            ps.power_ranks(n).iter().zip(pm.power_ranks(n)).all(|(a, b)| *a <= b)
        });
        if !dominated {
            continue;
        }
        let minimal = invariant_factors(&m).last().cloned().unwrap_or_else(UniPoly::one_elem);
        if is_squarefree(&minimal) {
            // semisimple orbits are closed, and S is not similar to lambda T
            continue;
        }
        open.push(l);
    }
    if open.is_empty() {
        return ConeVerdict::no("S is not in the orbit closure of any admissible scaling of T");
    }
    for l in &open {
        if let Some(w) = search_degeneration(s, t, l, 0..=0) {
            return ConeVerdict::yes(w, "explicit degeneration found");
        }
    }
    ConeVerdict::unknown("mixed spectrum; no degeneration found by the bounded search")
}

/// `lim r^power D^{-1} M D` for `D = diag(r^k)`, if it exists.
fn degeneration_limit(m: &Matrix<Rational>, power: u32, k: &[i64]) -> Option<Matrix<Rational>> {
    let n = m.rows();
    let mut out = Matrix::<Rational>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let v = m.get(i, j);
            if v.is_zero() {
                continue;
            }
            let e = power as i64 - k[i] + k[j];
            if e < 0 {
                return None;
            }
            if e == 0 {
                out.set(i, j, v.clone());
            }
        }
    }
    Some(out)
}

/// Bounded search over `X ∈ {I, I ± E_ij}`, `k_1 = 0`, `k_i ∈ [-b, b]` for a
/// limit of `r^power D^{-1} X (lambda T) X^{-1} D` similar to `S`.
fn search_degeneration(
    s: &Matrix<Rational>,
    t: &Matrix<Rational>,
    lambda: &Rational,
    powers: std::ops::RangeInclusive<u32>,
) -> Option<ConeWitness> {
    let n = t.rows();
    let bound = n.min(3) as i64;
    let target_ranks = s.power_ranks(n);
    let mut bases = vec![Matrix::<Rational>::identity(n)];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                for c in [1, -1] {
                    let mut x = Matrix::<Rational>::identity(n);
                    x.set(i, j, Rational::from_integer(c.into()));
                    bases.push(x);
                }
            }
        }
    }
    let mut seen = HashSet::new();
    for base in bases {
        let m = base.mul(t).mul(&base.inverse().expect("unipotent")).scale(lambda);
        for power in powers.clone() {
            let mut k = vec![0i64; n];
            let mut found = None;
            walk(&m, power, bound, 1, &mut k, &mut |k| {
                let limit = degeneration_limit(&m, power, k).expect("pruned");
                if !seen.insert(limit.clone()) || limit.power_ranks(n) != target_ranks {
                    return false;
                }
                if let Some(y) = similar(&limit, s) {
                    found = Some((k.to_vec(), limit, y));
                    return true;
                }
                false
            });
            if let Some((exponents, limit, conjugator)) = found {
                return Some(ConeWitness::Degeneration {
                    lambda: lambda.clone(),
                    base,
                    power,
                    exponents,
                    limit,
                    conjugator,
                });
            }
        }
    }
    None
}

fn walk(
    m: &Matrix<Rational>,
    power: u32,
    bound: i64,
    p: usize,
    k: &mut Vec<i64>,
    leaf: &mut impl FnMut(&[i64]) -> bool,
) -> bool {
    let n = k.len();
    if p == n {
        return leaf(k);
    }
    for v in -bound..=bound {
        k[p] = v;
        let ok = (0..=p).all(|q| {
            let (a, b) = (m.get(p, q), m.get(q, p));
            (a.is_zero() || power as i64 - k[p] + k[q] >= 0) && (b.is_zero() || power as i64 - k[q] + k[p] >= 0)
        });
        if ok && walk(m, power, bound, p + 1, k, leaf) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn m(rows: Vec<Vec<i64>>) -> Matrix<Rational> {
        Matrix::from_i64(rows)
    }

    fn cell(n: usize, zeros: &[usize]) -> Matrix<Rational> {
        Matrix::from_fn(n, n, |i, j| if j == i + 1 && !zeros.contains(&(i + 1)) { rat(1) } else { rat(0) })
    }

    #[test]
    fn scaled_matrix_is_in_the_cone() {
        let t = m(vec![vec![1, 2], vec![3, 4]]);
        let v = cone_member(&t.scale(&rat(2)), &t).unwrap();
        assert_eq!(v.status, ConeStatus::In);
        match v.witness.as_ref().unwrap() {
            ConeWitness::Conjugate { lambda, .. } => assert_eq!(*lambda, ratio_half()),
            w => panic!("{w:?}"),
        }
        assert!(v.witness.unwrap().check(&t.scale(&rat(2)), &t));
    }

    fn ratio_half() -> Rational {
        crate::arith::ratio(1, 2)
    }

    #[test]
    fn identity_is_not_a_multiple_of_a_hyperbolic_pair() {
        // lambda^2 det S = det T reads lambda^2 = -1
        let v = cone_member(&m(vec![vec![1, 0], vec![0, 1]]), &m(vec![vec![1, 0], vec![0, -1]])).unwrap();
        assert_eq!(v.status, ConeStatus::NotIn);
    }

    #[test]
    fn nilpotent_cone_is_the_orbit() {
        assert_eq!(cone_member(&cell(3, &[]), &cell(3, &[2])).unwrap().status, ConeStatus::NotIn);
        assert_eq!(cone_member(&cell(3, &[1]), &cell(3, &[2])).unwrap().status, ConeStatus::In);
    }

    #[test]
    fn irrational_scaling_is_unknown() {
        // lambda^2 * 1 = 2
        let v = cone_member(&m(vec![vec![1, 0], vec![0, -1]]), &m(vec![vec![0, 2], vec![1, 0]])).unwrap();
        assert_eq!(v.status, ConeStatus::Unknown);
    }

    #[test]
    fn nilpotent_rank_test() {
        assert!(closure_cone_member_nilpotent(&cell(3, &[2]), &cell(3, &[])).unwrap());
        assert!(!closure_cone_member_nilpotent(&cell(3, &[]), &cell(3, &[2])).unwrap());
        assert!(closure_cone_member_nilpotent(&Matrix::zeros(3, 3), &cell(3, &[1])).unwrap());
        assert_eq!(
            closure_cone_member_nilpotent(&m(vec![vec![1, 0], vec![0, 0]]), &cell(2, &[])),
            Err(GtError::NotNilpotent)
        );
    }

    #[test]
    fn partitions_from_ranks() {
        assert_eq!(nilpotent_partition(&cell(4, &[2])), vec![2, 2]);
        assert_eq!(nilpotent_partition(&cell(4, &[3])), vec![3, 1]);
        assert_eq!(nilpotent_partition(&Matrix::zeros(2, 2)), vec![1, 1]);
    }

    #[test]
    fn hyperbolic_pair_degenerates_to_a_nilpotent_cell() {
        let t = m(vec![vec![1, 0], vec![0, -1]]);
        let s = cell(2, &[]);
        let v = closure_cone_member(&s, &t).unwrap();
        assert_eq!(v.status, ConeStatus::In);
        let w = v.witness.unwrap();
        assert!(w.check(&s, &t));
        // independent check of the hand family: X = (1 1; 0 1), one power of
        // r, D = diag(1, 1/r) gives the limit (0 -2; 0 0)
        let x = m(vec![vec![1, 1], vec![0, 1]]);
        let xt = x.mul(&t).mul(&x.inverse().unwrap());
        assert_eq!(degeneration_limit(&xt, 1, &[0, -1]).unwrap(), m(vec![vec![0, -2], vec![0, 0]]));
    }

    #[test]
    fn rotation_does_not_reach_a_hyperbolic_pair() {
        let v = closure_cone_member(&m(vec![vec![1, 0], vec![0, -1]]), &m(vec![vec![0, 1], vec![-1, 0]])).unwrap();
        assert_eq!(v.status, ConeStatus::NotIn);
    }

    #[test]
    fn single_cell_witness_is_a_monomial_family() {
        let t = cell(4, &[]);
        let s = cell(4, &[1, 3]);
        let v = closure_cone_member(&s, &t).unwrap();
        let w = v.witness.unwrap();
        assert!(matches!(w, ConeWitness::Degeneration { .. }));
        assert!(w.check(&s, &t));
    }

    #[test]
    fn mixed_spectrum_closure() {
        // diag(1,1,0) + nilpotent part: S = diag(1, 1, 0) is in the closure
        // of T = (1 1 0; 0 1 0; 0 0 0) but not conversely
        let t = m(vec![vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 0]]);
        let s = m(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 0]]);
        let v = closure_cone_member(&s, &t).unwrap();
        assert_eq!(v.status, ConeStatus::In);
        assert!(v.witness.unwrap().check(&s, &t));
        assert_eq!(closure_cone_member(&t, &s).unwrap().status, ConeStatus::NotIn);
    }
}
