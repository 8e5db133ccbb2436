use super::subspace::unit;
use super::{LieAlgebra, Subspace};
use crate::arith::{polymatrix_rank, Matrix, MultiPoly, Rational};
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::fmt;

/// Three-valued answer for partially decidable predicates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    True,
    False,
    Unknown,
}

impl From<bool> for Decision {
    fn from(b: bool) -> Self {
        if b {
            Decision::True
        } else {
            Decision::False
        }
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::True => "true",
            Decision::False => "false",
            Decision::Unknown => "unknown",
        })
    }
}

/// Inertia `(positives, negatives, zeros)` of a symmetric form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct KillingSignature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl fmt::Display for KillingSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.positive, self.negative, self.zero)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct InvariantReport {
    pub dim: usize,
    pub derived_series_dims: Vec<usize>,
    pub lower_central_dims: Vec<usize>,
    pub center_dim: usize,
    pub solvable: bool,
    pub nilpotent_class: Option<usize>,
    pub unimodular: bool,
    pub killing_signature: KillingSignature,
    pub coadjoint_rank: usize,
    pub derivation_dim: usize,
    pub has_codim1_abelian_ideal: Decision,
    pub flat_generic_orbits: bool,
}

fn series(g: &LieAlgebra, mut next: impl FnMut(&Subspace) -> Subspace) -> Vec<usize> {
    let mut cur = Subspace::full(g.dim());
    let mut out = Vec::new();
    loop {
        let nxt = next(&cur);
        let d = nxt.dim();
        out.push(d);
        if d == 0 || d == cur.dim() {
            return out;
        }
        cur = nxt;
    }
}

/// Dimensions of `g^(1) = [g, g]`, `g^(2)`, ... until the series is zero or
/// stationary. An abelian algebra gives `[0]`.
pub fn derived_series_dims(g: &LieAlgebra) -> Vec<usize> {
    series(g, |s| g.bracket_span(s, s))
}

/// Dimensions of `g^1 = [g, g]`, `g^2 = [g, g^1]`, ... with the same
/// stopping rule as [`derived_series_dims`].
pub fn lower_central_dims(g: &LieAlgebra) -> Vec<usize> {
    let full = Subspace::full(g.dim());
    series(g, |s| g.bracket_span(&full, s))
}

pub fn derived_algebra(g: &LieAlgebra) -> Subspace {
    let full = Subspace::full(g.dim());
    g.bracket_span(&full, &full)
}

pub fn center(g: &LieAlgebra) -> Subspace {
    let n = g.dim();
    // rows: coefficient of e_k in [x, e_j] = sum_i x_i c(i, j, k)
    let mut rows = Vec::with_capacity(n * n);
    for j in 0..n {
        for k in 0..n {
            rows.push((0..n).map(|i| g.tensor().coeff(i, j, k)).collect::<Vec<_>>());
        }
    }
    if n == 0 {
        return Subspace::zero(0);
    }
    Subspace::span(n, Matrix::from_rows(rows).nullspace())
}

pub fn is_solvable(g: &LieAlgebra) -> bool {
    derived_series_dims(g).last() == Some(&0) || g.dim() == 0
}

/// Nilpotency class (`1` for abelian algebras), or `None` when not nilpotent.
pub fn nilpotent_class(g: &LieAlgebra) -> Option<usize> {
    let lc = lower_central_dims(g);
    if g.dim() == 0 {
        return Some(1);
    }
    (lc.last() == Some(&0)).then(|| lc.iter().filter(|&&d| d > 0).count() + 1)
}

pub fn unimodular(g: &LieAlgebra) -> bool {
    (0..g.dim()).all(|i| (0..g.dim()).map(|j| g.tensor().coeff(i, j, j)).sum::<Rational>().is_zero())
}

/// `K(e_i, e_j) = Tr(ad e_i ad e_j)`.
pub fn killing_form(g: &LieAlgebra) -> Matrix<Rational> {
    let ads: Vec<Matrix<Rational>> = (0..g.dim()).map(|i| g.ad(i)).collect();
    Matrix::from_fn(g.dim(), g.dim(), |i, j| ads[i].mul(&ads[j]).trace())
}

/// Inertia of a symmetric rational matrix by congruence diagonalization.
pub fn signature_of_symmetric(m: &Matrix<Rational>) -> KillingSignature {
    assert!(m.is_square());
    let n = m.rows();
    let mut a = m.clone();
    let (mut pos, mut neg) = (0, 0);
    let mut k = 0;
    while k < n {
        let piv = (k..n).find(|&i| !a.get(i, i).is_zero());
        let piv = match piv {
            Some(p) => p,
            None => {
                // zero diagonal: a nonzero off-diagonal entry a_ij gives a
                // hyperbolic pair; e_i <- e_i + e_j makes the diagonal 2 a_ij
                let Some((i, j)) = (k..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a.get(i, j).is_zero())
                else {
                    break;
                };
                add_congruent(&mut a, i, j);
                i
            }
        };
        swap_congruent(&mut a, k, piv);
        let d = a.get(k, k).clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            let f = a.get(i, k) / &d;
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                let v = a.get(i, j) - &f * a.get(k, j);
                a.set(i, j, v);
            }
            for j in k..n {
                let v = a.get(j, i) - &f * a.get(j, k);
                a.set(j, i, v);
            }
        }
        k += 1;
    }
    KillingSignature { positive: pos, negative: neg, zero: n - pos - neg }
}

fn swap_congruent(a: &mut Matrix<Rational>, i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap_rows(i, j);
    for r in 0..a.rows() {
        let t = a.get(r, i).clone();
        a.set(r, i, a.get(r, j).clone());
        a.set(r, j, t);
    }
}

/// Row and column `i` += row and column `j`.
fn add_congruent(a: &mut Matrix<Rational>, i: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        let v = a.get(i, c) + a.get(j, c);
        a.set(i, c, v);
    }
    for r in 0..n {
        let v = a.get(r, i) + a.get(r, j);
        a.set(r, i, v);
    }
}

pub fn killing_signature(g: &LieAlgebra) -> KillingSignature {
    signature_of_symmetric(&killing_form(g))
}

/// `max_xi rank B_xi`, computed as the rank over `Q(xi)` of the skew matrix
/// `B_xi(e_i, e_j) = sum_k c(i, j, k) xi_k`.
pub fn coadjoint_rank(g: &LieAlgebra) -> usize {
    let n = g.dim();
    if g.is_abelian() {
        return 0;
    }
    let m = Matrix::from_fn(n, n, |i, j| MultiPoly::linear(&g.tensor().get(i, j)));
    // a sample evaluation is a lower bound; the center lies in the kernel of
    // every B_xi, so n - dim Z rounded down to even is an upper bound
    let upper = {
        let b = n - center(g).dim();
        b - b % 2
    };
    let probe: Vec<Rational> = (0..n).map(|k| Rational::from_integer(((k * 7 + 3) % 11 + 1).into())).collect();
    let sampled = m.map(|p| p.eval(&probe)).rank();
    if sampled >= upper {
        return sampled;
    }
    polymatrix_rank(&m)
}

/// Dimension of `Der(g)`: solutions `D` of
/// `D[e_i, e_j] = [D e_i, e_j] + [e_i, D e_j]`, unknowns `D[a][b]` at `a * n + b`.
pub fn derivation_dim(g: &LieAlgebra) -> usize {
    let n = g.dim();
    if n == 0 {
        return 0;
    }
    let t = g.tensor();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for m in 0..n {
                let mut row = vec![Rational::zero(); n * n];
                for k in 0..n {
                    let c = t.coeff(i, j, k);
                    if !c.is_zero() {
                        row[m * n + k] += c;
                    }
                }
                for l in 0..n {
                    let c = t.coeff(l, j, m);
                    if !c.is_zero() {
                        row[l * n + i] -= &c;
                    }
                    let c = t.coeff(i, l, m);
                    if !c.is_zero() {
                        row[l * n + j] -= c;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return n * n;
    }
    n * n - Matrix::from_rows(rows).rank()
}

pub fn is_abelian_ideal(g: &LieAlgebra, s: &Subspace) -> bool {
    assert_eq!(s.ambient_dim(), g.dim());
    let b = s.basis();
    for (a, x) in b.iter().enumerate() {
        for y in &b[a + 1..] {
            if g.tensor().bracket(x, y).iter().any(|c| !c.is_zero()) {
                return false;
            }
        }
        for i in 0..g.dim() {
            if !s.contains(&g.tensor().bracket(&unit(g.dim(), i), x)) {
                return false;
            }
        }
    }
    true
}

/// Whether `g` has an abelian ideal of codimension at most one.
///
/// A codimension-one ideal contains `g' = [g, g]`, and any hyperplane
/// containing `g'` is an ideal; so we look for a hyperplane `W` of a
/// complement `U` of `g'` with `[W, g'] = 0` and `[W, W] = 0`, `g'` abelian.
pub fn has_codim1_abelian_ideal(g: &LieAlgebra) -> Decision {
    let n = g.dim();
    if n == 0 {
        return Decision::False;
    }
    let t = g.tensor();
    let dg = derived_algebra(g);
    if !is_abelian_subspace(g, &dg) {
        return Decision::False;
    }
    let comp = dg.complement_indices();
    let d = comp.len();
    match d {
        0 => return Decision::False,
        1 => return Decision::True,
        _ => {}
    }
    // K1 = {u in U : [u, g'] = 0}, in coordinates of U = span(e_c, c in comp)
    let mut rows = Vec::new();
    for y in dg.basis() {
        let cols: Vec<Vec<Rational>> = comp.iter().map(|&c| t.bracket(&unit(n, c), y)).collect();
        for k in 0..n {
            rows.push(cols.iter().map(|v| v[k].clone()).collect::<Vec<_>>());
        }
    }
    let k1 = if rows.is_empty() {
        Subspace::full(d)
    } else {
        Subspace::span(d, Matrix::from_rows(rows).nullspace())
    };
    let lift = |u: &[Rational]| -> Vec<Rational> {
        let mut v = vec![Rational::zero(); n];
        for (c, x) in comp.iter().zip(u) {
            v[*c] = x.clone();
        }
        v
    };
    let beta = |u: &[Rational], w: &[Rational]| t.bracket(&lift(u), &lift(w));
    if k1.dim() + 1 < d {
        return Decision::False;
    }
    if k1.dim() + 1 == d {
        let b = k1.basis();
        let ok = (0..b.len()).all(|a| (a + 1..b.len()).all(|c| beta(&b[a], &b[c]).iter().all(|x| x.is_zero())));
        return ok.into();
    }
    // K1 = U: find a beta-isotropic hyperplane of U
    let units: Vec<Vec<Rational>> = (0..d).map(|i| unit(d, i)).collect();
    let vals: Vec<Vec<Vec<Rational>>> = (0..d).map(|a| (0..d).map(|c| beta(&units[a], &units[c])).collect()).collect();
    if vals.iter().flatten().flatten().all(|x| x.is_zero()) {
        return Decision::True;
    }
    // W = ker(phi) is isotropic for an alternating form w iff phi ^ w = 0,
    // which is linear in phi
    let mut rows = Vec::new();
    for k in 0..n {
        for a in 0..d {
            for b in a + 1..d {
                for c in b + 1..d {
                    let mut row = vec![Rational::zero(); d];
                    row[a] = vals[b][c][k].clone();
                    row[b] = -vals[a][c][k].clone();
                    row[c] = vals[a][b][k].clone();
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
    }
    if rows.is_empty() {
        return Decision::True;
    }
    (!Matrix::from_rows(rows).nullspace().is_empty()).into()
}

fn is_abelian_subspace(g: &LieAlgebra, s: &Subspace) -> bool {
    let b = s.basis();
    (0..b.len()).all(|a| (a + 1..b.len()).all(|c| g.tensor().bracket(&b[a], &b[c]).iter().all(|x| x.is_zero())))
}

pub fn flat_generic_orbits(g: &LieAlgebra) -> bool {
    center(g).dim() == 1 && coadjoint_rank(g) + 1 == g.dim()
}

pub fn fingerprint(g: &LieAlgebra) -> InvariantReport {
    let derived = derived_series_dims(g);
    let lower = lower_central_dims(g);
    let center_dim = center(g).dim();
    let coadjoint_rank = coadjoint_rank(g);
    InvariantReport {
        dim: g.dim(),
        solvable: derived.last() == Some(&0) || g.dim() == 0,
        nilpotent_class: nilpotent_class(g),
        derived_series_dims: derived,
        lower_central_dims: lower,
        center_dim,
        unimodular: unimodular(g),
        killing_signature: killing_signature(g),
        coadjoint_rank,
        derivation_dim: derivation_dim(g),
        has_codim1_abelian_ideal: has_codim1_abelian_ideal(g),
        flat_generic_orbits: center_dim == 1 && coadjoint_rank + 1 == g.dim(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::lie::{make_algebra, Bracket};

    fn alg(dim: usize, br: &[(usize, usize, &[(usize, i64)])]) -> LieAlgebra {
        make_algebra(
            "t",
            dim,
            br.iter()
                .map(|(i, j, t)| Bracket::new(i - 1, j - 1, t.iter().map(|(k, c)| (k - 1, rat(*c))).collect()))
                .collect(),
        )
        .unwrap()
    }

    fn su2() -> LieAlgebra {
        alg(3, &[(1, 2, &[(3, 1)]), (2, 3, &[(1, 1)]), (1, 3, &[(2, -1)])])
    }

    fn sl2() -> LieAlgebra {
        alg(3, &[(1, 2, &[(1, 1)]), (2, 3, &[(3, 1)]), (1, 3, &[(2, 2)])])
    }

    fn h3() -> LieAlgebra {
        alg(3, &[(1, 2, &[(3, 1)])])
    }

    fn n33() -> LieAlgebra {
        alg(6, &[(1, 2, &[(4, 1)]), (2, 3, &[(5, 1)]), (1, 3, &[(6, -1)])])
    }

    fn n212() -> LieAlgebra {
        alg(5, &[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)]), (2, 3, &[(5, 1)])])
    }

    fn a48m1() -> LieAlgebra {
        alg(4, &[(2, 3, &[(1, 1)]), (2, 4, &[(2, 1)]), (3, 4, &[(3, -1)])])
    }

    fn a490() -> LieAlgebra {
        alg(4, &[(2, 3, &[(1, 1)]), (2, 4, &[(3, -1)]), (3, 4, &[(2, 1)])])
    }

    #[test]
    fn series_conventions() {
        assert_eq!(lower_central_dims(&n212()), vec![3, 2, 0]);
        assert_eq!(derived_series_dims(&LieAlgebra::abelian(4)), vec![0]);
        assert_eq!(derived_series_dims(&su2()), vec![3]);
        assert_eq!(derived_series_dims(&a490()), vec![3, 1, 0]);
        assert_eq!(nilpotent_class(&LieAlgebra::abelian(2)), Some(1));
        assert_eq!(nilpotent_class(&n33()), Some(2));
        assert_eq!(nilpotent_class(&n212()), Some(3));
        assert!(!is_solvable(&sl2()));
        assert!(is_solvable(&a48m1()));
        assert_eq!(nilpotent_class(&a48m1()), None);
    }

    #[test]
    fn killing_signatures() {
        let sig = |p, n, z| KillingSignature { positive: p, negative: n, zero: z };
        assert_eq!(killing_signature(&su2()), sig(0, 3, 0));
        assert_eq!(killing_signature(&sl2()), sig(2, 1, 0));
        assert_eq!(killing_signature(&n33()), sig(0, 0, 6));
        assert_eq!(killing_signature(&a48m1()), sig(1, 0, 3));
        assert_eq!(killing_signature(&a490()), sig(0, 1, 3));
    }

    #[test]
    fn hyperbolic_block() {
        let m = Matrix::from_i64(vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 0]]);
        assert_eq!(signature_of_symmetric(&m), KillingSignature { positive: 1, negative: 1, zero: 1 });
    }

    #[test]
    fn centers_ranks_derivations() {
        assert_eq!(center(&h3()), Subspace::span(3, [unit(3, 2)]));
        assert_eq!(center(&LieAlgebra::abelian(3)).dim(), 3);
        assert_eq!(coadjoint_rank(&su2()), 2);
        assert_eq!(coadjoint_rank(&h3()), 2);
        assert_eq!(coadjoint_rank(&n33()), 2);
        assert_eq!(derivation_dim(&LieAlgebra::abelian(3)), 9);
        assert_eq!(derivation_dim(&su2()), 3);
        assert_eq!(derivation_dim(&a48m1()), 5);
        assert_eq!(derivation_dim(&a490()), 5);
        assert!(unimodular(&sl2()));
        assert!(unimodular(&a490()));
    }

    #[test]
    fn abelian_ideals() {
        let g = n33();
        // span{X1, Y1, Y2, Y3} = span{e1, e4, e5, e6}
        let s = Subspace::span(6, [unit(6, 0), unit(6, 3), unit(6, 4), unit(6, 5)]);
        assert!(is_abelian_ideal(&g, &s));
        assert!(!is_abelian_ideal(&su2(), &Subspace::span(3, [unit(3, 0)])));
        assert_eq!(has_codim1_abelian_ideal(&n33()), Decision::False);
        assert_eq!(has_codim1_abelian_ideal(&n212()), Decision::False);
        assert_eq!(has_codim1_abelian_ideal(&h3()), Decision::True);
        assert_eq!(has_codim1_abelian_ideal(&a48m1()), Decision::False);
        assert_eq!(has_codim1_abelian_ideal(&LieAlgebra::abelian(3)), Decision::True);
        assert_eq!(has_codim1_abelian_ideal(&su2()), Decision::False);
        // R x_T a_6 with T three 2x2 Jordan blocks: the bracket form on a
        // complement of g' has no radical left, four dimensions remain
        let jjj = make_algebra("gT", 7, (0..3).map(|b| Bracket::new(0, 2 * b + 2, vec![(2 * b + 1, rat(1))])).collect()).unwrap();
        assert_eq!(has_codim1_abelian_ideal(&jjj), Decision::True);
        let h5 = make_algebra("h5", 5, vec![Bracket::new(0, 1, vec![(4, rat(1))]), Bracket::new(2, 3, vec![(4, rat(1))])]).unwrap();
        assert_eq!(has_codim1_abelian_ideal(&h5), Decision::False);
    }

    #[test]
    fn flat_orbits() {
        assert!(flat_generic_orbits(&h3()));
        assert!(!flat_generic_orbits(&n33()));
    }
}
