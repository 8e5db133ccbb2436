//! Named algebras with stable ids, the explicit contraction families between
//! them, and the expectation table of the classification theorem.
//!
//! Ids: `su2`, `sl2`, `A34m1`, `A350`, `A48m1`, `A490`, `n33`, `n212`,
//! `n122`, `f4` (basis `[e1,e2]=e3, [e1,e3]=e4`), `f4_A41` (basis
//! `[e2,e4]=e1, [e3,e4]=e2`), `a<n>`, `h<2n+1>`, `f<m>` / `fil<m>` (filiform,
//! basis `X_0..X_{m-2}, Y`), relabeled variants ending in `_bis` / `_alt`,
//! `gT:<matrix>`, and any of these followed by `+a<k>`.

mod expect;
mod witness;

pub use expect::{
    dominated, listed_gt_targets, run_theorem24, run_theorem24_parts, theorem24_expectations, BulletOutcome, Expectation, ExpectationRow, Part,
    RowOutcome, Theorem24Report,
};
pub use witness::{
    basis_changes, filiform_heisenberg_basis, filiform_to_heisenberg, gt_witness, pad_family, try_witnesses, witness_store, witnesses, PaddedStore,
    WitnessEntry, WitnessError,
};

use crate::arith::{parse_rational, Matrix, Rational};
use crate::gt::make_gt;
use crate::lie::{make_algebra, pad, Bracket, LieAlgebra, LieError};
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown algebra id '{0}'")]
    Unknown(String),
    #[error("bad matrix literal in '{0}': {1}")]
    BadMatrix(String, String),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// Coarse invariants every entry is checked against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expected {
    pub dim: usize,
    pub derived_dim: usize,
    pub center_dim: usize,
    pub coadjoint_rank: usize,
    pub solvable: bool,
    pub nilpotent_class: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub algebra: LieAlgebra,
    pub aliases: &'static [&'static str],
    pub description: &'static str,
    pub expected: Expected,
}

type Rel = (usize, usize, &'static [(usize, i64)]);

/// Relations with 1-based indices and integer coefficients.
fn rel(name: &str, dim: usize, rels: &[Rel]) -> LieAlgebra {
    let brackets = rels
        .iter()
        .map(|&(i, j, terms)| {
            let terms = terms.iter().map(|&(k, c)| (k - 1, Rational::from_integer(c.into()))).collect();
            if i < j {
                Bracket::new(i - 1, j - 1, terms)
            } else {
                let neg: Vec<(usize, Rational)> = terms.into_iter().map(|(k, c): (usize, Rational)| (k, -c)).collect();
                Bracket::new(j - 1, i - 1, neg)
            }
        })
        .collect();
    make_algebra(name, dim, brackets).expect("catalog relations satisfy Jacobi")
}

fn ex(dim: usize, derived_dim: usize, center_dim: usize, coadjoint_rank: usize, solvable: bool, class: Option<usize>) -> Expected {
    Expected { dim, derived_dim, center_dim, coadjoint_rank, solvable, nilpotent_class: class }
}

/// Every fixed-basis entry.
pub fn entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            id: "su2",
            algebra: rel("su2", 3, &[(1, 2, &[(3, 1)]), (2, 3, &[(1, 1)]), (3, 1, &[(2, 1)])]),
            aliases: &["su(2)"],
            description: "compact simple, [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2",
            expected: ex(3, 3, 0, 2, false, None),
        },
        CatalogEntry {
            id: "sl2",
            algebra: rel("sl2", 3, &[(1, 2, &[(1, 1)]), (2, 3, &[(3, 1)]), (1, 3, &[(2, 2)])]),
            aliases: &["sl(2,R)", "su(1,1)"],
            description: "split simple, [e1,e2]=e1, [e2,e3]=e3, [e1,e3]=2e2",
            expected: ex(3, 3, 0, 2, false, None),
        },
        CatalogEntry {
            id: "A34m1",
            algebra: rel("A34m1", 3, &[(1, 3, &[(1, 1)]), (2, 3, &[(2, -1)])]),
            aliases: &["A3,4^-1"],
            description: "[e1,e3]=e1, [e2,e3]=-e2",
            expected: ex(3, 2, 0, 2, true, None),
        },
        CatalogEntry {
            id: "A350",
            algebra: rel("A350", 3, &[(1, 3, &[(2, -1)]), (2, 3, &[(1, 1)])]),
            aliases: &["A3,5^0"],
            description: "[e1,e3]=-e2, [e2,e3]=e1",
            expected: ex(3, 2, 0, 2, true, None),
        },
        CatalogEntry {
            id: "A48m1",
            algebra: rel("A48m1", 4, &[(2, 3, &[(1, 1)]), (2, 4, &[(2, 1)]), (3, 4, &[(3, -1)])]),
            aliases: &["A4,8^-1"],
            description: "[e2,e3]=e1, [e2,e4]=e2, [e3,e4]=-e3",
            expected: ex(4, 3, 1, 2, true, None),
        },
        CatalogEntry {
            id: "A490",
            algebra: rel("A490", 4, &[(2, 3, &[(1, 1)]), (2, 4, &[(3, -1)]), (3, 4, &[(2, 1)])]),
            aliases: &["A4,9^0"],
            description: "[e2,e3]=e1, [e2,e4]=-e3, [e3,e4]=e2",
            expected: ex(4, 3, 1, 2, true, None),
        },
        CatalogEntry {
            id: "n33",
            algebra: rel("n33", 6, &[(1, 2, &[(4, 1)]), (2, 3, &[(5, 1)]), (3, 1, &[(6, 1)])]),
            aliases: &["n3,3"],
            description: "free 2-step nilpotent of rank 3",
            expected: ex(6, 3, 3, 2, true, Some(2)),
        },
        CatalogEntry {
            id: "n212",
            algebra: rel("n212", 5, &[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)]), (2, 3, &[(5, 1)])]),
            aliases: &["n2,1,2"],
            description: "3-step nilpotent, [e1,e2]=e3, [e1,e3]=e4, [e2,e3]=e5",
            expected: ex(5, 3, 2, 2, true, Some(3)),
        },
        CatalogEntry {
            id: "n122",
            algebra: rel("n122", 5, &[(1, 2, &[(4, 1)]), (1, 3, &[(5, 1)])]),
            aliases: &["n1,2,2"],
            description: "[e1,e2]=e4, [e1,e3]=e5",
            expected: ex(5, 2, 2, 2, true, Some(2)),
        },
        CatalogEntry {
            id: "f4",
            algebra: rel("f4", 4, &[(1, 2, &[(3, 1)]), (1, 3, &[(4, 1)])]),
            aliases: &[],
            description: "filiform, [e1,e2]=e3, [e1,e3]=e4",
            expected: ex(4, 2, 1, 2, true, Some(3)),
        },
        CatalogEntry {
            id: "f4_A41",
            algebra: rel("f4_A41", 4, &[(2, 4, &[(1, 1)]), (3, 4, &[(2, 1)])]),
            aliases: &["A4,1"],
            description: "filiform, [e2,e4]=e1, [e3,e4]=e2",
            expected: ex(4, 2, 1, 2, true, Some(3)),
        },
        CatalogEntry {
            id: "A48m1R2_bis",
            algebra: rel("A48m1R2_bis", 6, &[(1, 2, &[(2, 1)]), (1, 3, &[(3, -1)]), (2, 3, &[(5, 1)])]),
            aliases: &[],
            description: "A48m1 + a2 relabeled: [e1,e2]=e2, [e1,e3]=-e3, [e2,e3]=e5",
            expected: ex(6, 3, 3, 2, true, None),
        },
        CatalogEntry {
            id: "A48m1R_bis",
            algebra: rel("A48m1R_bis", 5, &[(1, 2, &[(3, 1)]), (1, 3, &[(2, 1)]), (2, 3, &[(5, 1)])]),
            aliases: &[],
            description: "A48m1 + a1 in the basis e1, e2+e3, e2-e3, -2e5: [e1,e2]=e3, [e1,e3]=e2, [e2,e3]=e5",
            expected: ex(5, 3, 2, 2, true, None),
        },
        CatalogEntry {
            id: "A490R2_bis",
            algebra: rel("A490R2_bis", 6, &[(1, 2, &[(3, 1)]), (1, 3, &[(2, -1)]), (2, 3, &[(5, 1)])]),
            aliases: &[],
            description: "A490 + a2 relabeled: [e1,e2]=e3, [e1,e3]=-e2, [e2,e3]=e5",
            expected: ex(6, 3, 3, 2, true, None),
        },
        CatalogEntry {
            id: "A490R_bis",
            algebra: rel("A490R_bis", 5, &[(1, 2, &[(3, 1)]), (1, 3, &[(2, -1)]), (2, 3, &[(5, 1)])]),
            aliases: &[],
            description: "A490 + a1 relabeled: [e1,e2]=e3, [e1,e3]=-e2, [e2,e3]=e5",
            expected: ex(5, 3, 2, 2, true, None),
        },
        CatalogEntry {
            id: "h3R_alt",
            algebra: rel("h3R_alt", 4, &[(1, 2, &[(4, 1)])]),
            aliases: &[],
            description: "h3 + a1 as [e1,e2]=e4",
            expected: ex(4, 1, 2, 2, true, Some(2)),
        },
        CatalogEntry {
            id: "n122_alt",
            algebra: rel("n122_alt", 5, &[(1, 3, &[(4, 1)]), (2, 3, &[(5, 1)])]),
            aliases: &[],
            description: "n122 as [e1,e3]=e4, [e2,e3]=e5",
            expected: ex(5, 2, 2, 2, true, Some(2)),
        },
    ]
}

/// `h_{2n+1}`: `X_1..X_n, Y_1..Y_n, Z` with `[X_j, Y_j] = Z`.
pub fn heisenberg(n: usize) -> LieAlgebra {
    let dim = 2 * n + 1;
    let z = dim - 1;
    let brackets = (0..n).map(|j| Bracket::new(j, n + j, vec![(z, Rational::one())])).collect();
    let labels = (1..=n)
        .map(|j| format!("X{j}"))
        .chain((1..=n).map(|j| format!("Y{j}")))
        .chain(std::iter::once("Z".to_string()))
        .collect();
    make_algebra(&format!("h{dim}"), dim, brackets).expect("Heisenberg").with_labels(labels)
}

/// `f_m`: `X_0..X_{m-2}, Y` with `[Y, X_j] = X_{j-1}`.
pub fn filiform(m: usize) -> LieAlgebra {
    assert!(m >= 3, "filiform algebras start at dimension 3");
    let y = m - 1;
    let brackets = (1..y).map(|j| Bracket::new(j, y, vec![(j - 1, -Rational::one())])).collect();
    let labels = (0..y).map(|j| format!("X{j}")).chain(std::iter::once("Y".to_string())).collect();
    make_algebra(&format!("f{m}"), m, brackets).expect("filiform").with_labels(labels)
}

/// Parses `[[a,b],[c,d]]` with rational entries.
pub fn parse_matrix_literal(text: &str) -> Result<Matrix<Rational>, String> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = t
        .strip_prefix("[[")
        .and_then(|s| s.strip_suffix("]]"))
        .ok_or_else(|| "expected [[...],...]".to_string())?;
    let rows: Vec<Vec<Rational>> = inner
        .split("],[")
        .map(|row| row.split(',').map(|x| parse_rational(x).map_err(|e| e.to_string())).collect())
        .collect::<Result<_, _>>()?;
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(format!("matrix is not square ({n} rows)"));
    }
    Ok(Matrix::from_rows(rows))
}

/// Resolves an id to an algebra in its registered basis.
pub fn get(id: &str) -> Result<LieAlgebra, CatalogError> {
    let id = id.trim();
    if let Some(lit) = id.strip_prefix("gT:") {
        let t = parse_matrix_literal(lit).map_err(|e| CatalogError::BadMatrix(id.to_string(), e))?;
        return Ok(make_gt(&t).into_algebra());
    }
    // "+a<k>" suffix; g_T literals never contain '+'
    if let Some((base, k)) = id.rsplit_once("+a") {
        if let Ok(k) = k.parse::<usize>() {
            return Ok(pad(&get(base)?, k).with_name(id));
        }
    }
    if let Some(e) = entries().into_iter().find(|e| e.id == id || e.aliases.contains(&id)) {
        return Ok(e.algebra);
    }
    let num = |p: &str| id.strip_prefix(p).and_then(|s| s.parse::<usize>().ok());
    if let Some(n) = num("a") {
        return Ok(LieAlgebra::abelian(n).with_name(id));
    }
    if let Some(d) = num("h") {
        if d >= 3 && d % 2 == 1 {
            return Ok(heisenberg((d - 1) / 2));
        }
    }
    if let Some(m) = num("fil").or_else(|| num("f")) {
        if m >= 3 {
            return Ok(filiform(m).with_name(id));
        }
    }
    Err(CatalogError::Unknown(id.to_string()))
}

/// Ids of every fixed-basis entry plus small members of the parameterized
/// families.
pub fn ids() -> Vec<String> {
    let mut out: Vec<String> = entries().iter().map(|e| e.id.to_string()).collect();
    out.extend(["a1", "a2", "a3", "h3", "h5", "f5", "fil4"].iter().map(|s| s.to_string()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::lie::{coadjoint_rank, fingerprint};

    #[test]
    fn every_entry_matches_its_expected_shape() {
        for e in entries() {
            let f = fingerprint(&e.algebra);
            let got = Expected {
                dim: f.dim,
                derived_dim: f.derived_series_dims.first().copied().unwrap_or(0),
                center_dim: f.center_dim,
                coadjoint_rank: f.coadjoint_rank,
                solvable: f.solvable,
                nilpotent_class: f.nilpotent_class,
            };
            assert_eq!(got, e.expected, "{}", e.id);
        }
    }

    #[test]
    fn n33_relations() {
        let g = get("n33").unwrap();
        assert_eq!(g.dim(), 6);
        assert_eq!(g.tensor().get(0, 1), vec![rat(0), rat(0), rat(0), rat(1), rat(0), rat(0)]);
        assert_eq!(g.tensor().get(1, 2), vec![rat(0), rat(0), rat(0), rat(0), rat(1), rat(0)]);
        // [e3,e1]=e6, so [e1,e3]=-e6
        assert_eq!(g.tensor().coeff(0, 2, 5), rat(-1));
    }

    #[test]
    fn parameterized_ids() {
        assert_eq!(get("a0").unwrap().dim(), 0);
        assert_eq!(get("h5").unwrap().dim(), 5);
        assert_eq!(coadjoint_rank(&get("h5").unwrap()), 4);
        assert!(get("h4").is_err());
        let f5 = get("f5").unwrap();
        // [Y, X1] = X0 with Y last
        assert_eq!(f5.tensor().coeff(1, 4, 0), rat(-1));
        assert_eq!(get("su2+a3").unwrap().dim(), 6);
        assert_eq!(get("gT:[[0,1],[0,0]]").unwrap().dim(), 3);
        assert!(matches!(get("gT:[[0,1],[0]]"), Err(CatalogError::BadMatrix(..))));
        assert!(matches!(get("so3"), Err(CatalogError::Unknown(_))));
        assert_eq!(get("f4").unwrap().tensor().coeff(0, 1, 2), rat(1));
        assert_eq!(get("fil4").unwrap().tensor(), filiform(4).tensor());
    }

    #[test]
    fn the_two_f4_bases_are_isomorphic_but_differ() {
        let (a, b) = (get("f4").unwrap(), get("f4_A41").unwrap());
        assert_ne!(a.tensor(), b.tensor());
        // f4 -> f4_A41: e1 -> -e4, e2 -> e3, e3 -> e2, e4 -> e1
        let p = Matrix::from_i64(vec![vec![0, 0, 0, 1], vec![0, 0, 1, 0], vec![0, 1, 0, 0], vec![-1, 0, 0, 0]]);
        assert!(a.is_isomorphism(&b, &p));
    }
}
