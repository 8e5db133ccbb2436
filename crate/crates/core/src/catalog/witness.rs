use super::get;
use crate::arith::{ratfun_matrix_inverse, Matrix, RatFun, Rational};
use crate::contraction::{
    compose, laurent_matrix, monomial_diagonal, rational_to_ratfun, verify_contraction, ContractionFamily,
    WitnessLookup,
};
use crate::gt::{transport_to_representative, JordanType};
use crate::lie::{pad, LieAlgebra, StructureTensor};
use num_traits::{One, Zero};
use std::collections::HashSet;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("witness {id} failed to load: {reason}")]
    LoadTimeVerificationFailure { id: String, reason: String },
}

/// A stored contraction family with the ids of its endpoints.
#[derive(Clone, Debug)]
pub struct WitnessEntry {
    pub id: String,
    pub source_id: String,
    pub target_id: String,
    pub family: ContractionFamily,
    /// The inverse as printed next to the family, already checked against
    /// the computed inverse.
    pub printed_inverse: Option<Matrix<RatFun>>,
    /// Which transcription was kept when several were tried.
    pub variant: &'static str,
    /// Transcriptions that were tried first and did not verify.
    pub rejected: Vec<(&'static str, String)>,
    pub note: &'static str,
}

struct Variant {
    label: &'static str,
    source: &'static str,
    rows: &'static [&'static [&'static str]],
}

struct Spec {
    target: &'static str,
    variants: Vec<Variant>,
    inverse: Option<&'static [&'static [&'static str]]>,
    note: &'static str,
}

fn one(source: &'static str, target: &'static str, rows: &'static [&'static [&'static str]], note: &'static str) -> Spec {
    Spec { target, variants: vec![Variant { label: "as printed", source, rows }], inverse: None, note }
}

fn specs() -> Vec<Spec> {
    vec![
        one("su2", "A350", &[&["r", "0", "0"], &["0", "r", "0"], &["0", "0", "1"]], "diagonal"),
        one(
            "su2+a1",
            "f4_A41",
            &[&["-r^3", "0", "r", "0"], &["0", "0", "0", "r"], &["0", "r^2", "0", "0"], &["0", "0", "r", "0"]],
            "permutation with one shear times diag(r^3, r^2, r, r)",
        ),
        one("sl2", "A34m1", &[&["r", "0", "0"], &["0", "0", "1"], &["0", "-1", "0"]], "constant rotation of e2, e3"),
        one("sl2", "A350", &[&["0", "0", "1/2"], &["0", "r", "0"], &["r", "0", "1/2"]], "mixes e1 and e3"),
        Spec {
            target: "f4_A41",
            variants: vec![
                Variant {
                    label: "product of the printed factors",
                    source: "sl2+a1",
                    rows: &[&["0", "0", "0", "1"], &["0", "r", "0", "0"], &["0", "0", "-1/2*r", "0"], &["r", "0", "0", "1"]],
                },
                Variant {
                    label: "printed right-hand side",
                    source: "sl2+a1",
                    rows: &[&["0", "0", "0", "1"], &["0", "r", "0", "r"], &["0", "0", "-1/2*r", "0"], &["r", "0", "0", "1"]],
                },
            ],
            inverse: None,
            note: "the printed product has an extra r in row 2, column 4",
        },
        one(
            "su2+a1",
            "A490",
            &[&["r^2", "0", "0", "1"], &["0", "r", "0", "0"], &["0", "0", "r", "0"], &["0", "0", "0", "1"]],
            "shear times diag(r^2, r, r, 1)",
        ),
        one(
            "sl2+a1",
            "A48m1",
            &[&["0", "1", "0", "0"], &["0", "0", "0", "1"], &["0", "0", "r", "0"], &["r", "0", "0", "-1/2"]],
            "constant part carries the -1/2 shift of the central direction",
        ),
        one(
            "sl2+a1",
            "A490",
            &[
                &["-1/2*r^2", "0", "1/2*r", "1/2"],
                &["0", "r", "0", "0"],
                &["-1/2*r^2", "0", "-1/2*r", "1/2"],
                &["0", "0", "0", "1"],
            ],
            "",
        ),
        Spec {
            target: "n33",
            variants: vec![Variant {
                label: "as printed",
                source: "su2+a3",
                rows: &[
                    &["r", "0", "0", "0", "0", "0"],
                    &["0", "r", "0", "0", "0", "0"],
                    &["0", "0", "r", "0", "0", "0"],
                    &["0", "0", "-r", "r^2", "0", "0"],
                    &["-r", "0", "0", "0", "r^2", "0"],
                    &["0", "-r", "0", "0", "0", "r^2"],
                ],
            }],
            inverse: Some(&[
                &["r^-1", "0", "0", "0", "0", "0"],
                &["0", "r^-1", "0", "0", "0", "0"],
                &["0", "0", "r^-1", "0", "0", "0"],
                &["0", "0", "r^-2", "r^-2", "0", "0"],
                &["r^-2", "0", "0", "0", "r^-2", "0"],
                &["0", "r^-2", "0", "0", "0", "r^-2"],
            ]),
            note: "",
        },
        Spec {
            target: "n33",
            variants: vec![Variant {
                label: "as printed",
                source: "sl2+a3",
                rows: &[
                    &["r", "0", "0", "0", "0", "0"],
                    &["0", "r", "0", "0", "0", "0"],
                    &["0", "0", "r", "0", "0", "0"],
                    &["-r", "0", "0", "r^2", "0", "0"],
                    &["0", "0", "-r", "0", "r^2", "0"],
                    &["0", "1/2*r", "0", "0", "0", "r^2"],
                ],
            }],
            inverse: Some(&[
                &["r^-1", "0", "0", "0", "0", "0"],
                &["0", "r^-1", "0", "0", "0", "0"],
                &["0", "0", "r^-1", "0", "0", "0"],
                &["r^-2", "0", "0", "r^-2", "0", "0"],
                &["0", "0", "r^-2", "0", "r^-2", "0"],
                &["0", "-1/2*r^-2", "0", "0", "0", "r^-2"],
            ]),
            note: "",
        },
        Spec {
            target: "n212",
            variants: vec![
                Variant {
                    label: "source su2 + a2",
                    source: "su2+a2",
                    rows: &[
                        &["r", "0", "0", "0", "0"],
                        &["0", "r", "0", "0", "0"],
                        &["0", "0", "r^2", "0", "0"],
                        &["0", "1", "0", "r^2", "0"],
                        &["-1", "0", "0", "0", "r^2"],
                    ],
                },
                Variant {
                    label: "source sl2 + a2",
                    source: "sl2+a2",
                    rows: &[
                        &["r", "0", "0", "0", "0"],
                        &["0", "r", "0", "0", "0"],
                        &["0", "0", "r^2", "0", "0"],
                        &["0", "1", "0", "r^2", "0"],
                        &["-1", "0", "0", "0", "r^2"],
                    ],
                },
            ],
            inverse: Some(&[
                &["r^-1", "0", "0", "0", "0"],
                &["0", "r^-1", "0", "0", "0"],
                &["0", "0", "r^-2", "0", "0"],
                &["0", "-r^-3", "0", "r^-2", "0"],
                &["r^-3", "0", "0", "0", "r^-2"],
            ]),
            note: "the surrounding text names the sl2 relations for the su2 source; both readings are tried",
        },
        Spec {
            target: "n212",
            variants: vec![Variant {
                label: "as printed",
                source: "sl2+a2",
                rows: &[
                    &["r", "0", "0", "0", "0"],
                    &["0", "0", "r^2", "0", "0"],
                    &["0", "1/2*r", "0", "0", "0"],
                    &["-1", "0", "0", "r^2", "0"],
                    &["0", "1", "0", "0", "r^2"],
                ],
            }],
            inverse: Some(&[
                &["r^-1", "0", "0", "0", "0"],
                &["0", "0", "2*r^-1", "0", "0"],
                &["0", "r^-2", "0", "0", "0"],
                &["r^-3", "0", "0", "r^-2", "0"],
                &["0", "0", "-2*r^-3", "0", "r^-2"],
            ]),
            note: "",
        },
        one(
            "A48m1",
            "A34m1+a1",
            &[&["0", "0", "0", "r"], &["r", "0", "0", "0"], &["0", "r", "0", "0"], &["0", "0", "1", "0"]],
            "cyclic permutation times diag(r, r, 1, r)",
        ),
        one(
            "A490",
            "A350+a1",
            &[&["0", "0", "0", "1"], &["r", "0", "0", "0"], &["0", "r", "0", "0"], &["0", "0", "1", "0"]],
            "cyclic permutation times diag(r, r, 1, 1)",
        ),
        Spec {
            target: "n122+a1",
            variants: vec![Variant {
                label: "as printed",
                source: "n33",
                rows: &[
                    &["r", "0", "0", "0", "0", "0"],
                    &["0", "r", "0", "0", "0", "0"],
                    &["0", "0", "r", "0", "0", "0"],
                    &["0", "0", "0", "r^2", "0", "0"],
                    &["0", "0", "0", "0", "0", "r"],
                    &["0", "0", "0", "0", "-r^2", "0"],
                ],
            }],
            inverse: None,
            note: "the limit is [e1,e2]=e4, [e1,e3]=e5, not [e1,e3]=e6 as the target is printed",
        },
        one(
            "n33",
            "h3R_alt+a2",
            &[
                &["r", "0", "0", "0", "0", "0"],
                &["0", "r", "0", "0", "0", "0"],
                &["0", "0", "r", "0", "0", "0"],
                &["0", "0", "0", "r^2", "0", "0"],
                &["0", "0", "0", "0", "r", "0"],
                &["0", "0", "0", "0", "0", "r"],
            ],
            "diagonal",
        ),
        one(
            "n212",
            "f4+a1",
            &[
                &["r", "0", "0", "0", "0"],
                &["0", "r", "0", "0", "0"],
                &["0", "0", "r^2", "0", "0"],
                &["0", "0", "0", "r^3", "0"],
                &["0", "0", "0", "0", "r"],
            ],
            "diagonal",
        ),
        one(
            "n212",
            "n122_alt",
            &[
                &["1", "0", "0", "0", "0"],
                &["0", "r", "0", "0", "0"],
                &["0", "0", "1", "0", "0"],
                &["0", "0", "0", "1", "0"],
                &["0", "0", "0", "0", "r"],
            ],
            "diagonal",
        ),
        one(
            "n212",
            "h3+a2",
            &[
                &["1", "0", "0", "0", "0"],
                &["0", "r", "0", "0", "0"],
                &["0", "0", "r", "0", "0"],
                &["0", "0", "0", "1", "0"],
                &["0", "0", "0", "0", "1"],
            ],
            "diagonal",
        ),
        Spec {
            target: "f4",
            variants: vec![Variant {
                label: "found",
                source: "A48m1",
                rows: &[&["0", "0", "0", "-2*r"], &["1", "0", "r", "0"], &["1", "0", "-r", "0"], &["0", "r", "0", "0"]],
            }],
            inverse: None,
            note: "basis e2+e3, e4, e2-e3, -2e1 times diag(1, r, r, r); not among the printed families",
        },
        Spec {
            target: "f4",
            variants: vec![Variant {
                label: "found",
                source: "A490",
                rows: &[&["0", "0", "0", "-r"], &["1", "0", "0", "0"], &["0", "0", "-r", "0"], &["0", "r", "0", "0"]],
            }],
            inverse: None,
            note: "basis e2, e4, -e3, -e1 times diag(1, r, r, r); not among the printed families",
        },
        Spec {
            target: "n33",
            variants: vec![Variant {
                label: "as printed",
                source: "A48m1R2_bis",
                rows: &[
                    &["r", "0", "0", "0", "0", "0"],
                    &["0", "r^-1", "0", "0", "0", "0"],
                    &["0", "0", "r^-1", "0", "0", "0"],
                    &["0", "-1", "0", "r", "0", "0"],
                    &["0", "0", "0", "-1", "r^-2", "0"],
                    &["0", "0", "-1", "0", "0", "r"],
                ],
            }],
            inverse: Some(&[
                &["r^-1", "0", "0", "0", "0", "0"],
                &["0", "r", "0", "0", "0", "0"],
                &["0", "0", "r", "0", "0", "0"],
                &["0", "1", "0", "r^-1", "0", "0"],
                &["0", "r^2", "0", "r", "r^2", "0"],
                &["0", "0", "1", "0", "0", "r^-1"],
            ]),
            note: "",
        },
        Spec {
            target: "n33",
            variants: vec![Variant {
                label: "as printed",
                source: "A490R2_bis",
                rows: &[
                    &["r", "0", "0", "0", "0", "0"],
                    &["0", "r", "0", "0", "0", "0"],
                    &["0", "0", "r", "0", "0", "0"],
                    &["0", "0", "-1", "r", "0", "0"],
                    &["0", "0", "0", "0", "r^2", "0"],
                    &["0", "-1", "0", "0", "0", "r"],
                ],
            }],
            inverse: Some(&[
                &["r^-1", "0", "0", "0", "0", "0"],
                &["0", "r^-1", "0", "0", "0", "0"],
                &["0", "0", "r^-1", "0", "0", "0"],
                &["0", "0", "r^-2", "r^-1", "0", "0"],
                &["0", "0", "0", "0", "r^-2", "0"],
                &["0", "r^-2", "0", "0", "0", "r^-1"],
            ]),
            note: "",
        },
        Spec {
            target: "n212",
            variants: vec![Variant {
                label: "as printed",
                source: "A48m1R_bis",
                rows: &[
                    &["r", "0", "0", "0", "0"],
                    &["0", "r", "0", "0", "0"],
                    &["0", "0", "r^2", "0", "0"],
                    &["0", "-1", "0", "r^2", "0"],
                    &["0", "0", "0", "0", "r^3"],
                ],
            }],
            inverse: Some(&[
                &["r^-1", "0", "0", "0", "0"],
                &["0", "r^-1", "0", "0", "0"],
                &["0", "0", "r^-2", "0", "0"],
                &["0", "r^-3", "0", "r^-2", "0"],
                &["0", "0", "0", "0", "r^-3"],
            ]),
            note: "",
        },
        Spec {
            target: "n212",
            variants: vec![Variant {
                label: "as printed",
                source: "A490R_bis",
                rows: &[
                    &["r", "0", "0", "0", "0"],
                    &["0", "r", "0", "0", "0"],
                    &["0", "0", "r^2", "0", "0"],
                    &["0", "1", "0", "r^2", "0"],
                    &["0", "0", "0", "0", "r^3"],
                ],
            }],
            inverse: Some(&[
                &["r^-1", "0", "0", "0", "0"],
                &["0", "r^-1", "0", "0", "0"],
                &["0", "0", "r^-2", "0", "0"],
                &["0", "-r^-3", "0", "r^-2", "0"],
                &["0", "0", "0", "0", "r^-3"],
            ]),
            note: "",
        },
    ]
}

fn rows_of(rows: &[&[&'static str]]) -> Vec<Vec<&'static str>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

fn load(spec: &Spec) -> Result<WitnessEntry, WitnessError> {
    let first = &spec.variants[0];
    let id = format!("{}->{}", first.source, spec.target);
    let fail = |reason: String| WitnessError::LoadTimeVerificationFailure { id: id.clone(), reason };
    let target = get(spec.target).map_err(|e| fail(e.to_string()))?;
    let mut rejected = Vec::new();
    for v in &spec.variants {
        let source = get(v.source).map_err(|e| fail(e.to_string()))?;
        let m = laurent_matrix(&rows_of(v.rows)).map_err(|e| fail(e.to_string()))?;
        let fam = ContractionFamily::new(source, target.clone(), m).map_err(|e| fail(e.to_string()))?;
        let verdict = verify_contraction(&fam);
        if !verdict.is_verified() {
            rejected.push((v.label, verdict.to_string()));
            continue;
        }
        let printed_inverse = match spec.inverse {
            Some(rows) => {
                let printed = laurent_matrix(&rows_of(rows)).map_err(|e| fail(e.to_string()))?;
                let computed = ratfun_matrix_inverse(fam.matrix()).map_err(|e| fail(e.to_string()))?;
                if printed != computed {
                    return Err(fail(format!("printed inverse differs from the computed one:\n{computed}")));
                }
                Some(printed)
            }
            None => None,
        };
        return Ok(WitnessEntry {
            id: format!("{}->{}", v.source, spec.target),
            source_id: v.source.to_string(),
            target_id: spec.target.to_string(),
            family: fam,
            printed_inverse,
            variant: v.label,
            rejected,
            note: spec.note,
        });
    }
    Err(fail(format!(
        "no transcription verifies: {}",
        rejected.iter().map(|(l, r)| format!("{l}: {r}")).collect::<Vec<_>>().join("; ")
    )))
}

/// Target basis vector of `h3 ⊕ a_{m-3}` -> (filiform index, exponent).
fn filiform_images(m: usize) -> Vec<(usize, i64)> {
    let mut images = vec![(m - 1, 0i64), (1, 0), (0, 0)];
    images.extend((1..=m - 3).map(|i| (1 + i, i as i64)));
    images
}

/// The permutation part of [`filiform_to_heisenberg`], as a base change
/// for diagonal search.
pub fn filiform_heisenberg_basis(m: usize) -> Matrix<Rational> {
    let images = filiform_images(m);
    Matrix::from_fn(m, m, |row, col| if images[col].0 == row { Rational::one() } else { Rational::zero() })
}

/// `f_m ~> h3 ⊕ a_{m-3}`: `Y, X_1, X_0` span the Heisenberg part and `X_j`
/// is scaled by `r^{a_j}` with `a_0 = a_1 = 0 < a_2 < ... < a_{m-2}`.
pub fn filiform_to_heisenberg(m: usize) -> ContractionFamily {
    let source = get(&format!("fil{m}")).expect("filiform");
    let target = get(&format!("h3+a{}", m - 3)).expect("h3");
    let images = filiform_images(m);
    let c = Matrix::from_fn(m, m, |row, col| {
        let (src, e) = images[col];
        if row == src {
            RatFun::monomial(Rational::one(), e)
        } else {
            RatFun::default()
        }
    });
    ContractionFamily::new(source, target, c).expect("permutation times monomials")
}

fn load_all() -> Result<Vec<WitnessEntry>, WitnessError> {
    let mut out = specs().iter().map(load).collect::<Result<Vec<_>, _>>()?;
    for m in 3..=8 {
        let fam = filiform_to_heisenberg(m);
        let id = format!("fil{m}->h3+a{}", m - 3);
        if !verify_contraction(&fam).is_verified() {
            return Err(WitnessError::LoadTimeVerificationFailure { id, reason: verify_contraction(&fam).to_string() });
        }
        out.push(WitnessEntry {
            source_id: format!("fil{m}"),
            target_id: format!("h3+a{}", m - 3),
            id,
            family: fam,
            printed_inverse: None,
            variant: "generated",
            rejected: Vec::new(),
            note: "exponents 0, 0, 1, ..., m-3 on X_0, ..., X_{m-2}",
        });
    }
    Ok(out)
}

static WITNESSES: OnceLock<Result<Vec<WitnessEntry>, WitnessError>> = OnceLock::new();

/// Every stored family, each verified (and inverse-checked) on first use.
pub fn try_witnesses() -> Result<Vec<WitnessEntry>, WitnessError> {
    WITNESSES.get_or_init(load_all).clone()
}

pub fn witnesses() -> Vec<WitnessEntry> {
    try_witnesses().unwrap_or_else(|e| panic!("{e}"))
}

/// Constant families, i.e. isomorphisms, from the standard bases to the
/// relabeled ones. Column `j` is the image of the `j`-th relabeled basis
/// vector.
pub fn basis_changes() -> Vec<WitnessEntry> {
    let table: [(&str, &str, Vec<Vec<i64>>); 6] = [
        (
            "A48m1+a2",
            "A48m1R2_bis",
            // e1 -> -e4, e2 -> e2, e3 -> e3, e4 -> e5, e5 -> e1, e6 -> e6
            perm_columns(6, &[(4, -1), (2, 1), (3, 1), (5, 1), (1, 1), (6, 1)]),
        ),
        (
            "A490+a2",
            "A490R2_bis",
            perm_columns(6, &[(4, 1), (2, 1), (3, 1), (5, 1), (1, 1), (6, 1)]),
        ),
        ("A490+a1", "A490R_bis", perm_columns(5, &[(4, 1), (2, 1), (3, 1), (5, 1), (1, 1)])),
        (
            "A48m1+a1",
            "A48m1R_bis",
            // e1 -> -e4, e2 -> e2 + e3, e3 -> e2 - e3, e4 -> e5, e5 -> -2 e1
            vec![
                vec![0, 0, 0, 0, -2],
                vec![0, 1, 1, 0, 0],
                vec![0, 1, -1, 0, 0],
                vec![-1, 0, 0, 0, 0],
                vec![0, 0, 0, 1, 0],
            ],
        ),
        ("f4_A41", "f4", perm_columns(4, &[(4, -1), (3, 1), (2, 1), (1, 1)])),
        ("h3+a1", "h3R_alt", perm_columns(4, &[(1, 1), (2, 1), (4, 1), (3, 1)])),
    ];
    table
        .into_iter()
        .map(|(s, t, m)| {
            let fam = ContractionFamily::new(
                get(s).expect("catalog id"),
                get(t).expect("catalog id"),
                rational_to_ratfun(&Matrix::from_i64(m)),
            )
            .expect("invertible");
            assert!(verify_contraction(&fam).is_verified(), "basis change {s} -> {t} is not an isomorphism");
            WitnessEntry {
                id: format!("{s}->{t}"),
                source_id: s.to_string(),
                target_id: t.to_string(),
                family: fam,
                printed_inverse: None,
                variant: "isomorphism",
                rejected: Vec::new(),
                note: "constant family",
            }
        })
        .collect()
}

/// Matrix whose column `j` is `sign * e_image` for `(image, sign)` (1-based).
fn perm_columns(n: usize, cols: &[(usize, i64)]) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; n]; n];
    for (j, &(i, s)) in cols.iter().enumerate() {
        m[i - 1][j] = s;
    }
    m
}

/// Stored witnesses, basis changes, and the stored witnesses re-expressed
/// between standard bases by composing with basis changes.
pub fn witness_store() -> Vec<ContractionFamily> {
    let ws = witnesses();
    let bc = basis_changes();
    let mut out: Vec<ContractionFamily> = ws.iter().chain(&bc).map(|w| w.family.clone()).collect();
    for w in &ws {
        for b in bc.iter().filter(|b| b.target_id == w.source_id) {
            if let Ok(f) = compose(&b.family, &w.family) {
                if verify_contraction(&f).is_verified() {
                    out.push(f);
                }
            }
        }
    }
    out
}

/// `diag(C, I_k)`.
pub fn pad_family(f: &ContractionFamily, k: usize) -> Option<ContractionFamily> {
    let n = f.dim();
    let m = Matrix::from_fn(n + k, n + k, |i, j| {
        if i < n && j < n {
            f.matrix().get(i, j).clone()
        } else if i == j {
            RatFun::constant(Rational::one())
        } else {
            RatFun::default()
        }
    });
    ContractionFamily::new(pad(f.source(), k), pad(f.target(), k), m).ok()
}

/// Stored families matched up to abelian padding: a family for `g ~> g0`
/// also serves `g ⊕ a_k ~> g0 ⊕ a_k` as `diag(C, I_k)`.
pub struct PaddedStore(pub Vec<ContractionFamily>);

impl PaddedStore {
    pub fn standard() -> Self {
        PaddedStore(witness_store())
    }
}

impl WitnessLookup for PaddedStore {
    fn find(&self, g: &LieAlgebra, g0: &LieAlgebra) -> Option<ContractionFamily> {
        self.0.iter().filter(|f| f.dim() <= g.dim() && g.dim() == g0.dim()).find_map(|f| {
            let k = g.dim() - f.dim();
            // compare tensors before building the padded family
            if pad(f.source(), k).tensor() != g.tensor() || pad(f.target(), k).tensor() != g0.tensor() {
                return None;
            }
            pad_family(f, k)
        })
    }
}

/// Limit of `diag(r^k)` conjugation, computed from exponents alone: `None`
/// when some surviving coefficient has a negative exponent.
fn diagonal_limit(g: &LieAlgebra, k: &[i64]) -> Option<StructureTensor> {
    let n = g.dim();
    let mut t = StructureTensor::zero(n);
    for (&(i, j), v) in g.tensor().nonzero() {
        let mut w = vec![Rational::zero(); n];
        for (m, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match (k[i] + k[j] - k[m]).cmp(&0) {
                std::cmp::Ordering::Less => return None,
                std::cmp::Ordering::Equal => w[m] = c.clone(),
                std::cmp::Ordering::Greater => {}
            }
        }
        t.set(i, j, w);
    }
    Some(t)
}

/// A verifying family from `source` onto the representative `g_T` of `ty`,
/// in the representative's basis.
///
/// Candidates are the stored families out of `source` (padded with the
/// identity when the store has them for a smaller algebra) and the diagonal
/// families `diag(r^k)` with `k` in `[0, 3]^n`; the first whose target is
/// a `g_T` of the requested type is moved to the representative basis.
pub fn gt_witness(source: &LieAlgebra, ty: &JordanType) -> Option<ContractionFamily> {
    let rep = ty.representative();
    if rep.rows() + 1 != source.dim() {
        return None;
    }
    let mut pool: Vec<ContractionFamily> = Vec::new();
    for f in witness_store() {
        if f.dim() > source.dim() {
            continue;
        }
        if let Some(p) = pad_family(&f, source.dim() - f.dim()) {
            if p.source().tensor() == source.tensor() {
                pool.push(p);
            }
        }
    }
    for f in &pool {
        if let Some(out) = transport_to_representative(f, &rep) {
            return Some(out);
        }
    }
    let n = source.dim();
    let mut seen = HashSet::new();
    let mut k = vec![0i64; n];
    loop {
        if let Some(lim) = diagonal_limit(source, &k) {
            if seen.insert(lim.clone()) {
                if let Ok(target) = LieAlgebra::from_tensor("limit", lim) {
                    if let Ok(f) = ContractionFamily::new(source.clone(), target, monomial_diagonal(&k)) {
                        if let Some(out) = transport_to_representative(&f, &rep) {
                            return Some(out);
                        }
                    }
                }
            }
        }
        // next vector of [0, 3]^n
        let mut i = 0;
        while i < n && k[i] == 3 {
            k[i] = 0;
            i += 1;
        }
        if i == n {
            return None;
        }
        k[i] += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_witness_loads() {
        let ws = try_witnesses().unwrap();
        assert!(ws.len() >= 22 + 6);
        let with_inverse = ws.iter().filter(|w| w.printed_inverse.is_some()).count();
        assert_eq!(with_inverse, 8);
        assert_eq!(ws.iter().filter(|w| w.variant == "found").count(), 2);
    }

    #[test]
    fn basis_changes_are_isomorphisms() {
        assert_eq!(basis_changes().len(), 6);
    }

    #[test]
    fn store_contains_standard_basis_versions() {
        let store = witness_store();
        let a48 = pad(&get("A48m1").unwrap(), 2);
        let n33 = get("n33").unwrap();
        assert!(store.iter().any(|f| f.source().tensor() == a48.tensor() && f.target().tensor() == n33.tensor()));
    }

    #[test]
    fn diagonal_limit_agrees_with_the_general_limit() {
        let g = get("n212").unwrap();
        let k = [1, 1, 2, 3, 1];
        let fam = ContractionFamily::new(g.clone(), get("f4+a1").unwrap(), monomial_diagonal(&k)).unwrap();
        assert_eq!(diagonal_limit(&g, &k).unwrap(), crate::contraction::contracted_brackets(&fam).unwrap());
        // [e1,e2] = e3 picks up r^{-1}
        assert!(diagonal_limit(&g, &[0, 0, 1, 0, 0]).is_none());
    }
}
