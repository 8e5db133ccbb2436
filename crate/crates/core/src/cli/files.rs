//! JSON file formats. Basis indices are 1-based; coefficients are rational
//! strings and family entries are Laurent expressions in `r`.

use crate::arith::{parse_rational, Matrix, ParseError, RatFun, Rational};
use crate::catalog::{self, parse_matrix_literal, CatalogError};
use crate::contraction::{laurent_matrix, ContractionError, ContractionFamily};
use crate::lie::{make_algebra, Bracket, LieAlgebra, LieError};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: invalid JSON: {message}")]
    Json { path: String, message: String },
    #[error("{path}: {location}: {source}")]
    Parse { path: String, location: String, source: ParseError },
    #[error("{path}: {message}")]
    Shape { path: String, message: String },
    #[error("{path}: {source}")]
    Lie { path: String, source: LieError },
    #[error("{path}: {source}")]
    Family { path: String, source: ContractionError },
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry {
    /// `[i, j]`, 1-based; `i > j` is read as `-[e_j, e_i]`.
    pub pair: [usize; 2],
    /// `(k, coefficient of e_k)`.
    pub terms: Vec<(usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
    pub brackets: Vec<BracketEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyFile {
    /// Catalog ids or paths of algebra files.
    pub source: String,
    pub target: String,
    /// `[k, k0]`: the family acts on `source ⊕ a_k` and `target ⊕ a_k0`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stabilization: Option<[usize; 2]>,
    pub entries: Vec<Vec<String>>,
}

fn read(path: &Path) -> Result<String, FileError> {
    std::fs::read_to_string(path).map_err(|source| FileError::Io { path: path.display().to_string(), source })
}

fn json<T: for<'de> Deserialize<'de>>(path: &Path, text: &str) -> Result<T, FileError> {
    serde_json::from_str(text).map_err(|e| FileError::Json { path: path.display().to_string(), message: e.to_string() })
}

impl AlgebraFile {
    pub fn from_algebra(g: &LieAlgebra) -> Self {
        let default_labels = g.labels().iter().enumerate().all(|(i, l)| *l == format!("e{}", i + 1));
        let brackets = g
            .tensor()
            .nonzero()
            .map(|(&(i, j), v)| BracketEntry {
                pair: [i + 1, j + 1],
                terms: v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k + 1, crate::arith::fmt_rational(c)))
                    .collect(),
            })
            .collect();
        AlgebraFile {
            name: g.name().to_string(),
            dim: g.dim(),
            labels: if default_labels { vec![] } else { g.labels().to_vec() },
            brackets,
        }
    }

    pub fn to_algebra(&self, path: &str) -> Result<LieAlgebra, FileError> {
        let shape = |message: String| FileError::Shape { path: path.to_string(), message };
        let mut brackets = Vec::new();
        for (n, b) in self.brackets.iter().enumerate() {
            let [i, j] = b.pair;
            if i == 0 || j == 0 || i > self.dim || j > self.dim || i == j {
                return Err(shape(format!("bracket {}: bad pair [{i}, {j}] for dimension {}", n + 1, self.dim)));
            }
            let mut terms = Vec::new();
            for (t, (k, c)) in b.terms.iter().enumerate() {
                if *k == 0 || *k > self.dim {
                    return Err(shape(format!("bracket {}: index e{k} out of range", n + 1)));
                }
                let q = parse_rational(c).map_err(|source| FileError::Parse {
                    path: path.to_string(),
                    location: format!("bracket {}, term {}", n + 1, t + 1),
                    source,
                })?;
                terms.push((k - 1, if i < j { q } else { -q }));
            }
            brackets.push(Bracket::new(i.min(j) - 1, i.max(j) - 1, terms));
        }
        let g = make_algebra(&self.name, self.dim, brackets)
            .map_err(|source| FileError::Lie { path: path.to_string(), source })?;
        if self.labels.is_empty() {
            Ok(g)
        } else if self.labels.len() == self.dim {
            Ok(g.with_labels(self.labels.clone()))
        } else {
            Err(shape(format!("{} labels for dimension {}", self.labels.len(), self.dim)))
        }
    }

    pub fn load(path: &Path) -> Result<LieAlgebra, FileError> {
        let f: AlgebraFile = json(path, &read(path)?)?;
        f.to_algebra(&path.display().to_string())
    }
}

fn looks_like_path(spec: &str) -> bool {
    spec.ends_with(".json") || spec.contains('/')
}

/// Resolves an algebra argument: a file path, then `<dir>/<spec>.json` in
/// the catalog directory, then a built-in catalog id.
pub fn resolve_algebra(spec: &str, catalog_dir: Option<&Path>) -> Result<LieAlgebra, FileError> {
    if looks_like_path(spec) {
        return AlgebraFile::load(Path::new(spec));
    }
    if let Some(dir) = catalog_dir {
        let p: PathBuf = dir.join(format!("{spec}.json"));
        if p.is_file() {
            return Ok(AlgebraFile::load(&p)?.with_name(spec));
        }
    }
    Ok(catalog::get(spec)?)
}

/// A rational matrix from a JSON file of rational strings or an inline
/// literal `[[1,0],[0,-1]]`.
pub fn resolve_matrix(spec: &str) -> Result<Matrix<Rational>, FileError> {
    if !looks_like_path(spec) {
        return parse_matrix_literal(spec).map_err(|message| FileError::Shape { path: spec.to_string(), message });
    }
    let path = Path::new(spec);
    let rows: Vec<Vec<String>> = json(path, &read(path)?)?;
    let n = rows.len();
    let mut out = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(FileError::Shape { path: spec.to_string(), message: format!("row {} has {} entries, expected {n}", i + 1, row.len()) });
        }
        let parsed = row
            .iter()
            .enumerate()
            .map(|(j, x)| {
                parse_rational(x).map_err(|source| FileError::Parse {
                    path: spec.to_string(),
                    location: format!("entry ({}, {})", i + 1, j + 1),
                    source,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        out.push(parsed);
    }
    Ok(Matrix::from_rows(out))
}

impl FamilyFile {
    pub fn from_family(fam: &ContractionFamily, source: &str, target: &str) -> Self {
        let m = fam.matrix();
        FamilyFile {
            source: source.to_string(),
            target: target.to_string(),
            stabilization: None,
            entries: (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect()).collect(),
        }
    }

    pub fn to_family(&self, path: &str, catalog_dir: Option<&Path>) -> Result<ContractionFamily, FileError> {
        let g = resolve_algebra(&self.source, catalog_dir)?;
        let g0 = resolve_algebra(&self.target, catalog_dir)?;
        let (k, k0) = self.stabilization.map_or((0, 0), |[k, k0]| (k, k0));
        let n = g.dim() + k;
        if self.entries.len() != n || self.entries.iter().any(|r| r.len() != n) {
            return Err(FileError::Shape { path: path.to_string(), message: format!("entries must form a {n}x{n} matrix") });
        }
        let matrix = entry_matrix(path, &self.entries)?;
        ContractionFamily::stabilized(&g, k, &g0, k0, matrix).map_err(|source| FileError::Family { path: path.to_string(), source })
    }

    pub fn load(path: &Path, catalog_dir: Option<&Path>) -> Result<ContractionFamily, FileError> {
        let f: FamilyFile = json(path, &read(path)?)?;
        f.to_family(&path.display().to_string(), catalog_dir)
    }
}

/// Parses entries one by one so an error names its row, column and offset.
fn entry_matrix(path: &str, rows: &[Vec<String>]) -> Result<Matrix<RatFun>, FileError> {
    for (i, row) in rows.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            if let Err(source) = laurent_matrix(&[vec![e.as_str()]]) {
                return Err(FileError::Parse {
                    path: path.to_string(),
                    location: format!("entry ({}, {}) \"{e}\"", i + 1, j + 1),
                    source,
                });
            }
        }
    }
    Ok(laurent_matrix(rows).expect("entries parsed individually"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_files_round_trip() {
        for id in ["su2", "n33", "A48m1", "h5"] {
            let g = catalog::get(id).unwrap();
            let text = serde_json::to_string(&AlgebraFile::from_algebra(&g)).unwrap();
            let back: AlgebraFile = serde_json::from_str(&text).unwrap();
            assert_eq!(back.to_algebra("mem").unwrap().tensor(), g.tensor());
        }
    }

    #[test]
    fn reversed_pairs_are_negated() {
        let f = AlgebraFile {
            name: "x".into(),
            dim: 3,
            labels: vec![],
            brackets: vec![
                BracketEntry { pair: [1, 2], terms: vec![(3, "1".into())] },
                BracketEntry { pair: [3, 1], terms: vec![(2, "1".into())] },
                BracketEntry { pair: [2, 3], terms: vec![(1, "1".into())] },
            ],
        };
        assert_eq!(f.to_algebra("mem").unwrap().tensor(), catalog::get("su2").unwrap().tensor());
    }

    #[test]
    fn bad_entries_report_their_position() {
        let f = FamilyFile {
            source: "su2".into(),
            target: "A350".into(),
            stabilization: None,
            entries: vec![vec!["r".into(), "0".into(), "0".into()], vec!["0".into(), "1/q".into(), "0".into()], vec![
                "0".into(),
                "0".into(),
                "1".into(),
            ]],
        };
        let err = f.to_family("fam.json", None).unwrap_err().to_string();
        assert!(err.contains("entry (2, 2)") && err.contains("position 2"), "{err}");
    }

    #[test]
    fn jacobi_failures_are_reported() {
        let f = AlgebraFile {
            name: "bad".into(),
            dim: 3,
            labels: vec![],
            brackets: vec![
                BracketEntry { pair: [1, 2], terms: vec![(1, "1".into())] },
                BracketEntry { pair: [2, 3], terms: vec![(2, "1".into())] },
                BracketEntry { pair: [1, 3], terms: vec![(1, "1".into())] },
            ],
        };
        assert!(matches!(f.to_algebra("mem"), Err(FileError::Lie { .. })));
    }
}
