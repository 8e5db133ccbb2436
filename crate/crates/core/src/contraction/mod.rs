//! Contractions `g ~> g0` given by families `C_r : g0 -> g` with entries in
//! `Q(r)`: exact limits, verification, stabilization, search and the
//! obstruction rules.

mod reduce;
mod rules;
mod search;

pub use reduce::reduce_stabilized;
pub use rules::{obstruct, obstruct_reports, Rule, RuleViolation};
pub use search::{search_diagonal, search_diagonal_exponents, search_sheared, sheared_permutations};

use crate::arith::{parse_laurent, ratfun_matrix_inverse, Matrix, ParseError, RatFun, Rational, Ring};
use crate::lie::{pad, LieAlgebra, StructureTensor};
use num_traits::Zero;
use serde::Serialize;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContractionError {
    #[error("family is {rows}x{cols} but the algebras have dimensions {source_dim} and {target_dim}")]
    Shape { rows: usize, cols: usize, source_dim: usize, target_dim: usize },
    #[error("family matrix is singular over Q(r)")]
    Singular,
    #[error("limit of [e{}, e{}] does not exist: component e{} has a pole of order {order}", .i + 1, .j + 1, .component + 1)]
    LimitDoesNotExist { i: usize, j: usize, component: usize, order: u32 },
    #[error("padding does not balance: {k} + {source_dim} != {k0} + {target_dim}")]
    DimensionBookkeeping { k: usize, source_dim: usize, k0: usize, target_dim: usize },
    #[error("dimensions differ: {source_dim} vs {target_dim}")]
    DimensionMismatch { source_dim: usize, target_dim: usize },
    #[error("stabilized family could not be reduced: {0}")]
    ReductionFailed(String),
}

/// `{C_r : g0 -> g}`; column `j` of `matrix` is `C_r e_j` in the basis of `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionFamily {
    source: LieAlgebra,
    target: LieAlgebra,
    matrix: Matrix<RatFun>,
}

impl ContractionFamily {
    pub fn new(source: LieAlgebra, target: LieAlgebra, matrix: Matrix<RatFun>) -> Result<Self, ContractionError> {
        let n = source.dim();
        if matrix.rows() != n || matrix.cols() != n || target.dim() != n {
            return Err(ContractionError::Shape {
                rows: matrix.rows(),
                cols: matrix.cols(),
                source_dim: n,
                target_dim: target.dim(),
            });
        }
        if n > 0 && matrix.determinant().is_zero_elem() {
            return Err(ContractionError::Singular);
        }
        Ok(ContractionFamily { source, target, matrix })
    }

    /// Family between `g ⊕ a_k` and `g0 ⊕ a_k0`.
    pub fn stabilized(
        g: &LieAlgebra,
        k: usize,
        g0: &LieAlgebra,
        k0: usize,
        matrix: Matrix<RatFun>,
    ) -> Result<Self, ContractionError> {
        if k + g.dim() != k0 + g0.dim() {
            return Err(ContractionError::DimensionBookkeeping { k, source_dim: g.dim(), k0, target_dim: g0.dim() });
        }
        Self::new(pad(g, k), pad(g0, k0), matrix)
    }

    pub fn source(&self) -> &LieAlgebra {
        &self.source
    }

    pub fn target(&self) -> &LieAlgebra {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix<RatFun> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.source.dim()
    }

    pub fn inverse(&self) -> Matrix<RatFun> {
        ratfun_matrix_inverse(&self.matrix).expect("family is invertible by construction")
    }

    /// Whether every entry is a Laurent monomial or zero.
    pub fn is_monomial(&self) -> bool {
        self.matrix
            .entries()
            .all(|e| e.is_zero() || e.as_laurent().is_some_and(|l| l.as_monomial().is_some()))
    }
}

impl fmt::Display for ContractionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} ~> {}", self.source.name(), self.target.name())?;
        write!(f, "{}", self.matrix)
    }
}

/// Parses a matrix of Laurent expressions.
pub fn laurent_matrix<S: AsRef<str>>(rows: &[Vec<S>]) -> Result<Matrix<RatFun>, ParseError> {
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|s| parse_laurent(s.as_ref()).map(RatFun::from_laurent)).collect())
        .collect::<Result<Vec<Vec<RatFun>>, _>>()?;
    Ok(Matrix::from_rows(parsed))
}

pub fn rational_to_ratfun(m: &Matrix<Rational>) -> Matrix<RatFun> {
    m.map(|q| RatFun::constant(q.clone()))
}

/// `diag(r^k_1, ..., r^k_n)`.
pub fn monomial_diagonal(exponents: &[i64]) -> Matrix<RatFun> {
    Matrix::diagonal(exponents.iter().map(|&e| RatFun::monomial(Rational::from_integer(1.into()), e)).collect())
}

fn ratfun_bracket(t: &StructureTensor, x: &[RatFun], y: &[RatFun]) -> Vec<RatFun> {
    let n = t.dim();
    let mut out = vec![RatFun::zero_elem(); n];
    for (&(i, j), v) in t.nonzero() {
        let c = x[i].mul_ref(&y[j]).sub_ref(&x[j].mul_ref(&y[i]));
        if c.is_zero() {
            continue;
        }
        for (o, vk) in out.iter_mut().zip(v) {
            if !vk.is_zero() {
                *o = o.add_ref(&c.mul_ref(&RatFun::constant(vk.clone())));
            }
        }
    }
    out
}

/// `C_r^{-1} [C_r e_i, C_r e_j]` for all `i < j`, before taking limits.
pub fn conjugated_brackets(fam: &ContractionFamily) -> Vec<((usize, usize), Vec<RatFun>)> {
    let n = fam.dim();
    let inv = fam.inverse();
    let cols: Vec<Vec<RatFun>> = (0..n).map(|j| fam.matrix.column(j)).collect();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let b = ratfun_bracket(fam.source.tensor(), &cols[i], &cols[j]);
            out.push(((i, j), inv.mul_vec(&b)));
        }
    }
    out
}

/// Structure tensor of the limit bracket `lim_{r -> 0} C_r^{-1}[C_r x, C_r y]`.
pub fn contracted_brackets(fam: &ContractionFamily) -> Result<StructureTensor, ContractionError> {
    let mut t = StructureTensor::zero(fam.dim());
    for ((i, j), v) in conjugated_brackets(fam) {
        let mut lim = Vec::with_capacity(v.len());
        for (component, f) in v.iter().enumerate() {
            match f.limit0() {
                Ok(q) => lim.push(q),
                Err(p) => return Err(ContractionError::LimitDoesNotExist { i, j, component, order: p.order }),
            }
        }
        t.set(i, j, lim);
    }
    Ok(t)
}

/// Outcome of checking one family against its claimed target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verification {
    Verified,
    /// The limit exists but differs from the target at `[e_i, e_j]`.
    Mismatch { i: usize, j: usize, limit: Vec<Rational>, expected: Vec<Rational> },
    /// This family has no limit; says nothing about the contraction relation.
    NoLimit { i: usize, j: usize, component: usize, order: u32 },
}

impl Verification {
    pub fn is_verified(&self) -> bool {
        matches!(self, Verification::Verified)
    }
}

impl fmt::Display for Verification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vec = |v: &[Rational]| crate::report::format_vector(v);
        match self {
            Verification::Verified => write!(f, "VERIFIED"),
            Verification::Mismatch { i, j, limit, expected } => write!(
                f,
                "REFUTED: limit of [e{}, e{}] is {} but the target has {}",
                i + 1,
                j + 1,
                vec(limit),
                vec(expected)
            ),
            Verification::NoLimit { i, j, component, order } => write!(
                f,
                "REFUTED: [e{}, e{}] has a pole of order {order} in component e{}",
                i + 1,
                j + 1,
                component + 1
            ),
        }
    }
}

pub fn verify_contraction(fam: &ContractionFamily) -> Verification {
    let lim = match contracted_brackets(fam) {
        Ok(t) => t,
        Err(ContractionError::LimitDoesNotExist { i, j, component, order }) => {
            return Verification::NoLimit { i, j, component, order }
        }
        Err(e) => unreachable!("{e}"),
    };
    let n = fam.dim();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (lim.get(i, j), fam.target.tensor().get(i, j));
            if a != b {
                return Verification::Mismatch { i, j, limit: a, expected: b };
            }
        }
    }
    // a limit of Lie brackets is a Lie bracket
    assert!(lim.jacobi_violation().is_none(), "limit bracket violates Jacobi");
    Verification::Verified
}

/// Checks `g ⊕ a_k ~> g0 ⊕ a_k0` for the given padded family.
pub fn verify_stabilized(
    g: &LieAlgebra,
    g0: &LieAlgebra,
    k: usize,
    k0: usize,
    matrix: Matrix<RatFun>,
) -> Result<Verification, ContractionError> {
    let fam = ContractionFamily::stabilized(g, k, g0, k0, matrix)?;
    Ok(verify_contraction(&fam))
}

/// `g ~> g0` and `g0 ~> g1` give `g ~> g1` with `C_r = C_r' C_r''`. Only
/// a candidate: the product need not have a limit in general.
pub fn compose(first: &ContractionFamily, second: &ContractionFamily) -> Result<ContractionFamily, ContractionError> {
    ContractionFamily::new(first.source.clone(), second.target.clone(), first.matrix.mul(&second.matrix))
}

/// How a verdict's family was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessSource {
    Store,
    Search,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Verified { family: ContractionFamily, via: WitnessSource },
    Blocked { violations: Vec<RuleViolation> },
    Unknown,
}

impl Verdict {
    pub fn status(&self) -> &'static str {
        match self {
            Verdict::Verified { .. } => "VERIFIED",
            Verdict::Blocked { .. } => "BLOCKED",
            Verdict::Unknown => "UNKNOWN",
        }
    }
}

/// Read-only collection of verified families, looked up by exact tensors.
pub trait WitnessLookup {
    fn find(&self, g: &LieAlgebra, g0: &LieAlgebra) -> Option<ContractionFamily>;
}

impl WitnessLookup for [ContractionFamily] {
    fn find(&self, g: &LieAlgebra, g0: &LieAlgebra) -> Option<ContractionFamily> {
        self.iter()
            .find(|f| f.source.tensor() == g.tensor() && f.target.tensor() == g0.tensor())
            .cloned()
    }
}

impl WitnessLookup for Vec<ContractionFamily> {
    fn find(&self, g: &LieAlgebra, g0: &LieAlgebra) -> Option<ContractionFamily> {
        self.as_slice().find(g, g0)
    }
}

/// Exponent bound used by [`decide`] when the store has no witness.
pub const DECIDE_SEARCH_BOUND: i64 = 4;

pub fn decide(g: &LieAlgebra, g0: &LieAlgebra, store: &(impl WitnessLookup + ?Sized)) -> Result<Verdict, ContractionError> {
    if g.dim() != g0.dim() {
        return Err(ContractionError::DimensionMismatch { source_dim: g.dim(), target_dim: g0.dim() });
    }
    if let Some(family) = store.find(g, g0) {
        if verify_contraction(&family).is_verified() {
            return Ok(Verdict::Verified { family, via: WitnessSource::Store });
        }
    }
    let violations = obstruct(g, g0)?;
    if !violations.is_empty() {
        return Ok(Verdict::Blocked { violations });
    }
    if let Some(family) = search_diagonal(g, g0, DECIDE_SEARCH_BOUND, None)? {
        return Ok(Verdict::Verified { family, via: WitnessSource::Search });
    }
    Ok(Verdict::Unknown)
}
