use super::ContractionError;
use crate::lie::{fingerprint, Decision, InvariantReport, LieAlgebra};
use serde::Serialize;
use std::fmt;

/// Invariants that are monotone along `g ~> g0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Rule {
    /// derived series dimensions cannot increase
    R1,
    /// lower central dimensions cannot increase; nilpotency class cannot increase
    R2,
    /// solvability is preserved
    R3,
    /// center dimension cannot decrease
    R4,
    /// unimodularity is preserved
    R5,
    /// positive and negative Killing eigenvalue counts cannot increase
    R6,
    /// coadjoint rank cannot increase
    R7,
    /// derivation dimension cannot decrease, and is strictly larger for a
    /// non-isomorphic target
    R8,
    /// having an abelian ideal of codimension at most one is preserved
    R9,
}

impl Rule {
    pub const ALL: [Rule; 9] = [Rule::R1, Rule::R2, Rule::R3, Rule::R4, Rule::R5, Rule::R6, Rule::R7, Rule::R8, Rule::R9];

    pub fn invariant(self) -> &'static str {
        match self {
            Rule::R1 => "derived series dimensions",
            Rule::R2 => "lower central series / nilpotency class",
            Rule::R3 => "solvability",
            Rule::R4 => "center dimension",
            Rule::R5 => "unimodularity",
            Rule::R6 => "Killing form signature",
            Rule::R7 => "coadjoint rank",
            Rule::R8 => "derivation algebra dimension",
            Rule::R9 => "abelian ideal of codimension <= 1",
        }
    }

    pub fn direction(self) -> &'static str {
        match self {
            Rule::R1 | Rule::R2 | Rule::R6 | Rule::R7 => "non-increasing",
            Rule::R3 | Rule::R5 | Rule::R9 => "preserved",
            Rule::R4 | Rule::R8 => "non-decreasing",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleViolation {
    pub rule: Rule,
    pub invariant: &'static str,
    pub source_value: String,
    pub target_value: String,
}

impl fmt::Display for RuleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} must be {} ({} -> {})",
            self.rule,
            self.invariant,
            self.rule.direction(),
            self.source_value,
            self.target_value
        )
    }
}

/// Index-wise comparison, padding the shorter list with its last value
/// (both series are stationary after their last entry).
fn dominated(target: &[usize], source: &[usize]) -> bool {
    let n = target.len().max(source.len());
    let at = |v: &[usize], i: usize| v.get(i).or(v.last()).copied().unwrap_or(0);
    (0..n).all(|i| at(target, i) <= at(source, i))
}

fn list(v: &[usize]) -> String {
    format!("{v:?}")
}

fn class(c: Option<usize>) -> String {
    c.map_or("not nilpotent".to_string(), |c| format!("class {c}"))
}

/// Every rule violated by the pair of fingerprints, in rule order.
pub fn obstruct_reports(s: &InvariantReport, t: &InvariantReport) -> Vec<RuleViolation> {
    let mut out = Vec::new();
    let mut push = |rule: Rule, sv: String, tv: String| {
        out.push(RuleViolation { rule, invariant: rule.invariant(), source_value: sv, target_value: tv })
    };
    if !dominated(&t.derived_series_dims, &s.derived_series_dims) {
        push(Rule::R1, list(&s.derived_series_dims), list(&t.derived_series_dims));
    }
    let nil_ok = match (s.nilpotent_class, t.nilpotent_class) {
        (Some(a), Some(b)) => b <= a,
        (Some(_), None) => false,
        (None, _) => true,
    };
    if !dominated(&t.lower_central_dims, &s.lower_central_dims) {
        push(Rule::R2, list(&s.lower_central_dims), list(&t.lower_central_dims));
    } else if !nil_ok {
        push(Rule::R2, class(s.nilpotent_class), class(t.nilpotent_class));
    }
    if s.solvable && !t.solvable {
        push(Rule::R3, "solvable".into(), "not solvable".into());
    }
    if t.center_dim < s.center_dim {
        push(Rule::R4, s.center_dim.to_string(), t.center_dim.to_string());
    }
    if s.unimodular && !t.unimodular {
        push(Rule::R5, "unimodular".into(), "not unimodular".into());
    }
    let (ks, kt) = (s.killing_signature, t.killing_signature);
    if kt.positive > ks.positive || kt.negative > ks.negative {
        push(
            Rule::R6,
            format!("{} positive, {} negative", ks.positive, ks.negative),
            format!("{} positive, {} negative", kt.positive, kt.negative),
        );
    }
    if t.coadjoint_rank > s.coadjoint_rank {
        push(Rule::R7, s.coadjoint_rank.to_string(), t.coadjoint_rank.to_string());
    }
    if t.derivation_dim < s.derivation_dim || (t.derivation_dim == s.derivation_dim && s != t) {
        let tv = if t.derivation_dim == s.derivation_dim {
            format!("{} (equal, but the algebras differ in other invariants)", t.derivation_dim)
        } else {
            t.derivation_dim.to_string()
        };
        push(Rule::R8, s.derivation_dim.to_string(), tv);
    }
    if s.has_codim1_abelian_ideal == Decision::True && t.has_codim1_abelian_ideal == Decision::False {
        push(Rule::R9, "true".into(), "false".into());
    }
    out
}

pub fn obstruct(g: &LieAlgebra, g0: &LieAlgebra) -> Result<Vec<RuleViolation>, ContractionError> {
    if g.dim() != g0.dim() {
        return Err(ContractionError::DimensionMismatch { source_dim: g.dim(), target_dim: g0.dim() });
    }
    Ok(obstruct_reports(&fingerprint(g), &fingerprint(g0)))
}
