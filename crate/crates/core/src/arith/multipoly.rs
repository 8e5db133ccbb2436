use super::{fmt_rational, Matrix, Rational, Ring};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Polynomial in `nvars` commuting variables over `Q`.
///
/// Terms are keyed by exponent vectors; the `BTreeMap` order on vectors is
/// lexicographic with the first variable most significant, so the last key
/// is the leading term. `nvars == 0` is allowed for constants created by
/// [`Ring::one_elem`] and adapts on first use with a sized operand.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; nvars], c);
        }
        MultiPoly { terms }
    }

    /// The variable `x_i` among `nvars`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        MultiPoly { terms: BTreeMap::from([(e, Rational::one())]) }
    }

    /// Linear form `sum c_i x_i`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        let mut out = MultiPoly::default();
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; n];
                e[i] = 1;
                out.terms.insert(e, c.clone());
            }
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (k, &p) in e.iter().enumerate() {
                if p > 0 {
                    t *= num_traits::pow(point[k].clone(), p as usize);
                }
            }
            acc += t;
        }
        acc
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.normalize_key(e);
        let slot = self.terms.entry(e.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Constants built without a variable count use the empty exponent
    /// vector; widen keys so that mixed operations line up.
    fn normalize_key(&mut self, e: Vec<u32>) -> Vec<u32> {
        let width = self.terms.keys().map(Vec::len).max().unwrap_or(0).max(e.len());
        if self.terms.keys().any(|k| k.len() < width) {
            let old = std::mem::take(&mut self.terms);
            for (mut k, v) in old {
                k.resize(width, 0);
                self.terms.insert(k, v);
            }
        }
        let mut e = e;
        e.resize(width, 0);
        e
    }

    fn leading(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.terms.iter().next_back()
    }
}

fn mono_mul(a: &[u32], b: &[u32]) -> Vec<u32> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|k| a.get(k).copied().unwrap_or(0) + b.get(k).copied().unwrap_or(0))
        .collect()
}

fn mono_div(a: &[u32], b: &[u32]) -> Option<Vec<u32>> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|k| a.get(k).copied().unwrap_or(0).checked_sub(b.get(k).copied().unwrap_or(0)))
        .collect()
}

impl Ring for MultiPoly {
    fn zero_elem() -> Self {
        MultiPoly::default()
    }
    fn one_elem() -> Self {
        MultiPoly::constant(0, Rational::one())
    }
    fn is_zero_elem(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
    fn sub_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = MultiPoly::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(mono_mul(e1, e2), c1 * c2);
            }
        }
        out
    }
    fn neg_ref(&self) -> Self {
        MultiPoly { terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
    /// Lex-order long division; panics when the division leaves a remainder.
    fn div_exact(&self, other: &Self) -> Self {
        let (le, lc) = other.leading().expect("division by zero polynomial");
        let (le, lc) = (le.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = MultiPoly::default();
        while let Some((re, rc)) = rem.leading() {
            let e = mono_div(re, &le).expect("inexact multivariate division");
            let c = rc / &lc;
            let t = MultiPoly { terms: BTreeMap::from([(e.clone(), c.clone())]) };
            rem = rem.sub_ref(&t.mul_ref(other));
            quot.add_term(e, c);
        }
        quot
    }
}

/// Rank of a matrix over the fraction field `Q(x_1, ..., x_n)`, computed by
/// Bareiss elimination in the polynomial ring (every division is exact).
pub fn polymatrix_rank(m: &Matrix<MultiPoly>) -> usize {
    m.rank_fraction_free()
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(k, &p)| if p == 1 { format!("x{}", k + 1) } else { format!("x{}^{p}", k + 1) })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&mag), mono.join("*"))?;
            }
        }
        Ok(())
    }
}
