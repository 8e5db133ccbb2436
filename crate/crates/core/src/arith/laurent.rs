use super::{fmt_rational, Rational, Ring, UniPoly};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Laurent polynomial in `r` with rational coefficients.
///
/// Canonical by construction: zero coefficients are never stored, so two
/// equal polynomials have equal term maps.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * r^e`
    pub fn monomial(c: Rational, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    /// `r^e`
    pub fn r_pow(e: i64) -> Self {
        Self::monomial(Rational::one(), e)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(it: I) -> Self {
        let mut out = LaurentPoly::zero();
        for (e, c) in it {
            out.add_term(e, &c);
        }
        out
    }

    fn add_term(&mut self, e: i64, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> &BTreeMap<i64, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Returns `(c, e)` when the polynomial is a single term `c r^e`.
    pub fn as_monomial(&self) -> Option<(&Rational, i64)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((c, *e))
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// Multiplies by `r^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    /// Evaluates at a nonzero rational point (or at zero when no negative
    /// exponents occur).
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        if x.is_zero() && self.min_exp().is_some_and(|e| e < 0) {
            return None;
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                num_traits::pow(x.clone(), *e as usize)
            } else {
                Rational::one() / num_traits::pow(x.clone(), (-*e) as usize)
            };
            acc += c * p;
        }
        Some(acc)
    }

    /// Splits off the lowest power of `r`: returns `(v, p)` with
    /// `self = r^v * p(r)` and `p(0) != 0`. Panics on zero.
    pub fn split_valuation(&self) -> (i64, UniPoly) {
        let v = self.min_exp().expect("valuation of zero Laurent polynomial");
        let top = self.max_exp().unwrap();
        let mut coeffs = vec![Rational::zero(); (top - v) as usize + 1];
        for (e, c) in &self.terms {
            coeffs[(e - v) as usize] = c.clone();
        }
        (v, UniPoly::new(coeffs))
    }

    pub fn from_unipoly(p: &UniPoly, shift: i64) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (k as i64 + shift, c.clone())),
        )
    }
}

impl Ring for LaurentPoly {
    fn zero_elem() -> Self {
        LaurentPoly::zero()
    }
    fn one_elem() -> Self {
        LaurentPoly::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c);
        }
        out
    }
    fn sub_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, &-c);
        }
        out
    }
    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
    fn neg_ref(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
    /// Exact only for monomial divisors or when the quotient is a Laurent
    /// polynomial obtainable by long division.
    fn div_exact(&self, other: &Self) -> Self {
        if let Some((c, e)) = other.as_monomial() {
            return self.shift(-e).scale(&(Rational::one() / c));
        }
        let (va, pa) = self.split_valuation();
        let (vb, pb) = other.split_valuation();
        let (q, r) = pa.div_rem(&pb);
        assert!(r.is_zero_elem(), "inexact Laurent division");
        LaurentPoly::from_unipoly(&q, va - vb)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $via:ident) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                Ring::$via(self, rhs)
            }
        }
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                Ring::$via(&self, &rhs)
            }
        }
    };
}
forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.neg_ref()
    }
}

impl fmt::Display for LaurentPoly {
    /// Prints in the grammar accepted by [`super::parse_laurent`], highest
    /// exponent first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = match e {
                0 => None,
                1 => Some("r".to_string()),
                _ => Some(format!("r^{e}")),
            };
            match mono {
                None => write!(f, "{}", fmt_rational(&mag))?,
                Some(m) if mag.is_one() => write!(f, "{m}")?,
                Some(m) => write!(f, "{}*{m}", fmt_rational(&mag))?,
            }
        }
        Ok(())
    }
}
