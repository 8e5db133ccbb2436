//! Exact arithmetic: rationals, Laurent polynomials in the contraction
//! parameter `r`, the rational-function field `Q(r)`, multivariate
//! polynomials, and the matrix algebra over these rings.

mod laurent;
mod matrix;
mod multipoly;
mod parse;
mod ratfun;
mod unipoly;

pub use laurent::LaurentPoly;
pub use matrix::Matrix;
pub use multipoly::{polymatrix_rank, MultiPoly};
pub use parse::{parse_laurent, parse_rational, ParseError};
pub use ratfun::{ratfun_limit0, ratfun_matrix_inverse, PoleAtZero, RatFun};
pub use unipoly::UniPoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Exact scalar. Always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`. Panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Minimal commutative-ring interface used by the generic matrix routines.
///
/// `div_exact` is only ever called when the quotient is known to exist in
/// the ring (fraction-free elimination guarantees this); for fields it is
/// plain division.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero_elem() -> Self;
    fn one_elem() -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn div_exact(&self, other: &Self) -> Self;
}

impl Ring for Rational {
    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
}

/// Renders a rational as `n` or `n/d`.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Integer `k`-th root of a rational, when it exists (positive branch for
/// even `k`; `None` for negative input with even `k`).
pub fn rational_nth_root(q: &Rational, k: u32) -> Option<Rational> {
    if k == 0 {
        return None;
    }
    if q.is_negative() && k % 2 == 0 {
        return None;
    }
    let sign = if q.is_negative() { -1 } else { 1 };
    let num = q.numer().abs();
    let den = q.denom().clone();
    let rn = num.nth_root(k);
    let rd = den.nth_root(k);
    if num_traits::pow(rn.clone(), k as usize) == num && num_traits::pow(rd.clone(), k as usize) == den {
        Some(Rational::new(rn * sign, rd))
    } else {
        None
    }
}
