use super::{LaurentPoly, Matrix, Rational, Ring, UniPoly};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use thiserror::Error;

/// Element of the rational-function field `Q(r)`.
///
/// Canonical form: `num / den` where `den` is a monic polynomial with
/// nonzero constant term, and every power of `r` has been moved into the
/// (possibly negative) exponents of `num`. A pole at `r = 0` is therefore
/// visible as a negative exponent in `num`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFun {
    num: LaurentPoly,
    den: UniPoly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("pole of order {order} at r = 0")]
pub struct PoleAtZero {
    pub order: u32,
}

impl Default for RatFun {
    fn default() -> Self {
        Self::from_laurent(LaurentPoly::zero())
    }
}

impl RatFun {
    pub fn from_laurent(num: LaurentPoly) -> Self {
        RatFun { num, den: UniPoly::constant(Rational::one()) }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    /// `c * r^e`
    pub fn monomial(c: Rational, e: i64) -> Self {
        Self::from_laurent(LaurentPoly::monomial(c, e))
    }

    /// Builds `num / den` in canonical form. Panics if `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::default();
        }
        let (vn, pn) = num.split_valuation();
        let (vd, pd) = den.split_valuation();
        Self::from_parts(vn - vd, pn, pd)
    }

    /// `r^shift * pn / pd` with `pn(0), pd(0)` nonzero.
    fn from_parts(shift: i64, pn: UniPoly, pd: UniPoly) -> Self {
        let (pn, pd) = if pd.degree() == Some(0) {
            (pn, pd)
        } else {
            let g = pn.gcd(&pd);
            if g.degree() == Some(0) {
                (pn, pd)
            } else {
                (pn.div_exact(&g), pd.div_exact(&g))
            }
        };
        let lc = pd.leading();
        let inv = Rational::one() / &lc;
        RatFun {
            num: LaurentPoly::from_unipoly(&pn.scale(&inv), shift),
            den: pd.scale(&inv),
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    /// Monic denominator polynomial in `r`, with nonzero constant term.
    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    pub fn denominator_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_unipoly(&self.den, 0)
    }

    pub fn is_laurent(&self) -> bool {
        self.den.degree() == Some(0)
    }

    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.is_laurent().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        self.as_laurent().and_then(|l| l.as_constant())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Value at a rational point; `None` where the function is undefined.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x)? / d)
    }

    /// Largest absolute exponent occurring in the numerator or denominator.
    pub fn exponent_span(&self) -> i64 {
        let n = self
            .num
            .terms()
            .keys()
            .map(|e| e.abs())
            .max()
            .unwrap_or(0);
        n.max(self.den.degree().unwrap_or(0) as i64)
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero rational function");
        let (vn, pn) = self.num.split_valuation();
        Self::from_parts(-vn, self.den.clone(), pn)
    }

    pub fn limit0(&self) -> Result<Rational, PoleAtZero> {
        ratfun_limit0(self)
    }
}

/// Limit as `r -> 0`. Exact: after canonicalization the only possible pole
/// sits in the negative exponents of the numerator.
pub fn ratfun_limit0(f: &RatFun) -> Result<Rational, PoleAtZero> {
    match f.num.min_exp() {
        None => Ok(Rational::zero()),
        Some(v) if v < 0 => Err(PoleAtZero { order: (-v) as u32 }),
        Some(v) if v > 0 => Ok(Rational::zero()),
        Some(_) => Ok(f.num.coeff(0) / f.den.coeff(0)),
    }
}

impl Ring for RatFun {
    fn zero_elem() -> Self {
        RatFun::default()
    }
    fn one_elem() -> Self {
        RatFun::constant(Rational::one())
    }
    fn is_zero_elem(&self) -> bool {
        self.num.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            if self.is_laurent() {
                return RatFun::from_laurent(self.num.add_ref(&other.num));
            }
            let num = self.num.add_ref(&other.num);
            return RatFun::new(num, self.denominator_laurent());
        }
        let num = self
            .num
            .mul_ref(&other.denominator_laurent())
            .add_ref(&other.num.mul_ref(&self.denominator_laurent()));
        let den = self.den.mul_ref(&other.den);
        RatFun::new(num, LaurentPoly::from_unipoly(&den, 0))
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }
    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RatFun::zero_elem();
        }
        if self.is_laurent() && other.is_laurent() {
            return RatFun::from_laurent(self.num.mul_ref(&other.num));
        }
        let num = self.num.mul_ref(&other.num);
        let den = self.den.mul_ref(&other.den);
        RatFun::new(num, LaurentPoly::from_unipoly(&den, 0))
    }
    fn neg_ref(&self) -> Self {
        RatFun { num: self.num.neg_ref(), den: self.den.clone() }
    }
    fn div_exact(&self, other: &Self) -> Self {
        if let (Some(a), Some(b)) = (self.as_laurent(), other.as_laurent()) {
            if let Some((c, e)) = b.as_monomial() {
                return RatFun::from_laurent(a.shift(-e).scale(&(Rational::one() / c)));
            }
        }
        self.mul_ref(&other.inv())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $via:ident) => {
        impl $tr<&RatFun> for &RatFun {
            type Output = RatFun;
            fn $m(self, rhs: &RatFun) -> RatFun {
                Ring::$via(self, rhs)
            }
        }
        impl $tr for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: RatFun) -> RatFun {
                Ring::$via(&self, &rhs)
            }
        }
    };
}
forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, div_exact);

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        self.neg_ref()
    }
}

impl From<LaurentPoly> for RatFun {
    fn from(p: LaurentPoly) -> Self {
        RatFun::from_laurent(p)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            write!(f, "{}", self.num)
        } else {
            let den = LaurentPoly::from_unipoly(&self.den, 0);
            write!(f, "({})/({})", self.num, den)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("matrix is singular over Q(r)")]
pub struct SingularOverFunctionField;

/// Inverse over `Q(r)` by fraction-free Gauss-Jordan elimination.
pub fn ratfun_matrix_inverse(m: &Matrix<RatFun>) -> Result<Matrix<RatFun>, SingularOverFunctionField> {
    m.inverse_fraction_free().ok_or(SingularOverFunctionField)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_laurent, rat};

    fn lp(s: &str) -> LaurentPoly {
        parse_laurent(s).unwrap()
    }

    fn rf(n: &str, d: &str) -> RatFun {
        RatFun::new(lp(n), lp(d))
    }

    #[test]
    fn limit_with_cancellation() {
        assert_eq!(ratfun_limit0(&rf("r^2 + r", "r")), Ok(rat(1)));
        assert_eq!(ratfun_limit0(&rf("2*r^2", "r^2")), Ok(rat(2)));
        assert_eq!(ratfun_limit0(&rf("1", "r")), Err(PoleAtZero { order: 1 }));
    }

    #[test]
    fn limit_through_nontrivial_denominator() {
        // (r^2 - 1)/(r - 1) = r + 1 -> 1
        let f = rf("r^2 - 1", "r - 1");
        assert!(f.is_laurent());
        assert_eq!(f.limit0(), Ok(rat(1)));
        // r^-1 / (1 + r) has a simple pole
        assert_eq!(rf("1", "r + r^2").limit0(), Err(PoleAtZero { order: 1 }));
        // (3 + r)/(2 - r) -> 3/2
        assert_eq!(rf("3 + r", "2 - r").limit0(), Ok(crate::arith::ratio(3, 2)));
    }

    #[test]
    fn canonical_form_is_unique() {
        assert_eq!(rf("2*r", "4*r^3"), rf("1", "2*r^2"));
        assert_eq!(rf("r - 1", "r^2 - 1"), rf("1", "r + 1"));
        let f = rf("1", "2 + 4*r");
        assert_eq!(f.denominator().leading(), rat(1));
        assert!(!f.denominator().coeff(0).is_zero());
    }

    #[test]
    fn field_operations() {
        let a = rf("r + 1", "r - 2");
        let b = rf("r", "r + 3");
        let s = a.add_ref(&b).sub_ref(&b);
        assert_eq!(s, a);
        assert_eq!(a.mul_ref(&a.inv()), RatFun::one_elem());
        assert_eq!(a.div_exact(&a), RatFun::one_elem());
    }
}
