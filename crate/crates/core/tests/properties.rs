use lieshrink::arith::{parse_laurent, rat, ratfun_limit0, ratfun_matrix_inverse, ratio, Matrix, RatFun, Rational};
use lieshrink::gt::{invariant_factors, is_similar, make_gt, similar};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn int_matrix(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(prop::collection::vec(lo..=hi, n), n).prop_map(Matrix::from_i64)
}

fn sized_int_matrix(lo: i64, hi: i64) -> impl Strategy<Value = Matrix<Rational>> {
    (1usize..=4).prop_flat_map(move |n| int_matrix(n, lo, hi))
}

/// `(coefficient, exponent)` terms; the string is built by hand so parsing
/// is checked against direct evaluation.
fn laurent_terms() -> impl Strategy<Value = Vec<(Rational, i64)>> {
    prop::collection::vec((rational(), -4i64..=4), 0..5)
}

fn render(terms: &[(Rational, i64)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms.iter().map(|(c, e)| format!("({c})*r^{e}").replace(['(', ')'], "")).collect::<Vec<_>>().join(" + ").replace("+ -", "- ")
}

fn eval_terms(terms: &[(Rational, i64)], x: &Rational) -> Rational {
    terms.iter().fold(Rational::zero(), |acc, (c, e)| {
        let p = if *e >= 0 { num_traits::pow(x.clone(), *e as usize) } else { num_traits::pow(x.recip(), (-e) as usize) };
        acc + c * p
    })
}

fn laurent_fn() -> impl Strategy<Value = RatFun> {
    laurent_terms().prop_map(|t| RatFun::from_laurent(parse_laurent(&render(&t)).unwrap()))
}

/// Quotients with a denominator that does not vanish at 0.
fn regular_quotient() -> impl Strategy<Value = RatFun> {
    (laurent_terms(), rational(), rational()).prop_filter_map("zero denominator at 0", |(t, a, b)| {
        if b.is_zero() {
            return None;
        }
        let num = RatFun::from_laurent(parse_laurent(&render(&t)).unwrap());
        let den = RatFun::monomial(a, 1) + RatFun::constant(b);
        Some(num / den)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn gt_laws_hold_for_random_t(t in sized_int_matrix(-2, 2)) {
        let g = make_gt(&t);
        prop_assert!(g.check_laws().is_ok(), "{:?}", g.check_laws());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn conjugates_are_found_similar(a in int_matrix(3, -2, 2), p in int_matrix(3, -2, 2)) {
        let Some(pinv) = p.inverse() else { return Ok(()); };
        let b = p.mul(&a).mul(&pinv);
        let x = similar(&a, &b).expect("conjugate matrices are similar");
        prop_assert_eq!(x.mul(&a).mul(&x.inverse().unwrap()), b);
    }

    #[test]
    fn different_characteristic_polynomials_are_not_similar(a in sized_int_matrix(-3, 3), shift in 1i64..3) {
        let n = a.rows();
        let b = a.add(&Matrix::identity(n).scale(&rat(shift)));
        // traces differ, so the characteristic polynomials do
        prop_assert!(!is_similar(&a, &b));
        prop_assert_ne!(invariant_factors(&a), invariant_factors(&b));
    }

    #[test]
    fn laurent_parse_agrees_with_evaluation(t in laurent_terms(), x in rational()) {
        prop_assume!(!x.is_zero());
        let p = parse_laurent(&render(&t)).unwrap();
        prop_assert_eq!(p.eval(&x).unwrap(), eval_terms(&t, &x));
        // printing stays inside the grammar
        prop_assert_eq!(parse_laurent(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn inverse_evaluates_to_the_inverse(entries in prop::collection::vec(laurent_fn(), 4), x in 2i64..6) {
        let m = Matrix::from_vec(2, 2, entries);
        let Ok(inv) = ratfun_matrix_inverse(&m) else { return Ok(()); };
        let x = rat(x);
        let at = |m: &Matrix<RatFun>| -> Option<Matrix<Rational>> {
            let v: Option<Vec<Rational>> = m.entries().map(|e| e.eval(&x)).collect();
            Some(Matrix::from_vec(m.rows(), m.cols(), v?))
        };
        let (Some(mx), Some(ix)) = (at(&m), at(&inv)) else { return Ok(()); };
        prop_assume!(!mx.determinant().is_zero());
        prop_assert_eq!(mx.mul(&ix), Matrix::identity(2));
    }

    #[test]
    fn limits_are_multiplicative(f in regular_quotient(), g in regular_quotient()) {
        if let (Ok(a), Ok(b)) = (ratfun_limit0(&f), ratfun_limit0(&g)) {
            prop_assert_eq!(ratfun_limit0(&(f.clone() * g.clone())).unwrap(), a.clone() * b.clone());
            prop_assert_eq!(ratfun_limit0(&(f + g)).unwrap(), a + b);
        }
    }

    #[test]
    fn constant_limits_are_the_constant(c in rational()) {
        prop_assert_eq!(ratfun_limit0(&RatFun::constant(c.clone())).unwrap(), c);
        prop_assert!(ratfun_limit0(&RatFun::monomial(Rational::one(), -1)).is_err());
    }
}
