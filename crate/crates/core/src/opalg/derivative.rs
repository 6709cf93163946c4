//! Term-wise action of the reflection and the four derivatives.
//!
//! Every derivative maps `x^e` (with `e = k + shift`) to `f(e, k) x^(e-1)`, so
//! the whole calculus reduces to one scalar factor per monomial. Each kind's
//! factor is written from its own definition rather than as a special case of
//! another kind, so the specialization identities are genuine checks.

use crate::domain::{DerivativeKind, DunklParams};
use crate::opalg::{LaurentPolynomial, ShiftedLaurent};
use crate::scalar::{parity_sign, Scalar};

/// `R x^k = (-1)^k x^k`.
pub fn apply_reflection<T: Scalar>(p: &LaurentPolynomial<T>) -> LaurentPolynomial<T> {
    p.map_terms(0, |k, c| parity_sign::<T>(k) * c.clone())
}

/// Factor `f` with `D x^(k+shift) = f x^(k+shift-1)`.
pub fn derivative_factor<T: Scalar>(params: &DunklParams<T>, k: i64, shift: &T) -> T {
    let e = T::from_i64(k).unwrap() + shift.clone();
    let r = parity_sign::<T>(k);
    let mu = params.mu().clone();
    match params.kind() {
        // d/dx - (mu/x) R
        DerivativeKind::Yang => e - mu * r,
        // d/dx + mu/x - (mu/x) R
        DerivativeKind::Dunkl => e + mu.clone() - mu * r,
        // d/dx + sigma/x - (mu/x) R
        DerivativeKind::ChungHassanabadi => e + params.sigma().clone() - mu * r,
        // d/dx + mu/x - (mu/x) R + gamma (d/dx) R
        DerivativeKind::TwoParameter => {
            e.clone() + mu.clone() - mu * r.clone() + params.gamma().clone() * e * r
        }
    }
}

pub fn apply_derivative<T: Scalar>(
    params: &DunklParams<T>,
    p: &LaurentPolynomial<T>,
) -> LaurentPolynomial<T> {
    let zero = T::zero();
    p.map_terms(-1, |k, c| derivative_factor(params, k, &zero) * c.clone())
}

pub fn apply_derivative_shifted<T: Scalar>(
    params: &DunklParams<T>,
    p: &ShiftedLaurent<T>,
) -> ShiftedLaurent<T> {
    let s = p.shift.clone();
    ShiftedLaurent {
        shift: s.clone(),
        poly: p.poly.map_terms(-1, |k, c| derivative_factor(params, k, &s) * c.clone()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type Q = LaurentPolynomial<BigRational>;

    #[test]
    fn reflection_examples() {
        let x3 = Q::monomial(3, ratio(1, 1));
        assert_eq!(apply_reflection(&x3), Q::monomial(3, ratio(-1, 1)));
        let even = Q::from_terms([(0, ratio(1, 1)), (2, ratio(1, 1))]);
        assert_eq!(apply_reflection(&even), even);
        let inv = Q::monomial(-1, ratio(1, 1));
        assert_eq!(apply_reflection(&inv), Q::monomial(-1, ratio(-1, 1)));
    }

    #[test]
    fn ch_on_constant() {
        let p = DunklParams::chung_hassanabadi(ratio(5, 2), ratio(1, 2)).unwrap();
        // (sigma - mu) x^-1
        assert_eq!(apply_derivative(&p, &Q::one()), Q::monomial(-1, ratio(2, 1)));
    }

    #[test]
    fn tp_kills_constants() {
        let p = DunklParams::two_parameter(ratio(3, 5), ratio(13, 30)).unwrap();
        assert!(apply_derivative(&p, &Q::one()).is_zero());
    }

    #[test]
    fn dunkl_on_even_monomial_is_plain_derivative() {
        let p = DunklParams::dunkl(ratio(7, 10)).unwrap();
        let x2 = Q::monomial(2, ratio(1, 1));
        assert_eq!(apply_derivative(&p, &x2), Q::monomial(1, ratio(2, 1)));
    }

    #[test]
    fn ch_with_zero_sigma_acts_like_yang() {
        let ch = DunklParams::chung_hassanabadi(0.0, 0.3).unwrap();
        let yang = DunklParams::yang(0.3).unwrap();
        let p = LaurentPolynomial::from_terms((-5..=5).map(|k| (k, 1.0 + k as f64 * 0.25)));
        assert_eq!(apply_derivative(&ch, &p), apply_derivative(&yang, &p));
    }

    #[test]
    fn shifted_matches_unshifted_for_integer_shift() {
        let p = DunklParams::chung_hassanabadi(ratio(5, 2), ratio(1, 2)).unwrap();
        let q = Q::from_terms([(0, ratio(1, 1)), (1, ratio(-2, 3))]);
        let shifted = ShiftedLaurent::new(ratio(0, 1), q.clone());
        assert_eq!(apply_derivative_shifted(&p, &shifted).poly, apply_derivative(&p, &q));
    }

    fn small() -> impl Strategy<Value = f64> {
        (-40i32..40).prop_map(|v| v as f64 / 8.0)
    }

    fn laurent() -> impl Strategy<Value = Q> {
        proptest::collection::vec((-6i64..6, -20i64..20), 0..8).prop_map(|terms| {
            Q::from_terms(terms.into_iter().map(|(k, c)| (k, ratio(c, 3))))
        })
    }

    proptest! {
        #[test]
        fn derivative_is_linear(p in laurent(), q in laurent(), a in -9i64..9, b in -9i64..9,
                                mu in small(), gamma in -7i32..7) {
            prop_assume!(mu > -0.5);
            let params = DunklParams::two_parameter(
                BigRational::from_float(mu).unwrap(),
                ratio(gamma as i64, 8),
            ).unwrap();
            let (a, b) = (ratio(a, 1), ratio(b, 2));
            let lhs = apply_derivative(&params, &(&p.scale(&a) + &q.scale(&b)));
            let rhs = &apply_derivative(&params, &p).scale(&a) + &apply_derivative(&params, &q).scale(&b);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn reflection_is_an_involution(p in laurent()) {
            prop_assert_eq!(apply_reflection(&apply_reflection(&p)), p);
        }
    }
}
