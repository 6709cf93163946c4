//! Exact action of the generalized Fokker-Planck operator `-D^2 p + 2 D(w p)`
//! for the centrifugal drift `w = a/x`, where `w p` stays Laurent.

use crate::domain::{DerivativeKind, DunklParams, Family, Superpotential};
use crate::error::{Error, Result};
use crate::opalg::{apply_derivative, apply_derivative_shifted, LaurentPolynomial, ShiftedLaurent};
use crate::scalar::{two, Scalar};

/// `w` as a Laurent polynomial; only the centrifugal family qualifies.
pub fn superpotential_laurent<T: Scalar>(s: &Superpotential<T>) -> Result<LaurentPolynomial<T>> {
    match s.family() {
        Family::Centrifugal { a } => Ok(LaurentPolynomial::monomial(-1, a.clone())),
        Family::OscillatorCentrifugal { .. } => Err(Error::Family(
            "the oscillator drift carries a Gaussian factor and is not Laurent".into(),
        )),
    }
}

pub fn apply_fp_operator<T: Scalar>(
    params: &DunklParams<T>,
    s: &Superpotential<T>,
    p: &LaurentPolynomial<T>,
) -> Result<LaurentPolynomial<T>> {
    let w = superpotential_laurent(s)?;
    let d2 = apply_derivative(params, &apply_derivative(params, p));
    let drift = apply_derivative(params, &(&w * p)).scale(&two());
    Ok(&drift - &d2)
}

pub fn apply_fp_operator_shifted<T: Scalar>(
    params: &DunklParams<T>,
    s: &Superpotential<T>,
    p: &ShiftedLaurent<T>,
) -> Result<ShiftedLaurent<T>> {
    let w = superpotential_laurent(s)?;
    let d2 = apply_derivative_shifted(params, &apply_derivative_shifted(params, p));
    let drift = apply_derivative_shifted(params, &p.mul_laurent(&w)).scale(&two());
    Ok(drift.sub(&d2))
}

/// [`apply_fp_operator`] restricted to even inputs and the CH/TP kinds.
pub fn apply_fp_operator_even_sector<T: Scalar>(
    params: &DunklParams<T>,
    s: &Superpotential<T>,
    p: &LaurentPolynomial<T>,
) -> Result<LaurentPolynomial<T>> {
    if !matches!(params.kind(), DerivativeKind::ChungHassanabadi | DerivativeKind::TwoParameter) {
        return Err(Error::Kind(format!("expected CH or TP, got {}", params.kind())));
    }
    if !p.is_even() {
        return Err(Error::ParityMismatch("input has odd powers".into()));
    }
    apply_fp_operator(params, s, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opalg::apply_reflection;
    use crate::scalar::ratio;
    use num_rational::BigRational;
    use num_traits::One;

    type Q = BigRational;

    fn q(n: i64, d: i64) -> Q {
        ratio(n, d)
    }

    /// `sum_{j<terms} (-1)^j x^(2j+m) / (j! (j+m)!)`, i.e. `J_m(2x)`.
    fn bessel_series(m: i64, terms: i64) -> LaurentPolynomial<Q> {
        let fact = |n: i64| (1..=n).fold(Q::one(), |acc, i| acc * q(i, 1));
        LaurentPolynomial::from_terms((0..terms).map(|j| {
            let sign = if j % 2 == 0 { Q::one() } else { -Q::one() };
            (2 * j + m, sign / (fact(j) * fact(j + m)))
        }))
    }

    #[test]
    fn constant_input_matches_hand_expansion() {
        let (sigma, mu, a) = (q(5, 2), q(1, 2), q(2, 1));
        let params = DunklParams::chung_hassanabadi(sigma.clone(), mu.clone()).unwrap();
        let s = Superpotential::centrifugal(a.clone()).unwrap();
        let out = apply_fp_operator_even_sector(&params, &s, &LaurentPolynomial::one()).unwrap();
        let c = sigma.clone() + mu.clone() - Q::one();
        let expected = -(sigma - mu) * c.clone() + q(2, 1) * a * c;
        assert_eq!(out, LaurentPolynomial::monomial(-2, expected));
    }

    #[test]
    fn zero_maps_to_zero() {
        let params = DunklParams::chung_hassanabadi(q(1, 1), q(1, 3)).unwrap();
        let s = Superpotential::centrifugal(q(2, 1)).unwrap();
        assert!(apply_fp_operator(&params, &s, &LaurentPolynomial::zero()).unwrap().is_zero());
    }

    #[test]
    fn truncated_bessel_series_is_eigenfunction_up_to_truncation() {
        let params = DunklParams::chung_hassanabadi(q(5, 2), q(1, 2)).unwrap();
        let s = Superpotential::centrifugal(q(2, 1)).unwrap();
        let n = 8;
        let p = bessel_series(2, n);
        let residual = &apply_fp_operator_even_sector(&params, &s, &p).unwrap() - &p.scale(&q(4, 1));
        assert!(!residual.is_zero());
        assert!(residual.min_degree().unwrap() >= 2 * n);
    }

    #[test]
    fn shifted_half_integer_power() {
        // x^(1/2) J_1(2x) shifted form agrees with the unshifted operator on x^k
        // when the shift is an integer.
        let params = DunklParams::two_parameter(q(3, 5), q(1, 4)).unwrap();
        let s = Superpotential::centrifugal(q(3, 1)).unwrap();
        let p = bessel_series(1, 5);
        let direct = apply_fp_operator(&params, &s, &p.shift(2)).unwrap();
        let shifted = apply_fp_operator_shifted(&params, &s, &ShiftedLaurent::new(q(2, 1), p)).unwrap();
        assert_eq!(direct, shifted.poly.shift(2));
    }

    #[test]
    fn product_parity_rule() {
        let s = Superpotential::centrifugal(q(7, 3)).unwrap();
        let w = superpotential_laurent(&s).unwrap();
        let p = LaurentPolynomial::from_terms([(-3, q(1, 2)), (0, q(2, 1)), (5, q(-1, 7))]);
        assert_eq!(apply_reflection(&(&w * &p)), &apply_reflection(&w) * &apply_reflection(&p));
    }

    #[test]
    fn rejects_oscillator_and_odd_input() {
        let params = DunklParams::chung_hassanabadi(q(1, 1), q(1, 3)).unwrap();
        let osc = Superpotential::oscillator_centrifugal(q(2, 1)).unwrap();
        let one = LaurentPolynomial::<Q>::one();
        assert!(matches!(apply_fp_operator_even_sector(&params, &osc, &one), Err(Error::Family(_))));
        let cen = Superpotential::centrifugal(q(2, 1)).unwrap();
        let x = LaurentPolynomial::monomial(1, Q::one());
        assert!(matches!(
            apply_fp_operator_even_sector(&params, &cen, &x),
            Err(Error::ParityMismatch(_))
        ));
    }
}
