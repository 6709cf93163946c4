use crate::analytic::BesselDescriptor;
use crate::domain::{DunklParams, Parity, Superpotential};
use crate::error::{Error, Result};
use crate::scalar::{half, to_f64, Scalar};

/// Regular solution `x^(a - sigma + 1/2) J_nu(sqrt(lambda) x)` of the CH
/// sector equation for `w = a/x`, with `nu = |a + mu - 1/2|` (even) or
/// `|a - mu - 1/2|` (odd).
pub fn centrifugal_solution<T: Scalar>(parity: Parity, a: T, sigma: T, mu: T, lambda: T) -> Result<BesselDescriptor<T>> {
    if lambda <= T::zero() {
        return Err(Error::Range(format!("lambda = {lambda} must be positive")));
    }
    Superpotential::centrifugal(a.clone())?;
    DunklParams::chung_hassanabadi(sigma.clone(), mu.clone())?;
    let power = a.clone() - sigma + half();
    let order = match parity {
        Parity::Even => a + mu - half(),
        Parity::Odd => a - mu - half(),
    }
    .abs();
    let scale = T::from_float(to_f64(&lambda).sqrt());
    let admissible = bessel_admissible(parity, &power, &order);
    Ok(BesselDescriptor { parity, power, order, lambda, scale, amplitude: T::one(), admissible })
}

/// Integer order `m >= 0`, integer power `n >= -m`, and `n + m` of the
/// sector's parity: then `x^n J_m(x)` has definite parity and is regular.
pub fn bessel_admissible<T: Scalar>(parity: Parity, power: &T, order: &T) -> bool {
    match (power.as_integer(), order.as_integer()) {
        (Some(n), Some(m)) => m >= 0 && n >= -m && Parity::of_power(n + m) == parity,
        _ => false,
    }
}

/// The first `count` values `mu > -1/2` that make the Bessel order an
/// integer, merging both branches of the absolute value.
pub fn centrifugal_admissible_mu<T: Scalar>(parity: Parity, a: T, count: usize) -> Vec<T> {
    // even: |a + mu - 1/2| = m, odd: |a - mu - 1/2| = m
    let base = match parity {
        Parity::Even => half::<T>() - a.clone(),
        Parity::Odd => a.clone() - half::<T>(),
    };
    let limit = count + to_f64(&a).abs().ceil() as usize + 2;
    let mut values: Vec<T> = Vec::new();
    for m in 0..=limit {
        let m = T::from_usize(m).unwrap();
        for mu in [base.clone() + m.clone(), base.clone() - m] {
            if mu > -half::<T>() && !values.iter().any(|v| near(v, &mu)) {
                values.push(mu);
            }
        }
    }
    values.sort_by(|x, y| x.partial_cmp(y).unwrap());
    values.truncate(count);
    values
}

/// `sigma = m + a + 1/2 - j` for `j = 0, 1, ...` while `sigma > -1/2`.
pub fn centrifugal_admissible_sigma<T: Scalar>(a: T, m: u32, count: usize) -> Vec<T> {
    let top = T::from_u32(m).unwrap() + a + half();
    (0..count)
        .map(|j| top.clone() - T::from_usize(j).unwrap())
        .take_while(|s| *s > -half::<T>())
        .collect()
}

fn near<T: Scalar>(x: &T, y: &T) -> bool {
    let scale = if x.abs() > T::one() { x.abs() } else { T::one() };
    (x.clone() - y.clone()).abs() <= T::identity_tolerance() * scale
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn table_rows_are_admissible() {
        let a = ratio(2, 1);
        let four = ratio(4, 1);
        let d = centrifugal_solution(Parity::Even, a.clone(), ratio(5, 2), ratio(1, 2), four.clone()).unwrap();
        assert_eq!(d.render(), "x^0 J_2(2x)");
        assert!(d.admissible);
        let d = centrifugal_solution(Parity::Odd, a, ratio(7, 2), ratio(11, 2), four).unwrap();
        assert_eq!(d.render(), "x^{-1} J_4(2x)");
        assert!(d.admissible);
    }

    #[test]
    fn non_integer_order_is_not_admissible() {
        let d = centrifugal_solution(Parity::Even, 2.0_f64, 2.0, 0.7, 4.0).unwrap();
        assert!((d.order - 2.2).abs() < 1e-14);
        assert!(!d.admissible);
        assert!(d.eval(1.3).unwrap().is_finite());
    }

    #[test]
    fn parity_mismatch_is_not_admissible() {
        // power 0, order 1: odd function in the even sector
        assert!(!bessel_admissible(Parity::Even, &0.0, &1.0));
        // power -3 below -order 2
        assert!(!bessel_admissible(Parity::Odd, &-3.0, &2.0));
    }

    #[test]
    fn rejects_nonpositive_lambda_and_a_one() {
        assert!(matches!(centrifugal_solution(Parity::Even, 2.0, 1.0, 0.5, 0.0), Err(Error::Range(_))));
        assert!(centrifugal_solution(Parity::Even, 1.0, 1.0, 0.5, 4.0).is_err());
    }

    #[test]
    fn admissible_mu() {
        let halves = |v: &[i64]| v.iter().map(|&n| ratio(n, 2)).collect::<Vec<_>>();
        assert_eq!(centrifugal_admissible_mu(Parity::Even, ratio(2, 1), 4), halves(&[1, 3, 5, 7]));
        assert_eq!(centrifugal_admissible_mu(Parity::Odd, ratio(2, 1), 4), halves(&[1, 3, 5, 7]));
        assert_eq!(
            centrifugal_admissible_mu(Parity::Even, ratio(3, 10), 3),
            vec![ratio(1, 5), ratio(6, 5), ratio(11, 5)]
        );
        let f = centrifugal_admissible_mu(Parity::Even, 0.3_f64, 3);
        for (got, want) in f.iter().zip([0.2, 1.2, 2.2]) {
            assert!((got - want).abs() < 1e-14);
        }
    }

    #[test]
    fn admissible_sigma() {
        let halves = |v: &[i64]| v.iter().map(|&n| ratio(n, 2)).collect::<Vec<_>>();
        assert_eq!(centrifugal_admissible_sigma(ratio(2, 1), 0, 3), halves(&[5, 3, 1]));
        assert_eq!(centrifugal_admissible_sigma(ratio(2, 1), 1, 4), halves(&[7, 5, 3, 1]));
        assert_eq!(centrifugal_admissible_sigma(ratio(3, 5), 0, 2), vec![ratio(11, 10), ratio(1, 10)]);
        // truncated at sigma > -1/2
        assert_eq!(centrifugal_admissible_sigma(ratio(3, 5), 0, 5).len(), 2);
    }
}
