use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::opalg::LaurentPolynomial;
use crate::scalar::{Real, Scalar};

/// Generalized Laguerre polynomial `L_n^alpha(u)` by the three-term recurrence.
pub fn laguerre<T: Real>(n: usize, alpha: T, u: T) -> Result<T> {
    if alpha <= -T::one() {
        return Err(Error::Range(format!("Laguerre alpha = {alpha:?} must exceed -1")));
    }
    let mut prev = T::one();
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = T::one() + alpha - u;
    for k in 1..n {
        let k = T::from(k).unwrap();
        let next = ((k + k + T::one() + alpha - u) * cur - (k + alpha) * prev) / (k + T::one());
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Coefficients `c_j` of `L_n^alpha(u) = sum_j c_j u^j`:
/// `c_j = (-1)^j / (j! (n-j)!) prod_{i=j+1}^{n} (alpha + i)`.
pub fn laguerre_coefficients<T: Scalar>(n: usize, alpha: &T) -> Vec<T> {
    alpha_polynomials::<T>(n)
        .into_iter()
        .map(|p| p.terms().fold(T::zero(), |acc, (k, c)| acc + c.clone() * pow(alpha, k)))
        .collect()
}

/// The same coefficients as polynomials in `alpha` (exact).
pub fn laguerre_alpha_polynomials(n: usize) -> Vec<LaurentPolynomial<BigRational>> {
    alpha_polynomials(n)
}

fn pow<T: Scalar>(base: &T, k: i64) -> T {
    (0..k).fold(T::one(), |acc, _| acc * base.clone())
}

fn alpha_polynomials<T: Scalar>(n: usize) -> Vec<LaurentPolynomial<T>> {
    let int = |v: usize| T::from_usize(v).unwrap();
    let fact = |m: usize| (1..=m).fold(T::one(), |acc, i| acc * int(i));
    (0..=n)
        .map(|j| {
            let mut p = LaurentPolynomial::one();
            for i in (j + 1)..=n {
                // (alpha + i)
                let factor = LaurentPolynomial::from_terms([(1, T::one()), (0, int(i))]);
                p = &p * &factor;
            }
            let mut scale = T::one() / (fact(j) * fact(n - j));
            if j % 2 == 1 {
                scale = -scale;
            }
            p.scale(&scale)
        })
        .collect()
}

/// `sum_j c_j u^j` for exact coefficient lists.
pub fn eval_coefficients<T: Scalar>(coeffs: &[T], u: &T) -> T {
    coeffs.iter().rev().fold(T::zero(), |acc, c| acc * u.clone() + c.clone())
}
