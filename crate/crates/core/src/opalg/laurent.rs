use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{parity_sign, Scalar};

/// Finite sum `sum_k c_k x^k` over integer `k`, negative powers allowed.
///
/// Stored in canonical form: no zero coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentPolynomial<T> {
    terms: BTreeMap<i64, T>,
}

impl<T: Scalar> Default for LaurentPolynomial<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> LaurentPolynomial<T> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, T::one())
    }

    pub fn monomial(k: i64, c: T) -> Self {
        let mut p = Self::zero();
        p.add_term(k, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, T)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    /// Adds `c x^k`, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, k: i64, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&k) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(k, sum);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn coeff(&self, k: i64) -> T {
        self.terms.get(&k).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &T)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|k| k.rem_euclid(2) == 0)
    }

    pub fn is_odd(&self) -> bool {
        self.terms.keys().all(|k| k.rem_euclid(2) == 1)
    }

    pub fn scale(&self, factor: &T) -> Self {
        Self::from_terms(self.terms().map(|(k, c)| (k, c.clone() * factor.clone())))
    }

    /// Multiplication by `x^m`.
    pub fn shift(&self, m: i64) -> Self {
        Self { terms: self.terms.iter().map(|(k, c)| (k + m, c.clone())).collect() }
    }

    /// Maps every term `c_k x^k` to `f(k, c_k) x^(k + offset)`.
    pub fn map_terms<F: Fn(i64, &T) -> T>(&self, offset: i64, f: F) -> Self {
        Self::from_terms(self.terms().map(|(k, c)| (k + offset, f(k, c))))
    }

    /// Plain `d/dx`.
    pub fn derivative(&self) -> Self {
        self.map_terms(-1, |k, c| c.clone() * T::from_i64(k).unwrap())
    }

    /// Largest `|c_k - d_k|` over the union of supports.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        let mut worst = T::zero();
        for (_, c) in (self - other).terms() {
            let a = c.abs();
            if a > worst {
                worst = a;
            }
        }
        worst
    }

    pub fn eval(&self, x: &T) -> T {
        self.terms().fold(T::zero(), |acc, (k, c)| acc + c.clone() * powi(x, k))
    }

    pub fn map_scalar<S: Scalar, F: Fn(&T) -> S>(&self, f: F) -> LaurentPolynomial<S> {
        LaurentPolynomial::from_terms(self.terms().map(|(k, c)| (k, f(c))))
    }
}

/// Integer power for any scalar (negative exponents invert).
pub(crate) fn powi<T: Scalar>(x: &T, k: i64) -> T {
    let mut base = if k < 0 { T::one() / x.clone() } else { x.clone() };
    let mut e = k.unsigned_abs();
    let mut acc = T::one();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base.clone();
        }
        base = base.clone() * base;
        e >>= 1;
    }
    acc
}

impl<T: Scalar> Add for &LaurentPolynomial<T> {
    type Output = LaurentPolynomial<T>;

    fn add(self, rhs: Self) -> LaurentPolynomial<T> {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl<T: Scalar> Sub for &LaurentPolynomial<T> {
    type Output = LaurentPolynomial<T>;

    fn sub(self, rhs: Self) -> LaurentPolynomial<T> {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, -c.clone());
        }
        out
    }
}

impl<T: Scalar> Mul for &LaurentPolynomial<T> {
    type Output = LaurentPolynomial<T>;

    fn mul(self, rhs: Self) -> LaurentPolynomial<T> {
        let mut out = LaurentPolynomial::zero();
        for (j, a) in self.terms() {
            for (k, b) in rhs.terms() {
                out.add_term(j + k, a.clone() * b.clone());
            }
        }
        out
    }
}

impl<T: Scalar> Neg for &LaurentPolynomial<T> {
    type Output = LaurentPolynomial<T>;

    fn neg(self) -> LaurentPolynomial<T> {
        self.map_terms(0, |_, c| -c.clone())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for LaurentPolynomial<T> {
            type Output = LaurentPolynomial<T>;

            fn $m(self, rhs: Self) -> LaurentPolynomial<T> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> Neg for LaurentPolynomial<T> {
    type Output = LaurentPolynomial<T>;

    fn neg(self) -> LaurentPolynomial<T> {
        -&self
    }
}

impl<T: Scalar> LaurentPolynomial<T> {
    /// Renders with `var` as the indeterminate, highest power first.
    pub fn display_in(&self, var: &str) -> String {
        use fmt::Write;
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (k, c)) in self.terms().rev().enumerate() {
            let (negative, mag) = if c.is_negative() { (true, c.abs()) } else { (false, c.clone()) };
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if k == 0 {
                let _ = write!(out, "{mag}");
                continue;
            }
            if !mag.is_one() {
                let _ = write!(out, "{mag}*");
            }
            if k == 1 {
                out.push_str(var);
            } else {
                let _ = write!(out, "{var}^{k}");
            }
        }
        out
    }
}

impl<T: Scalar> fmt::Display for LaurentPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

/// `x^shift * p(x)` for a real `shift`; used for prefactors such as
/// `x^(a - sigma + 1/2)`. The reflection acts on `x^(k + shift)` through the
/// integer part only, `R x^(k+shift) = (-1)^k x^(k+shift)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftedLaurent<T> {
    pub shift: T,
    pub poly: LaurentPolynomial<T>,
}

impl<T: Scalar> ShiftedLaurent<T> {
    pub fn new(shift: T, poly: LaurentPolynomial<T>) -> Self {
        Self { shift, poly }
    }

    pub fn unshifted(poly: LaurentPolynomial<T>) -> Self {
        Self { shift: T::zero(), poly }
    }

    pub fn reflect(&self) -> Self {
        Self {
            shift: self.shift.clone(),
            poly: self.poly.map_terms(0, |k, c| parity_sign::<T>(k) * c.clone()),
        }
    }

    pub fn derivative(&self) -> Self {
        let s = self.shift.clone();
        Self {
            shift: s.clone(),
            poly: self
                .poly
                .map_terms(-1, |k, c| c.clone() * (T::from_i64(k).unwrap() + s.clone())),
        }
    }

    pub fn scale(&self, factor: &T) -> Self {
        Self { shift: self.shift.clone(), poly: self.poly.scale(factor) }
    }

    /// Multiplication by an unshifted Laurent polynomial.
    pub fn mul_laurent(&self, q: &LaurentPolynomial<T>) -> Self {
        Self { shift: self.shift.clone(), poly: &self.poly * q }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert!(self.shift == other.shift, "shift mismatch");
        Self { shift: self.shift.clone(), poly: &self.poly + &other.poly }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert!(self.shift == other.shift, "shift mismatch");
        Self { shift: self.shift.clone(), poly: &self.poly - &other.poly }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;
    use num_rational::BigRational;

    type Q = LaurentPolynomial<BigRational>;

    #[test]
    fn canonical_form_drops_zeros() {
        let mut p = Q::monomial(3, ratio(1, 2));
        p.add_term(3, ratio(-1, 2));
        assert!(p.is_zero());
        let q = Q::from_terms([(1, ratio(1, 1)), (-1, ratio(0, 1))]);
        assert_eq!(q.len(), 1);
    }

    #[test]
    fn product_and_shift() {
        let p = Q::from_terms([(-1, ratio(2, 1)), (1, ratio(-1, 1))]);
        let sq = &p * &p;
        assert_eq!(sq, Q::from_terms([(-2, ratio(4, 1)), (0, ratio(-4, 1)), (2, ratio(1, 1))]));
        assert_eq!(p.shift(2).coeff(3), ratio(-1, 1));
        assert_eq!(p.derivative(), Q::from_terms([(-2, ratio(-2, 1)), (0, ratio(-1, 1))]));
    }

    #[test]
    fn eval_with_negative_powers() {
        let p = LaurentPolynomial::from_terms([(-2, 1.0_f64), (3, 2.0)]);
        assert!((p.eval(&2.0) - (0.25 + 16.0)).abs() < 1e-15);
    }

    #[test]
    fn display() {
        let p = LaurentPolynomial::from_terms([(-1, -1.0), (2, 3.0), (0, 1.0)]);
        assert_eq!(p.to_string(), "3*x^2 + 1 - x^-1");
    }
}
