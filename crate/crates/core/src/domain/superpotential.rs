use crate::error::{Error, Result};
use crate::scalar::{two, Scalar};

/// The two odd drift families `w(x) = a/x` and `w(x) = a/x - x`.
#[derive(Debug, Clone, PartialEq)]
pub enum Family<T> {
    Centrifugal { a: T },
    OscillatorCentrifugal { a: T },
}

/// Odd superpotential; the drift is `2 w(x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Superpotential<T> {
    family: Family<T>,
}

/// `w`, `w'`, `(R w)(x) = w(-x)` and `w^2 + w'` at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct SuperpotentialValues<T> {
    pub w: T,
    pub w_prime: T,
    pub reflected: T,
    pub potential: T,
}

impl<T: Scalar> Superpotential<T> {
    pub fn new(family: Family<T>) -> Result<Self> {
        let a = match &family {
            Family::Centrifugal { a } | Family::OscillatorCentrifugal { a } => a,
        };
        if a.is_one() {
            return Err(Error::Range("a = 1 is excluded".into()));
        }
        Ok(Self { family })
    }

    pub fn centrifugal(a: T) -> Result<Self> {
        Self::new(Family::Centrifugal { a })
    }

    pub fn oscillator_centrifugal(a: T) -> Result<Self> {
        Self::new(Family::OscillatorCentrifugal { a })
    }

    pub fn family(&self) -> &Family<T> {
        &self.family
    }

    pub fn a(&self) -> &T {
        match &self.family {
            Family::Centrifugal { a } | Family::OscillatorCentrifugal { a } => a,
        }
    }

    /// Coefficient of `-x` in `w`: 0 or 1.
    pub fn harmonic(&self) -> T {
        match self.family {
            Family::Centrifugal { .. } => T::zero(),
            Family::OscillatorCentrifugal { .. } => T::one(),
        }
    }

    pub fn is_oscillator(&self) -> bool {
        matches!(self.family, Family::OscillatorCentrifugal { .. })
    }

    pub fn w(&self, x: &T) -> Result<T> {
        Ok(self.eval(x)?.w)
    }

    pub fn eval(&self, x: &T) -> Result<SuperpotentialValues<T>> {
        if x.is_zero() {
            return Err(Error::Domain("superpotential is singular at x = 0".into()));
        }
        let a = self.a().clone();
        let k = self.harmonic();
        let w = a.clone() / x.clone() - k.clone() * x.clone();
        let w_prime = -a.clone() / (x.clone() * x.clone()) - k.clone();
        // w is odd
        let reflected = -w.clone();
        let potential = w.clone() * w.clone() + w_prime.clone();
        Ok(SuperpotentialValues { w, w_prime, reflected, potential })
    }

    /// Closed form of `w^2 + w'`: `a(a-1)/x^2`, plus `x^2 - 2a - 1` for the
    /// oscillator family.
    pub fn potential_closed_form(&self, x: &T) -> Result<T> {
        if x.is_zero() {
            return Err(Error::Domain("potential is singular at x = 0".into()));
        }
        let a = self.a().clone();
        let x2 = x.clone() * x.clone();
        let centrifugal = a.clone() * (a.clone() - T::one()) / x2.clone();
        Ok(match self.family {
            Family::Centrifugal { .. } => centrifugal,
            Family::OscillatorCentrifugal { .. } => centrifugal + x2 - two::<T>() * a - T::one(),
        })
    }
}

pub fn superpotential_eval<T: Scalar>(s: &Superpotential<T>, x: &T) -> Result<SuperpotentialValues<T>> {
    s.eval(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;
    use approx::assert_relative_eq;
    use num_rational::BigRational;

    #[test]
    fn centrifugal_at_one() {
        let s = Superpotential::centrifugal(2.0).unwrap();
        let v = s.eval(&1.0).unwrap();
        assert_eq!((v.w, v.w_prime, v.reflected, v.potential), (2.0, -2.0, -2.0, 2.0));
    }

    #[test]
    fn oscillator_at_one() {
        let s = Superpotential::oscillator_centrifugal(4.3).unwrap();
        let v = s.eval(&1.0).unwrap();
        assert_relative_eq!(v.w, 3.3, epsilon = 1e-14);
        assert_relative_eq!(v.potential, 5.59, epsilon = 1e-13);
    }

    #[test]
    fn potential_matches_closed_form_exactly() {
        for s in [
            Superpotential::centrifugal(ratio(7, 3)).unwrap(),
            Superpotential::oscillator_centrifugal(ratio(43, 10)).unwrap(),
        ] {
            for x in [ratio(1, 3), ratio(-5, 2), ratio(11, 1)] {
                let v: SuperpotentialValues<BigRational> = s.eval(&x).unwrap();
                assert_eq!(v.potential, s.potential_closed_form(&x).unwrap());
            }
        }
    }

    #[test]
    fn rejects_a_one_and_origin() {
        assert!(matches!(Superpotential::centrifugal(1.0), Err(Error::Range(_))));
        assert!(Superpotential::centrifugal(0.0).is_ok());
        let s = Superpotential::oscillator_centrifugal(0.5).unwrap();
        assert!(matches!(s.eval(&0.0), Err(Error::Domain(_))));
    }
}
