//! Scalar abstractions.
//!
//! Everything that only needs field arithmetic (operator coefficients, parameter
//! algebra, closed-form descriptors) is written against [`Scalar`], which is
//! implemented for `f32`, `f64` and the exact rationals. Anything that needs
//! transcendental functions or iterative linear algebra uses [`Real`].

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio, Rational64};
use num_traits::{Float, FloatConst, FromPrimitive, Num, Signed, ToPrimitive, Zero};

pub trait Scalar:
    Clone
    + PartialOrd
    + Debug
    + Display
    + Num
    + Signed
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    /// Absolute tolerance used when comparing operator coefficients.
    fn identity_tolerance() -> Self;

    /// The integer this value represents, if any. Floats accept a relative
    /// slack of 1e-9 so that values such as `2 * 4.3 / (43 / 30)` count as 6.
    fn as_integer(&self) -> Option<i64>;

    /// Exactly representable conversion from a float (exact for rationals).
    fn from_float(value: f64) -> Self;
}

/// Floating-point scalars used by the special functions and the solvers.
pub trait Real: Scalar + Float + FloatConst + Copy + Default {}

impl<T> Real for T where T: Scalar + Float + FloatConst + Copy + Default {}

macro_rules! float_scalar {
    ($t:ty, $tol:expr) => {
        impl Scalar for $t {
            fn identity_tolerance() -> Self {
                $tol
            }

            fn as_integer(&self) -> Option<i64> {
                if !self.is_finite() {
                    return None;
                }
                let rounded = self.round();
                let slack = 1e-9 * rounded.abs().max(1.0);
                if ((*self - rounded).abs() as f64) <= slack as f64 {
                    rounded.to_i64()
                } else {
                    None
                }
            }

            fn from_float(value: f64) -> Self {
                value as $t
            }
        }
    };
}

float_scalar!(f64, 1e-13);
float_scalar!(f32, 1e-5);

impl Scalar for BigRational {
    fn identity_tolerance() -> Self {
        Self::zero()
    }

    fn as_integer(&self) -> Option<i64> {
        if self.is_integer() {
            self.to_integer().to_i64()
        } else {
            None
        }
    }

    fn from_float(value: f64) -> Self {
        BigRational::from_float(value).expect("finite float")
    }
}

impl Scalar for Rational64 {
    fn identity_tolerance() -> Self {
        Self::zero()
    }

    fn as_integer(&self) -> Option<i64> {
        if self.is_integer() {
            Some(self.to_integer())
        } else {
            None
        }
    }

    fn from_float(value: f64) -> Self {
        Ratio::<i64>::approximate_float(value).expect("representable float")
    }
}

/// Exact rational helper: `num / den`.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub(crate) fn lit<T: Scalar>(value: i64) -> T {
    T::from_i64(value).expect("small integer literal")
}

pub(crate) fn half<T: Scalar>() -> T {
    T::one() / (T::one() + T::one())
}

pub(crate) fn two<T: Scalar>() -> T {
    T::one() + T::one()
}

/// `(-1)^k` as a scalar.
pub(crate) fn parity_sign<T: Scalar>(k: i64) -> T {
    if k.rem_euclid(2) == 0 {
        T::one()
    } else {
        -T::one()
    }
}

pub(crate) fn to_f64<T: Scalar>(value: &T) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// Float constant in the working precision.
pub(crate) fn cst<T: Real>(value: f64) -> T {
    <T as num_traits::NumCast>::from(value).expect("representable constant")
}

/// Converts between scalar types through `f64` (exact for rationals that are
/// finite floats; lossy otherwise).
pub fn convert<S: Scalar, T: Scalar>(value: &S) -> T {
    T::from_float(to_f64(value))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_detection() {
        assert_eq!((2.0 * 4.3 / (1.0 + (4.3 / 3.0 - 1.0))).as_integer(), Some(6));
        assert_eq!(2.2_f64.as_integer(), None);
        assert_eq!(ratio(10, 5).as_integer(), Some(2));
        assert_eq!(ratio(1, 2).as_integer(), None);
        assert_eq!((-3.0_f32).as_integer(), Some(-3));
    }

    #[test]
    fn signs_and_literals() {
        assert_eq!(parity_sign::<f64>(-3), -1.0);
        assert_eq!(parity_sign::<f64>(4), 1.0);
        assert_eq!(half::<BigRational>(), ratio(1, 2));
        assert_eq!(lit::<f64>(7), 7.0);
        assert_eq!(<BigRational as Scalar>::from_float(0.5), ratio(1, 2));
    }
}
