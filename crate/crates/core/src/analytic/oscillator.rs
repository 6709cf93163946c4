use crate::analytic::LaguerreDescriptor;
use crate::domain::{DerivativeKind, DunklParams, Parity, Superpotential};
use crate::error::{Error, Result};
use crate::scalar::{half, lit, to_f64, two, Real, Scalar};
use crate::specfun::{integrate, QuadratureRule};

/// Closed-form TP eigenfunction for `w = a/x - x`.
///
/// Even: `beta = 1 + gamma`, `power = 2a/beta`, `alpha = eta - 1/2 + a/beta`,
/// `lambda = 4n(1 - gamma)`.
/// Odd: `beta = 1 - gamma`, `power = 2a/beta - 2 eta`,
/// `alpha = a/beta - eta - 1/2`, `lambda = 4n(1 + gamma)`.
pub fn oscillator_solution<T: Scalar>(
    parity: Parity,
    a: T,
    params: &DunklParams<T>,
    n: usize,
) -> Result<LaguerreDescriptor<T>> {
    if params.kind() != DerivativeKind::TwoParameter {
        return Err(Error::Kind(format!("oscillator solutions need TP parameters, got {}", params.kind())));
    }
    Superpotential::oscillator_centrifugal(a.clone())?;
    let gamma = params.gamma().clone();
    let eta = params.eta().clone();
    let n_t = T::from_usize(n).unwrap();
    let (beta, power, alpha, lambda) = match parity {
        Parity::Even => {
            let beta = T::one() + gamma.clone();
            let power = two::<T>() * a.clone() / beta.clone();
            let alpha = eta - half() + a / beta.clone();
            (beta, power, alpha, lit::<T>(4) * n_t * (T::one() - gamma))
        }
        Parity::Odd => {
            let beta = T::one() - gamma.clone();
            let power = two::<T>() * (a.clone() / beta.clone() - eta.clone());
            let alpha = a / beta.clone() - eta - half();
            (beta, power, alpha, lit::<T>(4) * n_t * (T::one() + gamma))
        }
    };
    if alpha <= -T::one() {
        return Err(Error::Alpha(to_f64(&alpha)));
    }
    let admissible = match (parity, power.as_integer()) {
        (Parity::Even, Some(p)) => p >= 2 && p % 2 == 0,
        (Parity::Odd, Some(p)) => p >= 1 && p % 2 == 1,
        _ => false,
    };
    Ok(LaguerreDescriptor { parity, beta, power, alpha, n, lambda, amplitude: T::one(), admissible })
}

/// `gamma` that makes the prefactor exponent an integer of the sector's
/// parity: even `2a/(1+gamma) = 2m`, odd `2a/(1-gamma) - 2 eta = 2m + 1`.
pub fn oscillator_gamma_for_parity<T: Scalar>(parity: Parity, a: T, mu: T, m: u32) -> Result<T> {
    let m_t = T::from_u32(m).unwrap();
    let ratio = match parity {
        Parity::Even => {
            if m == 0 {
                return Err(Error::Range("m must be positive in the even sector".into()));
            }
            a / m_t
        }
        Parity::Odd => {
            if a <= mu {
                return Err(Error::Range(format!("odd sector needs a > mu, got a = {a}, mu = {mu}")));
            }
            two::<T>() * (a - mu) / (two::<T>() * m_t + T::one())
        }
    };
    if ratio <= T::zero() || ratio >= two() {
        return Err(Error::Range(format!("m = {m} gives gamma outside (-1, 1)")));
    }
    Ok(match parity {
        Parity::Even => ratio - T::one(),
        Parity::Odd => T::one() - ratio,
    })
}

/// Rescales the amplitude so that `int_R psi^2 |x|^(2 p) dx = 1`, with `p`
/// the weight exponent of `params` (`eta` for TP).
pub fn normalize_laguerre<T: Real>(d: &LaguerreDescriptor<T>, params: &DunklParams<T>) -> Result<LaguerreDescriptor<T>> {
    let p = params.weight_exponent();
    let unit = LaguerreDescriptor { amplitude: T::one(), ..d.clone() };
    let rule = QuadratureRule::half_line(5);
    let tol = T::epsilon().sqrt() * T::epsilon().sqrt().sqrt();
    let half_norm = integrate(
        |x| {
            let v = unit.eval(x).unwrap_or(T::nan());
            v * v * x.powf(p + p)
        },
        &rule,
        tol,
    )?;
    let norm = (half_norm.value + half_norm.value).sqrt();
    Ok(LaguerreDescriptor { amplitude: T::one() / norm, ..unit })
}
