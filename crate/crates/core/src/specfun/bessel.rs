use crate::error::{Error, Result};
use crate::scalar::{cst, Real};
use crate::specfun::gamma_fn;

const SERIES_LIMIT: f64 = 12.0;

/// Bessel function of the first kind `J_nu(x)` for `nu >= 0`, `x >= 0`.
///
/// Ascending series up to `x = 12`, normalized downward recurrence beyond.
pub fn bessel_j<T: Real>(nu: T, x: T) -> Result<T> {
    if nu < T::zero() || nu.is_nan() {
        return Err(Error::Domain(format!("order {nu:?} must be nonnegative")));
    }
    if x < T::zero() || x.is_nan() {
        return Err(Error::Domain(format!("argument {x:?} must be nonnegative")));
    }
    if x == T::zero() {
        return Ok(if nu == T::zero() { T::one() } else { T::zero() });
    }
    if x <= cst(SERIES_LIMIT) {
        series(nu, x)
    } else {
        miller(nu, x)
    }
}

/// Integer order, any real argument: `J_m(-x) = (-1)^m J_m(x)` and
/// `J_{-m} = (-1)^m J_m`.
pub fn bessel_jn<T: Real>(m: i64, x: T) -> Result<T> {
    let sign_flips = (if m < 0 { m } else { 0 }) + (if x < T::zero() { m } else { 0 });
    let value = bessel_j(cst::<T>(m.unsigned_abs() as f64), x.abs())?;
    Ok(if sign_flips.rem_euclid(2) == 1 { -value } else { value })
}

fn series<T: Real>(nu: T, x: T) -> Result<T> {
    let half = x / cst(2.0);
    let q = half * half;
    let mut term = half.powf(nu) / gamma_fn(nu + T::one())?;
    let mut sum = term;
    let mut k = T::zero();
    for _ in 0..200 {
        k = k + T::one();
        term = -term * q / (k * (k + nu));
        sum = sum + term;
        if term.abs() <= T::epsilon() * cst(1e-3) * sum.abs().max(T::min_positive_value()) {
            break;
        }
    }
    Ok(sum)
}

/// Downward recurrence `J_{v-1} = (2v/x) J_v - J_{v+1}` on the ladder
/// `nu0 + j`, normalized by
/// `(x/2)^nu0 = Gamma(nu0+1) J_nu0 + sum_{k>=1} (nu0+2k) Gamma(nu0+k)/k! J_{nu0+2k}`.
fn miller<T: Real>(nu: T, x: T) -> Result<T> {
    let nu0 = nu - nu.floor();
    let target = nu.floor().to_usize().unwrap_or(0);
    let top = target.max(x.to_usize().unwrap_or(0)) + 20 + (40.0 * x.max(nu).to_f64().unwrap()).sqrt() as usize;
    let top = top + (top % 2);

    let big: T = cst(1e200);
    let mut j_next = T::zero();
    let mut j_cur: T = cst(1e-30);
    let mut wanted = T::zero();
    let mut norm = T::zero();

    // even-k weights: (nu0 + 2k) Gamma(nu0+k)/k!, k = j/2
    let weights = {
        let mut w = vec![T::zero(); top / 2 + 1];
        let g0 = gamma_fn(nu0 + T::one())?;
        w[0] = g0;
        let mut g = g0; // Gamma(nu0 + k) / k! at k = 1
        for (k, slot) in w.iter_mut().enumerate().skip(1) {
            if k > 1 {
                let kf: T = cst((k - 1) as f64);
                g = g * (nu0 + kf) / (kf + T::one());
            }
            *slot = (nu0 + cst((2 * k) as f64)) * g;
        }
        w
    };

    for j in (0..=top).rev() {
        if j == target {
            wanted = j_cur;
        }
        if j % 2 == 0 {
            norm = norm + weights[j / 2] * j_cur;
        }
        if j == 0 {
            break;
        }
        let v = nu0 + cst(j as f64);
        let j_prev = cst::<T>(2.0) * v / x * j_cur - j_next;
        j_next = j_cur;
        j_cur = j_prev;
        if j_cur.abs() > big {
            let s = T::one() / big;
            j_cur = j_cur * s;
            j_next = j_next * s;
            wanted = wanted * s;
            norm = norm * s;
        }
    }
    Ok(wanted * (x / cst(2.0)).powf(nu0) / norm)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// 40-term ascending series with factorials built by products.
    fn series_oracle(nu: f64, x: f64) -> f64 {
        let g = gamma_fn(nu + 1.0).unwrap();
        let mut sum = 0.0;
        for k in 0..40 {
            let mut denom = g;
            for i in 1..=k {
                denom *= i as f64 * (i as f64 + nu);
            }
            sum += (-1.0_f64).powi(k) * (x / 2.0).powf(2.0 * k as f64 + nu) / denom;
        }
        sum
    }

    #[test]
    fn origin() {
        assert_eq!(bessel_j(0.0, 0.0).unwrap(), 1.0);
        assert_eq!(bessel_j(2.5, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn against_series_oracle() {
        let j2 = bessel_j(2.0_f64, 2.0).unwrap();
        assert!((j2 - series_oracle(2.0, 2.0)).abs() < 1e-14);
        assert!((j2 - 0.352_834_028_615_637_7).abs() < 1e-12);
        let j7 = bessel_j(7.0_f64, 2.0).unwrap();
        assert!((j7 - series_oracle(7.0, 2.0)).abs() < 1e-16);
        assert!(j7.abs() < j2.abs());
    }

    #[test]
    fn reference_values_large_argument() {
        let cases = [
            (0.0, 20.0, 0.167_024_664_340_583_2),
            (1.0, 20.0, 0.066_833_124_175_850_05),
            (0.0, 50.0, 0.055_812_327_669_251_81),
            (2.5, 30.0, 0.141_202_858_799_282_1),
            (10.0, 50.0, -0.113_847_849_149_469_3),
        ];
        for (nu, x, expected) in cases {
            let got: f64 = bessel_j(nu, x).unwrap();
            assert!((got - expected).abs() < 1e-11, "J_{nu}({x}) = {got}, expected {expected}");
        }
    }

    #[test]
    fn series_and_recurrence_agree_at_switch() {
        for &nu in &[0.0_f64, 0.5, 1.0, 3.7, 8.0] {
            let s = series(nu, 12.0).unwrap();
            let m = miller(nu, 12.0).unwrap();
            assert!((s - m).abs() < 1e-12, "nu = {nu}: {s} vs {m}");
        }
    }

    #[test]
    fn three_term_recurrence() {
        for nu in 1..=8 {
            for &x in &[0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 40.0] {
                let nu = nu as f64;
                let lhs: f64 = bessel_j(nu - 1.0, x).unwrap() + bessel_j(nu + 1.0, x).unwrap();
                let rhs = 2.0 * nu / x * bessel_j(nu, x).unwrap();
                assert!((lhs - rhs).abs() <= 1e-9 * rhs.abs().max(1e-3), "nu = {nu}, x = {x}");
            }
        }
    }

    #[test]
    fn integer_parity() {
        for m in 0..=8 {
            for &x in &[0.3, 1.7, 6.0, 15.0] {
                let plus: f64 = bessel_jn(m, x).unwrap();
                let minus = bessel_jn(m, -x).unwrap();
                let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                assert_eq!(minus, sign * plus);
                assert_eq!(bessel_jn(-m, x).unwrap(), sign * plus);
            }
        }
    }

    #[test]
    fn domain_errors() {
        assert!(bessel_j(-1.0, 1.0).is_err());
        assert!(bessel_j(1.0, -1.0).is_err());
    }
}
