use crate::error::{Error, Result};
use crate::scalar::{cst, Real};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma function (Lanczos approximation, reflection below 1/2).
pub fn gamma_fn<T: Real>(x: T) -> Result<T> {
    let xf = x.to_f64().unwrap_or(f64::NAN);
    if xf <= 0.0 && xf == xf.round() {
        return Err(Error::Pole(xf));
    }
    if x < cst(0.5) {
        let pi = T::PI();
        let s = (pi * x).sin();
        return Ok(pi / (s * gamma_fn(T::one() - x)?));
    }
    let z = x - T::one();
    let mut acc: T = cst(LANCZOS[0]);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc = acc + cst::<T>(c) / (z + cst(i as f64));
    }
    let t = z + cst(LANCZOS_G + 0.5);
    let sqrt_two_pi: T = cst(2.506_628_274_631_000_5);
    Ok(sqrt_two_pi * t.powf(z + cst(0.5)) * (-t).exp() * acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs()
    }

    #[test]
    fn known_values() {
        assert!(close(gamma_fn(1.0).unwrap(), 1.0, 1e-14));
        assert!(close(gamma_fn(0.5).unwrap(), std::f64::consts::PI.sqrt(), 1e-14));
        assert!(close(gamma_fn(5.0).unwrap(), 24.0, 1e-14));
    }

    #[test]
    fn product_recursion() {
        // Gamma(7.5) = 6.5 * 5.5 * ... * 0.5 * Gamma(0.5)
        let mut expected = std::f64::consts::PI.sqrt();
        let mut k = 0.5;
        while k < 7.0 {
            expected *= k;
            k += 1.0;
        }
        assert!(close(gamma_fn(7.5).unwrap(), expected, 1e-13));
    }

    #[test]
    fn factorials_up_to_thirty() {
        let mut fact = 1.0_f64;
        for n in 1..30 {
            fact *= n as f64;
            assert!(close(gamma_fn((n + 1) as f64).unwrap(), fact, 1e-12), "n = {n}");
        }
    }

    #[test]
    fn negative_arguments_follow_recursion() {
        // Gamma(x) = Gamma(x + 1) / x
        for &x in &[-0.5, -1.5, -3.25, -7.7, -9.5] {
            let up = gamma_fn(x + 1.0).unwrap() / x;
            assert!(close(gamma_fn(x).unwrap(), up, 1e-12), "x = {x}");
        }
    }

    #[test]
    fn poles() {
        for x in [0.0, -1.0, -4.0] {
            assert!(matches!(gamma_fn(x), Err(Error::Pole(_))));
        }
    }

    #[test]
    fn single_precision() {
        assert!((gamma_fn(4.0_f32).unwrap() - 6.0).abs() < 1e-4);
    }
}
