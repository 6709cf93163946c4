use crate::domain::Parity;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Staggered half-line grid: `x_i = (i + 1/2) h`, `i = 0..n`, `xmax = n h`.
///
/// No node sits on the origin, so `1/x` and `1/x^2` coefficients are finite
/// everywhere on the grid.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfLineGrid<T> {
    n: usize,
    h: T,
}

impl<T: Real> HalfLineGrid<T> {
    pub fn new(n: usize, xmax: T) -> Result<Self> {
        if n < 3 {
            return Err(Error::Grid(format!("need at least 3 nodes, got {n}")));
        }
        if !(xmax > T::zero()) || !xmax.is_finite() {
            return Err(Error::Grid(format!("xmax = {xmax} must be positive")));
        }
        Ok(Self { n, h: xmax / T::from_usize(n).unwrap() })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn h(&self) -> T {
        self.h
    }

    pub fn xmax(&self) -> T {
        self.h * T::from_usize(self.n).unwrap()
    }

    pub fn node(&self, i: usize) -> T {
        (T::from_usize(i).unwrap() + T::from_f64(0.5).unwrap()) * self.h
    }

    pub fn nodes(&self) -> Vec<T> {
        (0..self.n).map(|i| self.node(i)).collect()
    }
}

/// Samples of a definite-parity function on the positive nodes of a grid.
/// The value at `-x_i` is `parity.sign() * samples[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParityFunction<T> {
    pub parity: Parity,
    pub samples: Vec<T>,
}

impl<T: Real> ParityFunction<T> {
    pub fn new(parity: Parity, samples: Vec<T>) -> Self {
        Self { parity, samples }
    }

    pub fn zeros(parity: Parity, n: usize) -> Self {
        Self { parity, samples: vec![T::zero(); n] }
    }

    /// Samples `f` at the grid nodes.
    pub fn sample<F: FnMut(T) -> T>(grid: &HalfLineGrid<T>, parity: Parity, mut f: F) -> Self {
        Self { parity, samples: grid.nodes().into_iter().map(&mut f).collect() }
    }

    /// Fallible variant of [`ParityFunction::sample`].
    pub fn try_sample<F: FnMut(T) -> Result<T>>(
        grid: &HalfLineGrid<T>,
        parity: Parity,
        mut f: F,
    ) -> Result<Self> {
        let samples = grid.nodes().into_iter().map(&mut f).collect::<Result<Vec<_>>>()?;
        Ok(Self { parity, samples })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Value at the mirrored node `-x_i`.
    pub fn mirrored(&self, i: usize) -> T {
        self.parity.sign::<T>() * self.samples[i]
    }

    /// Full-line reconstruction on `-x_{n-1}, ..., -x_0, x_0, ..., x_{n-1}`.
    pub fn full_line(&self, grid: &HalfLineGrid<T>) -> (Vec<T>, Vec<T>) {
        let n = self.samples.len();
        let mut xs = Vec::with_capacity(2 * n);
        let mut vs = Vec::with_capacity(2 * n);
        for i in (0..n).rev() {
            xs.push(-grid.node(i));
            vs.push(self.mirrored(i));
        }
        for i in 0..n {
            xs.push(grid.node(i));
            vs.push(self.samples[i]);
        }
        (xs, vs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn staggered_nodes() {
        let g = HalfLineGrid::new(4, 2.0).unwrap();
        assert_eq!(g.nodes(), vec![0.25, 0.75, 1.25, 1.75]);
        assert_eq!(g.xmax(), 2.0);
        assert!(HalfLineGrid::new(2, 1.0).is_err());
        assert!(HalfLineGrid::new(10, 0.0).is_err());
    }

    #[test]
    fn full_line_reflection_is_exact() {
        let g = HalfLineGrid::new(50, 5.0).unwrap();
        for parity in [Parity::Even, Parity::Odd] {
            let f = ParityFunction::sample(&g, parity, |x: f64| (x * 1.3).sin() + x * x);
            let (xs, vs) = f.full_line(&g);
            let n = g.len();
            for i in 0..n {
                assert_eq!(xs[n - 1 - i], -xs[n + i]);
                assert_eq!(vs[n - 1 - i], parity.sign::<f64>() * vs[n + i]);
            }
        }
    }
}
