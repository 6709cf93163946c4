use crate::error::{Error, Result};
use crate::scalar::Real;

/// Square band matrix with `kl` sub- and `ku` super-diagonals, stored by
/// diagonals: `data[(ku + i - j) * n + j]` holds entry `(i, j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BandedMatrix<T> {
    n: usize,
    kl: usize,
    ku: usize,
    data: Vec<T>,
}

impl<T: Real> BandedMatrix<T> {
    pub fn zeros(n: usize, kl: usize, ku: usize) -> Self {
        Self { n, kl, ku, data: vec![T::zero(); (kl + ku + 1) * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, 0, 0);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn lower_bandwidth(&self) -> usize {
        self.kl
    }

    pub fn upper_bandwidth(&self) -> usize {
        self.ku
    }

    fn in_band(&self, i: usize, j: usize) -> bool {
        i < self.n && j < self.n && j + self.kl >= i && i + self.ku >= j
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        if self.in_band(i, j) {
            self.data[(self.ku + i - j) * self.n + j]
        } else {
            T::zero()
        }
    }

    /// Panics when `(i, j)` lies outside the band.
    pub fn set(&mut self, i: usize, j: usize, value: T) {
        assert!(self.in_band(i, j), "({i}, {j}) outside the band");
        self.data[(self.ku + i - j) * self.n + j] = value;
    }

    fn cols(&self, i: usize) -> std::ops::Range<usize> {
        i.saturating_sub(self.kl)..(i + self.ku + 1).min(self.n)
    }

    pub fn matvec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| self.cols(i).fold(T::zero(), |acc, j| acc + self.get(i, j) * v[j]))
            .collect()
    }

    /// `alpha * I + beta * self`.
    pub fn affine(&self, alpha: T, beta: T) -> Self {
        let mut out = Self { data: self.data.iter().map(|&v| beta * v).collect(), ..self.clone() };
        for i in 0..self.n {
            let d = out.get(i, i);
            out.set(i, i, d + alpha);
        }
        out
    }

    /// Dense copy, row-major (for tests and small diagnostics).
    pub fn to_dense(&self) -> Vec<Vec<T>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j)).collect()).collect()
    }

    /// LU factorization with partial pivoting.
    pub fn lu(&self) -> Result<BandedLu<T>> {
        BandedLu::factor(self)
    }
}

/// Band LU with row interchanges; `U` has `kl + ku` super-diagonals.
#[derive(Debug, Clone)]
pub struct BandedLu<T> {
    n: usize,
    kl: usize,
    width: usize,
    /// Row `i` of the working matrix, columns `i - kl ..= i + kl + ku`
    /// (offset by `kl`), overwritten by the factors.
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

impl<T: Real> BandedLu<T> {
    fn factor(a: &BandedMatrix<T>) -> Result<Self> {
        let (n, kl, ku) = (a.n, a.kl, a.ku);
        let width = 2 * kl + ku + 1;
        // rows[i][c] = entry (i, i - kl + c)
        let mut rows = vec![vec![T::zero(); width]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            for j in a.cols(i) {
                row[j + kl - i] = a.get(i, j);
            }
        }
        let at = |rows: &Vec<Vec<T>>, i: usize, j: usize| -> T {
            if j + kl < i || j > i + kl + ku {
                T::zero()
            } else {
                rows[i][j + kl - i]
            }
        };
        let mut pivots = vec![0; n];
        for k in 0..n {
            let last = (k + kl).min(n - 1);
            let mut p = k;
            let mut best = at(&rows, k, k).abs();
            for i in (k + 1)..=last {
                let v = at(&rows, i, k).abs();
                if v > best {
                    best = v;
                    p = i;
                }
            }
            if best == T::zero() || !best.is_finite() {
                return Err(Error::Solve(k));
            }
            pivots[k] = p;
            let jmax = (k + kl + ku).min(n - 1);
            if p != k {
                for j in k..=jmax {
                    let (vk, vp) = (at(&rows, k, j), at(&rows, p, j));
                    rows[k][j + kl - k] = vp;
                    rows[p][j + kl - p] = vk;
                }
            }
            let pivot = at(&rows, k, k);
            for i in (k + 1)..=last {
                let l = at(&rows, i, k) / pivot;
                rows[i][k + kl - i] = l;
                if l != T::zero() {
                    for j in (k + 1)..=jmax {
                        let u = at(&rows, k, j);
                        rows[i][j + kl - i] = rows[i][j + kl - i] - l * u;
                    }
                }
            }
        }
        Ok(Self { n, kl, width, rows, pivots })
    }

    pub fn solve(&self, b: &[T]) -> Vec<T> {
        let mut x = b.to_vec();
        self.solve_in_place(&mut x);
        x
    }

    pub fn solve_in_place(&self, x: &mut [T]) {
        let (n, kl) = (self.n, self.kl);
        assert_eq!(x.len(), n);
        for k in 0..n {
            x.swap(k, self.pivots[k]);
            let xk = x[k];
            for i in (k + 1)..=(k + kl).min(n - 1) {
                x[i] = x[i] - self.rows[i][k + kl - i] * xk;
            }
        }
        for k in (0..n).rev() {
            let jmax = (k + self.width - 1 - kl).min(n - 1);
            let mut s = x[k];
            for j in (k + 1)..=jmax {
                s = s - self.rows[k][j + kl - k] * x[j];
            }
            x[k] = s / self.rows[k][kl];
        }
    }
}
