//! Parity-sector discretization.
//!
//! Substituting `R psi = s psi` and `R w = -w` turns the generalized FP
//! operator into
//!
//! `L psi = -c psi'' + (B/x + beta1 x) psi' + (K/x^2 + E) psi`.
//!
//! With a gauge `g = x^r exp(-s x^2)` built from a root of the indicial
//! equation, `L` is rewritten as `-(c g/Q) (Q (psi/g)')' + V psi` with
//! `Q = x^q exp(-s x^2)`, and discretized by the conservative three-point
//! stencil. `V` is constant whenever `r` is an exact root, and the resulting
//! matrix is symmetric under the diagonal weight `Q/g^2`.

use crate::domain::{DerivativeKind, DunklParams, HalfLineGrid, Parity, ParityFunction, Superpotential};
use crate::error::{Error, Result};
use crate::numeric::BandedMatrix;
use crate::scalar::{cst, Real};

/// Coefficients of the sector ODE.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectorCoefficients<T> {
    pub c: T,
    pub b: T,
    pub beta1: T,
    pub k: T,
    pub e: T,
}

impl<T: Real> SectorCoefficients<T> {
    pub fn new(params: &DunklParams<T>, w: &Superpotential<T>, parity: Parity) -> Self {
        let s: T = parity.sign();
        let a = *w.a();
        let omega = w.harmonic();
        let two: T = cst(2.0);
        let mu = *params.mu();
        match params.kind() {
            DerivativeKind::TwoParameter => {
                let gamma = *params.gamma();
                let eta = *params.eta();
                let c = T::one() - gamma * gamma;
                let tilt = T::one() - s * gamma;
                let reflect = two * mu * (T::one() + s);
                Self {
                    c,
                    b: -two * c * eta + two * tilt * a,
                    beta1: -two * tilt * omega,
                    k: c * eta * (T::one() - s) - two * tilt * a + reflect * a,
                    e: -two * tilt * omega - reflect * omega,
                }
            }
            _ => {
                let sigma = *params.sigma();
                let ss = sigma + s * mu;
                Self {
                    c: T::one(),
                    b: two * (a - sigma),
                    beta1: -two * omega,
                    k: -(sigma * sigma - mu * mu - sigma + s * mu) - two * a + two * ss * a,
                    e: -two * omega - two * ss * omega,
                }
            }
        }
    }

    /// `L f` from pointwise values of `f`, `f'` and `f''`.
    pub fn apply_pointwise(&self, x: T, f: T, df: T, d2f: T) -> T {
        -self.c * d2f + (self.b / x + self.beta1 * x) * df + (self.k / (x * x) + self.e) * f
    }
}

/// `g = x^r exp(-s x^2)`, `Q = x^q exp(-s x^2)` and the residual potential
/// `V = v2 / x^2 + v0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gauge<T> {
    pub r: T,
    pub s: T,
    pub q: T,
    pub v2: T,
    pub v0: T,
}

impl<T: Real> Gauge<T> {
    /// Root of `c r^2 - (c + B) r - K = 0`: the larger real root unless it is
    /// an integer of the opposite parity, in which case the smaller one; the
    /// real part for complex roots.
    pub fn select(coeffs: &SectorCoefficients<T>, parity: Parity) -> Self {
        let SectorCoefficients { c, b, beta1, k, e } = *coeffs;
        let two: T = cst(2.0);
        let p = c + b;
        let disc = p * p + cst::<T>(4.0) * c * k;
        let r = if disc >= T::zero() {
            let root = disc.sqrt();
            let hi = (p + root) / (two * c);
            let lo = (p - root) / (two * c);
            let snap = |v: T| {
                let rounded = v.round();
                if (v - rounded).abs() <= cst::<T>(1e-9) * rounded.abs().max(T::one()) {
                    Some(rounded)
                } else {
                    None
                }
            };
            let wrong_parity =
                |v: T| snap(v).is_some_and(|i| Parity::of_power(i.to_i64().unwrap_or(0)) != parity);
            let pick = if wrong_parity(hi) && !wrong_parity(lo) { lo } else { hi };
            snap(pick).unwrap_or(pick)
        } else {
            p / (two * c)
        };
        let s = -beta1 / (two * c);
        let q = (two * c * r - b) / c;
        let v2 = -c * r * (r - T::one()) + b * r + k;
        let v0 = c * (cst::<T>(4.0) * r + two) * s - two * s * b + beta1 * r + e;
        Self { r, s, q, v2, v0 }
    }

    pub fn ln_g(&self, x: T) -> T {
        self.r * x.ln() - self.s * x * x
    }

    pub fn ln_q(&self, x: T) -> T {
        self.q * x.ln() - self.s * x * x
    }

    pub fn potential(&self, x: T) -> T {
        self.v2 / (x * x) + self.v0
    }
}

/// Discretized sector operator on a staggered half-line grid: tridiagonal,
/// inner closure by parity (zero gauge flux through `x = 0`), outer closure
/// by a homogeneous Dirichlet ghost at `xmax`.
#[derive(Debug, Clone)]
pub struct SectorOperator<T> {
    grid: HalfLineGrid<T>,
    parity: Parity,
    params: DunklParams<T>,
    superpotential: Superpotential<T>,
    coefficients: SectorCoefficients<T>,
    gauge: Gauge<T>,
    matrix: BandedMatrix<T>,
    /// `ln(Q/g^2)` at the nodes, shifted so its maximum is 0.
    log_weight: Vec<T>,
}

pub fn build_sector_operator<T: Real>(
    params: &DunklParams<T>,
    s: &Superpotential<T>,
    parity: Parity,
    grid: &HalfLineGrid<T>,
) -> SectorOperator<T> {
    let coefficients = SectorCoefficients::new(params, s, parity);
    let gauge = Gauge::select(&coefficients, parity);
    let n = grid.len();
    let h = grid.h();
    let half_h = h / cst(2.0);
    let scale = coefficients.c / (h * h);
    let mut matrix = BandedMatrix::zeros(n, 1, 1);
    let mut log_weight = Vec::with_capacity(n);
    for i in 0..n {
        let x = grid.node(i);
        let (lg, lq) = (gauge.ln_g(x), gauge.ln_q(x));
        log_weight.push(lq - lg - lg);
        let lq_plus = gauge.ln_q(x + half_h);
        let up_flux = scale * (lq_plus - lq).exp();
        let upper = -scale * (lg + lq_plus - lq - gauge.ln_g(x + h)).exp();
        let mut diag = up_flux + gauge.potential(x);
        if i > 0 {
            let lq_minus = gauge.ln_q(x - half_h);
            diag = diag + scale * (lq_minus - lq).exp();
            matrix.set(i, i - 1, -scale * (lg + lq_minus - lq - gauge.ln_g(x - h)).exp());
        }
        if i + 1 < n {
            matrix.set(i, i + 1, upper);
        } else {
            // psi_n = -psi_{n-1}
            diag = diag - upper;
        }
        matrix.set(i, i, diag);
    }
    let top = log_weight.iter().copied().fold(T::neg_infinity(), T::max);
    for v in &mut log_weight {
        *v = *v - top;
    }
    SectorOperator {
        grid: grid.clone(),
        parity,
        params: params.clone(),
        superpotential: s.clone(),
        coefficients,
        gauge,
        matrix,
        log_weight,
    }
}

impl<T: Real> SectorOperator<T> {
    pub fn grid(&self) -> &HalfLineGrid<T> {
        &self.grid
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn params(&self) -> &DunklParams<T> {
        &self.params
    }

    pub fn superpotential(&self) -> &Superpotential<T> {
        &self.superpotential
    }

    pub fn coefficients(&self) -> &SectorCoefficients<T> {
        &self.coefficients
    }

    pub fn gauge(&self) -> &Gauge<T> {
        &self.gauge
    }

    pub fn matrix(&self) -> &BandedMatrix<T> {
        &self.matrix
    }

    /// Diagonal weight under which the matrix is symmetric (max-normalized).
    pub fn symmetrizing_weight(&self) -> Vec<T> {
        self.log_weight.iter().map(|v| v.exp()).collect()
    }

    pub fn apply(&self, psi: &ParityFunction<T>) -> Result<Vec<T>> {
        self.check(psi)?;
        Ok(self.matrix.matvec(&psi.samples))
    }

    pub(crate) fn check(&self, psi: &ParityFunction<T>) -> Result<()> {
        if psi.parity != self.parity {
            return Err(Error::ParityMismatch(format!(
                "{} function on the {} sector",
                psi.parity, self.parity
            )));
        }
        if psi.len() != self.grid.len() {
            return Err(Error::Grid(format!("{} samples on a {}-node grid", psi.len(), self.grid.len())));
        }
        Ok(())
    }

    /// Normalization weight `|x|^(2p)` at the nodes (`p = sigma` or `eta`).
    pub fn norm_weight(&self) -> Vec<T> {
        let p = self.params.weight_exponent();
        self.grid.nodes().into_iter().map(|x| x.powf(p + p)).collect()
    }
}
