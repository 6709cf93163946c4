use crate::domain::{Family, ParityFunction};
use crate::error::{Error, Result};
use crate::numeric::SectorOperator;
use crate::scalar::{cst, Real};

const MAX_ITERATIONS: usize = 500;

/// Number of eigenvalues below `x` of the symmetric tridiagonal matrix with
/// diagonal `d` and squared off-diagonals `e2` (Sturm sequence).
fn count_below<T: Real>(d: &[T], e2: &[T], x: T) -> usize {
    let tiny = T::min_positive_value().sqrt();
    let mut count = 0;
    let mut q = d[0] - x;
    for i in 0..d.len() {
        if i > 0 {
            q = d[i] - x - e2[i - 1] / q;
        }
        if q == T::zero() {
            q = -tiny;
        }
        if q < T::zero() {
            count += 1;
        }
    }
    count
}

/// The `k`-th smallest eigenvalue (0-based) by bisection.
fn bisect<T: Real>(d: &[T], e2: &[T], k: usize, lo: T, hi: T) -> T {
    let (mut lo, mut hi) = (lo, hi);
    for _ in 0..200 {
        let mid = (lo + hi) / cst(2.0);
        if mid <= lo || mid >= hi {
            break;
        }
        if count_below(d, e2, mid) > k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo + hi) / cst(2.0)
}

fn dot<T: Real>(w: &[T], u: &[T], v: &[T]) -> T {
    w.iter().zip(u).zip(v).fold(T::zero(), |acc, ((&w, &u), &v)| acc + w * u * v)
}

/// The `k` lowest eigenpairs of an oscillator-family sector operator,
/// ascending, each vector normalized to `int_R psi^2 |x|^(2p) dx = 1` with its
/// first significant component positive.
///
/// Eigenvalues are bracketed by Sturm bisection on the symmetrized matrix,
/// then refined by shift-invert iteration with deflation against the modes
/// already found under the symmetrizing weight.
pub fn lowest_eigenpairs<T: Real>(op: &SectorOperator<T>, k: usize) -> Result<Vec<(T, ParityFunction<T>)>> {
    if matches!(op.superpotential().family(), Family::Centrifugal { .. }) {
        return Err(Error::Family("the centrifugal spectrum is continuous; use residual checks".into()));
    }
    let n = op.grid().len();
    if k == 0 || k > n / 4 {
        return Err(Error::Spectrum(format!("{k} modes requested on {n} nodes (at most {})", n / 4)));
    }
    let m = op.matrix();
    let d: Vec<T> = (0..n).map(|i| m.get(i, i)).collect();
    let e2: Vec<T> = (0..n - 1).map(|i| m.get(i, i + 1) * m.get(i + 1, i)).collect();
    let (mut lo, mut hi) = (T::infinity(), T::neg_infinity());
    for i in 0..n {
        let mut radius = T::zero();
        if i > 0 {
            radius = radius + e2[i - 1].abs().sqrt();
        }
        if i + 1 < n {
            radius = radius + e2[i].abs().sqrt();
        }
        lo = lo.min(d[i] - radius);
        hi = hi.max(d[i] + radius);
    }
    let seeds: Vec<T> = (0..=k).map(|j| bisect(&d, &e2, j, lo, hi)).collect();

    let weight = op.symmetrizing_weight();
    let mut found: Vec<Vec<T>> = Vec::new();
    let mut out = Vec::new();
    for j in 0..k {
        let spacing = if j > 0 { (seeds[j] - seeds[j - 1]).min(seeds[j + 1] - seeds[j]) } else { seeds[1] - seeds[0] };
        let shift = seeds[j] - cst::<T>(0.01) * spacing.abs().max(T::epsilon());
        let lu = m.affine(-shift, T::one()).lu()?;
        let mut v: Vec<T> = (0..n).map(|i| T::one() + cst::<T>(0.1) * cst::<T>((i % 7) as f64)).collect();
        let mut lambda = seeds[j];
        let mut converged = false;
        let mut change = T::infinity();
        for _ in 0..MAX_ITERATIONS {
            lu.solve_in_place(&mut v);
            for u in &found {
                let c = dot(&weight, u, &v);
                for (vi, &ui) in v.iter_mut().zip(u) {
                    *vi = *vi - c * ui;
                }
            }
            let norm = dot(&weight, &v, &v).sqrt();
            if !norm.is_finite() || norm == T::zero() {
                return Err(Error::Convergence { iterations: 0, change: f64::NAN });
            }
            for vi in &mut v {
                *vi = *vi / norm;
            }
            let av = m.matvec(&v);
            let next = dot(&weight, &v, &av);
            change = (next - lambda).abs();
            lambda = next;
            if change <= cst::<T>(1e-10) * lambda.abs().max(T::one()) {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::Convergence { iterations: MAX_ITERATIONS, change: change.to_f64().unwrap_or(f64::NAN) });
        }
        found.push(v.clone());
        out.push((lambda, normalized(op, v)));
    }
    Ok(out)
}

fn normalized<T: Real>(op: &SectorOperator<T>, mut v: Vec<T>) -> ParityFunction<T> {
    let w = op.norm_weight();
    let h = op.grid().h();
    let norm = (cst::<T>(2.0) * h * dot(&w, &v, &v)).sqrt();
    let peak = v.iter().fold(T::zero(), |m, x| m.max(x.abs()));
    let first = v.iter().copied().find(|x| x.abs() > cst::<T>(1e-3) * peak).unwrap_or(T::one());
    let scale = if first < T::zero() { -norm } else { norm };
    for x in &mut v {
        *x = *x / scale;
    }
    ParityFunction::new(op.parity(), v)
}
