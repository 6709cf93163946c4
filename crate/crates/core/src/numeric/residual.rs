use crate::domain::ParityFunction;
use crate::error::Result;
use crate::numeric::SectorOperator;
use crate::scalar::{cst, Real};

/// Nodes used for residuals: drop the outer 5% (Dirichlet truncation) and,
/// when the regular exponent is below 1, the first two nodes.
pub fn residual_window<T: Real>(op: &SectorOperator<T>) -> std::ops::Range<usize> {
    let n = op.grid().len();
    let end = n - (n / 20).max(1);
    let start = if op.gauge().r < T::one() { 2 } else { 0 };
    start..end.max(start)
}

fn weighted_rms<T: Real>(weight: &[T], v: &[T], window: std::ops::Range<usize>) -> T {
    let count = cst::<T>(window.len().max(1) as f64);
    let sum = window.fold(T::zero(), |acc, i| acc + weight[i] * v[i] * v[i]);
    (sum / count).sqrt()
}

/// Weighted RMS of `L psi - lambda psi` with weight `|x|^(2p)`.
pub fn residual_norm<T: Real>(op: &SectorOperator<T>, psi: &ParityFunction<T>, lambda: T) -> Result<T> {
    let lpsi = op.apply(psi)?;
    let r: Vec<T> = lpsi.iter().zip(&psi.samples).map(|(&l, &p)| l - lambda * p).collect();
    Ok(weighted_rms(&op.norm_weight(), &r, residual_window(op)))
}

/// [`residual_norm`] divided by the same norm of `lambda psi` (of `psi`
/// when `lambda = 0`).
pub fn relative_residual_norm<T: Real>(op: &SectorOperator<T>, psi: &ParityFunction<T>, lambda: T) -> Result<T> {
    let abs = residual_norm(op, psi, lambda)?;
    let scale = if lambda == T::zero() { T::one() } else { lambda.abs() };
    let reference = weighted_rms(&op.norm_weight(), &psi.samples, residual_window(op)) * scale;
    Ok(abs / reference)
}
