//! Mechanical verification of operator identities on monomials.
//!
//! Each check applies two operator expressions to `x^k` for every
//! `|k| <= max_degree` and records where the coefficients disagree. The
//! closed-form sides are assembled from primitive pieces (`d/dx`, powers of
//! `x`, `R`), independently of the per-monomial factors in
//! [`derivative_factor`](crate::opalg::derivative_factor).

use crate::domain::{DerivativeKind, DunklParams};
use crate::error::{Error, Result};
use crate::opalg::{apply_derivative, apply_reflection, LaurentPolynomial};
use crate::scalar::{two, Scalar};

/// Disagreement of an identity on a single monomial.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation<T> {
    pub degree: i64,
    pub residual: LaurentPolynomial<T>,
}

/// Outcome of one identity check.
#[derive(Debug, Clone, PartialEq)]
pub struct Report<T> {
    pub identity: String,
    pub monomials_checked: usize,
    pub violations: Vec<Violation<T>>,
    /// Largest absolute residual coefficient seen, violating or not.
    pub worst_residual: T,
}

impl<T: Scalar> Report<T> {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violating_degrees(&self) -> Vec<i64> {
        self.violations.iter().map(|v| v.degree).collect()
    }
}

/// Compares `lhs(x^k)` with `rhs(x^k)` for `|k| <= max_degree`.
///
/// A coefficient pair `(l, r)` agrees when `|l - r| <= tol * max(1, |r|)`; for
/// exact scalars `tol` is zero and the comparison is exact.
pub fn check_identity<T, L, R>(identity: &str, max_degree: u32, tol: &T, lhs: L, rhs: R) -> Report<T>
where
    T: Scalar,
    L: Fn(&LaurentPolynomial<T>) -> LaurentPolynomial<T>,
    R: Fn(&LaurentPolynomial<T>) -> LaurentPolynomial<T>,
{
    let d = max_degree as i64;
    let mut violations = Vec::new();
    let mut worst = T::zero();
    for k in -d..=d {
        let x_k = LaurentPolynomial::monomial(k, T::one());
        let left = lhs(&x_k);
        let right = rhs(&x_k);
        let residual = &left - &right;
        let mut bad = false;
        for (j, c) in residual.terms() {
            let scale = right.coeff(j).abs();
            let bound = if scale > T::one() { tol.clone() * scale } else { tol.clone() };
            if c.abs() > bound {
                bad = true;
            }
            if c.abs() > worst {
                worst = c.abs();
            }
        }
        if bad {
            violations.push(Violation { degree: k, residual });
        }
    }
    Report {
        identity: identity.to_string(),
        monomials_checked: (2 * d + 1) as usize,
        violations,
        worst_residual: worst,
    }
}

/// `R D + D R = 0` for an arbitrary operator `op`.
pub fn verify_anticommutation_with<T, D>(op: D, max_degree: u32, tol: &T) -> Report<T>
where
    T: Scalar,
    D: Fn(&LaurentPolynomial<T>) -> LaurentPolynomial<T>,
{
    check_identity(
        "R D + D R = 0",
        max_degree,
        tol,
        |p| &apply_reflection(&op(p)) + &op(&apply_reflection(p)),
        |_| LaurentPolynomial::zero(),
    )
}

pub fn verify_anticommutation<T: Scalar>(params: &DunklParams<T>, max_degree: u32) -> Report<T> {
    verify_anticommutation_with(
        |p| apply_derivative(params, p),
        max_degree,
        &T::identity_tolerance(),
    )
}

/// Multiplication by `c x^m`.
fn times<T: Scalar>(p: &LaurentPolynomial<T>, c: &T, m: i64) -> LaurentPolynomial<T> {
    p.shift(m).scale(c)
}

/// Closed form of `D_CH^2`:
/// `d^2 + (2 sigma/x) d + (sigma^2 - mu^2 - sigma)/x^2 + (mu/x^2) R`.
pub fn ch_square_closed_form<T: Scalar>(sigma: &T, mu: &T, p: &LaurentPolynomial<T>) -> LaurentPolynomial<T> {
    let d1 = p.derivative();
    let d2 = d1.derivative();
    let c0 = sigma.clone() * sigma.clone() - mu.clone() * mu.clone() - sigma.clone();
    let mut out = d2;
    out = &out + &times(&d1, &(two::<T>() * sigma.clone()), -1);
    out = &out + &times(p, &c0, -2);
    &out + &times(&apply_reflection(p), mu, -2)
}

/// Closed form of `D_TP^2`:
/// `(1 - gamma^2) (d^2 + (2 eta/x) d - eta/x^2 + (eta/x^2) R)`.
pub fn tp_square_closed_form<T: Scalar>(gamma: &T, eta: &T, p: &LaurentPolynomial<T>) -> LaurentPolynomial<T> {
    let d1 = p.derivative();
    let mut inner = d1.derivative();
    inner = &inner + &times(&d1, &(two::<T>() * eta.clone()), -1);
    inner = &inner - &times(p, eta, -2);
    inner = &inner + &times(&apply_reflection(p), eta, -2);
    inner.scale(&(T::one() - gamma.clone() * gamma.clone()))
}

/// Closed-form square matching `params.kind()`; Yang and Dunkl use the CH
/// form with `sigma = 0` and `sigma = mu`.
pub fn square_closed_form<T: Scalar>(params: &DunklParams<T>, p: &LaurentPolynomial<T>) -> LaurentPolynomial<T> {
    match params.kind() {
        DerivativeKind::TwoParameter => tp_square_closed_form(params.gamma(), params.eta(), p),
        _ => ch_square_closed_form(params.sigma(), params.mu(), p),
    }
}

/// Double application of the derivative against its closed-form square.
pub fn verify_square_closed_form<T: Scalar>(params: &DunklParams<T>, max_degree: u32) -> Report<T> {
    verify_square_closed_form_with(params, max_degree, |p| square_closed_form(params, p))
}

/// As [`verify_square_closed_form`] with a caller-supplied closed form.
pub fn verify_square_closed_form_with<T, C>(params: &DunklParams<T>, max_degree: u32, closed: C) -> Report<T>
where
    T: Scalar,
    C: Fn(&LaurentPolynomial<T>) -> LaurentPolynomial<T>,
{
    check_identity(
        &format!("D^2 closed form ({})", params.kind()),
        max_degree,
        &T::identity_tolerance(),
        |p| apply_derivative(params, &apply_derivative(params, p)),
        closed,
    )
}

/// TP derivative written with `(1 - gamma) eta` in place of `mu`:
/// `d + (1-gamma) eta/x - ((1-gamma) eta/x) R + gamma d R`.
pub fn tp_eta_form<T: Scalar>(gamma: &T, eta: &T, p: &LaurentPolynomial<T>) -> LaurentPolynomial<T> {
    let m = (T::one() - gamma.clone()) * eta.clone();
    let rp = apply_reflection(p);
    let mut out = p.derivative();
    out = &out + &times(p, &m, -1);
    out = &out - &times(&rp, &m, -1);
    &out + &rp.derivative().scale(gamma)
}

/// The `mu`-form and the `eta`-form of the TP derivative agree.
pub fn verify_tp_rewrite<T: Scalar>(params: &DunklParams<T>, max_degree: u32) -> Result<Report<T>> {
    if params.kind() != DerivativeKind::TwoParameter {
        return Err(Error::Kind(format!("TP rewrite needs TP parameters, got {}", params.kind())));
    }
    Ok(check_identity(
        "TP mu-form = eta-form",
        max_degree,
        &T::identity_tolerance(),
        |p| apply_derivative(params, p),
        |p| tp_eta_form(params.gamma(), params.eta(), p),
    ))
}

/// Operator equality `D_a = D_b` on monomials.
pub fn verify_operator_equality<T: Scalar>(
    identity: &str,
    a: &DunklParams<T>,
    b: &DunklParams<T>,
    max_degree: u32,
) -> Report<T> {
    check_identity(
        identity,
        max_degree,
        &T::identity_tolerance(),
        |p| apply_derivative(a, p),
        |p| apply_derivative(b, p),
    )
}

/// The three specialization identities for a given `mu`:
/// CH(sigma = 0) = Yang, CH(sigma = mu) = Dunkl, TP(gamma = 0) = Dunkl.
pub fn verify_specializations<T: Scalar>(mu: &T, max_degree: u32) -> Result<Vec<Report<T>>> {
    let yang = DunklParams::yang(mu.clone())?;
    let dunkl = DunklParams::dunkl(mu.clone())?;
    let ch0 = DunklParams::chung_hassanabadi(T::zero(), mu.clone())?;
    let ch_mu = DunklParams::chung_hassanabadi(mu.clone(), mu.clone())?;
    let tp0 = DunklParams::two_parameter(mu.clone(), T::zero())?;
    Ok(vec![
        verify_operator_equality("CH(sigma=0) = Yang", &ch0, &yang, max_degree),
        verify_operator_equality("CH(sigma=mu) = Dunkl", &ch_mu, &dunkl, max_degree),
        verify_operator_equality("TP(gamma=0) = Dunkl", &tp0, &dunkl, max_degree),
    ])
}

/// A deliberately broken TP derivative whose reflection difference lost its
/// `1/x`: `d + mu (1 - R) + gamma d R`. The extra term keeps the degree of
/// odd monomials, so `R D + D R` no longer vanishes on them.
pub fn corrupted_tp_derivative<T: Scalar>(
    params: &DunklParams<T>,
    p: &LaurentPolynomial<T>,
) -> LaurentPolynomial<T> {
    let mu = params.mu();
    let rp = apply_reflection(p);
    let mut out = p.derivative();
    out = &out + &(p - &rp).scale(mu);
    &out + &rp.derivative().scale(params.gamma())
}
