use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{half, Scalar};

/// Which reflection-augmented derivative replaces `d/dx`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DerivativeKind {
    /// `d/dx - (mu/x) R`
    Yang,
    /// `d/dx + mu/x - (mu/x) R`
    Dunkl,
    /// Chung-Hassanabadi: `d/dx + sigma/x - (mu/x) R`
    ChungHassanabadi,
    /// Two-parameter: `d/dx + mu/x - (mu/x) R + gamma (d/dx) R`
    TwoParameter,
}

impl fmt::Display for DerivativeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DerivativeKind::Yang => "Yang",
            DerivativeKind::Dunkl => "Dunkl",
            DerivativeKind::ChungHassanabadi => "CH",
            DerivativeKind::TwoParameter => "TP",
        })
    }
}

/// Non-fatal remarks raised while validating parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamWarning {
    /// `-1/2 < sigma <= 1/2`: accepted, but outside the stricter `sigma > 1/2`
    /// bound quoted for the CH derivative in some of the literature.
    SigmaBelowHalf,
}

/// Validated derivative parameters.
///
/// `sigma` is the coefficient of the plain `1/x` term: it is 0 for Yang and
/// equals `mu` for Dunkl and TP. `eta = mu / (1 - gamma)` is always recomputed
/// from `mu` and `gamma`.
#[derive(Debug, Clone, PartialEq)]
pub struct DunklParams<T> {
    kind: DerivativeKind,
    sigma: T,
    mu: T,
    gamma: T,
    eta: T,
    warning: Option<ParamWarning>,
}

impl<T: Scalar> DunklParams<T> {
    /// Validates raw parameters for `kind`.
    ///
    /// Yang requires `sigma = 0`, Dunkl and TP require `sigma = mu`, and every
    /// kind except TP requires `gamma = 0`.
    pub fn new(kind: DerivativeKind, sigma: T, mu: T, gamma: T) -> Result<Self> {
        let minus_half = -half::<T>();
        if mu <= minus_half {
            return Err(Error::Range(format!("mu = {mu} must exceed -1/2")));
        }
        if sigma <= minus_half {
            return Err(Error::Range(format!("sigma = {sigma} must exceed -1/2")));
        }
        match kind {
            DerivativeKind::Yang if !sigma.is_zero() => {
                return Err(Error::Kind(format!("Yang derivative has sigma = 0, got {sigma}")));
            }
            DerivativeKind::Dunkl | DerivativeKind::TwoParameter if sigma != mu => {
                return Err(Error::Kind(format!(
                    "{kind} derivative has sigma = mu, got sigma = {sigma}, mu = {mu}"
                )));
            }
            _ => {}
        }
        if kind == DerivativeKind::TwoParameter {
            if gamma.abs() >= T::one() {
                return Err(Error::Range(format!("gamma = {gamma} must lie in (-1, 1)")));
            }
        } else if !gamma.is_zero() {
            return Err(Error::Kind(format!("gamma = {gamma} is only meaningful for TP")));
        }
        let warning = (sigma <= half::<T>()).then_some(ParamWarning::SigmaBelowHalf);
        let eta = mu.clone() / (T::one() - gamma.clone());
        Ok(Self { kind, sigma, mu, gamma, eta, warning })
    }

    pub fn yang(mu: T) -> Result<Self> {
        Self::new(DerivativeKind::Yang, T::zero(), mu, T::zero())
    }

    pub fn dunkl(mu: T) -> Result<Self> {
        Self::new(DerivativeKind::Dunkl, mu.clone(), mu, T::zero())
    }

    pub fn chung_hassanabadi(sigma: T, mu: T) -> Result<Self> {
        Self::new(DerivativeKind::ChungHassanabadi, sigma, mu, T::zero())
    }

    pub fn two_parameter(mu: T, gamma: T) -> Result<Self> {
        Self::new(DerivativeKind::TwoParameter, mu.clone(), mu, gamma)
    }

    pub fn kind(&self) -> DerivativeKind {
        self.kind
    }

    pub fn sigma(&self) -> &T {
        &self.sigma
    }

    pub fn mu(&self) -> &T {
        &self.mu
    }

    pub fn gamma(&self) -> &T {
        &self.gamma
    }

    pub fn eta(&self) -> &T {
        &self.eta
    }

    pub fn warning(&self) -> Option<&ParamWarning> {
        self.warning.as_ref()
    }

    /// Exponent `p` of the normalization weight `|x|^(2p)`: `sigma` for the
    /// CH family (Yang, Dunkl, CH) and `eta` for TP.
    pub fn weight_exponent(&self) -> T {
        match self.kind {
            DerivativeKind::TwoParameter => self.eta.clone(),
            _ => self.sigma.clone(),
        }
    }

    /// Same parameters in another scalar type (revalidated).
    pub fn convert<S: Scalar>(&self) -> Result<DunklParams<S>> {
        DunklParams::new(
            self.kind,
            crate::scalar::convert(&self.sigma),
            crate::scalar::convert(&self.mu),
            crate::scalar::convert(&self.gamma),
        )
    }
}

/// Free-function form of [`DunklParams::new`].
pub fn make_params<T: Scalar>(kind: DerivativeKind, sigma: T, mu: T, gamma: T) -> Result<DunklParams<T>> {
    DunklParams::new(kind, sigma, mu, gamma)
}
