use crate::domain::Parity;
use crate::error::{Error, Result};
use crate::render::{format_number, grouped, subscript, superscript};
use crate::scalar::{convert, Real, Scalar};
use crate::specfun::{bessel_j, laguerre};

/// `amplitude * x^power * J_order(scale * x)` with `scale = sqrt(lambda)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BesselDescriptor<T> {
    pub parity: Parity,
    pub power: T,
    pub order: T,
    pub lambda: T,
    pub scale: T,
    pub amplitude: T,
    pub admissible: bool,
}

/// `amplitude * exp(-x^2/beta) * x^power * L_n^alpha(x^2/beta)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LaguerreDescriptor<T> {
    pub parity: Parity,
    pub beta: T,
    pub power: T,
    pub alpha: T,
    pub n: usize,
    pub lambda: T,
    pub amplitude: T,
    pub admissible: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum EigenDescriptor<T> {
    Bessel(BesselDescriptor<T>),
    Laguerre(LaguerreDescriptor<T>),
}

impl<T> From<BesselDescriptor<T>> for EigenDescriptor<T> {
    fn from(d: BesselDescriptor<T>) -> Self {
        EigenDescriptor::Bessel(d)
    }
}

impl<T> From<LaguerreDescriptor<T>> for EigenDescriptor<T> {
    fn from(d: LaguerreDescriptor<T>) -> Self {
        EigenDescriptor::Laguerre(d)
    }
}

/// `|x|^power`, with the sign of the parity applied for `x < 0`.
fn prefactor<T: Real>(parity: Parity, power: T, x: T) -> Result<(T, T)> {
    if x == T::zero() && power < T::zero() {
        return Err(Error::Domain(format!("x = 0 with negative power {power:?}")));
    }
    let sign = if x < T::zero() { parity.sign::<T>() } else { T::one() };
    Ok((sign, x.abs().powf(power)))
}

impl<T: Scalar> BesselDescriptor<T> {
    pub fn convert<S: Scalar>(&self) -> BesselDescriptor<S> {
        BesselDescriptor {
            parity: self.parity,
            power: convert(&self.power),
            order: convert(&self.order),
            lambda: convert(&self.lambda),
            scale: convert(&self.scale),
            amplitude: convert(&self.amplitude),
            admissible: self.admissible,
        }
    }

    /// `x^{p} J_{m}(s x)`; the amplitude is not shown.
    pub fn render(&self) -> String {
        let scale = format_number(&self.scale);
        let arg = if scale == "1" {
            "x".to_string()
        } else if self.scale.as_integer().is_some() {
            format!("{scale}x")
        } else {
            format!("{scale} x")
        };
        format!(
            "{} {}({arg})",
            superscript("x", &format_number(&self.power)),
            subscript("J", &format_number(&self.order))
        )
    }
}

impl<T: Real> BesselDescriptor<T> {
    pub fn eval(&self, x: T) -> Result<T> {
        let (sign, px) = prefactor(self.parity, self.power, x)?;
        Ok(sign * self.amplitude * px * bessel_j(self.order, self.scale * x.abs())?)
    }
}

impl<T: Scalar> LaguerreDescriptor<T> {
    pub fn convert<S: Scalar>(&self) -> LaguerreDescriptor<S> {
        LaguerreDescriptor {
            parity: self.parity,
            beta: convert(&self.beta),
            power: convert(&self.power),
            alpha: convert(&self.alpha),
            n: self.n,
            lambda: convert(&self.lambda),
            amplitude: convert(&self.amplitude),
            admissible: self.admissible,
        }
    }

    /// `e^{-x^2/b} x^{p} L_{n}^{a}(x^2/b)`; the amplitude is not shown.
    pub fn render(&self) -> String {
        let b = grouped(&format_number(&self.beta));
        let u = if b == "1" { "x^2".to_string() } else { format!("x^2/{b}") };
        format!(
            "e^{{-{u}}} {} {}({u})",
            superscript("x", &format_number(&self.power)),
            superscript(&subscript("L", &self.n.to_string()), &format_number(&self.alpha)),
        )
    }
}

impl<T: Real> LaguerreDescriptor<T> {
    pub fn eval(&self, x: T) -> Result<T> {
        let (sign, px) = prefactor(self.parity, self.power, x)?;
        let u = x * x / self.beta;
        Ok(sign * self.amplitude * (-u).exp() * px * laguerre(self.n, self.alpha, u)?)
    }
}

impl<T: Scalar> EigenDescriptor<T> {
    pub fn parity(&self) -> Parity {
        match self {
            EigenDescriptor::Bessel(d) => d.parity,
            EigenDescriptor::Laguerre(d) => d.parity,
        }
    }

    pub fn lambda(&self) -> &T {
        match self {
            EigenDescriptor::Bessel(d) => &d.lambda,
            EigenDescriptor::Laguerre(d) => &d.lambda,
        }
    }

    pub fn power(&self) -> &T {
        match self {
            EigenDescriptor::Bessel(d) => &d.power,
            EigenDescriptor::Laguerre(d) => &d.power,
        }
    }

    pub fn admissible(&self) -> bool {
        match self {
            EigenDescriptor::Bessel(d) => d.admissible,
            EigenDescriptor::Laguerre(d) => d.admissible,
        }
    }

    pub fn render(&self) -> String {
        match self {
            EigenDescriptor::Bessel(d) => d.render(),
            EigenDescriptor::Laguerre(d) => d.render(),
        }
    }
}

/// Pointwise value of a closed-form eigenfunction, extended to `x < 0` by
/// parity.
pub fn eval_descriptor<T: Real>(d: &EigenDescriptor<T>, x: T) -> Result<T> {
    match d {
        EigenDescriptor::Bessel(b) => b.eval(x),
        EigenDescriptor::Laguerre(l) => l.eval(x),
    }
}
