//! Fokker-Planck equations built on deformed (Dunkl-type) derivatives.
//!
//! The crate covers the operator algebra on Laurent polynomials, closed-form
//! Bessel and Laguerre eigenfunctions, the special functions behind them, and a
//! finite-difference solver for the parity sectors on a half-line grid.
//!
//! Everything is generic over the scalar type. The aliases below pick `f64` for
//! numerical work and [`num_rational::BigRational`] for exact algebra.

pub mod analytic;
pub mod domain;
pub mod error;
pub mod numeric;
pub mod opalg;
pub mod render;
pub mod scalar;
pub mod specfun;

use num_rational::BigRational;

pub use domain::{DerivativeKind, Family, Parity};
pub use error::{Error, Result};
pub use scalar::{Real, Scalar};

pub type Params = domain::DunklParams<f64>;
pub type ExactParams = domain::DunklParams<BigRational>;
pub type Laurent = opalg::LaurentPolynomial<f64>;
pub type ExactLaurent = opalg::LaurentPolynomial<BigRational>;
pub type Potential = domain::Superpotential<f64>;
pub type ExactPotential = domain::Superpotential<BigRational>;
pub type Grid = domain::HalfLineGrid<f64>;
pub type SectorFunction = domain::ParityFunction<f64>;
pub type Sector = numeric::SectorOperator<f64>;
pub type Descriptor = analytic::EigenDescriptor<f64>;
