//! Gamma, Bessel J and Laguerre functions, and double-exponential quadrature.

mod bessel;
mod gamma;
mod laguerre;
mod quadrature;

pub use bessel::{bessel_j, bessel_jn};
pub use gamma::gamma_fn;
pub use laguerre::{eval_coefficients, laguerre, laguerre_alpha_polynomials, laguerre_coefficients};
pub use quadrature::{integrate, weighted_inner_product, Integral, QuadratureDomain, QuadratureRule};
