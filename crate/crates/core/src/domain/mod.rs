//! Parameters, superpotentials, parity and grids shared by every other module.

mod grid;
mod params;
mod parity;
mod superpotential;

pub use grid::{HalfLineGrid, ParityFunction};
pub use params::{make_params, DerivativeKind, DunklParams, ParamWarning};
pub use parity::Parity;
pub use superpotential::{superpotential_eval, Family, Superpotential, SuperpotentialValues};
