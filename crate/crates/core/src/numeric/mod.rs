//! Parity-sector discretization, residuals, spectra and time evolution.

mod banded;
mod eigen;
mod evolve;
mod residual;
mod sector;

pub use banded::{BandedLu, BandedMatrix};
pub use eigen::lowest_eigenpairs;
pub use evolve::{decay_rate, evolve, Scheme, Trajectory};
pub use residual::{relative_residual_norm, residual_norm, residual_window};
pub use sector::{build_sector_operator, Gauge, SectorCoefficients, SectorOperator};
