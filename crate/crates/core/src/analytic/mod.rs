//! Closed-form eigensystems: Bessel solutions for `w = a/x`, Laguerre
//! solutions for `w = a/x - x`, their admissibility, and table and figure
//! generation.

mod centrifugal;
mod descriptor;
mod figures;
mod oscillator;
mod tables;

pub use centrifugal::{bessel_admissible, centrifugal_admissible_mu, centrifugal_admissible_sigma, centrifugal_solution};
pub use descriptor::{eval_descriptor, BesselDescriptor, EigenDescriptor, LaguerreDescriptor};
pub use figures::{figure_descriptors, generate_figure, peak_locations, zero_crossings, Figure, FigureData, FigureOptions};
pub use oscillator::{normalize_laguerre, oscillator_gamma_for_parity, oscillator_solution};
pub use tables::{
    centrifugal_example_rows, generate_table1, generate_table2, generate_table2_for, oscillator_example, table1_csv,
    table2_csv, Table1Row, Table2, Table2Row,
};
