//! Exact operator calculus on Laurent polynomials.

mod derivative;
mod fp;
mod identities;
mod laurent;

pub use derivative::{apply_derivative, apply_derivative_shifted, apply_reflection, derivative_factor};
pub use fp::{
    apply_fp_operator, apply_fp_operator_even_sector, apply_fp_operator_shifted,
    superpotential_laurent,
};
pub use identities::{
    ch_square_closed_form, check_identity, corrupted_tp_derivative, square_closed_form,
    tp_eta_form, tp_square_closed_form, verify_anticommutation, verify_anticommutation_with,
    verify_operator_equality, verify_specializations, verify_square_closed_form,
    verify_square_closed_form_with, verify_tp_rewrite, Report, Violation,
};
pub use laurent::{LaurentPolynomial, ShiftedLaurent};
