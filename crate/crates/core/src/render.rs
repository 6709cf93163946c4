//! Number formatting shared by tables, figure data and trajectories.

use crate::scalar::{to_f64, Scalar};

const MAX_DENOMINATOR: i64 = 1000;

/// `value` with 12 significant digits, trailing zeros removed.
pub fn format_sig(value: f64) -> String {
    format_digits(value, 12)
}

pub fn format_digits(value: f64, digits: usize) -> String {
    if value == 0.0 {
        return "0".to_string();
    }
    if !value.is_finite() {
        return format!("{value}");
    }
    let exp = value.abs().log10().floor() as i32;
    if (-5..digits as i32).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        let s = format!("{value:.decimals$}");
        let s = trim_zeros(&s);
        if s == "-0" { "0".to_string() } else { s }
    } else {
        let s = format!("{:.*e}", digits - 1, value);
        let (mantissa, exponent) = s.split_once('e').unwrap();
        format!("{}e{}", trim_zeros(mantissa), exponent)
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// Exact `p/q` when the value is (or is within 1e-12 of) a rational with a
/// small denominator, 12 significant digits otherwise.
pub fn format_number<T: Scalar>(value: &T) -> String {
    if let Some(i) = value.as_integer() {
        return i.to_string();
    }
    let exact = T::identity_tolerance().is_zero();
    if exact {
        let s = value.to_string();
        if let Some((_, den)) = s.split_once('/') {
            if den.len() <= 6 {
                return s;
            }
        }
    }
    let v = to_f64(value);
    match small_fraction(v) {
        Some((p, q)) => format!("{p}/{q}"),
        None => format_sig(v),
    }
}

fn small_fraction(v: f64) -> Option<(i64, i64)> {
    if !v.is_finite() || v.abs() > 1e9 {
        return None;
    }
    for q in 2..=MAX_DENOMINATOR {
        let p = (v * q as f64).round();
        if (v - p / q as f64).abs() <= 1e-12 * v.abs().max(1.0) {
            let p = p as i64;
            if num_integer::gcd(p, q) == 1 {
                return Some((p, q));
            }
        }
    }
    None
}

/// `base^{e}` with braces only when `e` needs more than one character.
pub fn superscript(base: &str, exponent: &str) -> String {
    if exponent.chars().count() == 1 {
        format!("{base}^{exponent}")
    } else {
        format!("{base}^{{{exponent}}}")
    }
}

pub fn subscript(base: &str, index: &str) -> String {
    if index.chars().count() == 1 {
        format!("{base}_{index}")
    } else {
        format!("{base}_{{{index}}}")
    }
}

/// Wraps fractions and negative numbers in parentheses for use as a divisor.
pub fn grouped(number: &str) -> String {
    if number.contains('/') || number.starts_with('-') || number.contains('e') {
        format!("({number})")
    } else {
        number.to_string()
    }
}
