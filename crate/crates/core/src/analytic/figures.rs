use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use crate::analytic::{generate_table1, oscillator_example, oscillator_gamma_for_parity, oscillator_solution, EigenDescriptor};
use crate::domain::{DunklParams, Parity};
use crate::error::{Error, Result};
use crate::render::{format_number, format_sig};
use crate::scalar::to_f64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    /// Even Bessel eigenfunctions of the centrifugal table.
    OneA,
    /// Odd Bessel eigenfunctions of the centrifugal table.
    OneB,
    /// Even oscillator eigenfunctions, `n = 0, 1, 2`.
    TwoA,
    /// Odd oscillator eigenfunctions, `n = 0, 1, 2`.
    TwoB,
}

impl Figure {
    pub const ALL: [Figure; 4] = [Figure::OneA, Figure::OneB, Figure::TwoA, Figure::TwoB];
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Figure::OneA => "1a",
            Figure::OneB => "1b",
            Figure::TwoA => "2a",
            Figure::TwoB => "2b",
        })
    }
}

impl FromStr for Figure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1a" => Ok(Figure::OneA),
            "1b" => Ok(Figure::OneB),
            "2a" => Ok(Figure::TwoA),
            "2b" => Ok(Figure::TwoB),
            _ => Err(Error::Domain(format!("unknown figure '{s}' (expected 1a, 1b, 2a or 2b)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FigureOptions {
    pub xmax: f64,
    pub points: usize,
    /// Also emit `x < 0`, reconstructed from parity.
    pub full_line: bool,
}

impl Default for FigureOptions {
    fn default() -> Self {
        Self { xmax: 10.0, points: 1000, full_line: false }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureData {
    pub comments: Vec<String>,
    pub x: Vec<f64>,
    pub curves: [Vec<f64>; 3],
}

impl FigureData {
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            out.push_str("# ");
            out.push_str(c);
            out.push('\n');
        }
        out.push_str("x,curve1,curve2,curve3\n");
        for (i, x) in self.x.iter().enumerate() {
            out.push_str(&format!(
                "{},{},{},{}\n",
                format_sig(*x),
                format_sig(self.curves[0][i]),
                format_sig(self.curves[1][i]),
                format_sig(self.curves[2][i])
            ));
        }
        out
    }
}

/// `p/q (~decimal)`, or just the integer.
fn with_decimal(v: &BigRational) -> String {
    if v.is_integer() {
        format_number(v)
    } else {
        format!("{} (~{})", format_number(v), format_sig(to_f64(v)))
    }
}

/// The three descriptors plotted in `figure`, with header comments.
pub fn figure_descriptors(figure: Figure) -> Result<(Vec<String>, Vec<EigenDescriptor<f64>>)> {
    match figure {
        Figure::OneA | Figure::OneB => {
            let parity = if figure == Figure::OneA { Parity::Even } else { Parity::Odd };
            let mut comments = vec![format!("figure {figure}: {parity} Bessel eigenfunctions, a = 2, lambda = 4")];
            let mut curves = Vec::new();
            for (i, row) in generate_table1()?.into_iter().enumerate() {
                let d = if parity == Parity::Even { row.even } else { row.odd };
                comments.push(format!(
                    "curve{}: mu = {}, sigma = {}, {}",
                    i + 1,
                    format_number(&row.mu),
                    format_number(&row.sigma),
                    d.render()
                ));
                curves.push(EigenDescriptor::Bessel(d.convert()));
            }
            Ok((comments, curves))
        }
        Figure::TwoA | Figure::TwoB => {
            let (parity, m, label) = if figure == Figure::TwoA {
                (Parity::Even, 3, "alpha_e")
            } else {
                (Parity::Odd, 2, "alpha_o")
            };
            let (a, mu) = oscillator_example();
            let gamma = oscillator_gamma_for_parity(parity, a.clone(), mu.clone(), m)?;
            let params = DunklParams::two_parameter(mu.clone(), gamma.clone())?;
            let mut comments = Vec::new();
            let mut curves = Vec::new();
            for n in 0..3 {
                let d = oscillator_solution(parity, a.clone(), &params, n)?;
                if n == 0 {
                    comments.push(format!(
                        "figure {figure}: {parity} oscillator eigenfunctions, a = {}, mu = {}, gamma = {}, {label} = {}, amplitude 1",
                        format_number(&a),
                        format_number(&mu),
                        with_decimal(&gamma),
                        with_decimal(&d.alpha),
                    ));
                }
                comments.push(format!("curve{}: n = {n}, lambda = {}, {}", n + 1, format_number(&d.lambda), d.render()));
                curves.push(EigenDescriptor::Laguerre(d.convert()));
            }
            Ok((comments, curves))
        }
    }
}

/// Samples `x_i = xmax i / points`, `i = 1..=points` (mirrored when
/// `full_line` is set).
pub fn generate_figure(figure: Figure, options: &FigureOptions) -> Result<FigureData> {
    if options.points == 0 || !(options.xmax > 0.0) {
        return Err(Error::Grid("figure sampling needs points >= 1 and xmax > 0".into()));
    }
    let (comments, descriptors) = figure_descriptors(figure)?;
    let positive: Vec<f64> = (1..=options.points).map(|i| options.xmax * i as f64 / options.points as f64).collect();
    let x: Vec<f64> = if options.full_line {
        positive.iter().rev().map(|v| -v).chain(positive.iter().copied()).collect()
    } else {
        positive
    };
    let sample = |d: &EigenDescriptor<f64>| x.iter().map(|&xi| crate::analytic::eval_descriptor(d, xi)).collect::<Result<Vec<_>>>();
    let curves = [sample(&descriptors[0])?, sample(&descriptors[1])?, sample(&descriptors[2])?];
    Ok(FigureData { comments, x, curves })
}

/// Sign changes of sampled data, located by linear interpolation.
pub fn zero_crossings(x: &[f64], y: &[f64]) -> Vec<f64> {
    let scale = y.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let floor = 1e-10 * scale;
    let mut out = Vec::new();
    for i in 1..y.len() {
        let (y0, y1) = (y[i - 1], y[i]);
        if y0.abs() > floor && y1.abs() > floor && (y0 < 0.0) != (y1 < 0.0) {
            out.push(x[i - 1] - y0 * (x[i] - x[i - 1]) / (y1 - y0));
        }
    }
    out
}

/// Interior local extrema of `|y|` above 1e-6 of the maximum, refined by
/// parabolic interpolation.
pub fn peak_locations(x: &[f64], y: &[f64]) -> Vec<f64> {
    let scale = y.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let mut out = Vec::new();
    for i in 1..y.len().saturating_sub(1) {
        let (a, b, c) = (y[i - 1].abs(), y[i].abs(), y[i + 1].abs());
        if b > a && b >= c && b > 1e-6 * scale {
            let denom = a - 2.0 * b + c;
            let shift = if denom != 0.0 { 0.5 * (a - c) / denom } else { 0.0 };
            out.push(x[i] + shift * (x[i + 1] - x[i]));
        }
    }
    out
}
