use num_rational::BigRational;

use crate::analytic::{centrifugal_solution, oscillator_gamma_for_parity, oscillator_solution, BesselDescriptor, LaguerreDescriptor};
use crate::domain::{DunklParams, Parity};
use crate::error::Result;
use crate::opalg::LaurentPolynomial;
use crate::render::format_number;
use crate::scalar::ratio;
use crate::specfun::{laguerre_alpha_polynomials, laguerre_coefficients};

/// `a` and `mu` of the worked oscillator example.
pub fn oscillator_example() -> (BigRational, BigRational) {
    (ratio(43, 10), ratio(3, 5))
}

/// `(mu, sigma)` pairs of the centrifugal table, with `a = 2`, `lambda = 4`.
pub fn centrifugal_example_rows() -> [(BigRational, BigRational); 3] {
    [(ratio(1, 2), ratio(5, 2)), (ratio(11, 2), ratio(7, 2)), (ratio(9, 2), ratio(9, 2))]
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table1Row {
    pub mu: BigRational,
    pub sigma: BigRational,
    pub even: BesselDescriptor<BigRational>,
    pub odd: BesselDescriptor<BigRational>,
}

pub fn generate_table1() -> Result<Vec<Table1Row>> {
    let a = ratio(2, 1);
    let lambda = ratio(4, 1);
    centrifugal_example_rows()
        .into_iter()
        .map(|(mu, sigma)| {
            Ok(Table1Row {
                even: centrifugal_solution(Parity::Even, a.clone(), sigma.clone(), mu.clone(), lambda.clone())?,
                odd: centrifugal_solution(Parity::Odd, a.clone(), sigma.clone(), mu.clone(), lambda.clone())?,
                mu,
                sigma,
            })
        })
        .collect()
}

pub fn table1_csv(rows: &[Table1Row]) -> String {
    let mut out = String::from("mu,sigma,even,odd\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            format_number(&r.mu),
            format_number(&r.sigma),
            r.even.render(),
            r.odd.render()
        ));
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table2Row {
    pub n: usize,
    pub descriptor: LaguerreDescriptor<BigRational>,
    /// Coefficients of `u^j`, `u = x^2/beta`, as polynomials in `alpha`.
    pub alpha_polynomials: Vec<LaurentPolynomial<BigRational>>,
    /// The same coefficients at the sector's `alpha`.
    pub coefficients: Vec<BigRational>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table2 {
    pub parity: Parity,
    pub m: u32,
    pub a: BigRational,
    pub mu: BigRational,
    pub gamma: BigRational,
    pub eta: BigRational,
    pub rows: Vec<Table2Row>,
}

/// Rows `n = 0..=3` for the worked oscillator example with `gamma` fixed by
/// `m` (even: power `2m`; odd: power `2m + 1`).
pub fn generate_table2(m: u32, parity: Parity) -> Result<Table2> {
    let (a, mu) = oscillator_example();
    generate_table2_for(a, mu, m, parity)
}

pub fn generate_table2_for(a: BigRational, mu: BigRational, m: u32, parity: Parity) -> Result<Table2> {
    let gamma = oscillator_gamma_for_parity(parity, a.clone(), mu.clone(), m)?;
    let params = DunklParams::two_parameter(mu.clone(), gamma.clone())?;
    let rows = (0..=3)
        .map(|n| {
            let descriptor = oscillator_solution(parity, a.clone(), &params, n)?;
            let coefficients = laguerre_coefficients(n, &descriptor.alpha);
            Ok(Table2Row { n, alpha_polynomials: laguerre_alpha_polynomials(n), coefficients, descriptor })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Table2 { parity, m, a, mu, eta: params.eta().clone(), gamma, rows })
}

pub fn table2_csv(table: &Table2) -> String {
    let first = &table.rows[0].descriptor;
    let mut out = format!(
        "# parity = {}, m = {}, a = {}, mu = {}, gamma = {}, eta = {}, beta = {}, alpha = {}, power = {}\n",
        table.parity,
        table.m,
        format_number(&table.a),
        format_number(&table.mu),
        format_number(&table.gamma),
        format_number(&table.eta),
        format_number(&first.beta),
        format_number(&first.alpha),
        format_number(&first.power),
    );
    out.push_str("# coefficients multiply u^0, u^1, ... with u = x^2/beta\n");
    out.push_str("n,lambda,eigenfunction,coefficients_alpha,coefficients_value\n");
    for r in &table.rows {
        let symbolic: Vec<String> = r.alpha_polynomials.iter().map(|p| p.display_in("alpha")).collect();
        let values: Vec<String> = r.coefficients.iter().map(format_number).collect();
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.n,
            format_number(&r.descriptor.lambda),
            r.descriptor.render(),
            symbolic.join("; "),
            values.join("; ")
        ));
    }
    out
}
