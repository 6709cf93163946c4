use dunkl_fp::analytic::{eval_descriptor, generate_table1, generate_table2, oscillator_solution, EigenDescriptor};
use dunkl_fp::domain::DunklParams;
use dunkl_fp::opalg::{apply_fp_operator, LaurentPolynomial};
use dunkl_fp::scalar::{convert, ratio};
use dunkl_fp::specfun::{bessel_jn, eval_coefficients, laguerre};
use dunkl_fp::{Descriptor, ExactPotential, Params, Parity, Scalar};
use num_rational::BigRational;
use num_traits::{One, Zero};

type Q = BigRational;

fn factorial(n: i64) -> Q {
    (1..=n).fold(Q::one(), |acc, i| acc * ratio(i, 1))
}

/// Fourth-order central difference.
fn diff<F: Fn(f64) -> f64>(f: &F, x: f64) -> f64 {
    let h = 1e-3;
    (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h)
}

/// `D f` on the full line, reflection applied literally.
fn dunkl<F: Fn(f64) -> f64>(p: &Params, f: F) -> impl Fn(f64) -> f64 {
    let (sigma, mu, gamma) = (*p.sigma(), *p.mu(), *p.gamma());
    move |x| diff(&f, x) + sigma / x * f(x) - mu / x * f(-x) - gamma * diff(&f, -x)
}

/// `-D^2 psi + 2 D(w psi)` pointwise.
fn fp_at(p: &Params, w: impl Fn(f64) -> f64 + Copy, psi: impl Fn(f64) -> f64 + Copy, x: f64) -> f64 {
    let d2 = dunkl(p, dunkl(p, psi));
    let dwp = dunkl(p, move |y| w(y) * psi(y));
    -d2(x) + 2.0 * dwp(x)
}

#[test]
fn table1_series_are_eigenfunctions_to_truncation_order() {
    let a = ratio(2, 1);
    let s = ExactPotential::centrifugal(a).unwrap();
    let terms = 10;
    for row in generate_table1().unwrap() {
        let p = DunklParams::chung_hassanabadi(row.sigma.clone(), row.mu.clone()).unwrap();
        for d in [&row.even, &row.odd] {
            let (power, order) = (d.power.as_integer().unwrap(), d.order.as_integer().unwrap());
            assert_eq!(d.scale, ratio(2, 1));
            // x^power J_order(2x) = sum (-1)^j x^(power + order + 2j) / (j! (j+order)!)
            let series = LaurentPolynomial::from_terms((0..terms).map(|j| {
                let sign = if j % 2 == 0 { Q::one() } else { -Q::one() };
                (power + order + 2 * j, sign / (factorial(j) * factorial(j + order)))
            }));
            let residual = &apply_fp_operator(&p, &s, &series).unwrap() - &series.scale(&d.lambda);
            assert!(!residual.is_zero());
            let lowest = residual.min_degree().unwrap();
            assert!(lowest >= power + order + 2 * terms - 2, "{}: residual starts at x^{lowest}", d.render());
        }
    }
}

#[test]
fn table1_descriptors_solve_the_full_line_equation() {
    let w = |x: f64| 2.0 / x;
    for row in generate_table1().unwrap() {
        let p: Params = DunklParams::chung_hassanabadi(convert(&row.sigma), convert(&row.mu)).unwrap();
        for d in [&row.even, &row.odd] {
            let d: Descriptor = EigenDescriptor::Bessel(d.convert());
            let psi = |x: f64| eval_descriptor(&d, x).unwrap();
            for x in [-3.7, -1.3, 0.9, 2.2, 5.1] {
                let lhs = fp_at(&p, w, psi, x);
                let rhs = 4.0 * psi(x);
                assert!((lhs - rhs).abs() < 1e-6 * rhs.abs().max(1e-2), "{} at {x}: {lhs} vs {rhs}", d.render());
            }
        }
    }
}

#[test]
fn oscillator_descriptors_solve_the_full_line_equation() {
    let a = 4.3;
    let w = move |x: f64| a / x - x;
    for (parity, gamma) in [(Parity::Even, 13.0 / 30.0), (Parity::Odd, -0.48)] {
        let p: Params = DunklParams::two_parameter(0.6, gamma).unwrap();
        for n in 0..4 {
            let d: Descriptor = oscillator_solution(parity, a, &p, n).unwrap().into();
            let lambda = *d.lambda();
            let psi = |x: f64| eval_descriptor(&d, x).unwrap();
            let scale = (0..50).map(|i| psi(0.1 + 0.1 * i as f64).abs()).fold(0.0, f64::max);
            for x in [-2.9, -1.1, 0.7, 1.6, 2.4] {
                let lhs = fp_at(&p, w, psi, x);
                let rhs = lambda * psi(x);
                assert!((lhs - rhs).abs() < 1e-6 * scale.max(1.0) * lambda.max(1.0), "{parity} n={n} at {x}: {lhs} vs {rhs}");
            }
        }
    }
}

#[test]
fn descriptor_parity_matches_signed_bessel_evaluation() {
    for row in generate_table1().unwrap() {
        for d in [&row.even, &row.odd] {
            let (power, order) = (d.power.as_integer().unwrap(), d.order.as_integer().unwrap());
            let e: Descriptor = EigenDescriptor::Bessel(d.convert());
            for i in 1..=1000 {
                let x = -10.0 + 20.0 * (i as f64 - 0.5) / 1000.0;
                let direct = x.powi(power as i32) * bessel_jn(order, 2.0 * x).unwrap();
                let via = eval_descriptor(&e, x).unwrap();
                assert!((direct - via).abs() <= 1e-12 * direct.abs().max(1e-3), "{} at {x}", e.render());
                let mirrored = eval_descriptor(&e, -x).unwrap();
                assert_eq!(mirrored, d.parity.sign::<f64>() * via);
            }
        }
    }
}

#[test]
fn admissible_descriptors_are_regular_at_the_origin() {
    let mut all: Vec<Descriptor> = Vec::new();
    for row in generate_table1().unwrap() {
        all.push(EigenDescriptor::Bessel(row.even.convert()));
        all.push(EigenDescriptor::Bessel(row.odd.convert()));
    }
    for parity in [Parity::Even, Parity::Odd] {
        let table = generate_table2(if parity == Parity::Even { 3 } else { 2 }, parity).unwrap();
        all.extend(table.rows.iter().map(|r| EigenDescriptor::Laguerre(r.descriptor.convert())));
    }
    for d in &all {
        assert!(d.admissible(), "{}", d.render());
        let v = eval_descriptor(d, 1e-6).unwrap();
        assert!(v.is_finite() && v.abs() < 1e-5, "{} at 1e-6: {v}", d.render());
    }
}

/// `L_{n}^alpha` coefficients in `u` built from the three-term recurrence.
fn recurrence_coefficients(n: usize, alpha: &Q) -> Vec<Q> {
    let mut prev: Vec<Q> = vec![Q::one()];
    let mut cur: Vec<Q> = vec![alpha.clone() + Q::one(), -Q::one()];
    if n == 0 {
        return prev;
    }
    for k in 1..n {
        let kq = ratio(k as i64, 1);
        let mut next = vec![Q::zero(); k + 2];
        for (j, c) in cur.iter().enumerate() {
            next[j] += (ratio(2 * k as i64 + 1, 1) + alpha.clone()) * c;
            next[j + 1] -= c.clone();
        }
        for (j, c) in prev.iter().enumerate() {
            next[j] -= (kq.clone() + alpha.clone()) * c;
        }
        prev = cur;
        cur = next.into_iter().map(|c| c / (kq.clone() + Q::one())).collect();
    }
    cur
}

#[test]
fn table2_rows_follow_the_laguerre_recurrence() {
    for (m, parity) in [(3, Parity::Even), (2, Parity::Odd), (4, Parity::Even), (3, Parity::Odd)] {
        let table = generate_table2(m, parity).unwrap();
        for row in &table.rows {
            let alpha = &row.descriptor.alpha;
            assert_eq!(row.coefficients, recurrence_coefficients(row.n, alpha), "{parity} m={m} n={}", row.n);
            let af: f64 = convert(alpha);
            let cf: Vec<f64> = row.coefficients.iter().map(convert).collect();
            for u in [0.0, 0.3, 1.7, 4.2, 9.0] {
                let direct = laguerre(row.n, af, u).unwrap();
                assert!((eval_coefficients(&cf, &u) - direct).abs() < 1e-11 * direct.abs().max(1.0));
            }
        }
    }
}

#[test]
fn table2_default_even_parameters() {
    let table = generate_table2(3, Parity::Even).unwrap();
    assert_eq!(table.gamma, ratio(13, 30));
    assert_eq!(table.rows[0].descriptor.alpha, ratio(121, 34));
    assert_eq!(table.rows[0].descriptor.power, ratio(6, 1));
    assert_eq!(table.rows[0].descriptor.beta, ratio(43, 30));
    let odd = generate_table2(2, Parity::Odd).unwrap();
    assert_eq!(odd.gamma, ratio(-12, 25));
    assert_eq!(odd.rows[0].descriptor.alpha, ratio(2, 1));
    assert_eq!(odd.rows[0].descriptor.power, ratio(5, 1));
    assert_eq!(odd.rows[0].descriptor.beta, ratio(37, 25));
}
