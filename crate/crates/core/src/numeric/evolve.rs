use std::fmt;
use std::str::FromStr;

use crate::domain::{HalfLineGrid, ParityFunction};
use crate::error::{Error, Result};
use crate::numeric::SectorOperator;
use crate::render::format_sig;
use crate::scalar::{cst, Real};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    BackwardEuler,
    CrankNicolson,
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scheme::BackwardEuler => "backward-euler",
            Scheme::CrankNicolson => "crank-nicolson",
        })
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "backward-euler" | "be" => Ok(Scheme::BackwardEuler),
            "crank-nicolson" | "cn" => Ok(Scheme::CrankNicolson),
            _ => Err(Error::Domain(format!("unknown scheme '{s}'"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Trajectory<T> {
    pub times: Vec<T>,
    pub states: Vec<ParityFunction<T>>,
    pub dt: T,
    pub scheme: Scheme,
    pub grid: HalfLineGrid<T>,
    /// Symmetrizing weight of the operator; modes are orthogonal under it.
    pub weight: Vec<T>,
}

/// Integrates `dP/dt = -L P` with an implicit scheme; the banded system is
/// factored once.
pub fn evolve<T: Real>(
    op: &SectorOperator<T>,
    p0: &ParityFunction<T>,
    dt: T,
    steps: usize,
    scheme: Scheme,
) -> Result<Trajectory<T>> {
    op.check(p0)?;
    if !(dt > T::zero()) {
        return Err(Error::Range(format!("dt = {dt:?} must be positive")));
    }
    let a = op.matrix();
    let (lhs, rhs) = match scheme {
        Scheme::BackwardEuler => (a.affine(T::one(), dt), None),
        Scheme::CrankNicolson => {
            let half = dt / cst(2.0);
            (a.affine(T::one(), half), Some(a.affine(T::one(), -half)))
        }
    };
    let lu = lhs.lu()?;
    let mut times = Vec::with_capacity(steps + 1);
    let mut states = Vec::with_capacity(steps + 1);
    times.push(T::zero());
    states.push(p0.clone());
    let mut current = p0.samples.clone();
    for step in 1..=steps {
        let mut next = match &rhs {
            Some(m) => m.matvec(&current),
            None => current.clone(),
        };
        lu.solve_in_place(&mut next);
        if next.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite(step));
        }
        times.push(dt * cst(step as f64));
        states.push(ParityFunction::new(p0.parity, next.clone()));
        current = next;
    }
    Ok(Trajectory { times, states, dt, scheme, grid: op.grid().clone(), weight: op.symmetrizing_weight() })
}

impl<T: Real> Trajectory<T> {
    /// `sum_i weight_i u_i v_i`.
    pub fn inner(&self, u: &[T], v: &[T]) -> T {
        self.weight.iter().zip(u).zip(v).fold(T::zero(), |acc, ((&w, &a), &b)| acc + w * a * b)
    }

    /// `t,x,value` rows, time-major, 12 significant digits.
    pub fn to_csv(&self) -> String {
        let nodes = self.grid.nodes();
        let mut out = String::from("t,x,value\n");
        for (t, state) in self.times.iter().zip(&self.states) {
            let t = format_sig(t.to_f64().unwrap());
            for (x, v) in nodes.iter().zip(&state.samples) {
                out.push_str(&t);
                out.push(',');
                out.push_str(&format_sig(x.to_f64().unwrap()));
                out.push(',');
                out.push_str(&format_sig(v.to_f64().unwrap()));
                out.push('\n');
            }
        }
        out
    }

    /// `int P |x|^(2p) dx` over the full line for each stored state.
    pub fn weighted_mass(&self, exponent: T) -> Vec<T> {
        let h = self.grid.h();
        let w: Vec<T> = self.grid.nodes().into_iter().map(|x| x.powf(exponent + exponent)).collect();
        self.states
            .iter()
            .map(|s| {
                let sum = s.samples.iter().zip(&w).fold(T::zero(), |acc, (&p, &w)| acc + p * w);
                match s.parity {
                    crate::domain::Parity::Even => cst::<T>(2.0) * h * sum,
                    crate::domain::Parity::Odd => T::zero(),
                }
            })
            .collect()
    }
}

/// Least-squares slope of `-ln |<probe, P(t)>|` against `t`.
///
/// Samples are used until the overlap falls below 1e-12 of its initial
/// magnitude; at least 10 are required.
pub fn decay_rate<T: Real>(traj: &Trajectory<T>, probe: &ParityFunction<T>) -> Result<T> {
    if probe.parity != traj.states[0].parity || probe.len() != traj.weight.len() {
        return Err(Error::ParityMismatch("probe does not match the trajectory".into()));
    }
    let overlaps: Vec<T> = traj.states.iter().map(|s| traj.inner(&probe.samples, &s.samples)).collect();
    let first = overlaps[0].abs();
    if first == T::zero() {
        return Err(Error::Signal("probe is orthogonal to the initial state".into()));
    }
    let floor = cst::<T>(1e-12) * first;
    let usable = overlaps.iter().take_while(|o| o.abs() > floor).count();
    if usable < 10 {
        return Err(Error::Signal(format!("only {usable} samples above 1e-12 of the initial overlap")));
    }
    let ts = &traj.times[..usable];
    let ys: Vec<T> = overlaps[..usable].iter().map(|o| o.abs().ln()).collect();
    let count = cst::<T>(usable as f64);
    let tm = ts.iter().fold(T::zero(), |a, &t| a + t) / count;
    let ym = ys.iter().fold(T::zero(), |a, &y| a + y) / count;
    let (mut sxy, mut sxx) = (T::zero(), T::zero());
    for (&t, &y) in ts.iter().zip(&ys) {
        sxy = sxy + (t - tm) * (y - ym);
        sxx = sxx + (t - tm) * (t - tm);
    }
    Ok(-sxy / sxx)
}
