use std::fmt;
use std::str::FromStr;

use crate::scalar::Scalar;

/// Eigenvalue of the reflection `R`: `R psi = +psi` or `R psi = -psi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn sign<T: Scalar>(self) -> T {
        match self {
            Parity::Even => T::one(),
            Parity::Odd => -T::one(),
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }

    /// Parity of the monomial `x^k`.
    pub fn of_power(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

impl FromStr for Parity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "even" | "e" | "+" => Ok(Parity::Even),
            "odd" | "o" | "-" => Ok(Parity::Odd),
            other => Err(format!("unknown parity `{other}`")),
        }
    }
}
