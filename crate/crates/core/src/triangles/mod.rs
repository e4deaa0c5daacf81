//! The triangular arrays `u(n,k)`, `U(n,k)`, `u_r(n,k)`, `U_r(n,k)`.
//!
//! [`Triangle::build`] fills a table from the two-term recurrences
//!
//! ```text
//! u_r(n,k) = u_r(n-1,k-1) - ((n-1)^2 + r) u_r(n-1,k)
//! U_r(n,k) = U_r(n-1,k-1) + (k^2 + r) U_r(n-1,k)
//! ```
//!
//! with `u_r(n,0) = (-1)^n prod_{i<n} (i^2 + r)`, `U_r(n,0) = r^n` and
//! `u_r(0,k) = U_r(0,k) = [k = 0]`. Every other route in [`routes`],
//! [`convert`] and [`identities`] is checked against this table.

pub mod convert;
pub mod identities;
pub mod routes;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::algebra::PolyR;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangleError {
    #[error("index out of range: need 0 <= k <= n, got n={n}, k={k}")]
    OutOfRange { n: usize, k: usize },
    #[error("column k=0 has no predecessor column; this route needs k >= 1")]
    ZeroColumn,
    #[error("n must be at least 1")]
    ZeroRow,
    #[error("need at least {need} distinct sample points, got {got}")]
    TooFewSamples { need: usize, got: usize },
    #[error("series order {order} is below the required minimum {min}")]
    OrderTooSmall { order: usize, min: usize },
    #[error("({n},{k}): expected a constant in r, got {value}")]
    NonConstant { n: usize, k: usize, value: PolyR },
    #[error("({n},{k}): weighted sum {sum} is not divisible by {divisor}")]
    Inexact {
        n: usize,
        k: usize,
        sum: String,
        divisor: BigInt,
    },
    #[error("unknown triangle kind {0:?}")]
    UnknownKind(String),
}

/// Which of the four arrays a [`Triangle`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    /// `u_r(n,k)`
    FirstKindR,
    /// `U_r(n,k)`
    SecondKindR,
    /// `u(n,k) = u_0(n,k)`
    FirstKind,
    /// `U(n,k) = U_0(n,k)`
    SecondKind,
}

impl Kind {
    pub const ALL: [Kind; 4] = [
        Kind::FirstKindR,
        Kind::SecondKindR,
        Kind::FirstKind,
        Kind::SecondKind,
    ];

    pub fn is_first(self) -> bool {
        matches!(self, Kind::FirstKindR | Kind::FirstKind)
    }

    /// `true` for the kinds that carry the symbol `r`.
    pub fn is_parametric(self) -> bool {
        matches!(self, Kind::FirstKindR | Kind::SecondKindR)
    }

    /// The same kind of array with `r` kept symbolic.
    pub fn parametric(self) -> Kind {
        if self.is_first() {
            Kind::FirstKindR
        } else {
            Kind::SecondKindR
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::FirstKindR => "u_r",
            Kind::SecondKindR => "U_r",
            Kind::FirstKind => "u",
            Kind::SecondKind => "U",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = TriangleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| TriangleError::UnknownKind(s.to_string()))
    }
}

/// A lower-triangular table `(n,k) -> PolyR` for `0 <= k <= n <= max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    kind: Kind,
    rows: Vec<Vec<PolyR>>,
    zero: PolyR,
}

impl Triangle {
    /// Builds the table by the defining recurrence. The parametric kinds are
    /// symbolic in `r`; the `r = 0` kinds have constant entries.
    pub fn build(kind: Kind, max_n: usize) -> Self {
        let param = if kind.is_parametric() {
            PolyR::r()
        } else {
            PolyR::zero()
        };
        Self::build_with(kind, max_n, &param)
    }

    /// Builds the table with `r` replaced by `param`. A constant `param`
    /// gives the numeric triangle at that value of `r`.
    pub fn build_with(kind: Kind, max_n: usize, param: &PolyR) -> Self {
        let weight = |i: usize| param + &PolyR::from(BigInt::from(i * i));
        let mut rows: Vec<Vec<PolyR>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![PolyR::one()]);
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let at = |k: usize| prev.get(k).cloned().unwrap_or_default();
            let mut row = Vec::with_capacity(n + 1);
            if kind.is_first() {
                let w = weight(n - 1);
                row.push(-(&w * &prev[0]));
                for k in 1..=n {
                    row.push(&at(k - 1) - &(&w * &at(k)));
                }
            } else {
                row.push(param * &prev[0]);
                for k in 1..=n {
                    row.push(&at(k - 1) + &(&weight(k) * &at(k)));
                }
            }
            rows.push(row);
        }
        Self {
            kind,
            rows,
            zero: PolyR::zero(),
        }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// Entry `(n,k)`; zero when `k > n`.
    ///
    /// Panics if `n` exceeds the table's `max_n`.
    pub fn get(&self, n: usize, k: usize) -> &PolyR {
        assert!(
            n <= self.max_n(),
            "row {n} outside table built to {}",
            self.max_n()
        );
        self.rows[n].get(k).unwrap_or(&self.zero)
    }

    /// Signed lookup following the zero convention for `k < 0` or `k > n`.
    pub fn get_signed(&self, n: usize, k: i64) -> &PolyR {
        match usize::try_from(k) {
            Ok(k) => self.get(n, k),
            Err(_) => &self.zero,
        }
    }

    /// `(-1)^(n-k)` times the entry; for first-kind tables this is the
    /// unsigned number, which has non-negative coefficients.
    pub fn unsigned(&self, n: usize, k: usize) -> PolyR {
        let v = self.get(n, k);
        if self.kind.is_first() && (n - k.min(n)) % 2 == 1 {
            -v
        } else {
            v.clone()
        }
    }

    pub fn row(&self, n: usize) -> &[PolyR] {
        &self.rows[n]
    }

    /// Numeric table at `r = x`.
    pub fn evaluate(&self, x: &BigInt) -> Vec<Vec<BigInt>> {
        self.rows
            .iter()
            .map(|row| row.iter().map(|p| p.eval(x)).collect())
            .collect()
    }

    /// Iterates `(n, k, entry)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &PolyR)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(n, row)| row.iter().enumerate().map(move |(k, p)| (n, k, p)))
    }
}

/// `prod_{i=from}^{to-1} (i^2 + r)` as a polynomial in `r`.
pub(crate) fn shifted_square_product(from: usize, to: usize) -> PolyR {
    (from..to).map(square_plus_r).product()
}

/// `i^2 + r`.
pub fn square_plus_r(i: usize) -> PolyR {
    PolyR::from_i64s(&[(i * i) as i64, 1])
}

pub(crate) fn check_range(n: usize, k: usize) -> Result<(), TriangleError> {
    if k > n {
        Err(TriangleError::OutOfRange { n, k })
    } else {
        Ok(())
    }
}
