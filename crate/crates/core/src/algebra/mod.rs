//! Exact arithmetic substrate.
//!
//! Integers and rationals come from `num-bigint` / `num-rational`; the
//! polynomial ring `Z[r]` in which every symbolic triangle entry lives is
//! [`PolyR`].

mod poly;

pub use num_bigint::BigInt;
pub use num_rational::BigRational as BigRat;
pub use poly::PolyR;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("polynomial syntax error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("binomial coefficient with negative upper index {0}")]
    NegativeBinomial(BigInt),
    #[error("division by zero")]
    DivisionByZero,
}

/// `C(n, k)` for arbitrary-precision arguments. Zero outside `0 <= k <= n`.
pub fn binomial(n: &BigInt, k: &BigInt) -> Result<BigInt, AlgebraError> {
    if n.is_negative() {
        return Err(AlgebraError::NegativeBinomial(n.clone()));
    }
    if k.is_negative() || k > n {
        return Ok(BigInt::zero());
    }
    // symmetric side keeps the loop short
    let lower = std::cmp::min(k.clone(), n - k);
    let mut acc = BigInt::one();
    let mut i = BigInt::zero();
    while i < lower {
        acc *= n - &i;
        i += 1;
        acc /= &i;
    }
    Ok(acc)
}

/// `C(n, k)` for machine-sized indices; zero when `k > n`.
pub fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Builds `num / den` in lowest terms, rejecting a zero denominator.
pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<BigRat, AlgebraError> {
    let den = den.into();
    if den.is_zero() {
        return Err(AlgebraError::DivisionByZero);
    }
    Ok(BigRat::new(num.into(), den))
}

pub fn checked_div(a: &BigRat, b: &BigRat) -> Result<BigRat, AlgebraError> {
    if b.is_zero() {
        return Err(AlgebraError::DivisionByZero);
    }
    Ok(a / b)
}

/// Formats a rational as `p/q`, or as a bare integer when `q = 1`.
pub fn format_rational(q: &BigRat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
