//! Identity checks tying the triangles to polynomials and generating
//! functions.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{square_plus_r, Kind, Triangle, TriangleError};
use crate::algebra::{binom, factorial, BigRat, PolyR};

/// Checks the connection identities at integer sample points:
///
/// ```text
/// prod_{i<n} (x - i^2) = sum_k u_r(n,k) (x + r)^k        (first kind)
/// (x + r)^n            = sum_k U_r(n,k) prod_{i<k} (x - i^2)   (second kind)
/// ```
///
/// Both sides have degree `n` in `x`, so agreement at `n + 1` distinct points
/// is equality. The `r = 0` kinds ignore `r_val`.
pub fn verify_connection_identity(
    kind: Kind,
    n: usize,
    r_val: &BigInt,
    x_samples: &[BigInt],
) -> Result<bool, TriangleError> {
    let distinct: BTreeSet<&BigInt> = x_samples.iter().collect();
    if distinct.len() < n + 1 {
        return Err(TriangleError::TooFewSamples {
            need: n + 1,
            got: distinct.len(),
        });
    }
    let r = if kind.is_parametric() {
        r_val.clone()
    } else {
        BigInt::zero()
    };
    let table = Triangle::build_with(kind.parametric(), n, &PolyR::constant(r.clone()));
    let entry = |k: usize| table.get(n, k).eval(&BigInt::zero());
    let central =
        |x: &BigInt, len: usize| -> BigInt { (0..len).map(|i| x - BigInt::from(i * i)).product() };

    Ok(distinct.into_iter().all(|x| {
        let shifted = x + &r;
        if kind.is_first() {
            let rhs: BigInt = (0..=n)
                .map(|k| entry(k) * num_traits::pow(shifted.clone(), k))
                .sum();
            central(x, n) == rhs
        } else {
            let rhs: BigInt = (0..=n).map(|k| entry(k) * central(x, k)).sum();
            num_traits::pow(shifted, n) == rhs
        }
    }))
}

/// Coefficients in `t` of `prod_{j<n} (1 + (j^2 + r) t)`, each a polynomial
/// in `r`.
pub fn ogf_first_kind_coeffs(n: usize) -> Vec<PolyR> {
    let mut coeffs = vec![PolyR::one()];
    for j in 0..n {
        let w = square_plus_r(j);
        let mut next = coeffs.clone();
        next.push(PolyR::zero());
        for (d, c) in coeffs.iter().enumerate() {
            next[d + 1] = &next[d + 1] + &(&w * c);
        }
        coeffs = next;
    }
    coeffs
}

/// `true` iff `[t^k] prod_{j<n} (1 + (j^2+r) t) = (-1)^k u_r(n,n-k)` for every
/// `k <= order` (zero past `k = n`).
pub fn ogf_first_kind_check(n: usize, order: usize) -> Result<bool, TriangleError> {
    if order < n {
        return Err(TriangleError::OrderTooSmall { order, min: n });
    }
    let coeffs = ogf_first_kind_coeffs(n);
    let table = Triangle::build(Kind::FirstKindR, n);
    Ok((0..=order).all(|k| {
        let got = coeffs.get(k).cloned().unwrap_or_default();
        let want = if k > n {
            PolyR::zero()
        } else if k % 2 == 1 {
            -table.get(n, n - k)
        } else {
            table.get(n, n - k).clone()
        };
        got == want
    }))
}

/// Power-series coefficients of `t^k / prod_{j=0..k} (1 - (j^2 + r) t)` up
/// to and including `t^order`.
pub fn ogf_second_kind_series(k: usize, order: usize) -> Result<Vec<PolyR>, TriangleError> {
    if order < k {
        return Err(TriangleError::OrderTooSmall { order, min: k });
    }
    let len = order + 1;
    let mut series = vec![PolyR::zero(); len];
    series[k] = PolyR::one();
    for j in 0..=k {
        // multiply by 1/(1 - w t): s'[m] = s[m] + w s'[m-1]
        let w = square_plus_r(j);
        for m in 1..len {
            let carry = &w * &series[m - 1];
            series[m] = &series[m] + &carry;
        }
    }
    Ok(series)
}

/// `true` iff the series coefficients of column `k` match `U_r(n,k)` for all
/// `n <= order`.
pub fn ogf_second_kind_check(k: usize, order: usize) -> Result<bool, TriangleError> {
    let series = ogf_second_kind_series(k, order)?;
    let table = Triangle::build(Kind::SecondKindR, order);
    Ok(series.iter().enumerate().all(|(n, c)| c == table.get(n, k)))
}

/// Truncated exponential generating function of column `k` at `r = r_val`:
/// the rational coefficients of
///
/// ```text
/// (1/(2k)!) sum_{j=-k..k} (-1)^(k+j) C(2k,k-j) exp((j^2 + r) t)
/// ```
///
/// up to `t^n_max`.
pub fn egf_second_kind_series(k: usize, n_max: usize, r_val: &BigInt) -> Vec<BigRat> {
    let norm = factorial(2 * k);
    let mut series = vec![BigRat::zero(); n_max + 1];
    for j in -(k as i64)..=(k as i64) {
        let ja = j.unsigned_abs() as usize;
        let mut weight = binom(2 * k, k - ja);
        if (k as i64 + j).rem_euclid(2) == 1 {
            weight = -weight;
        }
        let rate = r_val + BigInt::from(ja * ja);
        // exp(rate t) = sum rate^n t^n / n!
        let mut term = BigRat::new(weight, norm.clone());
        for (n, slot) in series.iter_mut().enumerate() {
            if n > 0 {
                term *= BigRat::new(rate.clone(), BigInt::from(n));
            }
            *slot += &term;
        }
    }
    series
}

/// `true` iff `n! [t^n]` of the exponential sum equals `U_r(n,k)` at `r_val`
/// for all `k <= n <= n_max`.
pub fn egf_second_kind_check(k: usize, n_max: usize, r_val: &BigInt) -> bool {
    let series = egf_second_kind_series(k, n_max, r_val);
    let table = Triangle::build_with(Kind::SecondKindR, n_max, &PolyR::constant(r_val.clone()));
    (k..=n_max).all(|n| {
        let scaled = &series[n] * BigRat::from_integer(factorial(n));
        scaled == BigRat::from_integer(table.get(n, k).eval(&BigInt::zero()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PolyR {
        s.parse().unwrap()
    }

    fn ints(range: std::ops::RangeInclusive<i64>) -> Vec<BigInt> {
        range.map(BigInt::from).collect()
    }

    #[test]
    fn connection_examples() {
        // x(x-1) = sum_k u_1(2,k) (x+1)^k with u_1(2,.) = (2, -3, 1):
        // 2 - 3(x+1) + (x+1)^2 = x^2 - x
        assert!(verify_connection_identity(Kind::FirstKindR, 2, &1.into(), &ints(-2..=2)).unwrap());
        assert!(verify_connection_identity(Kind::SecondKindR, 0, &7.into(), &ints(5..=5)).unwrap());
        assert!(verify_connection_identity(Kind::SecondKindR, 3, &2.into(), &ints(0..=3)).unwrap());
    }

    #[test]
    fn connection_requires_enough_distinct_points() {
        let samples = vec![BigInt::from(1), BigInt::from(1), BigInt::from(2)];
        assert_eq!(
            verify_connection_identity(Kind::FirstKindR, 2, &0.into(), &samples),
            Err(TriangleError::TooFewSamples { need: 3, got: 2 })
        );
    }

    #[test]
    fn connection_holds_over_range() {
        for n in 0..=10 {
            for r in 0..=5 {
                let xs = ints(-3..=(n as i64 - 3));
                for kind in Kind::ALL {
                    assert!(verify_connection_identity(kind, n, &r.into(), &xs).unwrap());
                }
            }
        }
    }

    #[test]
    fn first_kind_ogf_examples() {
        assert_eq!(
            ogf_first_kind_coeffs(2),
            vec![p("1"), p("2*r+1"), p("r^2+r")]
        );
        assert_eq!(ogf_first_kind_coeffs(0), vec![PolyR::one()]);
        assert_eq!(ogf_first_kind_coeffs(4)[1], p("4*r+14"));
        for n in 0..=10 {
            assert!(ogf_first_kind_check(n, n + 2).unwrap());
        }
        assert!(ogf_first_kind_check(3, 2).is_err());
    }

    #[test]
    fn second_kind_ogf_examples() {
        assert_eq!(ogf_second_kind_series(1, 3).unwrap()[3], p("3*r^2+3*r+1"));
        let col0 = ogf_second_kind_series(0, 6).unwrap();
        for (n, c) in col0.iter().enumerate() {
            assert_eq!(c, &PolyR::r().pow(n as u32));
        }
        assert_eq!(ogf_second_kind_series(2, 3).unwrap()[3], p("3*r+5"));
        for k in 0..=6 {
            assert!(ogf_second_kind_check(k, 12).unwrap());
        }
    }

    #[test]
    fn egf_examples() {
        let s = egf_second_kind_series(2, 3, &2.into());
        assert_eq!(
            &s[3] * BigRat::from_integer(6.into()),
            BigRat::from_integer(11.into())
        );
        assert!(egf_second_kind_check(2, 3, &2.into()));
        assert!(egf_second_kind_check(0, 8, &3.into()));
        let s = egf_second_kind_series(1, 4, &1.into());
        assert_eq!(
            &s[4] * BigRat::from_integer(24.into()),
            BigRat::from_integer(15.into())
        );
        for k in 0..=6 {
            for r in 0..=5 {
                assert!(egf_second_kind_check(k, 12, &r.into()));
            }
        }
    }

    #[test]
    fn egf_low_coefficients_vanish() {
        // the sum starts at t^k
        for k in 1..=5 {
            let s = egf_second_kind_series(k, k, &3.into());
            assert!(s[..k].iter().all(Zero::is_zero));
        }
    }
}
