//! Conversions between the parametric arrays and their `r = 0` versions.
//!
//! Second kind:
//!
//! ```text
//! U_r(n,k) = sum_{l=k..n} C(n,l) U(l,k) r^(n-l)
//! U(n,k)   = sum_{i=k..n} C(n,i) (-r)^(n-i) U_r(i,k)
//! ```
//!
//! First kind:
//!
//! ```text
//! u_r(n,k) = sum_{i=k..n} C(i,k) (-r)^(i-k) u(n,i)
//! u(n,k)   = sum_{i=k..n} C(i,k) r^(i-k) u_r(n,i)
//! ```
//!
//! The inverse directions must collapse to constants; a leftover power of
//! `r` is reported as [`TriangleError::NonConstant`].

use num_bigint::BigInt;

use super::{check_range, Kind, Triangle, TriangleError};
use crate::algebra::{binom, PolyR};

fn neg_r_pow(e: usize) -> PolyR {
    PolyR::from_i64s(&[0, -1]).pow(e as u32)
}

fn constant_or_err(n: usize, k: usize, value: PolyR) -> Result<BigInt, TriangleError> {
    value
        .as_constant()
        .ok_or(TriangleError::NonConstant { n, k, value })
}

pub fn convert_ur_from_u_second(n: usize, k: usize) -> Result<PolyR, TriangleError> {
    check_range(n, k)?;
    let plain = Triangle::build(Kind::SecondKind, n);
    Ok((k..=n)
        .map(|l| PolyR::monomial(binom(n, l), n - l) * plain.get(l, k))
        .sum())
}

pub fn convert_u_from_ur_second(n: usize, k: usize) -> Result<BigInt, TriangleError> {
    check_range(n, k)?;
    let param = Triangle::build(Kind::SecondKindR, n);
    let sum: PolyR = (k..=n)
        .map(|i| neg_r_pow(n - i).scale(&binom(n, i)) * param.get(i, k))
        .sum();
    constant_or_err(n, k, sum)
}

pub fn convert_ur_from_u_first(n: usize, k: usize) -> Result<PolyR, TriangleError> {
    check_range(n, k)?;
    let plain = Triangle::build(Kind::FirstKind, n);
    Ok((k..=n)
        .map(|i| neg_r_pow(i - k).scale(&binom(i, k)) * plain.get(n, i))
        .sum())
}

pub fn convert_u_from_ur_first(n: usize, k: usize) -> Result<BigInt, TriangleError> {
    check_range(n, k)?;
    let param = Triangle::build(Kind::FirstKindR, n);
    let sum: PolyR = (k..=n)
        .map(|i| PolyR::monomial(binom(i, k), i - k) * param.get(n, i))
        .sum();
    constant_or_err(n, k, sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PolyR {
        s.parse().unwrap()
    }

    #[test]
    fn second_kind_examples() {
        assert_eq!(convert_ur_from_u_second(3, 2).unwrap(), p("3*r+5"));
        assert_eq!(convert_ur_from_u_second(4, 2).unwrap(), p("6*r^2+20*r+21"));
        assert_eq!(convert_u_from_ur_second(3, 2).unwrap(), 5.into());
        assert_eq!(convert_u_from_ur_second(4, 2).unwrap(), 21.into());
        for n in 0..6 {
            assert!(convert_ur_from_u_second(n, n).unwrap().is_one());
            assert_eq!(convert_u_from_ur_second(n, n).unwrap(), 1.into());
        }
    }

    #[test]
    fn first_kind_examples() {
        assert_eq!(convert_ur_from_u_first(4, 3).unwrap(), p("-4*r-14"));
        assert_eq!(convert_ur_from_u_first(3, 1).unwrap(), p("3*r^2+10*r+4"));
        assert_eq!(convert_u_from_ur_first(4, 3).unwrap(), (-14).into());
        assert_eq!(convert_u_from_ur_first(4, 2).unwrap(), 49.into());
        for n in 0..6 {
            assert!(convert_ur_from_u_first(n, n).unwrap().is_one());
            assert_eq!(convert_u_from_ur_first(n, n).unwrap(), 1.into());
        }
    }

    #[test]
    fn conversions_match_tables() {
        let fr = Triangle::build(Kind::FirstKindR, 12);
        let sr = Triangle::build(Kind::SecondKindR, 12);
        let f0 = Triangle::build(Kind::FirstKind, 12);
        let s0 = Triangle::build(Kind::SecondKind, 12);
        for n in 0..=12 {
            for k in 0..=n {
                assert_eq!(&convert_ur_from_u_first(n, k).unwrap(), fr.get(n, k));
                assert_eq!(&convert_ur_from_u_second(n, k).unwrap(), sr.get(n, k));
                assert_eq!(
                    PolyR::from(convert_u_from_ur_first(n, k).unwrap()),
                    *f0.get(n, k)
                );
                assert_eq!(
                    PolyR::from(convert_u_from_ur_second(n, k).unwrap()),
                    *s0.get(n, k)
                );
            }
        }
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(convert_ur_from_u_first(2, 3).is_err());
        assert!(convert_u_from_ur_second(0, 1).is_err());
    }
}
