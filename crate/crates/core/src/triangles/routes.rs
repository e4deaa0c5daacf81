//! Routes to the triangle entries that do not go through the defining
//! two-term recurrence.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{check_range, shifted_square_product, square_plus_r, TriangleError};
use crate::algebra::{binom, factorial, BigRat, PolyR};

/// Signed weight of the `j`-th term in the explicit sum for `U_r(n,k)`,
/// summed over `j` and `-j`: `(-1)^(k+j) C(2k, k-j)` for `j = 0`, twice that
/// for `j >= 1`.
fn explicit_weight(k: usize, j: usize) -> BigInt {
    let c = binom(2 * k, k - j);
    let c = if j == 0 { c } else { c * 2 };
    if (k + j) % 2 == 1 {
        -c
    } else {
        c
    }
}

/// `U_r(n,k)` at `r = r_val` from the explicit alternating sum
///
/// ```text
/// (1/(2k)!) * sum_{j=-k..k} (-1)^(k+j) C(2k, k-j) (j^2 + r)^n
/// ```
///
/// The `j = 0` term enters once, every other `j` twice.
pub fn explicit_second_kind(n: usize, k: usize, r_val: &BigInt) -> Result<BigInt, TriangleError> {
    check_range(n, k)?;
    let sum: BigInt = (0..=k)
        .map(|j| explicit_weight(k, j) * num_traits::pow(r_val + BigInt::from(j * j), n))
        .sum();
    let divisor = factorial(2 * k);
    if !(&sum % &divisor).is_zero() {
        return Err(TriangleError::Inexact {
            n,
            k,
            sum: sum.to_string(),
            divisor,
        });
    }
    Ok(sum / divisor)
}

/// Symbolic form of [`explicit_second_kind`]: the same sum over `Z[r]`,
/// divided coefficientwise by `(2k)!`.
pub fn explicit_second_kind_poly(n: usize, k: usize) -> Result<PolyR, TriangleError> {
    check_range(n, k)?;
    let sum: PolyR = (0..=k)
        .map(|j| square_plus_r(j).pow(n as u32).scale(&explicit_weight(k, j)))
        .sum();
    let divisor = factorial(2 * k);
    sum.div_exact(&divisor)
        .ok_or_else(|| TriangleError::Inexact {
            n,
            k,
            sum: sum.to_string(),
            divisor,
        })
}

/// The explicit sum exactly as it is usually printed,
/// `2/(2k)! * sum_{j=0..k} (-1)^(k+j) C(2k,k-j) (j^2+r)^n`, which doubles
/// the `j = 0` term. Kept only to document where it departs from the
/// recurrence; it agrees when `r = 0` and generally not otherwise.
pub fn explicit_second_kind_literal(
    n: usize,
    k: usize,
    r_val: &BigInt,
) -> Result<BigRat, TriangleError> {
    check_range(n, k)?;
    let sum: BigInt = (0..=k)
        .map(|j| {
            let c = binom(2 * k, k - j) * num_traits::pow(r_val + BigInt::from(j * j), n);
            if (k + j) % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .sum();
    Ok(BigRat::new(sum * 2, factorial(2 * k)))
}

/// `u_r(n,k)` by the column recurrence
///
/// ```text
/// u_r(n,k) = sum_{l=k..n} (-1)^(n-l) u_r(l-1,k-1) prod_{i=l}^{n-1} (i^2 + r)
/// ```
///
/// Columns are generated from the closed-form column 0 using only this
/// recurrence.
pub fn row_recurrence_first(n: usize, k: usize) -> Result<PolyR, TriangleError> {
    if k == 0 {
        return Err(TriangleError::ZeroColumn);
    }
    check_range(n, k)?;
    // column[m] = u_r(m, c) for the current c
    let mut column: Vec<PolyR> = (0..=n)
        .map(|m| {
            let p = shifted_square_product(0, m);
            if m % 2 == 1 {
                -p
            } else {
                p
            }
        })
        .collect();
    for c in 1..=k {
        let next = (0..=n)
            .map(|m| {
                (c..=m)
                    .map(|l| {
                        let term = &column[l - 1] * &shifted_square_product(l, m);
                        if (m - l) % 2 == 1 {
                            -term
                        } else {
                            term
                        }
                    })
                    .sum()
            })
            .collect();
        column = next;
    }
    Ok(column.swap_remove(n))
}

/// `U_r(n,k)` by the geometric column recurrence
///
/// ```text
/// U_r(n,k) = sum_{l=k..n} U_r(l-1,k-1) (k^2 + r)^(n-l)
/// ```
///
/// starting from `U_r(m,0) = r^m`.
pub fn geometric_recurrence_second(n: usize, k: usize) -> Result<PolyR, TriangleError> {
    if k == 0 {
        return Err(TriangleError::ZeroColumn);
    }
    check_range(n, k)?;
    let mut column: Vec<PolyR> = (0..=n).map(|m| PolyR::r().pow(m as u32)).collect();
    for c in 1..=k {
        let w = square_plus_r(c);
        let next = (0..=n)
            .map(|m| {
                (c..=m)
                    .map(|l| &column[l - 1] * &w.pow((m - l) as u32))
                    .sum()
            })
            .collect();
        column = next;
    }
    Ok(column.swap_remove(n))
}

/// Entries with a closed form in `n` alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialValue {
    /// `u_r(n,1)`
    FirstColumnOne,
    /// `u_r(n,n-1)`
    FirstSubdiagonal,
    /// `U_r(n,1)`
    SecondColumnOne,
    /// `U_r(n,n-1)`
    SecondSubdiagonal,
}

impl SpecialValue {
    /// The `(n, k)` position this closed form describes.
    pub fn position(self, n: usize) -> (usize, usize) {
        match self {
            SpecialValue::FirstColumnOne | SpecialValue::SecondColumnOne => (n, 1),
            SpecialValue::FirstSubdiagonal | SpecialValue::SecondSubdiagonal => (n, n - 1),
        }
    }
}

pub fn special_value(which: SpecialValue, n: usize) -> Result<PolyR, TriangleError> {
    if n == 0 {
        return Err(TriangleError::ZeroRow);
    }
    let weight_sum = || -> PolyR { (0..n).map(square_plus_r).sum() };
    Ok(match which {
        SpecialValue::FirstColumnOne => {
            // sum over i of the product omitting the i-th factor; stays in Z[r]
            let s: PolyR = (0..n)
                .map(|i| {
                    (0..n)
                        .filter(|&l| l != i)
                        .map(square_plus_r)
                        .product::<PolyR>()
                })
                .sum();
            if (n - 1) % 2 == 1 {
                -s
            } else {
                s
            }
        }
        SpecialValue::FirstSubdiagonal => -weight_sum(),
        SpecialValue::SecondColumnOne => {
            let n = n as u32;
            &PolyR::from_i64s(&[1, 1]).pow(n) - &PolyR::r().pow(n)
        }
        SpecialValue::SecondSubdiagonal => weight_sum(),
    })
}

/// Signed Stirling numbers of the first kind, rows `0..=max_n`:
/// `s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k)`, `s(0,0) = 1`.
pub fn stirling_first_table(max_n: usize) -> Vec<Vec<BigInt>> {
    let mut rows = vec![vec![BigInt::one()]];
    for n in 1..=max_n {
        let prev = &rows[n - 1];
        let at = |k: usize| prev.get(k).cloned().unwrap_or_default();
        let mut row = vec![BigInt::zero(); n + 1];
        for (k, slot) in row.iter_mut().enumerate() {
            let left = if k == 0 { BigInt::zero() } else { at(k - 1) };
            *slot = left - at(k) * BigInt::from(n - 1);
        }
        rows.push(row);
    }
    rows
}

pub fn stirling_first(n: usize, k: usize) -> Result<BigInt, TriangleError> {
    check_range(n, k)?;
    Ok(stirling_first_table(n).swap_remove(n).swap_remove(k))
}

/// `u_r(n,k)` through products of Stirling numbers of the first kind:
///
/// ```text
/// u_r(n,n-m) = sum_{i=0..m} sum_{j=-i..i} (-1)^(m+j) C(n-i, m-i)
///              s(n, n-i+j) s(n, n-i-j) r^(m-i)
/// ```
pub fn ur_via_stirling(n: usize, k: usize) -> Result<PolyR, TriangleError> {
    check_range(n, k)?;
    let m = n - k;
    let s_row = stirling_first_table(n).swap_remove(n);
    let s = |idx: i64| -> BigInt {
        usize::try_from(idx)
            .ok()
            .and_then(|i| s_row.get(i).cloned())
            .unwrap_or_default()
    };
    let n_i = n as i64;
    let mut total = PolyR::zero();
    for i in 0..=m {
        let ii = i as i64;
        let inner: BigInt = (-ii..=ii)
            .map(|j| {
                let v = s(n_i - ii + j) * s(n_i - ii - j);
                if (m as i64 + j).rem_euclid(2) == 1 {
                    -v
                } else {
                    v
                }
            })
            .sum();
        let c = binom(n - i, m - i) * inner;
        total = total + PolyR::monomial(c, m - i);
    }
    Ok(total)
}
