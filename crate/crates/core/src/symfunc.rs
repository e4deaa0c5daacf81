//! Elementary and complete homogeneous symmetric functions over `Z[r]`.
//!
//! Both are computed by multiplying in one variable at a time:
//! `sum_k e_k t^k = prod (1 + z_i t)` and `sum_k h_k t^k = prod 1/(1 - z_i t)`.
//! The triangles are special values:
//!
//! ```text
//! u_r(n, n-k) = (-1)^k e_k(r, 1+r, 4+r, ..., (n-1)^2+r)
//! U_r(n+k, n) = h_k(r, 1+r, 4+r, ..., n^2+r)
//! ```

use thiserror::Error;

use crate::algebra::{binom, PolyR};
use crate::triangles::square_plus_r;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("k = {k} exceeds the number of variables {n}")]
    DegreeTooLarge { k: usize, n: usize },
}

/// The variables `z_1, ..., z_n` after substitution.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SymInput {
    values: Vec<PolyR>,
}

impl SymInput {
    pub fn new(values: Vec<PolyR>) -> Self {
        Self { values }
    }

    pub fn from_i64s(values: &[i64]) -> Self {
        Self::new(values.iter().map(|&v| PolyR::from(v)).collect())
    }

    /// `(r, 1^2 + r, ..., (len-1)^2 + r)`.
    pub fn shifted_squares(len: usize) -> Self {
        Self::new((0..len).map(square_plus_r).collect())
    }

    pub fn values(&self) -> &[PolyR] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Every variable shifted by `t`.
    pub fn shifted(&self, t: &PolyR) -> Self {
        Self::new(self.values.iter().map(|z| z + t).collect())
    }

    /// Every variable squared.
    pub fn squared(&self) -> Self {
        Self::new(self.values.iter().map(|z| z * z).collect())
    }
}

/// `e_0, ..., e_n` in one pass.
pub fn elementary_all(input: &SymInput) -> Vec<PolyR> {
    let mut e = vec![PolyR::one()];
    for z in input.values() {
        e.push(PolyR::zero());
        for j in (1..e.len()).rev() {
            let add = z * &e[j - 1];
            e[j] = &e[j] + &add;
        }
    }
    e
}

/// `h_0, ..., h_max_k` in one pass.
pub fn homogeneous_all(max_k: usize, input: &SymInput) -> Vec<PolyR> {
    let mut h = vec![PolyR::zero(); max_k + 1];
    h[0] = PolyR::one();
    for z in input.values() {
        for j in 1..=max_k {
            let add = z * &h[j - 1];
            h[j] = &h[j] + &add;
        }
    }
    h
}

/// `e_k(z)`; zero for `k < 0` or `k > n`.
pub fn elementary(k: i64, input: &SymInput) -> PolyR {
    match usize::try_from(k) {
        Ok(k) if k <= input.len() => elementary_all(input).swap_remove(k),
        _ => PolyR::zero(),
    }
}

/// `h_k(z)`; zero for `k < 0`. Defined (and generally nonzero) for `k > n`.
pub fn homogeneous(k: i64, input: &SymInput) -> PolyR {
    match usize::try_from(k) {
        Ok(k) => homogeneous_all(k, input).swap_remove(k),
        Err(_) => PolyR::zero(),
    }
}

/// `(-1)^k e_k(r, 1+r, ..., (n-1)^2+r)`, which is `u_r(n, n-k)`.
pub fn triangle_as_sigma(n: usize, k: usize) -> Result<PolyR, SymError> {
    if k > n {
        return Err(SymError::DegreeTooLarge { k, n });
    }
    let e = elementary(k as i64, &SymInput::shifted_squares(n));
    Ok(if k % 2 == 1 { -e } else { e })
}

/// `h_k(r, 1+r, ..., n^2+r)`, which is `U_r(n+k, n)`.
pub fn triangle_as_h(n: usize, k: usize) -> PolyR {
    homogeneous(k as i64, &SymInput::shifted_squares(n + 1))
}

/// `e_i(z_1^2, ..., z_n^2) = sum_{j=-i..i} (-1)^j e_{i+j}(z) e_{i-j}(z)`.
pub fn merca_square_identity_check(i: usize, input: &SymInput) -> bool {
    let lhs = elementary(i as i64, &input.squared());
    let e = elementary_all(input);
    let at = |idx: i64| -> PolyR {
        usize::try_from(idx)
            .ok()
            .and_then(|i| e.get(i).cloned())
            .unwrap_or_default()
    };
    let ii = i as i64;
    let rhs: PolyR = (-ii..=ii)
        .map(|j| {
            let term = at(ii + j) * at(ii - j);
            if j.rem_euclid(2) == 1 {
                -term
            } else {
                term
            }
        })
        .sum();
    lhs == rhs
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymKind {
    Elementary,
    Homogeneous,
}

/// Right-hand side of the shift theorem,
/// `sum_{i=0..k} C(n - c_i, k - i) g_i(z) t^(k-i)` with `c_i = i` for `e`
/// and `c_i = 1 - k` for `h`.
pub fn shift_expansion(which: SymKind, k: usize, shift: &PolyR, input: &SymInput) -> PolyR {
    let n = input.len();
    let g: Vec<PolyR> = match which {
        SymKind::Elementary => {
            let mut e = elementary_all(input);
            e.resize(k + 1, PolyR::zero());
            e
        }
        SymKind::Homogeneous => homogeneous_all(k, input),
    };
    (0..=k)
        .map(|i| {
            let c = match which {
                SymKind::Elementary => binom(n - i.min(n), k - i),
                // C(n+k-1, k-i); the i = k term is 1 even when n = 0
                SymKind::Homogeneous if i == k => 1.into(),
                SymKind::Homogeneous => binom(n + k - 1, k - i),
            };
            shift.pow((k - i) as u32).scale(&c) * &g[i]
        })
        .sum()
}

/// `g_k(z_1 + t, ..., z_n + t)` against [`shift_expansion`].
pub fn merca_shift_identity_check(
    which: SymKind,
    k: usize,
    shift: &PolyR,
    input: &SymInput,
) -> Result<bool, SymError> {
    if which == SymKind::Elementary && k > input.len() {
        return Err(SymError::DegreeTooLarge { k, n: input.len() });
    }
    let shifted = input.shifted(shift);
    let lhs = match which {
        SymKind::Elementary => elementary(k as i64, &shifted),
        SymKind::Homogeneous => homogeneous(k as i64, &shifted),
    };
    Ok(lhs == shift_expansion(which, k, shift, input))
}


#[cfg(test)]
#[allow(clippy::needless_range_loop)]
mod tests {
    use super::*;
    use crate::triangles::{Kind, Triangle};
    use proptest::prelude::*;

    fn p(s: &str) -> PolyR {
        s.parse().unwrap()
    }

    fn sym(polys: &[&str]) -> SymInput {
        SymInput::new(polys.iter().map(|s| p(s)).collect())
    }

    #[test]
    fn elementary_examples() {
        assert_eq!(elementary(2, &SymInput::from_i64s(&[1, 4, 9])), p("49"));
        assert!(elementary(0, &SymInput::from_i64s(&[3, 5])).is_one());
        assert!(elementary(0, &SymInput::default()).is_one());
        assert_eq!(
            elementary(1, &sym(&["r", "r+1", "r+4", "r+9"])),
            p("4*r+14")
        );
        assert!(elementary(-1, &SymInput::from_i64s(&[1])).is_zero());
        assert!(elementary(3, &SymInput::from_i64s(&[1, 2])).is_zero());
        assert!(elementary(1, &SymInput::default()).is_zero());
    }

    #[test]
    fn homogeneous_examples() {
        assert_eq!(homogeneous(2, &SymInput::from_i64s(&[0, 1, 4])), p("21"));
        assert!(homogeneous(0, &SymInput::from_i64s(&[7])).is_one());
        assert_eq!(homogeneous(1, &sym(&["r", "r+1", "r+4"])), p("3*r+5"));
        assert!(homogeneous(-2, &SymInput::from_i64s(&[1])).is_zero());
        assert!(homogeneous(2, &SymInput::default()).is_zero());
        // h_k for k past the number of variables: h_3(2) = 8
        assert_eq!(homogeneous(3, &SymInput::from_i64s(&[2])), p("8"));
    }

    #[test]
    fn triangle_forms_examples() {
        assert_eq!(triangle_as_sigma(4, 1).unwrap(), p("-4*r-14"));
        assert!(triangle_as_sigma(5, 0).unwrap().is_one());
        assert_eq!(triangle_as_sigma(3, 2).unwrap(), p("3*r^2+10*r+4"));
        assert!(triangle_as_sigma(2, 3).is_err());
        assert_eq!(triangle_as_h(2, 1), p("3*r+5"));
        assert_eq!(triangle_as_h(2, 2), p("6*r^2+20*r+21"));
        assert!(triangle_as_h(4, 0).is_one());
    }

    #[test]
    fn triangle_forms_match_tables() {
        let first = Triangle::build(Kind::FirstKindR, 12);
        let second = Triangle::build(Kind::SecondKindR, 12);
        for n in 0..=12 {
            for k in 0..=(12 - n) {
                if k <= n {
                    assert_eq!(&triangle_as_sigma(n, k).unwrap(), first.get(n, n - k));
                }
                assert_eq!(&triangle_as_h(n, k), second.get(n + k, n));
            }
        }
    }

    #[test]
    fn merca_square_examples() {
        let a = SymInput::from_i64s(&[1, 2]);
        assert_eq!(elementary(1, &a.squared()), p("5"));
        assert!(merca_square_identity_check(1, &a));
        assert!(merca_square_identity_check(0, &a));
        let b = SymInput::from_i64s(&[1, 2, 3]);
        assert_eq!(elementary(2, &b.squared()), p("49"));
        assert!(merca_square_identity_check(2, &b));
    }

    #[test]
    fn merca_shift_examples() {
        let z = SymInput::from_i64s(&[0, 1, 4]);
        let r = PolyR::r();
        assert_eq!(shift_expansion(SymKind::Elementary, 1, &r, &z), p("3*r+5"));
        assert!(merca_shift_identity_check(SymKind::Elementary, 1, &r, &z).unwrap());
        assert!(merca_shift_identity_check(SymKind::Elementary, 0, &r, &z).unwrap());
        assert!(merca_shift_identity_check(SymKind::Homogeneous, 0, &r, &z).unwrap());
        assert_eq!(
            shift_expansion(SymKind::Homogeneous, 2, &r, &z),
            p("6*r^2+20*r+21")
        );
        assert!(merca_shift_identity_check(SymKind::Homogeneous, 2, &r, &z).unwrap());
        assert!(merca_shift_identity_check(SymKind::Elementary, 4, &r, &z).is_err());
        assert!(
            merca_shift_identity_check(SymKind::Homogeneous, 3, &r, &SymInput::default()).unwrap()
        );
    }

    #[test]
    fn generating_product_matches_subset_sums() {
        let z = sym(&["r", "2", "-3", "r^2-1", "5", "r+7"]);
        for len in 0..=6 {
            let vals = &z.values()[..len];
            let input = SymInput::new(vals.to_vec());
            let e = elementary_all(&input);
            for k in 0..=len {
                assert_eq!(e[k], oracle::elementary(k, vals));
            }
        }
    }

    #[test]
    fn series_matches_multiset_sums() {
        let z = sym(&["r", "2", "-3", "r+1", "4"]);
        for len in 0..=5 {
            let vals = &z.values()[..len];
            let h = homogeneous_all(5, &SymInput::new(vals.to_vec()));
            for k in 0..=5 {
                assert_eq!(h[k], oracle::homogeneous(k, vals));
            }
        }
    }

    fn arb_input() -> impl Strategy<Value = SymInput> {
        prop::collection::vec(-5i64..=5, 0..=8).prop_map(|v| SymInput::from_i64s(&v))
    }

    proptest! {
        #[test]
        fn merca_square_holds(input in arb_input(), i in 0usize..=8) {
            prop_assert!(merca_square_identity_check(i, &input));
        }

        #[test]
        fn merca_shift_holds(input in arb_input(), k in 0usize..=8, t in -5i64..=5) {
            for shift in [PolyR::r(), PolyR::from(t)] {
                if k <= input.len() {
                    prop_assert!(merca_shift_identity_check(SymKind::Elementary, k, &shift, &input).unwrap());
                }
                prop_assert!(merca_shift_identity_check(SymKind::Homogeneous, k, &shift, &input).unwrap());
            }
        }
    }
}
