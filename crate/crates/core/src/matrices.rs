//! Square matrices over `Z[r]`: the r-central factorial matrices
//! `U1(n) = [u_r(i,j)]`, `U2(n) = [U_r(i,j)]`, their `r = 0` versions
//! `A1(n)`, `A2(n)`, and the generalized Pascal matrix
//! `P_n[z] = [C(i,j) z^(i-j)]`.

use std::fmt;
use std::ops::Mul;

use thiserror::Error;

use crate::algebra::{binom, PolyR};
use crate::triangles::{Kind, Triangle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix dimension must be at least 1")]
    EmptyDimension,
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
}

/// Dense `dim x dim` matrix of polynomials, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct SquareMatrix {
    dim: usize,
    entries: Vec<PolyR>,
}

impl SquareMatrix {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> PolyR) -> Self {
        let entries = (0..dim * dim).map(|idx| f(idx / dim, idx % dim)).collect();
        Self { dim, entries }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(
            dim,
            |i, j| if i == j { PolyR::one() } else { PolyR::zero() },
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &PolyR {
        &self.entries[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[PolyR] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn try_mul(&self, rhs: &SquareMatrix) -> Result<SquareMatrix, MatrixError> {
        if self.dim != rhs.dim {
            return Err(MatrixError::DimensionMismatch {
                left: self.dim,
                right: rhs.dim,
            });
        }
        let n = self.dim;
        Ok(Self::from_fn(n, |i, j| {
            (0..n)
                .filter(|&m| !self.get(i, m).is_zero() && !rhs.get(m, j).is_zero())
                .map(|m| self.get(i, m) * rhs.get(m, j))
                .sum()
        }))
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[PolyR]) -> Result<Vec<PolyR>, MatrixError> {
        if v.len() != self.dim {
            return Err(MatrixError::DimensionMismatch {
                left: self.dim,
                right: v.len(),
            });
        }
        Ok((0..self.dim)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    /// Ones on the diagonal, zeros above it.
    pub fn is_unit_lower_triangular(&self) -> bool {
        (0..self.dim)
            .all(|i| self.get(i, i).is_one() && (i + 1..self.dim).all(|j| self.get(i, j).is_zero()))
    }
}

impl Mul for &SquareMatrix {
    type Output = SquareMatrix;

    /// Panics on mismatched dimensions; see [`SquareMatrix::try_mul`].
    fn mul(self, rhs: &SquareMatrix) -> SquareMatrix {
        self.try_mul(rhs).expect("matrix dimensions must agree")
    }
}

impl fmt::Debug for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.dim)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect();
        f.debug_list().entries(rows).finish()
    }
}

fn from_triangle(kind: Kind, n: usize) -> Result<SquareMatrix, MatrixError> {
    if n == 0 {
        return Err(MatrixError::EmptyDimension);
    }
    let t = Triangle::build(kind, n - 1);
    Ok(SquareMatrix::from_fn(n, |i, j| t.get(i, j).clone()))
}

/// `U1(n) = [u_r(i,j)]_{0 <= i,j < n}`.
pub fn build_u1(n: usize) -> Result<SquareMatrix, MatrixError> {
    from_triangle(Kind::FirstKindR, n)
}

/// `U2(n) = [U_r(i,j)]_{0 <= i,j < n}`.
pub fn build_u2(n: usize) -> Result<SquareMatrix, MatrixError> {
    from_triangle(Kind::SecondKindR, n)
}

/// `A1(n) = [u(i,j)]`.
pub fn build_a1(n: usize) -> Result<SquareMatrix, MatrixError> {
    from_triangle(Kind::FirstKind, n)
}

/// `A2(n) = [U(i,j)]`.
pub fn build_a2(n: usize) -> Result<SquareMatrix, MatrixError> {
    from_triangle(Kind::SecondKind, n)
}

/// `P_n[z] = [C(i,j) z^(i-j)]`, zero above the diagonal.
pub fn build_pascal(n: usize, z: &PolyR) -> Result<SquareMatrix, MatrixError> {
    if n == 0 {
        return Err(MatrixError::EmptyDimension);
    }
    let powers: Vec<PolyR> = (0..n).map(|e| z.pow(e as u32)).collect();
    Ok(SquareMatrix::from_fn(n, |i, j| {
        if j > i {
            PolyR::zero()
        } else {
            powers[i - j].scale(&binom(i, j))
        }
    }))
}

/// `U1(n) U2(n) = U2(n) U1(n) = I`.
pub fn verify_orthogonality(n: usize) -> Result<bool, MatrixError> {
    let u1 = build_u1(n)?;
    let u2 = build_u2(n)?;
    Ok(u1.try_mul(&u2)?.is_identity() && u2.try_mul(&u1)?.is_identity())
}

/// `U1(n) = A1(n) P_n[-r]` and `U2(n) = P_n[r] A2(n)`.
pub fn verify_factorizations(n: usize) -> Result<bool, MatrixError> {
    let r = PolyR::r();
    let first = build_a1(n)?.try_mul(&build_pascal(n, &-&r)?)?;
    let second = build_pascal(n, &r)?.try_mul(&build_a2(n)?)?;
    Ok(first == build_u1(n)? && second == build_u2(n)?)
}
