//! Exact computation of the r-central factorial numbers with even indices.
//!
//! The four triangles `u(n,k)`, `U(n,k)`, `u_r(n,k)` and `U_r(n,k)` are built
//! symbolically as polynomials in `r` with integer coefficients, and every
//! alternative route to them (explicit sums, column recurrences, conversions
//! through the `r = 0` arrays, Stirling numbers, symmetric functions,
//! generating functions) is available so the routes can be checked against
//! each other. The unsigned first-kind rows define a Poisson-binomial law,
//! exposed in [`distribution`], and the triangles assemble into the unit
//! lower-triangular matrices of [`matrices`].

pub mod algebra;
pub mod cli;
pub mod distribution;
pub mod matrices;
pub mod symfunc;
pub mod triangles;

pub use algebra::{BigInt, BigRat, PolyR};
pub use triangles::{Kind, Triangle};
