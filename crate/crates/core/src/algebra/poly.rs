use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::AlgebraError;

/// Univariate polynomial in `r` with integer coefficients.
///
/// Coefficients are stored ascending by power of `r`. The representation is
/// canonical: no trailing zero coefficient, and the zero polynomial has an
/// empty coefficient list, so structural equality is ring equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PolyR {
    coeffs: Vec<BigInt>,
}

impl PolyR {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// The indeterminate `r`.
    pub fn r() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c.into();
        Self::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `r^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// The constant value, if the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Horner evaluation at `r = x`.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides every coefficient by `d`, or `None` if any division is inexact.
    pub fn div_exact(&self, d: &BigInt) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !(c % d).is_zero() {
                return None;
            }
            out.push(c / d);
        }
        Some(Self::new(out))
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `true` iff every coefficient is non-negative.
    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl From<BigInt> for PolyR {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for PolyR {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl Add<&PolyR> for &PolyR {
    type Output = PolyR;

    fn add(self, rhs: &PolyR) -> PolyR {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        PolyR::new(coeffs)
    }
}

impl Sub<&PolyR> for &PolyR {
    type Output = PolyR;

    fn sub(self, rhs: &PolyR) -> PolyR {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        PolyR::new(coeffs)
    }
}

impl Mul<&PolyR> for &PolyR {
    type Output = PolyR;

    fn mul(self, rhs: &PolyR) -> PolyR {
        if self.is_zero() || rhs.is_zero() {
            return PolyR::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PolyR::new(coeffs)
    }
}

impl Neg for &PolyR {
    type Output = PolyR;

    fn neg(self) -> PolyR {
        PolyR {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<PolyR> for PolyR {
            type Output = PolyR;
            fn $m(self, rhs: PolyR) -> PolyR { (&self).$m(&rhs) }
        }
        impl $tr<&PolyR> for PolyR {
            type Output = PolyR;
            fn $m(self, rhs: &PolyR) -> PolyR { (&self).$m(rhs) }
        }
        impl $tr<PolyR> for &PolyR {
            type Output = PolyR;
            fn $m(self, rhs: PolyR) -> PolyR { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for PolyR {
    type Output = PolyR;

    fn neg(self) -> PolyR {
        -&self
    }
}

impl std::iter::Sum for PolyR {
    fn sum<I: Iterator<Item = PolyR>>(iter: I) -> PolyR {
        iter.fold(PolyR::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for PolyR {
    fn product<I: Iterator<Item = PolyR>>(iter: I) -> PolyR {
        iter.fold(PolyR::one(), |acc, p| acc * p)
    }
}

/// Canonical text form, highest power first: `-4*r^3-42*r^2-98*r-36`.
/// Unit coefficients on non-constant terms are omitted (`r^4`, `-r`).
impl fmt::Display for PolyR {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let mag = c.abs();
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    f.write_str("r")?;
                    if e > 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for PolyR {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Parser {
            src: s.as_bytes(),
            pos: 0,
        }
        .parse()
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, message: &str) -> AlgebraError {
        AlgebraError::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn parse(mut self) -> Result<PolyR, AlgebraError> {
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut last_exp: Option<usize> = None;
        self.skip_ws();
        if self.peek().is_none() {
            return Err(self.err("empty input"));
        }
        let mut negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            self.skip_ws();
            let term_start = self.pos;
            let (coef, exp) = self.term()?;
            if last_exp.is_some_and(|prev| exp >= prev) {
                return Err(AlgebraError::Parse {
                    position: term_start,
                    message: "exponents must be strictly descending".into(),
                });
            }
            last_exp = Some(exp);
            if coeffs.len() <= exp {
                coeffs.resize(exp + 1, BigInt::zero());
            }
            coeffs[exp] = if negative { -coef } else { coef };

            self.skip_ws();
            negative = match self.peek() {
                None => break,
                Some(b'+') => false,
                Some(b'-') => true,
                Some(_) => return Err(self.err("expected '+' or '-'")),
            };
            self.pos += 1;
        }
        Ok(PolyR::new(coeffs))
    }

    /// One unsigned term: `c`, `c*r`, `c*r^e`, `r`, `r^e`.
    fn term(&mut self) -> Result<(BigInt, usize), AlgebraError> {
        let coef = match self.digits() {
            Some(d) => Some(d.parse::<BigInt>().map_err(|_| self.err("bad integer"))?),
            None => None,
        };
        self.skip_ws();
        let mut has_var = false;
        if coef.is_some() && self.peek() == Some(b'*') {
            self.pos += 1;
            self.skip_ws();
            if self.peek() != Some(b'r') {
                return Err(self.err("expected 'r' after '*'"));
            }
        }
        if self.peek() == Some(b'r') {
            self.pos += 1;
            has_var = true;
        }
        if coef.is_none() && !has_var {
            return Err(self.err("expected a coefficient or 'r'"));
        }
        let mut exp = usize::from(has_var);
        if has_var {
            self.skip_ws();
            if self.peek() == Some(b'^') {
                self.pos += 1;
                self.skip_ws();
                let d = self.digits().ok_or_else(|| self.err("expected exponent"))?;
                exp = d.parse().map_err(|_| self.err("exponent out of range"))?;
            }
        }
        Ok((coef.unwrap_or_else(BigInt::one), exp))
    }
}
