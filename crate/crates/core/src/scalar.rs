//! Scalar kinds shared by the combinatorial layer.
//!
//! The Bell-polynomial and symmetric-function routines only need ring
//! operations plus multiplication and exact division by small integers, so
//! they run unchanged over exact rationals, complex floats and truncated
//! form polynomials.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type ExactRational = BigRational;

/// Complex double-precision scalar.
pub type Complex = Complex64;

/// Largest `n` for which `n!` fits in an `i64`.
pub const MAX_FACTORIAL: usize = 20;

pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(n: i64) -> Self;

    /// Division by a nonzero integer.
    fn div_i64(self, d: i64) -> Self;

    fn mul_i64(self, n: i64) -> Self {
        Self::from_i64(n) * self
    }
}

/// Scalars that also support division by other scalars.
pub trait FieldScalar: Scalar + Div<Output = Self> {}

impl Scalar for ExactRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn div_i64(self, d: i64) -> Self {
        self / BigRational::from_integer(BigInt::from(d))
    }
}

impl FieldScalar for ExactRational {}

impl Scalar for Complex64 {
    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }

    fn div_i64(self, d: i64) -> Self {
        self / d as f64
    }
}

impl FieldScalar for Complex64 {}

impl Scalar for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }

    fn div_i64(self, d: i64) -> Self {
        self / d as f64
    }
}

impl FieldScalar for f64 {}

pub fn factorial(n: usize) -> Result<i64> {
    if n > MAX_FACTORIAL {
        return Err(Error::TooLarge(format!(
            "{n}! overflows; orders above {MAX_FACTORIAL} are not supported"
        )));
    }
    Ok((1..=n as i64).product())
}

pub fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i64 / (i + 1) as i64;
    }
    acc
}

/// `(-1)^k` as an integer.
pub fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Parses `"p/q"`, `"p"` or a decimal literal into an exact rational.
pub fn parse_rational(s: &str) -> Option<ExactRational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(BigRational::new(p, q));
    }
    if let Ok(p) = s.parse::<BigInt>() {
        return Some(BigRational::from_integer(p));
    }
    let (int, frac) = s.split_once('.')?;
    let digits = frac.len() as u32;
    let negative = int.trim_start().starts_with('-');
    let int: BigInt = if int.is_empty() || int == "-" || int == "+" {
        BigInt::zero()
    } else {
        int.parse().ok()?
    };
    let frac: BigInt = if frac.is_empty() {
        BigInt::zero()
    } else {
        frac.parse().ok()?
    };
    let scale = BigInt::from(10u32).pow(digits);
    let magnitude = int.magnitude().clone();
    let numerator = BigInt::from(magnitude) * &scale + frac;
    let numerator = if negative { -numerator } else { numerator };
    Some(BigRational::new(numerator, scale))
}
