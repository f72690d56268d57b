use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::params::parse_rational;

/// Dual-mode numeric value: exact arbitrary-precision rational, or
/// double-precision real.
///
/// Exact-mode arithmetic is closed: operations on exact inputs produce
/// exact outputs. Dropping to real mode happens only through the explicit
/// [`Scalar::to_f64`] conversion; there is no implicit demotion.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(BigRational),
    Real(f64),
}

impl Scalar {
    pub fn from_int(v: i64) -> Self {
        Scalar::Exact(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::validation("zero denominator"));
        }
        Ok(Scalar::Exact(BigRational::new(
            BigInt::from(num),
            BigInt::from(den),
        )))
    }

    pub fn from_rational(v: BigRational) -> Self {
        Scalar::Exact(v)
    }

    pub fn from_f64(v: f64) -> Self {
        Scalar::Real(v)
    }

    /// Parses integer, fraction (`p/q`) or decimal strings as exact
    /// rationals.
    pub fn parse_exact(s: &str) -> Result<Self> {
        Ok(Scalar::Exact(parse_rational(s)?))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Real(_) => None,
        }
    }

    /// Explicit, one-way conversion to double precision.
    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Real(v) => *v,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "{r}"),
            Scalar::Real(v) => write!(f, "{v}"),
        }
    }
}

/// Numeric field the evaluation kernels are generic over.
///
/// Implemented for `BigRational` (exact mode), `f64` (real mode) and
/// `Complex64` (complex arguments in the asymptotic experiments).
pub trait Numeric:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn from_int(v: i64) -> Self;

    /// Conversion from an exact rational; lossless for `BigRational`,
    /// nearest double otherwise.
    fn from_rational(r: &BigRational) -> Self;
}

impl Numeric for f64 {
    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn from_rational(r: &BigRational) -> Self {
        r.to_f64().unwrap_or(f64::NAN)
    }
}

impl Numeric for Complex64 {
    fn from_int(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }

    fn from_rational(r: &BigRational) -> Self {
        Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0)
    }
}

impl Numeric for BigRational {
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_roundtrip() {
        let x = Scalar::parse_exact("3/4").unwrap();
        assert!(x.is_exact());
        assert_eq!(x.to_f64(), 0.75);
        assert_eq!(Scalar::parse_exact("1.5").unwrap().to_f64(), 1.5);
    }

    #[test]
    fn from_int_impls_agree() {
        assert_eq!(<f64 as Numeric>::from_int(-3), -3.0);
        assert_eq!(
            <BigRational as Numeric>::from_int(-3),
            BigRational::from_integer(BigInt::from(-3))
        );
        assert_eq!(
            <Complex64 as Numeric>::from_int(2),
            Complex64::new(2.0, 0.0)
        );
    }
}
