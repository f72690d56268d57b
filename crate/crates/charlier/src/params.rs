use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The Poisson parameters `(a_1, …, a_r)` of the orthogonality system.
///
/// All parameters are positive and pairwise distinct. Parameters are kept
/// as exact rationals so every evaluator has an exact reference mode.
///
/// When `last_scaled` is set, the system under scaling `N` uses the
/// effective parameters `(a_1, …, a_{r−1}, N·a_r)`: the last parameter
/// grows linearly with the scaling. All operations consume parameters
/// through [`ParameterSet::effective`] so the two regimes share one code
/// path.
#[derive(Clone, Debug, PartialEq)]
pub struct ParameterSet {
    a: Vec<BigRational>,
    last_scaled: bool,
}

impl ParameterSet {
    /// Validates positivity and pairwise distinctness.
    pub fn new(a: Vec<BigRational>, last_scaled: bool) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::validation("parameter set needs at least one entry"));
        }
        for (j, v) in a.iter().enumerate() {
            if !v.is_positive() {
                return Err(Error::validation(format!(
                    "parameter a_{} = {} must be positive",
                    j + 1,
                    v
                )));
            }
        }
        for i in 0..a.len() {
            for j in (i + 1)..a.len() {
                if a[i] == a[j] {
                    return Err(Error::validation(format!(
                        "parameters must be pairwise distinct: a_{} = a_{} = {}",
                        i + 1,
                        j + 1,
                        a[i]
                    )));
                }
            }
        }
        Ok(ParameterSet { a, last_scaled })
    }

    /// Convenience constructor from f64 values (converted exactly).
    pub fn from_f64s(a: &[f64], last_scaled: bool) -> Result<Self> {
        let rats = a
            .iter()
            .map(|&v| {
                BigRational::from_float(v)
                    .ok_or_else(|| Error::validation(format!("parameter {v} is not finite")))
            })
            .collect::<Result<Vec<_>>>()?;
        ParameterSet::new(rats, last_scaled)
    }

    /// Convenience constructor from integer values.
    pub fn from_ints(a: &[i64], last_scaled: bool) -> Result<Self> {
        let rats = a
            .iter()
            .map(|&v| BigRational::from_integer(BigInt::from(v)))
            .collect();
        ParameterSet::new(rats, last_scaled)
    }

    pub fn dim(&self) -> usize {
        self.a.len()
    }

    pub fn last_scaled(&self) -> bool {
        self.last_scaled
    }

    /// The raw parameter values, before any scaling.
    pub fn values(&self) -> &[BigRational] {
        &self.a
    }

    /// Effective parameters for scaling `N`: identical to the raw values,
    /// except the last entry is multiplied by `N` when `last_scaled` holds.
    /// Errors when the scaled entry collides with another parameter.
    pub fn effective(&self, n_scale: u32) -> Result<Vec<BigRational>> {
        if n_scale == 0 {
            return Err(Error::validation("scaling N must be >= 1"));
        }
        if !self.last_scaled || n_scale == 1 {
            return Ok(self.a.clone());
        }
        let mut eff = self.a.clone();
        let last = eff.len() - 1;
        eff[last] *= BigRational::from_integer(BigInt::from(n_scale));
        for (j, v) in eff.iter().enumerate().take(last) {
            if *v == eff[last] {
                return Err(Error::validation(format!(
                    "scaled parameter N*a_r = {} collides with a_{}",
                    eff[last],
                    j + 1
                )));
            }
        }
        Ok(eff)
    }

    /// Effective parameters for scaling `N`, as f64.
    pub fn effective_f64(&self, n_scale: u32) -> Result<Vec<f64>> {
        Ok(self
            .effective(n_scale)?
            .iter()
            .map(|v| v.to_f64().unwrap_or(f64::NAN))
            .collect())
    }

    /// Largest effective parameter as f64 (used for scan bounds).
    pub(crate) fn max_effective_f64(&self, n_scale: u32) -> Result<f64> {
        Ok(self
            .effective_f64(n_scale)?
            .into_iter()
            .fold(0.0, f64::max))
    }
}

/// Parses a rational from `"p/q"`, integer, or plain decimal notation.
/// Decimal strings convert exactly (`"0.1"` becomes `1/10`).
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::validation(format!("cannot parse '{s}' as a rational number"));
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| bad())?;
        let d: BigInt = den.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::validation(format!("zero denominator in '{s}'")));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int_part.trim_start().starts_with('-');
        let int_digits = if int_part.is_empty() || int_part == "-" || int_part == "+" {
            BigInt::zero()
        } else {
            int_part.parse().map_err(|_| bad())?
        };
        let frac: BigInt = frac_part.parse().map_err(|_| bad())?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let signed_frac = if negative { -frac } else { frac };
        return Ok(
            BigRational::from_integer(int_digits) + BigRational::new(signed_frac, scale)
        );
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn validates_positive_and_distinct() {
        assert!(ParameterSet::from_ints(&[1, 2], false).is_ok());
        assert!(ParameterSet::from_ints(&[1, 1], false).is_err());
        assert!(ParameterSet::from_ints(&[0, 2], false).is_err());
        assert!(ParameterSet::from_ints(&[-1], false).is_err());
        assert!(ParameterSet::new(vec![], false).is_err());
    }

    #[test]
    fn effective_scaling() {
        let p = ParameterSet::from_ints(&[1, 2], true).unwrap();
        let eff = p.effective(10).unwrap();
        assert_eq!(eff[0], rat(1, 1));
        assert_eq!(eff[1], rat(20, 1));
        // Unscaled set ignores N.
        let q = ParameterSet::from_ints(&[1, 2], false).unwrap();
        assert_eq!(q.effective(10).unwrap()[1], rat(2, 1));
    }

    #[test]
    fn effective_collision_detected() {
        // (2, 1) with the last parameter doubled collides: (2, 2).
        let p = ParameterSet::from_ints(&[2, 1], true).unwrap();
        assert!(p.effective(2).is_err());
        assert!(p.effective(3).is_ok());
    }

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("3/2").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-7").unwrap(), rat(-7, 1));
        assert_eq!(parse_rational("0.1").unwrap(), rat(1, 10));
        assert_eq!(parse_rational("-2.25").unwrap(), rat(-9, 4));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }
}
