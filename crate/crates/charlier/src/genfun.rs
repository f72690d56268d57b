//! Coefficient extraction from the multivariate generating function
//!
//! ```text
//! Σ_n C_n(x) t_1^{n_1} ⋯ t_r^{n_r} / (n_1! ⋯ n_r!)
//!     = (1 + t_1 + ⋯ + t_r)^x · exp(−a_1 t_1 − ⋯ − a_r t_r),
//! ```
//!
//! computed as a truncated r-variable power series: the binomial series of
//! `(1+T)^x` composed with `T = Σ t_j`, multiplied by one univariate
//! exponential series per variable.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::eval::SUMMAND_GUARD;
use crate::multi_index::MultiIndex;
use crate::params::ParameterSet;
use crate::scalar::{Numeric, Scalar};

/// Guard on the total degree of the truncated series.
pub const DEGREE_GUARD: u64 = 30;

/// A truncated power series in `r` variables; terms beyond total degree
/// `max_deg` are dropped.
struct TruncatedSeries<T> {
    r: usize,
    max_deg: u32,
    terms: BTreeMap<Vec<u32>, T>,
}

impl<T: Numeric> TruncatedSeries<T> {
    fn constant(r: usize, max_deg: u32, value: T) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(vec![0; r], value);
        }
        TruncatedSeries { r, max_deg, terms }
    }

    fn add_term(&mut self, expo: Vec<u32>, value: T) {
        if expo.iter().sum::<u32>() > self.max_deg || value.is_zero() {
            return;
        }
        let entry = self.terms.entry(expo).or_insert_with(T::zero);
        *entry = entry.clone() + value;
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = TruncatedSeries {
            r: self.r,
            max_deg: self.max_deg,
            terms: BTreeMap::new(),
        };
        for (ea, va) in &self.terms {
            let da: u32 = ea.iter().sum();
            for (eb, vb) in &other.terms {
                let db: u32 = eb.iter().sum();
                if da + db > self.max_deg {
                    continue;
                }
                let expo: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(expo, va.clone() * vb.clone());
            }
        }
        out
    }

    fn add_scaled(&mut self, other: &Self, factor: &T) {
        for (e, v) in &other.terms {
            self.add_term(e.clone(), v.clone() * factor.clone());
        }
    }

    fn coefficient(&self, expo: &[u32]) -> T {
        self.terms.get(expo).cloned().unwrap_or_else(T::zero)
    }
}

fn generating_in<T: Numeric>(n: &MultiIndex, a: &[T], x: &T) -> T {
    let r = n.dim();
    let deg = n.size() as u32;

    // T = t_1 + … + t_r.
    let mut t_sum = TruncatedSeries::constant(r, deg, T::zero());
    for j in 0..r {
        let mut e = vec![0u32; r];
        e[j] = 1;
        t_sum.add_term(e, T::one());
    }

    // (1 + T)^x = Σ_m binom(x, m) T^m, truncated at total degree |n|.
    let mut series = TruncatedSeries::constant(r, deg, T::one());
    let mut t_pow = TruncatedSeries::constant(r, deg, T::one());
    let mut binom = T::one();
    for m in 1..=i64::from(deg) {
        binom = binom * (x.clone() - T::from_int(m - 1)) / T::from_int(m);
        t_pow = t_pow.mul(&t_sum);
        series.add_scaled(&t_pow, &binom);
    }

    // Multiply by exp(−a_j t_j) for each variable.
    for j in 0..r {
        let mut exp_j = TruncatedSeries::constant(r, deg, T::zero());
        let mut coef = T::one();
        for l in 0..=deg {
            if l > 0 {
                coef = coef * (-a[j].clone()) / T::from_int(i64::from(l));
            }
            let mut e = vec![0u32; r];
            e[j] = l;
            exp_j.add_term(e, coef.clone());
        }
        series = series.mul(&exp_j);
    }

    // C_n(x) = n_1! ⋯ n_r! · [t^n] series.
    let mut c = series.coefficient(n.entries());
    for &nj in n.entries() {
        for m in 2..=i64::from(nj) {
            c = c * T::from_int(m);
        }
    }
    c
}

/// Extracts `C_n(x)` as `n_1!⋯n_r!` times the coefficient of `t^n` in the
/// truncated generating-function series. Total degree is guarded by
/// [`DEGREE_GUARD`]. Exact when `x` is exact.
pub fn generating_coefficient(n: &MultiIndex, params: &ParameterSet, x: &Scalar) -> Result<Scalar> {
    if n.dim() != params.dim() {
        return Err(Error::validation(format!(
            "multi-index has {} components but parameter set has {}",
            n.dim(),
            params.dim()
        )));
    }
    if n.size() > DEGREE_GUARD {
        return Err(Error::resource(format!(
            "generating-function degree {} exceeds guard {DEGREE_GUARD}",
            n.size()
        )));
    }
    n.box_count(SUMMAND_GUARD)?;
    Ok(match x {
        Scalar::Exact(xr) => {
            Scalar::Exact(generating_in(n, params.values(), xr))
        }
        Scalar::Real(xf) => {
            let a: Vec<f64> = params.values().iter().map(f64::from_rational).collect();
            Scalar::Real(generating_in(n, &a, xf))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::eval_explicit;

    fn mi(entries: &[u32]) -> MultiIndex {
        MultiIndex::new(entries.to_vec()).unwrap()
    }

    fn ps(a: &[i64]) -> ParameterSet {
        ParameterSet::from_ints(a, false).unwrap()
    }

    #[test]
    fn constant_term() {
        let v = generating_coefficient(&mi(&[0, 0]), &ps(&[1, 2]), &Scalar::from_int(4)).unwrap();
        assert_eq!(v, Scalar::from_int(1));
    }

    #[test]
    fn matches_explicit() {
        let v = generating_coefficient(&mi(&[1, 1]), &ps(&[1, 2]), &Scalar::from_int(0)).unwrap();
        assert_eq!(v, Scalar::from_int(2));

        // Univariate specialization: coefficient of t²/2! in e^{−t} is 1/2,
        // so C_2 at x = 0 with a = 1 equals 1.
        let v = generating_coefficient(&mi(&[2]), &ps(&[1]), &Scalar::from_int(0)).unwrap();
        let w = eval_explicit(&mi(&[2]), &ps(&[1]), &Scalar::from_int(0)).unwrap();
        assert_eq!(v, w);
        assert_eq!(v, Scalar::from_int(1));
    }

    #[test]
    fn exact_agreement_rational_inputs() {
        let n = mi(&[2, 1, 1]);
        let p = ParameterSet::new(
            vec![
                crate::params::parse_rational("1/2").unwrap(),
                crate::params::parse_rational("5/3").unwrap(),
                crate::params::parse_rational("3").unwrap(),
            ],
            false,
        )
        .unwrap();
        let x = Scalar::from_ratio(-4, 7).unwrap();
        assert_eq!(
            generating_coefficient(&n, &p, &x).unwrap(),
            eval_explicit(&n, &p, &x).unwrap()
        );
    }

    #[test]
    fn degree_guard_trips() {
        let n = mi(&[31]);
        assert!(matches!(
            generating_coefficient(&n, &ps(&[1]), &Scalar::from_int(0)),
            Err(Error::Resource(_))
        ));
    }
}
