//! Contour-integral cross-check:
//!
//! ```text
//! C_n(x) / (n_1!⋯n_r!) = (2πi)^{−r} ∮⋯∮ (1+z_1+⋯+z_r)^x
//!     exp(−Σ a_j z_j) / (z_1^{n_1+1} ⋯ z_r^{n_r+1}) dz_1⋯dz_r
//! ```
//!
//! evaluated by the product trapezoid rule on circles `|z_j| = ρ_j`. The
//! integrand is analytic and periodic on the torus, so the rule converges
//! geometrically in the node count. `Σ ρ_j < 1` keeps `1 + Σ z_j` away
//! from the branch cut of the principal power.

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::multi_index::MultiIndex;
use crate::params::ParameterSet;

/// Approximates `C_n(x)` by the r-fold contour integral. Restricted to
/// `r <= 2`; requires `ρ_j > 0`, `Σ ρ_j < 1` and at least 64 nodes per
/// dimension.
pub fn contour_integral_eval(
    n: &MultiIndex,
    params: &ParameterSet,
    x: f64,
    radii: &[f64],
    nodes_per_dim: usize,
) -> Result<f64> {
    let r = n.dim();
    if params.dim() != r {
        return Err(Error::validation("parameter/index dimension mismatch"));
    }
    if r > 2 {
        return Err(Error::validation(format!(
            "contour evaluation supports r <= 2, got r = {r}"
        )));
    }
    if radii.len() != r {
        return Err(Error::validation(format!(
            "need {r} radii, got {}",
            radii.len()
        )));
    }
    if radii.iter().any(|&rho| rho <= 0.0) {
        return Err(Error::validation("radii must be positive"));
    }
    if radii.iter().sum::<f64>() >= 1.0 {
        return Err(Error::validation("radii must satisfy sum < 1"));
    }
    if nodes_per_dim < 64 {
        return Err(Error::validation("need at least 64 nodes per dimension"));
    }

    let a: Vec<f64> = params
        .values()
        .iter()
        .map(|v| v.to_f64().unwrap_or(f64::NAN))
        .collect();
    let m = nodes_per_dim;
    let step = std::f64::consts::TAU / m as f64;

    // Precompute the circle nodes per dimension.
    let circles: Vec<Vec<Complex64>> = radii
        .iter()
        .map(|&rho| {
            (0..m)
                .map(|i| Complex64::from_polar(rho, step * i as f64))
                .collect()
        })
        .collect();

    let integrand = |z: &[Complex64]| -> Complex64 {
        let base = Complex64::new(1.0, 0.0) + z.iter().sum::<Complex64>();
        let mut v = base.powf(x);
        for (j, zj) in z.iter().enumerate() {
            v *= (-a[j] * zj).exp();
            v /= zj.powu(n.entry(j));
        }
        v
    };

    let mut sum = Complex64::new(0.0, 0.0);
    match r {
        1 => {
            for z0 in &circles[0] {
                sum += integrand(&[*z0]);
            }
            sum /= m as f64;
        }
        2 => {
            for z0 in &circles[0] {
                for z1 in &circles[1] {
                    sum += integrand(&[*z0, *z1]);
                }
            }
            sum /= (m * m) as f64;
        }
        _ => unreachable!(),
    }

    let mut factorials = 1.0;
    for &nj in n.entries() {
        for k in 2..=u64::from(nj) {
            factorials *= k as f64;
        }
    }
    Ok(sum.re * factorials)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::eval_explicit;
    use crate::scalar::Scalar;

    fn mi(entries: &[u32]) -> MultiIndex {
        MultiIndex::new(entries.to_vec()).unwrap()
    }

    fn ps(a: &[i64]) -> ParameterSet {
        ParameterSet::from_ints(a, false).unwrap()
    }

    #[test]
    fn residue_of_constant() {
        let v = contour_integral_eval(&mi(&[0]), &ps(&[1]), 0.0, &[0.3], 128).unwrap();
        assert!((v - 1.0).abs() < 1e-8, "got {v}");
    }

    #[test]
    fn matches_explicit_bivariate() {
        let v = contour_integral_eval(&mi(&[1, 1]), &ps(&[1, 2]), 0.0, &[0.3, 0.3], 128).unwrap();
        assert!((v - 2.0).abs() < 1e-6, "got {v}");
    }

    #[test]
    fn matches_explicit_noninteger_x() {
        let x = 1.5;
        let want = eval_explicit(&mi(&[2]), &ps(&[1]), &Scalar::from_f64(x))
            .unwrap()
            .to_f64();
        let v = contour_integral_eval(&mi(&[2]), &ps(&[1]), x, &[0.4], 128).unwrap();
        assert!((v - want).abs() < 1e-6, "got {v}, want {want}");
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(contour_integral_eval(&mi(&[1, 1, 1]), &ps(&[1, 2, 3]), 0.0, &[0.1, 0.1, 0.1], 64).is_err());
        assert!(contour_integral_eval(&mi(&[1]), &ps(&[1]), 0.0, &[1.2], 64).is_err());
        assert!(contour_integral_eval(&mi(&[1, 1]), &ps(&[1, 2]), 0.0, &[0.6, 0.6], 64).is_err());
        assert!(contour_integral_eval(&mi(&[1]), &ps(&[1]), 0.0, &[0.3], 32).is_err());
    }
}
