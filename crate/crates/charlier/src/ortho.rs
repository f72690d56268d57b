//! Verification of the defining discrete orthogonality
//!
//! ```text
//! Σ_{k≥0} C_n(k) k^ℓ a_j^k / k! = 0,   ℓ = 0, …, n_j − 1,
//! ```
//!
//! against truncated Poisson sums with certified geometric tail bounds.
//! The sums contain large terms of alternating sign, so residuals are
//! reported relative to the accumulated absolute term mass.

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::eval::explicit_in;
use crate::multi_index::MultiIndex;
use crate::params::ParameterSet;

/// A truncated orthogonality (or normalization) sum together with its
/// certificate: the absolute mass of the included terms and an upper bound
/// on the discarded tail.
#[derive(Clone, Debug)]
pub struct MomentResidual {
    /// The truncated sum `Σ_{k=0}^{K} C_n(k) k^ℓ a_j^k / k!`.
    pub value: f64,
    /// `Σ_{k=0}^{K} |C_n(k)| k^ℓ a_j^k / k!`.
    pub term_mass: f64,
    /// The truncation point `K`.
    pub truncation_k: usize,
    /// Certified bound on `Σ_{k>K} |C_n(k)| k^ℓ a_j^k / k!`.
    pub tail_bound: f64,
}

impl MomentResidual {
    /// `|value| / term_mass`, the reported diagnostic.
    pub fn relative_residual(&self) -> f64 {
        if self.term_mass == 0.0 {
            self.value.abs()
        } else {
            self.value.abs() / self.term_mass
        }
    }
}

/// Both sums of the recurrence-coefficient identity
/// `a_{n,j} = (Σ k^{n_j} C_n(k) a_j^k/k!) / (Σ k^{n_j−1} C_{n−e_j}(k) a_j^k/k!)`,
/// and their ratio, which must equal `n_j a_j`.
#[derive(Clone, Debug)]
pub struct NormalizationCheck {
    pub numerator: MomentResidual,
    pub denominator: MomentResidual,
    pub ratio: f64,
}

const TAIL_FRACTION: f64 = 1e-12;
const MAX_TERMS: usize = 200_000;

/// Truncated sum `Σ_k C_n(k) k^l a_j^k / k!` with a certified tail bound.
///
/// Tail certificate: `|C_n(k)| ≤ (k + |n|)^{|n|} Π_i (1 + a_i)^{n_i}` for
/// `k ≥ 0` (triangle inequality on the explicit sum), so the terms are
/// dominated by `u_k = (k+|n|)^{|n|} k^l a_j^k/k! · B`. Once
/// `k ≥ max(2(|n|+l), 4 a_j)` the ratio `u_{k+1}/u_k` is below 1/2 and the
/// tail beyond `K` is at most `u_K`.
fn truncated_moment(
    n: &MultiIndex,
    params: &ParameterSet,
    j: usize,
    l: u32,
    min_truncation: usize,
) -> Result<MomentResidual> {
    let a: Vec<f64> = params
        .values()
        .iter()
        .map(|v| v.to_f64().unwrap_or(f64::NAN))
        .collect();
    let aj = a[j];
    let size = n.size();
    // B = Π (1 + a_i)^{n_i}
    let mut bound_factor = 1.0f64;
    for (&ni, &ai) in n.entries().iter().zip(&a) {
        bound_factor *= (1.0 + ai).powi(ni as i32);
    }

    let geometric_from =
        (2 * (size + u64::from(l)) as usize).max((4.0 * aj).ceil() as usize);

    let mut value = 0.0f64;
    let mut term_mass = 0.0f64;
    let mut weight = 1.0f64; // a_j^k / k!
    let mut k = 0usize;
    loop {
        let x = k as f64;
        let ck = explicit_in(n, &a, &x);
        let power = if l == 0 { 1.0 } else { x.powi(l as i32) };
        let term = ck * power * weight;
        value += term;
        term_mass += term.abs();

        let u_k = (x + size as f64).powi(size as i32) * power * weight * bound_factor;
        if k >= min_truncation
            && k >= geometric_from
            && term_mass > 0.0
            && u_k <= TAIL_FRACTION * term_mass
        {
            return Ok(MomentResidual {
                value,
                term_mass,
                truncation_k: k,
                tail_bound: u_k,
            });
        }
        k += 1;
        if k > MAX_TERMS {
            return Err(Error::internal(
                "orthogonality sum failed to reach its certified tail bound",
            ));
        }
        weight *= aj / k as f64;
    }
}

/// The orthogonality residual sum for weight `j` (0-based) and moment
/// order `l`. Requires `l < n_j`; for valid pairs the relative residual is
/// expected below 1e-8. The truncation point auto-extends beyond
/// `truncation` until the tail certificate holds.
pub fn moment_sum(
    n: &MultiIndex,
    params: &ParameterSet,
    j: usize,
    l: u32,
    truncation: usize,
) -> Result<MomentResidual> {
    if n.dim() != params.dim() {
        return Err(Error::validation("parameter/index dimension mismatch"));
    }
    if j >= n.dim() {
        return Err(Error::validation(format!(
            "weight index {j} out of range for r = {}",
            n.dim()
        )));
    }
    if l >= n.entry(j) {
        return Err(Error::validation(format!(
            "moment order {l} is not below n_{} = {}; the sum is a normalization, not a residual",
            j + 1,
            n.entry(j)
        )));
    }
    truncated_moment(n, params, j, l, truncation)
}

/// The two normalization sums whose ratio recovers the recurrence
/// coefficient `a_{n,j} = n_j a_j`. Requires `n_j >= 1`.
pub fn normalization_sum(
    n: &MultiIndex,
    params: &ParameterSet,
    j: usize,
    truncation: usize,
) -> Result<NormalizationCheck> {
    if n.dim() != params.dim() {
        return Err(Error::validation("parameter/index dimension mismatch"));
    }
    if j >= n.dim() {
        return Err(Error::validation(format!(
            "weight index {j} out of range for r = {}",
            n.dim()
        )));
    }
    if n.entry(j) == 0 {
        return Err(Error::validation(format!(
            "normalization needs n_{} >= 1",
            j + 1
        )));
    }
    let numerator = truncated_moment(n, params, j, n.entry(j), truncation)?;
    let lowered = n.down(j)?;
    let denominator = truncated_moment(&lowered, params, j, n.entry(j) - 1, truncation)?;
    let ratio = numerator.value / denominator.value;
    Ok(NormalizationCheck {
        numerator,
        denominator,
        ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(entries: &[u32]) -> MultiIndex {
        MultiIndex::new(entries.to_vec()).unwrap()
    }

    fn ps(a: &[i64]) -> ParameterSet {
        ParameterSet::from_ints(a, false).unwrap()
    }

    #[test]
    fn poisson_mean_cancels() {
        // Σ (k−1) 1^k/k! = e − e = 0.
        let m = moment_sum(&mi(&[1, 0]), &ps(&[1, 2]), 0, 0, 0).unwrap();
        assert!(m.relative_residual() < 1e-12, "{}", m.relative_residual());
        assert!(m.tail_bound <= 1e-12 * m.term_mass);
    }

    #[test]
    fn empty_orthogonality_set_is_contract_error() {
        assert!(moment_sum(&mi(&[0, 0]), &ps(&[1, 2]), 0, 0, 0).is_err());
        assert!(moment_sum(&mi(&[2, 1]), &ps(&[1, 2]), 1, 1, 0).is_err());
    }

    #[test]
    fn residuals_small_for_valid_pairs() {
        let n = mi(&[2, 1]);
        let p = ps(&[1, 2]);
        for (j, l) in [(0usize, 0u32), (0, 1), (1, 0)] {
            let m = moment_sum(&n, &p, j, l, 200).unwrap();
            assert!(
                m.relative_residual() < 1e-8,
                "j={j} l={l}: {}",
                m.relative_residual()
            );
        }
    }

    #[test]
    fn normalization_ratios() {
        let c = normalization_sum(&mi(&[1]), &ps(&[1]), 0, 0).unwrap();
        assert!((c.ratio - 1.0).abs() < 1e-8, "{}", c.ratio);

        let c = normalization_sum(&mi(&[1, 1]), &ps(&[1, 2]), 1, 0).unwrap();
        assert!((c.ratio - 2.0).abs() < 1e-8, "{}", c.ratio);

        let c = normalization_sum(&mi(&[2, 1]), &ps(&[1, 2]), 0, 0).unwrap();
        assert!((c.ratio - 2.0).abs() < 1e-8, "{}", c.ratio);
    }

    #[test]
    fn normalization_requires_positive_entry() {
        assert!(normalization_sum(&mi(&[0, 1]), &ps(&[1, 2]), 0, 0).is_err());
    }
}
