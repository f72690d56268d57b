//! Evaluators of the multiple Charlier polynomial `C_n` and of its scaled
//! form `P_{n,N}(x) = C_n(Nx) / N^{|n|}`.
//!
//! Three independent routes are provided:
//!
//! - [`eval_explicit`]: the r-fold explicit sum over `k_1, …, k_r` with
//!   Pochhammer factors;
//! - [`eval_rodrigues`]: composition of the `r` backward-difference
//!   operators `a_j^{−x} ∇^{n_j} a_j^x`, expanded into shift sums so the
//!   weight-function ratios reduce to falling factorials and the result is
//!   a plain polynomial evaluation, valid at every `x`;
//! - [`eval_recurrence`]: dynamic programming over the lattice box
//!   `[0,n_1]×…×[0,n_r]` with the nearest-neighbor recurrence
//!   `x C_n = C_{n+e_k} + (a_k + |n|) C_n + Σ_j n_j a_j C_{n−e_j}`.
//!
//! All routes run exactly over the rationals when the inputs are rational,
//! and over `f64` (or `Complex64` for the recurrence) otherwise.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::multi_index::MultiIndex;
use crate::params::ParameterSet;
use crate::scalar::{Numeric, Scalar};

/// Guard on the summand count `Π (n_j + 1)` of the explicit sum and on the
/// lattice box of the recurrence.
pub const SUMMAND_GUARD: u64 = 10_000_000;

fn convert_params<T: Numeric>(vals: &[BigRational]) -> Vec<T> {
    vals.iter().map(T::from_rational).collect()
}

fn check_dims(n: &MultiIndex, params: &ParameterSet) -> Result<()> {
    if n.dim() != params.dim() {
        return Err(Error::validation(format!(
            "multi-index has {} components but parameter set has {}",
            n.dim(),
            params.dim()
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Explicit sum
// ---------------------------------------------------------------------------

/// Per-dimension factor column `c_j[k] = (−n_j)_k / k! · (−a_j)^{n_j−k}`.
fn factor_column<T: Numeric>(nj: usize, a: &T) -> Vec<T> {
    let neg_a = -a.clone();
    let mut pows = Vec::with_capacity(nj + 1);
    pows.push(T::one());
    for m in 1..=nj {
        let prev = pows[m - 1].clone();
        pows.push(prev * neg_a.clone());
    }
    let mut col = Vec::with_capacity(nj + 1);
    let mut s = T::one(); // (−n_j)_k / k! = (−1)^k binom(n_j, k)
    for k in 0..=nj {
        if k > 0 {
            s = s * T::from_int(k as i64 - 1 - nj as i64) / T::from_int(k as i64);
        }
        col.push(s.clone() * pows[nj - k].clone());
    }
    col
}

/// `(−x)_s` for `s = 0..=s_max`.
fn neg_pochhammer<T: Numeric>(x: &T, s_max: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(s_max + 1);
    out.push(T::one());
    for i in 0..s_max {
        let prev = out[i].clone();
        out.push(prev * (T::from_int(i as i64) - x.clone()));
    }
    out
}

pub(crate) fn explicit_in<T: Numeric>(n: &MultiIndex, a: &[T], x: &T) -> T {
    let total = n.size() as usize;
    let poch = neg_pochhammer(x, total);
    let columns: Vec<Vec<T>> = n
        .entries()
        .iter()
        .zip(a)
        .map(|(&nj, aj)| factor_column(nj as usize, aj))
        .collect();

    fn rec<T: Numeric>(cols: &[Vec<T>], poch: &[T], dim: usize, partial: T, s: usize, acc: &mut T) {
        if dim == cols.len() {
            *acc = acc.clone() + partial * poch[s].clone();
            return;
        }
        for (k, c) in cols[dim].iter().enumerate() {
            rec(cols, poch, dim + 1, partial.clone() * c.clone(), s + k, acc);
        }
    }

    let mut acc = T::zero();
    rec(&columns, &poch, 0, T::one(), 0, &mut acc);
    acc
}

/// Evaluates `C_n(x)` by the explicit r-fold sum.
///
/// Exact when `x` is exact; otherwise in double precision. The summand
/// count `Π (n_j + 1)` is guarded by [`SUMMAND_GUARD`].
pub fn eval_explicit(n: &MultiIndex, params: &ParameterSet, x: &Scalar) -> Result<Scalar> {
    check_dims(n, params)?;
    n.box_count(SUMMAND_GUARD)?;
    Ok(match x {
        Scalar::Exact(xr) => Scalar::Exact(explicit_in(n, params.values(), xr)),
        Scalar::Real(xf) => Scalar::Real(explicit_in(n, &convert_params::<f64>(params.values()), xf)),
    })
}

// ---------------------------------------------------------------------------
// Rodrigues route
// ---------------------------------------------------------------------------

pub(crate) fn rodrigues_in<T: Numeric>(n: &MultiIndex, a: &[T], x: &T) -> T {
    let total = n.size() as usize;

    // Compose the shift expansions of the operators a_j^{−x} ∇^{n_j} a_j^x:
    // each contributes Σ_k binom(n_j,k) (−1/a_j)^k S_{−k}, where S_{−k}
    // shifts the argument by −k. `shift[m]` collects the total coefficient
    // of the shift by −m.
    let mut shift: Vec<T> = vec![T::zero(); total + 1];
    shift[0] = T::one();
    for (j, &nj) in n.entries().iter().enumerate() {
        let nj = nj as usize;
        let neg_inv_a = -(T::one() / a[j].clone());
        let mut op = Vec::with_capacity(nj + 1);
        let mut c = T::one();
        for k in 0..=nj {
            if k > 0 {
                c = c * T::from_int((nj - k + 1) as i64) / T::from_int(k as i64);
                c = c * neg_inv_a.clone();
            }
            op.push(c.clone());
        }
        let mut next = vec![T::zero(); total + 1];
        for (m, sm) in shift.iter().enumerate() {
            if sm.is_zero() {
                continue;
            }
            for (k, ck) in op.iter().enumerate() {
                if m + k <= total {
                    next[m + k] = next[m + k].clone() + sm.clone() * ck.clone();
                }
            }
        }
        shift = next;
    }

    // Applied to the reciprocal-factorial weight and multiplied back by
    // Γ(x+1), the shift by −m leaves the ratio Γ(x+1)/Γ(x+1−m), i.e. the
    // falling factorial x(x−1)…(x−m+1).
    let mut falling = T::one();
    let mut sum = T::zero();
    for (m, sm) in shift.iter().enumerate() {
        if m > 0 {
            falling = falling * (x.clone() - T::from_int(m as i64 - 1));
        }
        sum = sum + sm.clone() * falling.clone();
    }

    // Prefactor (−1)^{|n|} Π a_j^{n_j}.
    let mut pre = T::one();
    for (j, &nj) in n.entries().iter().enumerate() {
        for _ in 0..nj {
            pre = pre * a[j].clone();
        }
    }
    if total % 2 == 1 {
        pre = -pre;
    }
    pre * sum
}

/// Evaluates `C_n(x)` through the backward-difference operator product,
/// with Γ-ratios replaced by falling factorials so the result is defined at
/// every `x`, including the nonnegative integers.
pub fn eval_rodrigues(n: &MultiIndex, params: &ParameterSet, x: &Scalar) -> Result<Scalar> {
    check_dims(n, params)?;
    n.box_count(SUMMAND_GUARD)?;
    Ok(match x {
        Scalar::Exact(xr) => Scalar::Exact(rodrigues_in(n, params.values(), xr)),
        Scalar::Real(xf) => Scalar::Real(rodrigues_in(n, &convert_params::<f64>(params.values()), xf)),
    })
}

// ---------------------------------------------------------------------------
// Nearest-neighbor recurrence
// ---------------------------------------------------------------------------

/// Which of the `r` lattice relations defines each new value while filling
/// the box. The canonical path raises the highest nonzero coordinate, which
/// corresponds to increasing coordinate 1 first, then coordinate 2, and so
/// on. Both rules must produce identical values; this is exercised by the
/// path-independence tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum StepRule {
    Canonical,
    Alternate,
}

pub(crate) struct LatticeTable<T> {
    limits: Vec<u32>,
    strides: Vec<usize>,
    values: Vec<T>,
}

impl<T> LatticeTable<T> {
    fn offset(&self, idx: &[u32]) -> usize {
        idx.iter()
            .zip(&self.strides)
            .map(|(&i, &s)| i as usize * s)
            .sum()
    }

    pub(crate) fn get(&self, idx: &[u32]) -> &T {
        debug_assert!(idx.iter().zip(&self.limits).all(|(&i, &l)| i <= l));
        &self.values[self.offset(idx)]
    }
}

fn advance(idx: &mut [u32], limits: &[u32]) -> bool {
    for d in (0..idx.len()).rev() {
        if idx[d] < limits[d] {
            idx[d] += 1;
            for e in idx.iter_mut().skip(d + 1) {
                *e = 0;
            }
            return true;
        }
    }
    false
}

pub(crate) fn recurrence_table<T: Numeric>(
    top: &MultiIndex,
    a_eff: &[T],
    n_scale: u32,
    x: &T,
    rule: StepRule,
) -> Result<LatticeTable<T>> {
    let count = top.box_count(SUMMAND_GUARD)? as usize;
    let r = top.dim();
    let limits = top.entries().to_vec();
    let mut strides = vec![1usize; r];
    for d in (0..r.saturating_sub(1)).rev() {
        strides[d] = strides[d + 1] * (limits[d + 1] as usize + 1);
    }
    let mut table = LatticeTable {
        limits,
        strides,
        values: Vec::with_capacity(count),
    };

    let inv_n = T::one() / T::from_int(i64::from(n_scale));
    let inv_n2 = inv_n.clone() * inv_n.clone();

    let mut idx = vec![0u32; r];
    loop {
        if idx.iter().all(|&e| e == 0) {
            table.values.push(T::one());
        } else {
            let k = match rule {
                StepRule::Canonical => (0..r).rev().find(|&j| idx[j] > 0).unwrap(),
                StepRule::Alternate => (0..r).find(|&j| idx[j] > 0).unwrap(),
            };
            let mut below = idx.clone();
            below[k] -= 1;
            let below_size: i64 = below.iter().map(|&e| i64::from(e)).sum();
            // P_{m+e_k} = (x − (a_k + |m|)/N) P_m − Σ_j m_j a_j / N² P_{m−e_j}
            let p_below = table.values[table.offset(&below)].clone();
            let mut v = (x.clone()
                - (a_eff[k].clone() + T::from_int(below_size)) * inv_n.clone())
                * p_below;
            for j in 0..r {
                if below[j] > 0 {
                    let mut lower = below.clone();
                    lower[j] -= 1;
                    v = v - T::from_int(i64::from(below[j]))
                        * a_eff[j].clone()
                        * inv_n2.clone()
                        * table.values[table.offset(&lower)].clone();
                }
            }
            debug_assert_eq!(table.offset(&idx), table.values.len());
            table.values.push(v);
        }
        if !advance(&mut idx, top.entries()) {
            break;
        }
    }
    Ok(table)
}

/// The scaled polynomial `P_{n,N}(x) = C_n(Nx) / N^{|n|}`, monic of degree
/// `|n|`, with the effective (possibly N-scaled) parameters.
#[derive(Clone, Debug)]
pub struct ScaledPolynomial {
    n: MultiIndex,
    params: ParameterSet,
    scaling: u32,
}

impl ScaledPolynomial {
    pub fn new(n: MultiIndex, params: ParameterSet, scaling: u32) -> Result<Self> {
        check_dims(&n, &params)?;
        if scaling == 0 {
            return Err(Error::validation("scaling N must be >= 1"));
        }
        params.effective(scaling)?;
        Ok(ScaledPolynomial { n, params, scaling })
    }

    pub fn index(&self) -> &MultiIndex {
        &self.n
    }

    pub fn params(&self) -> &ParameterSet {
        &self.params
    }

    pub fn scaling(&self) -> u32 {
        self.scaling
    }
}

pub(crate) fn eval_recurrence_with_rule(
    handle: &ScaledPolynomial,
    x: &Scalar,
    rule: StepRule,
) -> Result<Scalar> {
    let eff = handle.params.effective(handle.scaling)?;
    Ok(match x {
        Scalar::Exact(xr) => {
            let table = recurrence_table(&handle.n, &eff, handle.scaling, xr, rule)?;
            Scalar::Exact(table.get(handle.n.entries()).clone())
        }
        Scalar::Real(xf) => {
            let aff = convert_params::<f64>(&eff);
            let table = recurrence_table(&handle.n, &aff, handle.scaling, xf, rule)?;
            Scalar::Real(*table.get(handle.n.entries()))
        }
    })
}

/// Evaluates `P_{n,N}(x)` by dynamic programming over the lattice box,
/// seeding `P_0 = 1` and solving the nearest-neighbor relation for the
/// raised index along a fixed canonical path.
pub fn eval_recurrence(handle: &ScaledPolynomial, x: &Scalar) -> Result<Scalar> {
    eval_recurrence_with_rule(handle, x, StepRule::Canonical)
}

/// [`eval_recurrence`] at a complex argument (double precision).
pub fn eval_recurrence_complex(handle: &ScaledPolynomial, x: Complex64) -> Result<Complex64> {
    let eff = handle.params.effective(handle.scaling)?;
    let aff = convert_params::<Complex64>(&eff);
    let table = recurrence_table(&handle.n, &aff, handle.scaling, &x, StepRule::Canonical)?;
    Ok(*table.get(handle.n.entries()))
}

/// Complex-mode recurrence table over the box `[0, top]`; used by the
/// ratio and decay experiments, which read several neighboring entries of
/// one table.
pub(crate) fn recurrence_table_c64(
    top: &MultiIndex,
    params: &ParameterSet,
    n_scale: u32,
    x: Complex64,
) -> Result<LatticeTable<Complex64>> {
    let eff = params.effective(n_scale)?;
    let aff = convert_params::<Complex64>(&eff);
    recurrence_table(top, &aff, n_scale, &x, StepRule::Canonical)
}

// ---------------------------------------------------------------------------
// Recurrence data and the subleading coefficient
// ---------------------------------------------------------------------------

/// Closed-form coefficients of the nearest-neighbor recurrence in
/// direction `k`: `b = |n| + a_k` and `a_j = n_j a_j`, with effective
/// parameters. Both are exact rationals.
#[derive(Clone, Debug, PartialEq)]
pub struct RecurrenceData {
    pub b: BigRational,
    pub a: Vec<BigRational>,
}

impl RecurrenceData {
    pub fn b_f64(&self) -> f64 {
        self.b.to_f64().unwrap_or(f64::NAN)
    }

    pub fn a_f64(&self) -> Vec<f64> {
        self.a.iter().map(|v| v.to_f64().unwrap_or(f64::NAN)).collect()
    }
}

/// The recurrence coefficients `b_{n,k}` and `(a_{n,1}, …, a_{n,r})` for
/// scaling `N`.
pub fn recurrence_coeffs(
    n: &MultiIndex,
    params: &ParameterSet,
    k: usize,
    n_scale: u32,
) -> Result<RecurrenceData> {
    check_dims(n, params)?;
    if k >= n.dim() {
        return Err(Error::validation(format!(
            "direction {k} out of range for dimension {}",
            n.dim()
        )));
    }
    let eff = params.effective(n_scale)?;
    let size = BigRational::from_integer(BigInt::from(n.size()));
    let b = size + &eff[k];
    let a = n
        .entries()
        .iter()
        .zip(&eff)
        .map(|(&nj, aj)| BigRational::from_integer(BigInt::from(nj)) * aj)
        .collect();
    Ok(RecurrenceData { b, a })
}

/// The coefficient `δ_n` of `x^{|n|−1}` in `C_n`:
/// `δ_n = −C(|n|,2) − Σ_j a_j n_j` (zero for the empty index).
pub fn subleading_coeff(n: &MultiIndex, params: &ParameterSet) -> Result<Scalar> {
    check_dims(n, params)?;
    let size = BigInt::from(n.size());
    let choose2 = &size * (&size - BigInt::one()) / BigInt::from(2);
    let mut delta = BigRational::from_integer(-choose2);
    for (&nj, aj) in n.entries().iter().zip(params.values()) {
        delta -= BigRational::from_integer(BigInt::from(nj)) * aj;
    }
    Ok(Scalar::Exact(delta))
}

// ---------------------------------------------------------------------------
// Exact monomial coefficients (shared by the root finder)
// ---------------------------------------------------------------------------

/// Monomial coefficients of `C_n` (constant term first, leading term 1),
/// exact. Obtained by grouping the explicit sum by the total Pochhammer
/// order and expanding `(−x)_s` in the monomial basis.
pub(crate) fn monomial_coeffs(n: &MultiIndex, a_eff: &[BigRational]) -> Vec<BigRational> {
    let total = n.size() as usize;
    // w[s] = Σ_{|k| = s} Π_j c_j(k_j): convolution of the factor columns.
    let mut w = vec![BigRational::one()];
    for (&nj, aj) in n.entries().iter().zip(a_eff) {
        let col = factor_column(nj as usize, aj);
        let mut next = vec![BigRational::zero(); w.len() + col.len() - 1];
        for (s, ws) in w.iter().enumerate() {
            if ws.is_zero() {
                continue;
            }
            for (k, ck) in col.iter().enumerate() {
                next[s + k] += ws * ck;
            }
        }
        w = next;
    }
    // acc += w[s] · (−x)_s, with (−x)_s kept as a coefficient vector:
    // q_s(x) = q_{s−1}(x) · ((s−1) − x).
    let mut acc = vec![BigRational::zero(); total + 1];
    let mut q = vec![BigRational::one()];
    for (s, ws) in w.iter().enumerate() {
        if s > 0 {
            let shift = BigRational::from_integer(BigInt::from(s as i64 - 1));
            let mut next = vec![BigRational::zero(); q.len() + 1];
            for (d, qd) in q.iter().enumerate() {
                next[d] += qd * &shift;
                next[d + 1] -= qd;
            }
            q = next;
        }
        for (d, qd) in q.iter().enumerate() {
            acc[d] += ws * qd;
        }
    }
    debug_assert!(acc[total].is_one(), "C_n must be monic");
    acc
}

/// Clears denominators, returning integer coefficients with the same roots
/// and sign behavior (the common denominator is positive).
pub(crate) fn integer_coeffs(coeffs: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in coeffs {
        lcm = lcm.lcm(c.denom());
    }
    coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect()
}
