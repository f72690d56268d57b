//! Multiple Charlier polynomials: exact evaluation, certified zeros, and
//! asymptotic zero distributions.
//!
//! The multiple Charlier polynomial `C_n` is the monic polynomial of degree
//! `|n| = n_1 + … + n_r` indexed by a multi-index `n = (n_1, …, n_r)` that is
//! simultaneously orthogonal to `r` Poisson weights `a_j^k / k!` on the
//! nonnegative integers:
//!
//! ```text
//! Σ_{k≥0} C_n(k) k^ℓ a_j^k / k! = 0,   ℓ = 0, …, n_j − 1,  j = 1, …, r.
//! ```
//!
//! The crate provides:
//!
//! - four independent evaluation routes (explicit double sum, backward
//!   difference-operator expansion, nearest-neighbor recurrence, and
//!   generating-function coefficient extraction), exact over the rationals,
//!   plus a contour-integral quadrature cross-check ([`eval`], [`genfun`],
//!   [`contour`]);
//! - verification of the defining discrete orthogonality with certified
//!   truncation tails ([`ortho`]);
//! - certified real zeros via exact sign changes and bisection, interlacing
//!   checks, and empirical zero-counting measures ([`zeros`]);
//! - the closed-form limit objects of the ratio and zero-distribution
//!   asymptotics: the uniform law for fixed parameters, and the two-case
//!   mixture law (with the algebraic function `g_r` and the arcsine-kernel
//!   density `v`) when the last parameter grows linearly with the scaling
//!   ([`limits`]);
//! - a command-line driver with reproducible CSV/JSON output ([`cli`]).
//!
//! # Example
//!
//! ```
//! use charlier::{eval_explicit, MultiIndex, ParameterSet, Scalar};
//!
//! let n = MultiIndex::new(vec![1, 1]).unwrap();
//! let params = ParameterSet::from_ints(&[1, 2], false).unwrap();
//! // C_(1,1)(x) = x^2 - 4x + 2 for parameters (1, 2); at x = 0 it is 2.
//! let v = eval_explicit(&n, &params, &Scalar::from_int(0)).unwrap();
//! assert_eq!(v, Scalar::from_int(2));
//! ```
//!
//! Runnable demonstrations of each capability live in `examples/`; the
//! `charlier` binary exposes the same machinery as subcommands.

pub mod cli;
pub mod contour;
mod error;
pub mod eval;
pub mod genfun;
pub mod limits;
pub mod multi_index;
pub mod ortho;
pub mod params;
mod quad;
pub mod scalar;
pub mod zeros;

pub use error::{Error, Result};
pub use eval::{
    eval_explicit, eval_recurrence, eval_recurrence_complex, eval_rodrigues, recurrence_coeffs,
    subleading_coeff, RecurrenceData, ScaledPolynomial,
};
pub use genfun::generating_coefficient;
pub use multi_index::MultiIndex;
pub use params::ParameterSet;
pub use scalar::{Numeric, Scalar};
