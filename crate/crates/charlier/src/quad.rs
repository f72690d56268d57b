//! Adaptive Simpson quadrature with Richardson correction, for real- and
//! complex-valued integrands.

const MAX_DEPTH: u32 = 60;

struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) * (fa + 4.0 * fm + fb) / 6.0
}

fn adaptive<F: Fn(f64) -> f64>(f: &F, p: Panel, tol: f64, depth: u32) -> f64 {
    let m = 0.5 * (p.a + p.b);
    let lm = 0.5 * (p.a + m);
    let rm = 0.5 * (m + p.b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(p.a, m, p.fa, flm, p.fm);
    let right = simpson(m, p.b, p.fm, frm, p.fb);
    let delta = left + right - p.whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    let lp = Panel { a: p.a, b: m, fa: p.fa, fm: flm, fb: p.fm, whole: left };
    let rp = Panel { a: m, b: p.b, fa: p.fm, fm: frm, fb: p.fb, whole: right };
    adaptive(f, lp, 0.5 * tol, depth - 1) + adaptive(f, rp, 0.5 * tol, depth - 1)
}

/// Integrates `f` over `[a, b]` to absolute tolerance `tol`.
pub(crate) fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = simpson(a, b, fa, fm, fb);
    adaptive(&f, Panel { a, b, fa, fm, fb, whole }, tol, MAX_DEPTH)
}

/// Integrates `f` over `[a, b]`, splitting at the given interior
/// breakpoints first (used where the integrand has kinks or square-root
/// endpoints).
pub(crate) fn integrate_split<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    breakpoints: &[f64],
    tol: f64,
) -> f64 {
    let mut cuts: Vec<f64> = breakpoints
        .iter()
        .copied()
        .filter(|&c| c > a && c < b)
        .collect();
    cuts.sort_by(|x, y| x.partial_cmp(y).unwrap());
    cuts.dedup();
    let mut total = 0.0;
    let mut lo = a;
    for c in cuts.into_iter().chain(std::iter::once(b)) {
        total += integrate(&f, lo, c, tol);
        lo = c;
    }
    total
}

/// Complex-valued integral, handled componentwise.
pub(crate) fn integrate_complex<F: Fn(f64) -> num_complex::Complex64>(
    f: F,
    a: f64,
    b: f64,
    breakpoints: &[f64],
    tol: f64,
) -> num_complex::Complex64 {
    let re = integrate_split(|y| f(y).re, a, b, breakpoints, tol);
    let im = integrate_split(|y| f(y).im, a, b, breakpoints, tol);
    num_complex::Complex64::new(re, im)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exactish() {
        let v = integrate(|x| x * x, 0.0, 3.0, 1e-12);
        assert!((v - 9.0).abs() < 1e-10);
    }

    #[test]
    fn sqrt_endpoint_converges() {
        // ∫₀¹ √x dx = 2/3, integrable square-root endpoint.
        let v = integrate(|x| x.max(0.0).sqrt(), 0.0, 1.0, 1e-10);
        assert!((v - 2.0 / 3.0).abs() < 1e-8, "got {v}");
    }

    #[test]
    fn split_handles_kink() {
        let v = integrate_split(|x| x.abs(), -1.0, 1.0, &[0.0], 1e-12);
        assert!((v - 1.0).abs() < 1e-10);
    }
}
