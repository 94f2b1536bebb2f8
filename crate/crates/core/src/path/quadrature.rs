/// Subinterval budget of a single integration.
const MAX_EVALS: usize = 1 << 20;

/// Adaptive Simpson quadrature of `f` over `[a, b]`.
///
/// `rel_tol` is relative to the magnitude of the coarse whole-interval
/// estimate. Returns `None` when some subinterval still has not converged
/// at `max_depth`, when the evaluation budget runs out, or when the
/// integrand produces a non-finite value.
pub fn adaptive_simpson<F>(mut f: F, a: f64, b: f64, rel_tol: f64, max_depth: u32) -> Option<f64>
where
    F: FnMut(f64) -> f64,
{
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    if !whole.is_finite() {
        return None;
    }
    let eps = (rel_tol * whole.abs()).max(f64::MIN_POSITIVE);
    let mut total = 0.0;
    let mut budget = MAX_EVALS;
    // (a, b, fa, fm, fb, whole, eps, depth)
    let mut stack = vec![(a, b, fa, fm, fb, whole, eps, 0u32)];
    while let Some((a, b, fa, fm, fb, whole, eps, depth)) = stack.pop() {
        if budget == 0 {
            return None;
        }
        budget -= 1;
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let refined = left + right;
        if !refined.is_finite() {
            return None;
        }
        let err = refined - whole;
        if depth >= 1 && err.abs() <= 15.0 * eps {
            total += refined + err / 15.0;
        } else if depth >= max_depth {
            return None;
        } else {
            stack.push((a, m, fa, flm, fm, left, 0.5 * eps, depth + 1));
            stack.push((m, b, fm, frm, fb, right, 0.5 * eps, depth + 1));
        }
    }
    Some(total)
}
