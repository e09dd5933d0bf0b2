//! Adaptive Simpson quadrature on finite intervals and on (0, inf).

/// Adaptive Simpson integration of `f` over [a, b] to absolute tolerance
/// `tol`. Recursion depth is bounded; accuracy degrades gracefully for
/// pathological integrands instead of overflowing the stack.
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    // Split into a few panels first so narrow features away from the
    // midpoint are not missed by the initial Simpson estimate.
    const PANELS: usize = 8;
    let h = (b - a) / PANELS as f64;
    let mut total = 0.0;
    for k in 0..PANELS {
        let lo = a + k as f64 * h;
        let hi = lo + h;
        let mid = 0.5 * (lo + hi);
        let flo = f(lo);
        let fmid = f(mid);
        let fhi = f(hi);
        let whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
        total += adaptive(&f, lo, hi, flo, fmid, fhi, whole, tol / PANELS as f64, 52);
    }
    total
}

#[allow(clippy::too_many_arguments)]
fn adaptive(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        left + right + delta / 15.0
    } else {
        adaptive(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
            + adaptive(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
    }
}

/// Integrate `f` over (0, inf) via the substitution x = t / (1 - t),
/// mapping to t in (0, 1) with Jacobian 1 / (1 - t)^2.
pub fn integrate_half_line(f: impl Fn(f64) -> f64, tol: f64) -> f64 {
    integrate(
        |t| {
            if t <= 0.0 || t >= 1.0 {
                return 0.0;
            }
            let u = 1.0 - t;
            let x = t / u;
            let v = f(x) / (u * u);
            if v.is_finite() {
                v
            } else {
                0.0
            }
        },
        0.0,
        1.0,
        tol,
    )
}
