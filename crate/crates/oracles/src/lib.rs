//! Reference numerics used by the test suites as independent oracles:
//! adaptive quadrature, Kolmogorov-Smirnov tests, empirical summaries, and
//! total-variation comparison of sampled draws against an exact density.
//!
//! Nothing in this crate touches the sampler implementation it is used to
//! verify; everything here is computed from first principles.

pub mod quad;
pub mod stats;

pub use quad::{integrate, integrate_half_line};
pub use stats::{
    batch_mean_se, empirical_quantile, ks_one_sample, ks_two_sample, mean, median, variance,
};

use statrs::function::gamma::ln_gamma;

/// log of the Gamma(shape, rate) density at x.
pub fn ln_gamma_pdf(x: f64, shape: f64, rate: f64) -> f64 {
    if x <= 0.0 {
        return f64::NEG_INFINITY;
    }
    shape * rate.ln() - ln_gamma(shape) + (shape - 1.0) * x.ln() - rate * x
}

/// log of the inverse-gamma(shape, scale) density at x.
pub fn ln_inv_gamma_pdf(x: f64, shape: f64, scale: f64) -> f64 {
    if x <= 0.0 {
        return f64::NEG_INFINITY;
    }
    shape * scale.ln() - ln_gamma(shape) - (shape + 1.0) * x.ln() - scale / x
}

/// log of the N(mean, variance) density at x.
pub fn ln_normal_pdf(x: f64, mean: f64, variance: f64) -> f64 {
    let d = x - mean;
    -0.5 * ((2.0 * std::f64::consts::PI * variance).ln() + d * d / variance)
}

/// log of the Student-t(location, scale2, nu) density at x, the
/// location-scale parametrization with Var = scale2 * nu / (nu - 2).
pub fn ln_student_t_pdf(x: f64, location: f64, scale2: f64, nu: f64) -> f64 {
    let d = x - location;
    ln_gamma((nu + 1.0) / 2.0)
        - ln_gamma(nu / 2.0)
        - 0.5 * (std::f64::consts::PI * nu * scale2).ln()
        - 0.5 * (nu + 1.0) * (1.0 + d * d / (nu * scale2)).ln()
}

/// Total-variation distance between draws and an exact density over a binned
/// partition of the real line. `edges` must be strictly increasing; mass
/// below the first and above the last edge goes to two extra edge bins.
/// Exact bin probabilities are computed by adaptive quadrature of `pdf`
/// (which need not be normalized; it is renormalized over the binning range
/// extended by the tail integrals).
pub fn tv_draws_vs_density(draws: &[f64], edges: &[f64], pdf: impl Fn(f64) -> f64) -> f64 {
    assert!(edges.len() >= 2, "need at least two bin edges");
    let nbins = edges.len() + 1; // underflow bin + interior bins + overflow bin
    let tol = 1e-11;

    // Exact (unnormalized) bin masses. Tail bins are integrated over windows
    // widened until the added mass is negligible at TV resolution.
    let mut mass = vec![0.0; nbins];
    let lo = edges[0];
    let hi = *edges.last().unwrap();
    let span = (hi - lo).max(1.0);
    let tail_tol = 1e-9;

    let mut width = span;
    let mut left = integrate(&pdf, lo - width, lo, tol);
    while width < 1e7 * span {
        let wider = integrate(&pdf, lo - 2.0 * width, lo, tol);
        let done = (wider - left).abs() < tail_tol;
        left = wider;
        width *= 2.0;
        if done {
            break;
        }
    }
    mass[0] = left;

    let mut width = span;
    let mut right = integrate(&pdf, hi, hi + width, tol);
    while width < 1e7 * span {
        let wider = integrate(&pdf, hi, hi + 2.0 * width, tol);
        let done = (wider - right).abs() < tail_tol;
        right = wider;
        width *= 2.0;
        if done {
            break;
        }
    }
    mass[nbins - 1] = right;
    for k in 0..edges.len() - 1 {
        mass[k + 1] = integrate(&pdf, edges[k], edges[k + 1], tol);
    }
    let total: f64 = mass.iter().sum();
    assert!(total > 0.0, "density integrates to zero over the binning");

    // Empirical bin frequencies.
    let mut counts = vec![0usize; nbins];
    for &x in draws {
        let k = match edges.iter().position(|&e| x < e) {
            Some(0) => 0,
            Some(i) => i,
            None => nbins - 1,
        };
        counts[k] += 1;
    }
    let n = draws.len() as f64;

    0.5 * (0..nbins)
        .map(|k| (counts[k] as f64 / n - mass[k] / total).abs())
        .sum::<f64>()
}

/// Total-variation distance between an empirical distribution over discrete
/// outcomes and exact probabilities. `counts` and `probs` are aligned.
pub fn tv_counts_vs_probs(counts: &[usize], probs: &[f64]) -> f64 {
    assert_eq!(counts.len(), probs.len());
    let n: usize = counts.iter().sum();
    let z: f64 = probs.iter().sum();
    0.5 * counts
        .iter()
        .zip(probs)
        .map(|(&c, &p)| (c as f64 / n as f64 - p / z).abs())
        .sum::<f64>()
}
