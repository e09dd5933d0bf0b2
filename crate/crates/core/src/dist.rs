//! Sampling primitives with the parameter conventions used throughout:
//! Gamma is parametrized by (shape, RATE), inverse-gamma by (shape, SCALE),
//! so the conjugate updates of the Gibbs sweeps can be transcribed directly.
//! Invalid parameters are rejected, never clamped.

use rand_distr::Distribution;

use crate::error::{Error, Result};
use crate::rng::RngStream;

/// Draw from N(mean, variance).
pub fn sample_normal(mean: f64, variance: f64, rng: &mut RngStream) -> Result<f64> {
    if !(variance > 0.0) || !variance.is_finite() || !mean.is_finite() {
        return Err(Error::domain(format!(
            "normal requires finite mean and variance > 0, got mean={mean}, variance={variance}"
        )));
    }
    let d = rand_distr::Normal::new(mean, variance.sqrt())
        .map_err(|e| Error::domain(e.to_string()))?;
    Ok(d.sample(rng))
}

/// Draw from Gamma(shape, rate), density proportional to
/// x^(shape-1) exp(-rate x).
pub fn sample_gamma(shape: f64, rate: f64, rng: &mut RngStream) -> Result<f64> {
    if !(shape > 0.0 && rate > 0.0) || !shape.is_finite() || !rate.is_finite() {
        return Err(Error::domain(format!(
            "gamma requires shape > 0 and rate > 0, got shape={shape}, rate={rate}"
        )));
    }
    let d = rand_distr::Gamma::new(shape, 1.0 / rate).map_err(|e| Error::domain(e.to_string()))?;
    Ok(d.sample(rng))
}

/// Draw from inverse-gamma(shape, scale), density proportional to
/// x^(-shape-1) exp(-scale / x). Implemented as 1 / Gamma(shape, rate=scale).
pub fn sample_inverse_gamma(shape: f64, scale: f64, rng: &mut RngStream) -> Result<f64> {
    if !(shape > 0.0 && scale > 0.0) || !shape.is_finite() || !scale.is_finite() {
        return Err(Error::domain(format!(
            "inverse-gamma requires shape > 0 and scale > 0, got shape={shape}, scale={scale}"
        )));
    }
    Ok(1.0 / sample_gamma(shape, scale, rng)?)
}

/// Draw from Beta(a, b).
pub fn sample_beta_dist(a: f64, b: f64, rng: &mut RngStream) -> Result<f64> {
    if !(a > 0.0 && b > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(Error::domain(format!(
            "beta requires a > 0 and b > 0, got a={a}, b={b}"
        )));
    }
    let d = rand_distr::Beta::new(a, b).map_err(|e| Error::domain(e.to_string()))?;
    Ok(d.sample(rng))
}

/// Draw 1 with probability p, else 0.
pub fn sample_bernoulli(p: f64, rng: &mut RngStream) -> Result<u8> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::domain(format!(
            "bernoulli requires p in [0,1], got p={p}"
        )));
    }
    Ok(u8::from(rng.uniform() < p))
}

/// Draw an index with probability weights[k] / sum(weights). Weights may be
/// unnormalized; they must be finite, non-negative, and not all zero.
pub fn sample_categorical(weights: &[f64], rng: &mut RngStream) -> Result<usize> {
    let mut total = 0.0;
    for (k, &w) in weights.iter().enumerate() {
        if !w.is_finite() || w < 0.0 {
            return Err(Error::domain(format!(
                "categorical weight {k} invalid: {w}"
            )));
        }
        total += w;
    }
    if !(total > 0.0) {
        return Err(Error::domain("categorical weights sum to zero"));
    }
    let u = rng.uniform() * total;
    let mut acc = 0.0;
    let mut last_positive = 0;
    for (k, &w) in weights.iter().enumerate() {
        if w > 0.0 {
            last_positive = k;
        }
        acc += w;
        if u < acc {
            return Ok(k);
        }
    }
    // Roundoff pushed u past the last increment; return the last live index.
    Ok(last_positive)
}

/// Draw from the location-scale Student-t with density
/// proportional to (1 + (y - location)^2 / (dof * scale2))^(-(dof+1)/2),
/// which has variance scale2 * dof / (dof - 2) when dof > 2.
pub fn sample_student_t(location: f64, scale2: f64, dof: f64, rng: &mut RngStream) -> Result<f64> {
    if !(scale2 > 0.0 && dof > 0.0) || !scale2.is_finite() || !dof.is_finite() {
        return Err(Error::domain(format!(
            "student-t requires scale2 > 0 and dof > 0, got scale2={scale2}, dof={dof}"
        )));
    }
    let d = rand_distr::StudentT::new(dof).map_err(|e| Error::domain(e.to_string()))?;
    Ok(location + scale2.sqrt() * d.sample(rng))
}

#[cfg(test)]
mod tests {
    use super::*;
    use oracles::{ks_two_sample, mean, variance};

    fn draws(n: usize, seed: u64, mut f: impl FnMut(&mut RngStream) -> f64) -> Vec<f64> {
        let mut rng = RngStream::new(seed);
        (0..n).map(|_| f(&mut rng)).collect()
    }

    #[test]
    fn normal_degenerate_concentration() {
        let xs = draws(100_000, 1, |r| sample_normal(3.0, 1e-8, r).unwrap());
        assert!((mean(&xs) - 3.0).abs() < 1e-3);
    }

    #[test]
    fn normal_standard_mean() {
        let xs = draws(100_000, 2, |r| sample_normal(0.0, 1.0, r).unwrap());
        assert!(mean(&xs).abs() < 0.02);
    }

    #[test]
    fn normal_variance_moment_match() {
        let xs = draws(100_000, 3, |r| sample_normal(2.0, 4.0, r).unwrap());
        assert!((variance(&xs) - 4.0).abs() < 0.2);
    }

    #[test]
    fn normal_rejects_bad_variance() {
        let mut rng = RngStream::new(0);
        assert!(sample_normal(0.0, 0.0, &mut rng).is_err());
        assert!(sample_normal(0.0, -1.0, &mut rng).is_err());
        assert!(sample_normal(0.0, f64::NAN, &mut rng).is_err());
    }

    #[test]
    fn gamma_rate_convention() {
        let xs = draws(100_000, 4, |r| sample_gamma(1.0, 2.0, r).unwrap());
        assert!((mean(&xs) - 0.5).abs() < 0.01);
        let ys = draws(100_000, 5, |r| sample_gamma(3.0, 1.0, r).unwrap());
        assert!((mean(&ys) - 3.0).abs() < 0.05);
    }

    #[test]
    fn gamma_variance_moment_match() {
        // Var = shape / rate^2 = 2.5 / 0.25 = 10
        let xs = draws(100_000, 6, |r| sample_gamma(2.5, 0.5, r).unwrap());
        assert!((variance(&xs) - 10.0).abs() < 0.5);
    }

    #[test]
    fn gamma_rejects_bad_params() {
        let mut rng = RngStream::new(0);
        assert!(sample_gamma(0.0, 1.0, &mut rng).is_err());
        assert!(sample_gamma(1.0, 0.0, &mut rng).is_err());
        assert!(sample_gamma(-1.0, 1.0, &mut rng).is_err());
    }

    #[test]
    fn gamma_mean_grid_convention_lock() {
        // mean of Gamma(a, rate=b) is a/b; checked within 3 standard errors
        // on a grid, locking the rate convention for the whole crate.
        let n = 1_000_000usize;
        let mut seed = 100;
        for &a in &[0.5, 1.0, 2.01, 5.0] {
            for &b in &[0.5, 1.0, 2.0] {
                seed += 1;
                let xs = draws(n, seed, |r| sample_gamma(a, b, r).unwrap());
                let se = (a / (b * b) / n as f64).sqrt();
                assert!(
                    (mean(&xs) - a / b).abs() < 3.0 * se,
                    "gamma({a},{b}) mean off: {} vs {}",
                    mean(&xs),
                    a / b
                );
            }
        }
    }

    #[test]
    fn inverse_gamma_mean() {
        // mean = scale / (shape - 1)
        let xs = draws(100_000, 7, |r| sample_inverse_gamma(3.0, 2.0, r).unwrap());
        assert!((mean(&xs) - 1.0).abs() < 0.02);
    }

    #[test]
    fn inverse_gamma_weak_prior_mean() {
        let xs = draws(1_000_000, 8, |r| sample_inverse_gamma(2.01, 1.0, r).unwrap());
        assert!((mean(&xs) - 1.0 / 1.01).abs() < 0.02);
    }

    #[test]
    fn inverse_gamma_reciprocal_identity() {
        // X ~ IG(a, b) must match 1/Y with Y ~ Gamma(a, rate=b).
        for (i, &(a, b)) in [(0.5, 1.0), (1.0, 2.0), (2.01, 0.5), (5.0, 1.0)]
            .iter()
            .enumerate()
        {
            let xs = draws(20_000, 20 + i as u64, |r| {
                sample_inverse_gamma(a, b, r).unwrap()
            });
            let ys = draws(20_000, 40 + i as u64, |r| {
                1.0 / sample_gamma(a, b, r).unwrap()
            });
            let (_, p) = ks_two_sample(&xs, &ys);
            assert!(p > 0.01, "IG({a},{b}) reciprocal identity rejected, p={p}");
        }
    }

    #[test]
    fn beta_mean_and_support() {
        let xs = draws(100_000, 9, |r| sample_beta_dist(1.0, 1.0, r).unwrap());
        assert!((mean(&xs) - 0.5).abs() < 0.01);
        let ys = draws(10_000, 10, |r| sample_beta_dist(2.0, 2.0, r).unwrap());
        assert!(ys.iter().all(|&y| (0.0..1.0).contains(&y)));
        let zs = draws(100_000, 11, |r| sample_beta_dist(5.0, 1.0, r).unwrap());
        assert!((mean(&zs) - 5.0 / 6.0).abs() < 0.01);
    }

    #[test]
    fn bernoulli_endpoints_and_frequency() {
        let mut rng = RngStream::new(12);
        for _ in 0..1000 {
            assert_eq!(sample_bernoulli(0.0, &mut rng).unwrap(), 0);
            assert_eq!(sample_bernoulli(1.0, &mut rng).unwrap(), 1);
        }
        let xs = draws(100_000, 13, |r| f64::from(sample_bernoulli(0.3, r).unwrap()));
        assert!((mean(&xs) - 0.3).abs() < 0.01);
        assert!(sample_bernoulli(1.5, &mut rng).is_err());
        assert!(sample_bernoulli(-0.1, &mut rng).is_err());
    }

    #[test]
    fn categorical_frequencies() {
        let mut rng = RngStream::new(14);
        for _ in 0..1000 {
            assert_eq!(sample_categorical(&[1.0, 0.0, 0.0], &mut rng).unwrap(), 0);
        }
        let xs = draws(100_000, 15, |r| {
            f64::from(sample_categorical(&[1.0, 1.0], r).unwrap() == 0)
        });
        assert!((mean(&xs) - 0.5).abs() < 0.01);
        let ys = draws(100_000, 16, |r| {
            f64::from(sample_categorical(&[2.0, 1.0, 1.0], r).unwrap() == 0)
        });
        assert!((mean(&ys) - 0.5).abs() < 0.01);
    }

    #[test]
    fn categorical_rejects_degenerate_weights() {
        let mut rng = RngStream::new(0);
        assert!(sample_categorical(&[0.0, 0.0], &mut rng).is_err());
        assert!(sample_categorical(&[1.0, f64::INFINITY], &mut rng).is_err());
        assert!(sample_categorical(&[1.0, f64::NAN], &mut rng).is_err());
        assert!(sample_categorical(&[1.0, -0.5], &mut rng).is_err());
    }

    #[test]
    fn student_t_degenerate_location() {
        let xs = draws(100_000, 17, |r| sample_student_t(5.0, 1e-20, 3.0, r).unwrap());
        assert!((mean(&xs) - 5.0).abs() < 1e-3);
    }

    #[test]
    fn student_t_normal_limit() {
        let xs = draws(20_000, 18, |r| sample_student_t(0.0, 1.0, 200.0, r).unwrap());
        let ys = draws(20_000, 19, |r| sample_normal(0.0, 1.0, r).unwrap());
        let (_, p) = ks_two_sample(&xs, &ys);
        assert!(p > 0.01, "t(200) vs N(0,1) rejected, p={p}");
    }

    #[test]
    fn student_t_variance() {
        // Var = scale2 * dof / (dof - 2) = 5/3 for (1, 5)
        let xs = draws(1_000_000, 21, |r| sample_student_t(0.0, 1.0, 5.0, r).unwrap());
        assert!((variance(&xs) - 5.0 / 3.0).abs() < 0.1);
    }

    #[test]
    fn student_t_gamma_augmentation_identity() {
        // Y obtained by G ~ Gamma(nu/2, rate nu sigma2 / 2), Y|G ~ N(mu, 1/G)
        // must be distributed Student-t(mu, sigma2, nu).
        for (i, &(nu, s2)) in [(1.0, 0.5), (2.0, 1.0), (5.0, 2.0), (3.0, 1.0)]
            .iter()
            .enumerate()
        {
            let xs = draws(20_000, 60 + i as u64, |r| {
                let g = sample_gamma(nu / 2.0, nu * s2 / 2.0, r).unwrap();
                sample_normal(0.5, 1.0 / g, r).unwrap()
            });
            let ys = draws(20_000, 80 + i as u64, |r| {
                sample_student_t(0.5, s2, nu, r).unwrap()
            });
            let (_, p) = ks_two_sample(&xs, &ys);
            assert!(p > 0.01, "augmentation identity rejected at nu={nu}, s2={s2}: p={p}");
        }
    }

    #[test]
    fn reproducibility_bit_identical() {
        let xs = draws(1000, 99, |r| sample_gamma(2.0, 3.0, r).unwrap());
        let ys = draws(1000, 99, |r| sample_gamma(2.0, 3.0, r).unwrap());
        assert_eq!(xs, ys);
    }
}
